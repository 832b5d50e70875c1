#include "doctest.h"

#include "canord/ramdata.hpp"

using namespace canord;

namespace {

std::vector<CanonicalType> sweep() {
    std::vector<CanonicalType> out;
    for (int e = 1; e <= 5; ++e) out.push_back(CanonicalType::a12(e));
    for (Family f : {Family::BL, Family::B, Family::L, Family::DL})
        for (int n = 1; n <= 6; ++n) out.push_back(CanonicalType::with_n(f, n));
    for (int n = 2; n <= 6; ++n) out.push_back(CanonicalType::with_n(Family::BD, n));
    for (int n = 1; n <= 4; ++n)
        for (int e = 2; e <= 4; ++e) out.push_back(CanonicalType::anz(n, e));
    for (int r = 1; r <= 6; ++r) out.push_back(CanonicalType::ade('A', r));
    for (int r = 4; r <= 7; ++r) out.push_back(CanonicalType::ade('D', r));
    for (int r = 6; r <= 8; ++r) out.push_back(CanonicalType::ade('E', r));
    return out;
}

// The (n, e) of the cyclic quotient each row is built from.
std::pair<int, int> skew_params(const CanonicalType& t) {
    switch (t.family) {
        case Family::A12: return {2, t.e};
        case Family::BL:
        case Family::B: return {2, 1};
        case Family::L:
        case Family::DL:
        case Family::BD: return {1, 2};
        case Family::Anz: return {1, t.e};
        case Family::ADE: return {1, 1};
    }
    return {0, 0};
}

PointRam node(int e1, int e2, int ep1, int ep2, int mult = 1) {
    return {"p", {"U", "V"}, {e1, e2}, {ep1, ep2}, {{0, mult}, {mult, 0}}};
}

}  // namespace

TEST_CASE("type names and validity") {
    CHECK(parse_family("BDn") == Family::BD);
    CHECK(parse_family("A_{n,z}") == Family::Anz);
    CHECK(parse_family("a12") == Family::A12);
    CHECK_THROWS_AS(parse_family("Q"), std::invalid_argument);
    CHECK_FALSE(CanonicalType::with_n(Family::BD, 1).valid());
    CHECK_FALSE(CanonicalType::anz(2, 1).valid());
    CHECK_FALSE(CanonicalType::ade('E', 9).valid());
    CHECK_FALSE(CanonicalType::ade('D', 3).valid());
    CHECK_THROWS_AS(resolution_ram(CanonicalType::with_n(Family::L, 0)), std::invalid_argument);
    CHECK(CanonicalType::anz(2, 3).label() == "Anz(n=2,e=3)");
}

TEST_CASE("canonical_ram rows") {
    CHECK(canonical_ram(CanonicalType::ade('E', 6)).curves.empty());

    RamData a = canonical_ram(CanonicalType::a12(3));
    REQUIRE(a.curves.size() == 2);
    for (const auto& c : a.curves) CHECK(c.e == 6);
    for (const auto& s : a.secondary) CHECK(s.ep == 3);

    RamData bd = canonical_ram(CanonicalType::with_n(Family::BD, 3));
    std::vector<int> es, eps;
    for (const auto& c : bd.curves) es.push_back(c.e);
    for (const auto& s : bd.secondary) eps.push_back(s.ep);
    CHECK(es == std::vector<int>{2, 2, 2});
    CHECK(eps == std::vector<int>{2, 2, 1});

    for (const auto& t : sweep()) {
        RamData r = canonical_ram(t);
        for (const auto& s : r.secondary) {
            auto it = std::find_if(r.curves.begin(), r.curves.end(), [&](const RamCurve& c) { return c.label == s.curve; });
            REQUIRE(it != r.curves.end());
            CHECK(it->e % s.ep == 0);
        }
    }
}

TEST_CASE("family configurations") {
    ResolutionRamData bl = resolution_ram(CanonicalType::with_n(Family::BL, 3));
    auto ex = bl.lattice.exceptional();
    REQUIRE(ex.size() == 3);
    CHECK(bl.lattice.pairing[ex[0]][ex[0]] == -2);
    CHECK(bl.lattice.pairing[ex[1]][ex[1]] == -2);
    CHECK(bl.lattice.pairing[ex[2]][ex[2]] == -1);
    CHECK(bl.lattice.pairing[ex[2]][bl.lattice.index("D")] == 2);

    ResolutionRamData a = resolution_ram(CanonicalType::a12(4));
    CHECK(a.lattice.exceptional().size() == 1);
    CHECK(a.e_of("E") == 4);
    CHECK(a.e_of("U") == 8);
    CHECK(a.e_of("V") == 8);

    ResolutionRamData l = resolution_ram(CanonicalType::with_n(Family::L, 2));
    int u = l.lattice.index("U"), v = l.lattice.index("V"), e2 = l.lattice.index("E2");
    CHECK(l.lattice.pairing[u][v] == 1);
    CHECK(l.lattice.pairing[u][e2] == 1);
    CHECK(l.lattice.pairing[v][e2] == 1);
    auto pts = points(l);
    CHECK(std::count_if(pts.begin(), pts.end(), [](const PointRam& p) { return p.curves.size() == 3; }) == 1);

    ResolutionRamData dl = resolution_ram(CanonicalType::with_n(Family::DL, 4));
    CHECK(dl.e_of("E1") == 2);
    CHECK(dl.e_of("E3") == 2);
    CHECK(dl.e_of("E4") == 1);
    CHECK(dl.lattice.pairing[dl.lattice.index("T1")][dl.lattice.index("E1")] == 1);
    CHECK(dl.lattice.pairing[dl.lattice.index("T2")][dl.lattice.index("E3")] == 1);
    CHECK(dl.lattice.pairing[dl.lattice.index("T2")][dl.lattice.index("E4")] == 1);

    for (const auto& t : sweep()) {
        ResolutionRamData r = resolution_ram(t);
        auto exc = r.lattice.exceptional();
        CHECK(r.lattice.is_negative_definite(exc));
        CHECK(r.lattice.is_connected(exc));
        CHECK(r.lattice.is_symmetric());
        for (int e : r.ram) CHECK(e >= 1);
    }
}

TEST_CASE("is_terminal local examples") {
    CHECK(is_terminal(node(3, 6, 3, 3)));
    CHECK(is_terminal(node(2, 2, 2, 2)));
    CHECK_FALSE(is_terminal(node(2, 3, 2, 2)));
    CHECK_FALSE(is_terminal(node(2, 4, 1, 2)));
    CHECK_FALSE(is_terminal(node(2, 4, 2, 2, 2)));
    PointRam three{"p", {"U", "V", "W"}, {2, 2, 2}, {2, 2, 2}, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}};
    CHECK_FALSE(is_terminal(three));
    PointRam lone{"p", {"U"}, {5}, {1}, {{0}}};
    CHECK(is_terminal(lone));
    lone.ep[0] = 5;
    CHECK_FALSE(is_terminal(lone));
}

TEST_CASE("every sweep resolution is terminal with vanishing K") {
    for (const auto& t : sweep()) {
        CAPTURE(t.label());
        ResolutionRamData r = resolution_ram(t);
        CHECK(is_terminal(r));
        for (const Rational& k : canonical_check(r)) CHECK(k == 0);
        for (const auto& s : r.secondary) CHECK(r.e_of(s.curve) % s.ep == 0);
    }
}

TEST_CASE("canonical_check by hand") {
    // a (-1)-curve with one transverse ramified curve of index 2 is not trivial
    ResolutionRamData r;
    r.lattice.add_curve("E", CurveKind::Exceptional, -1);
    r.lattice.add_curve("U", CurveKind::Transverse);
    r.lattice.set_pairing(0, 1, 1);
    r.ram = {1, 2};
    CHECK(canonical_check(r) == std::vector<Rational>{Rational(-1, 2)});
}

TEST_CASE("curve classification") {
    using T = CurveType::Tag;
    auto type_of = [](const CanonicalType& t, const std::string& c) {
        ResolutionRamData r = resolution_ram(t);
        return classify_exceptional(r, r.lattice.index(c));
    };
    CHECK(type_of(CanonicalType::a12(3), "E") == CurveType{T::I, 2, 3});
    CHECK(type_of(CanonicalType::with_n(Family::BL, 3), "E3") == CurveType{T::C, 2, 0});
    CHECK(type_of(CanonicalType::with_n(Family::BL, 3), "E1") == CurveType{T::Zero, 0, 0});
    CHECK(type_of(CanonicalType::with_n(Family::B, 2), "E2") == CurveType{T::I, 2, 1});
    CHECK(type_of(CanonicalType::with_n(Family::L, 2), "E2") == CurveType{T::X, 2, 0});
    CHECK(type_of(CanonicalType::with_n(Family::DL, 3), "E3") == CurveType{T::X, 2, 0});
    CHECK(type_of(CanonicalType::with_n(Family::DL, 3), "E1") == CurveType{T::I, 1, 2});
    CHECK(type_of(CanonicalType::with_n(Family::DL, 1), "E1") == CurveType{T::X, 2, 0});
    CHECK(type_of(CanonicalType::with_n(Family::BD, 2), "E1") == CurveType{T::I, 1, 2});
    CHECK(type_of(CanonicalType::with_n(Family::BD, 2), "E2") == CurveType{T::I, 2, 1});
    CHECK(type_of(CanonicalType::anz(3, 4), "E2") == CurveType{T::I, 1, 4});
    CHECK(type_of(CanonicalType::ade('E', 7), "E3") == CurveType{T::Zero, 0, 0});

    ResolutionRamData r = resolution_ram(CanonicalType::a12(2));
    CHECK_THROWS_AS(classify_exceptional(r, r.lattice.index("U")), std::invalid_argument);
    r.ram[r.lattice.index("U")] = 6;  // U and V no longer match
    CHECK_THROWS_AS(classify_exceptional(r, r.lattice.index("E")), std::invalid_argument);

    for (const auto& t : sweep()) {
        ResolutionRamData res = resolution_ram(t);
        for (int i : res.lattice.exceptional()) CHECK_NOTHROW(classify_exceptional(res, i));
    }
}

TEST_CASE("skew constructibility splits the families") {
    for (const auto& t : sweep()) {
        CAPTURE(t.label());
        auto [n, e] = skew_params(t);
        SkewResult s = skew_constructible(resolution_ram(t), n, e);
        bool expected = t.family != Family::L && t.family != Family::DL;
        CHECK(s.ok == expected);
        CHECK(s.reasons.size() == resolution_ram(t).lattice.exceptional().size());
    }
    SkewResult l = skew_constructible(resolution_ram(CanonicalType::with_n(Family::L, 2)), 1, 2);
    CHECK(l.reasons.back().find("X(2)") != std::string::npos);
}

TEST_CASE("json field names") {
    auto j = to_json(canonical_ram(CanonicalType::with_n(Family::BD, 2)));
    for (const char* key : {"type", "params", "curves", "intersections", "secondary"}) CHECK(j.contains(key));
    CHECK(j["curves"][0].contains("eC"));
    CHECK(j["intersections"][0].contains("point"));
    CHECK(j["secondary"][2]["ep"] == 1);

    auto anz = to_json(canonical_ram(CanonicalType::anz(2, 3)));
    CHECK(anz["intersections"][0]["mult"] == "1/3");

    auto res = to_json(resolution_ram(CanonicalType::with_n(Family::L, 1)));
    CHECK(res["type"] == "L");
    CHECK(res["params"]["n"] == 1);
    CHECK(res["curves"].size() == 3);
}
