#include "canord/ramdata.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace canord {

std::string family_name(Family f) {
    switch (f) {
        case Family::A12: return "A12";
        case Family::BL: return "BL";
        case Family::B: return "B";
        case Family::L: return "L";
        case Family::DL: return "DL";
        case Family::BD: return "BD";
        case Family::Anz: return "Anz";
        case Family::ADE: return "ADE";
    }
    return "?";
}

Family parse_family(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (std::isalnum(static_cast<unsigned char>(c))) s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    static const std::map<std::string, Family> names{
        {"A12", Family::A12}, {"A12Z", Family::A12}, {"A12XI", Family::A12}, {"A12ZETA", Family::A12},
        {"BL", Family::BL},   {"BLN", Family::BL},   {"B", Family::B},        {"BN", Family::B},
        {"L", Family::L},     {"LN", Family::L},     {"DL", Family::DL},      {"DLN", Family::DL},
        {"BD", Family::BD},   {"BDN", Family::BD},   {"ANZ", Family::Anz},    {"ANXI", Family::Anz},
        {"ANZETA", Family::Anz}, {"ADE", Family::ADE}, {"KLEIN", Family::ADE},
    };
    auto it = names.find(s);
    if (it == names.end()) throw std::invalid_argument("unknown type '" + raw + "'");
    return it->second;
}

bool CanonicalType::valid() const {
    switch (family) {
        case Family::A12: return e >= 1;
        case Family::BL:
        case Family::B:
        case Family::L:
        case Family::DL: return n >= 1;
        case Family::BD: return n >= 2;
        case Family::Anz: return n >= 1 && e >= 2;
        case Family::ADE:
            return (letter == 'A' && rank >= 1) || (letter == 'D' && rank >= 4) ||
                   (letter == 'E' && rank >= 6 && rank <= 8);
    }
    return false;
}

void CanonicalType::validate() const {
    if (!valid()) throw std::invalid_argument("parameters out of range for " + label());
}

std::string CanonicalType::label() const {
    switch (family) {
        case Family::A12: return "A12(e=" + std::to_string(e) + ")";
        case Family::Anz: return "Anz(n=" + std::to_string(n) + ",e=" + std::to_string(e) + ")";
        case Family::ADE: return std::string(1, letter) + std::to_string(rank);
        default: return family_name(family) + "(n=" + std::to_string(n) + ")";
    }
}

nlohmann::json CanonicalType::params() const {
    nlohmann::json p = nlohmann::json::object();
    switch (family) {
        case Family::A12: p["e"] = e; break;
        case Family::Anz:
            p["n"] = n;
            p["e"] = e;
            break;
        case Family::ADE:
            p["letter"] = std::string(1, letter);
            p["rank"] = rank;
            break;
        default: p["n"] = n;
    }
    return p;
}

bool CanonicalType::operator<(const CanonicalType& o) const {
    return std::tie(family, letter, rank, n, e) < std::tie(o.family, o.letter, o.rank, o.n, o.e);
}

bool CanonicalType::operator==(const CanonicalType& o) const {
    return std::tie(family, letter, rank, n, e) == std::tie(o.family, o.letter, o.rank, o.n, o.e);
}

std::string CurveType::str() const {
    switch (tag) {
        case Tag::Zero: return "0";
        case Tag::I: return "I(" + std::to_string(a) + "," + std::to_string(b) + ")";
        case Tag::C: return "C(" + std::to_string(a) + ")";
        case Tag::X: return "X(" + std::to_string(a) + ")";
    }
    return "?";
}

std::string point_label(std::vector<std::string> curves) {
    std::sort(curves.begin(), curves.end());
    std::string s;
    for (const auto& c : curves) s += (s.empty() ? "" : "^") + c;
    return s;
}

RamData canonical_ram(const CanonicalType& t) {
    t.validate();
    RamData r;
    r.type = t;
    auto curve = [&](const std::string& label, int e, int ep) {
        r.curves.push_back({label, e});
        r.secondary.push_back({label, "p", ep});
    };
    auto meet = [&](const std::string& a, const std::string& b, Rational m) { r.intersections.push_back({a, b, "p", m}); };
    std::string n = std::to_string(t.n);
    switch (t.family) {
        case Family::A12:
            curve("u=0", 2 * t.e, t.e);
            curve("v=0", 2 * t.e, t.e);
            meet("u=0", "v=0", 1);
            break;
        case Family::BL: curve("v^2=u^" + std::to_string(2 * t.n + 1), 2, 1); break;
        case Family::B:
            curve("v=u^" + n, 2, 1);
            curve("v=-u^" + n, 2, 1);
            meet("v=u^" + n, "v=-u^" + n, t.n);
            break;
        case Family::L: {
            std::string m = std::to_string(t.n + 1);
            curve("v=u^" + m, 2, 2);
            curve("v=-u^" + m, 2, 2);
            meet("v=u^" + m, "v=-u^" + m, t.n + 1);
            break;
        }
        case Family::DL: {
            std::string c = "v^2=u^" + std::to_string(2 * t.n - 1);
            curve("u=0", 2, 2);
            curve(c, 2, 2);
            meet("u=0", c, 2);
            break;
        }
        case Family::BD: {
            std::string m = std::to_string(t.n - 1);
            curve("u=0", 2, 2);
            curve("v=u^" + m, 2, 2);
            curve("v=-u^" + m, 2, 1);
            meet("u=0", "v=u^" + m, 1);
            meet("u=0", "v=-u^" + m, 1);
            meet("v=u^" + m, "v=-u^" + m, t.n - 1);
            break;
        }
        case Family::Anz:
            curve("w=0=u", t.e, t.e);
            curve("w=0=v", t.e, t.e);
            meet("w=0=u", "w=0=v", Rational(1, t.n + 1));
            break;
        case Family::ADE: break;
    }
    return r;
}

namespace {

struct Builder {
    ResolutionRamData r;

    int curve(const std::string& label, CurveKind kind, int self, int e) {
        int i = r.lattice.add_curve(label, kind, self);
        r.ram.push_back(e);
        return i;
    }
    int exc(const std::string& label, int self, int e = 1) { return curve(label, CurveKind::Exceptional, self, e); }
    int trans(const std::string& label, int e) { return curve(label, CurveKind::Transverse, 0, e); }

    void add(int a, int b, int m, const std::string& point) {
        r.lattice.set_pairing(a, b, r.lattice.pairing[a][b] + m);
        r.intersections.push_back({r.lattice.curves[a].label, r.lattice.curves[b].label, point, m});
    }
    void meet(int a, int b, int m = 1) {
        add(a, b, m, point_label({r.lattice.curves[a].label, r.lattice.curves[b].label}));
    }
    void triple(int a, int b, int c) {
        std::string p = point_label({r.lattice.curves[a].label, r.lattice.curves[b].label, r.lattice.curves[c].label});
        add(a, b, 1, p);
        add(a, c, 1, p);
        add(b, c, 1, p);
    }
    // E1..En, all (-2) except possibly the last.
    std::vector<int> chain(int n, int last_self, int e_inner, int e_last) {
        std::vector<int> out;
        for (int i = 1; i <= n; ++i)
            out.push_back(exc("E" + std::to_string(i), i == n ? last_self : -2, i == n ? e_last : e_inner));
        for (int i = 0; i + 1 < n; ++i) meet(out[i], out[i + 1]);
        return out;
    }

    // Secondary indices at every point where two ramification curves meet:
    // the smaller primary index, which is what a terminal point carries.
    ResolutionRamData finish() {
        r.lattice.contracted = r.lattice.exceptional();
        for (const PointRam& p : points(r)) {
            std::vector<int> ramified;
            for (size_t i = 0; i < p.curves.size(); ++i)
                if (p.e[i] > 1) ramified.push_back(static_cast<int>(i));
            if (ramified.size() < 2) continue;
            int lo = p.e[ramified[0]];
            for (int i : ramified) lo = std::min(lo, p.e[i]);
            for (int i : ramified) r.secondary.push_back({p.curves[i], p.point, lo});
        }
        return r;
    }
};

}  // namespace

ResolutionRamData resolution_ram(const CanonicalType& t) {
    t.validate();
    Builder b;
    b.r.type = t;
    int n = t.n;
    switch (t.family) {
        case Family::A12: {
            int e = b.exc("E", -1, t.e);
            int u = b.trans("U", 2 * t.e), v = b.trans("V", 2 * t.e);
            b.meet(e, u);
            b.meet(e, v);
            break;
        }
        case Family::BL: {
            auto es = b.chain(n, -1, 1, 1);
            b.meet(es.back(), b.trans("D", 2), 2);
            break;
        }
        case Family::B: {
            auto es = b.chain(n, -1, 1, 1);
            b.meet(es.back(), b.trans("U", 2));
            b.meet(es.back(), b.trans("V", 2));
            break;
        }
        case Family::L: {
            auto es = b.chain(n, -1, 1, 1);
            int u = b.trans("U", 2), v = b.trans("V", 2);
            b.triple(es.back(), u, v);
            break;
        }
        case Family::DL: {
            if (n == 1) {
                int e = b.exc("E1", -1, 1);
                b.triple(e, b.trans("T1", 2), b.trans("T2", 2));
                break;
            }
            // E_{n-1} and E_n meet at the point T2 passes through
            std::vector<int> es;
            for (int i = 1; i <= n; ++i) es.push_back(b.exc("E" + std::to_string(i), i == n ? -1 : -2, i == n ? 1 : 2));
            for (int i = 0; i + 2 < n; ++i) b.meet(es[i], es[i + 1]);
            b.meet(es[0], b.trans("T1", 2));
            b.triple(es[n - 2], es[n - 1], b.trans("T2", 2));
            break;
        }
        case Family::BD: {
            auto es = b.chain(n, -1, 2, 1);
            b.meet(es[0], b.trans("T1", 2));
            b.meet(es[n - 2], b.trans("T2", 2));
            b.meet(es[n - 1], b.trans("T3", 2));
            break;
        }
        case Family::Anz: {
            auto es = b.chain(n, -2, t.e, t.e);
            b.meet(es.front(), b.trans("T1", t.e));
            b.meet(es.back(), b.trans("T2", t.e));
            break;
        }
        case Family::ADE: {
            IntersectionLattice k = ade_config(t.letter, t.rank);
            auto ex = k.exceptional();
            for (int i : ex) b.exc(k.curves[i].label, -2);
            for (size_t i = 0; i < ex.size(); ++i)
                for (size_t j = i + 1; j < ex.size(); ++j)
                    if (k.pairing[ex[i]][ex[j]]) b.meet(static_cast<int>(i), static_cast<int>(j), k.pairing[ex[i]][ex[j]]);
            break;
        }
    }
    return b.finish();
}

IntersectionLattice family_config(const CanonicalType& t) { return resolution_ram(t).lattice; }

std::vector<PointRam> points(const ResolutionRamData& res) {
    std::map<std::string, PointRam> by_point;
    auto slot = [&](PointRam& p, const std::string& c) {
        auto it = std::find(p.curves.begin(), p.curves.end(), c);
        if (it != p.curves.end()) return static_cast<int>(it - p.curves.begin());
        p.curves.push_back(c);
        p.e.push_back(res.e_of(c));
        p.ep.push_back(1);
        for (auto& row : p.mult) row.push_back(0);
        p.mult.emplace_back(p.curves.size(), 0);
        return static_cast<int>(p.curves.size()) - 1;
    };
    for (const auto& x : res.intersections) {
        PointRam& p = by_point[x.point];
        p.point = x.point;
        int a = slot(p, x.a), b = slot(p, x.b);
        if (x.mult.get_den() != 1) throw std::invalid_argument("fractional intersection on a resolution");
        int m = static_cast<int>(x.mult.get_num().get_si());
        p.mult[a][b] += m;
        p.mult[b][a] += m;
    }
    for (const auto& s : res.secondary) {
        PointRam& p = by_point[s.point];
        p.point = s.point;
        p.ep[slot(p, s.curve)] = s.ep;
    }
    std::vector<PointRam> out;
    for (auto& [k, v] : by_point) out.push_back(std::move(v));
    return out;
}

bool is_terminal(const PointRam& p) {
    std::vector<size_t> ramified;
    for (size_t i = 0; i < p.curves.size(); ++i) {
        if (p.e[i] > 1)
            ramified.push_back(i);
        else if (p.ep[i] != 1)
            return false;
    }
    if (ramified.size() > 2) return false;
    if (ramified.size() < 2) {
        for (size_t i : ramified)
            if (p.ep[i] != 1) return false;
        return true;
    }
    size_t a = ramified[0], b = ramified[1];
    if (p.mult[a][b] != 1) return false;
    if (p.e[a] > p.e[b]) std::swap(a, b);
    if (p.e[b] % p.e[a] != 0) return false;
    return p.ep[a] == p.e[a] && p.ep[b] == p.e[a];
}

bool is_terminal(const ResolutionRamData& res) {
    for (const auto& s : res.secondary)
        if (s.ep < 1 || res.e_of(s.curve) % s.ep != 0) return false;
    for (const auto& p : points(res))
        if (!is_terminal(p)) return false;
    return true;
}

CurveType classify_exceptional(const ResolutionRamData& res, int curve) {
    const IntersectionLattice& lat = res.lattice;
    if (curve < 0 || curve >= lat.size() || lat.curves[curve].kind != CurveKind::Exceptional)
        throw std::invalid_argument("not an exceptional curve");
    int ee = res.ram[curve];
    std::vector<int> touching;
    for (int j = 0; j < lat.size(); ++j)
        if (j != curve && res.ram[j] > 1 && lat.pairing[curve][j] > 0) touching.push_back(j);
    const std::string& name = lat.curves[curve].label;
    auto fail = [&]() -> CurveType { throw std::invalid_argument("unclassifiable exceptional curve " + name); };

    if (touching.empty()) {
        if (ee == 1) return {CurveType::Tag::Zero, 0, 0};
        return fail();
    }
    if (touching.size() == 1) {
        int u = touching[0];
        if (ee == 1 && lat.pairing[curve][u] == 2) return {CurveType::Tag::C, res.ram[u], 0};
        return fail();
    }
    if (touching.size() == 2) {
        int u = touching[0], v = touching[1];
        if (lat.pairing[curve][u] != 1 || lat.pairing[curve][v] != 1 || res.ram[u] != res.ram[v]) return fail();
        int eu = res.ram[u];
        if (lat.pairing[u][v] == 0 && eu % ee == 0) return {CurveType::Tag::I, eu / ee, ee};
        if (lat.pairing[u][v] > 0 && ee == 1) return {CurveType::Tag::X, eu, 0};
    }
    return fail();
}

SkewResult skew_constructible(const ResolutionRamData& res, int n, int e) {
    SkewResult out;
    for (int i : res.lattice.exceptional()) {
        const std::string& name = res.lattice.curves[i].label;
        CurveType ct;
        try {
            ct = classify_exceptional(res, i);
        } catch (const std::invalid_argument&) {
            out.ok = false;
            out.reasons.push_back(name + ": unclassifiable");
            continue;
        }
        bool pass = false;
        std::string why;
        switch (ct.tag) {
            case CurveType::Tag::Zero:
                pass = true;
                why = "type 0";
                break;
            case CurveType::Tag::I:
                if (ct.a == n && ct.b == e) pass = true, why = "type I(n,e)";
                if (n == 1 && ct.a == e && ct.b == 1) pass = true, why = "type I(e,1) with n = 1";
                break;
            case CurveType::Tag::C:
                if (ct.a == 2 && n == 2 && e == 1) pass = true, why = "type C(2) with n = 2, e = 1";
                break;
            case CurveType::Tag::X: break;
        }
        if (!pass) {
            out.ok = false;
            why = "type " + ct.str() + " not allowed for (n,e) = (" + std::to_string(n) + "," + std::to_string(e) + ")";
        }
        out.reasons.push_back(name + ": " + why);
    }
    return out;
}

std::vector<Rational> canonical_check(const ResolutionRamData& res) {
    const IntersectionLattice& lat = res.lattice;
    std::vector<Rational> out;
    for (int i : lat.exceptional()) {
        Rational k = -2 - lat.pairing[i][i];
        for (int c = 0; c < lat.size(); ++c) {
            if (res.ram[c] <= 1 || lat.pairing[c][i] == 0) continue;
            k += (Rational(1) - Rational(1, res.ram[c])) * lat.pairing[c][i];
        }
        k.canonicalize();
        out.push_back(k);
    }
    return out;
}

namespace {

nlohmann::json mult_json(const Rational& m) {
    if (m.get_den() == 1) return m.get_num().get_si();
    return m.get_str();
}

nlohmann::json common_json(const CanonicalType& t, const std::vector<RamIntersection>& xs,
                           const std::vector<Secondary>& sec) {
    nlohmann::json j;
    j["type"] = family_name(t.family);
    j["params"] = t.params();
    j["intersections"] = nlohmann::json::array();
    for (const auto& x : xs) j["intersections"].push_back({{"a", x.a}, {"b", x.b}, {"point", x.point}, {"mult", mult_json(x.mult)}});
    j["secondary"] = nlohmann::json::array();
    for (const auto& s : sec) j["secondary"].push_back({{"curve", s.curve}, {"point", s.point}, {"ep", s.ep}});
    return j;
}

}  // namespace

nlohmann::json to_json(const RamData& r) {
    nlohmann::json j = common_json(r.type, r.intersections, r.secondary);
    j["curves"] = nlohmann::json::array();
    for (const auto& c : r.curves) j["curves"].push_back({{"label", c.label}, {"eC", c.e}});
    return j;
}

nlohmann::json to_json(const ResolutionRamData& r) {
    nlohmann::json j = common_json(r.type, r.intersections, r.secondary);
    j["curves"] = nlohmann::json::array();
    for (int i = 0; i < r.lattice.size(); ++i) {
        const Curve& c = r.lattice.curves[i];
        nlohmann::json cj{{"label", c.label}, {"eC", r.ram[i]}};
        cj["kind"] = c.kind == CurveKind::Exceptional ? "exceptional" : "transverse";
        if (c.kind == CurveKind::Exceptional) cj["selfInt"] = c.self_int;
        j["curves"].push_back(cj);
    }
    return j;
}

}  // namespace canord
