#pragma once

#include "canord/lattice.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace canord {

enum class Family { A12, BL, B, L, DL, BD, Anz, ADE };

std::string family_name(Family f);
// Accepts the canonical names plus a few spellings (BDn, A_{n,z}, A12, ...).
Family parse_family(const std::string& s);

struct CanonicalType {
    Family family = Family::ADE;
    int n = 0;
    int e = 0;
    char letter = 'A';  // ADE row only
    int rank = 1;       // ADE row only

    static CanonicalType a12(int e) { return {Family::A12, 0, e, 'A', 1}; }
    static CanonicalType with_n(Family f, int n) { return {f, n, 0, 'A', 1}; }
    static CanonicalType anz(int n, int e) { return {Family::Anz, n, e, 'A', 1}; }
    static CanonicalType ade(char letter, int rank) { return {Family::ADE, 0, 0, letter, rank}; }

    bool valid() const;
    void validate() const;  // throws std::invalid_argument
    std::string label() const;  // e.g. "BL(n=3)", "Anz(n=2,e=3)", "E6"
    nlohmann::json params() const;
    bool operator<(const CanonicalType& o) const;
    bool operator==(const CanonicalType& o) const;
};

struct RamCurve {
    std::string label;
    int e = 1;
};

// Local intersection of two curves at a named point.  On the base germ of
// the Anz row the two curves meet on an A_n singularity, so the local number
// is a fraction.
struct RamIntersection {
    std::string a, b, point;
    Rational mult = 1;
};

struct Secondary {
    std::string curve, point;
    int ep = 1;
};

struct RamData {
    CanonicalType type;
    std::vector<RamCurve> curves;
    std::vector<RamIntersection> intersections;
    std::vector<Secondary> secondary;
};

struct ResolutionRamData {
    CanonicalType type;
    IntersectionLattice lattice;
    std::vector<int> ram;  // e_C per lattice curve, 1 when unramified
    std::vector<RamIntersection> intersections;
    std::vector<Secondary> secondary;

    int e_of(const std::string& label) const { return ram.at(lattice.index(label)); }
};

// Curves through one point with their primary and secondary indices and the
// pairwise local intersection numbers.
struct PointRam {
    std::string point;
    std::vector<std::string> curves;
    std::vector<int> e;
    std::vector<int> ep;
    std::vector<std::vector<int>> mult;  // symmetric, diagonal unused
};

struct CurveType {
    enum class Tag { Zero, I, C, X };
    Tag tag = Tag::Zero;
    int a = 0, b = 0;  // I(a,b); C(a); X(a)

    std::string str() const;
    bool operator==(const CurveType& o) const { return tag == o.tag && a == o.a && b == o.b; }
};

struct SkewResult {
    bool ok = true;
    std::vector<std::string> reasons;  // one line per exceptional curve
};

RamData canonical_ram(const CanonicalType& t);
ResolutionRamData resolution_ram(const CanonicalType& t);
IntersectionLattice family_config(const CanonicalType& t);

std::vector<PointRam> points(const ResolutionRamData& res);
bool is_terminal(const PointRam& p);
bool is_terminal(const ResolutionRamData& res);

CurveType classify_exceptional(const ResolutionRamData& res, int curve);
SkewResult skew_constructible(const ResolutionRamData& res, int n, int e);

// K.E_i for every exceptional E_i, in lattice order.
std::vector<Rational> canonical_check(const ResolutionRamData& res);

// Point label for a set of curves meeting at one point.
std::string point_label(std::vector<std::string> curves);

nlohmann::json to_json(const RamData& r);
nlohmann::json to_json(const ResolutionRamData& r);

}  // namespace canord
