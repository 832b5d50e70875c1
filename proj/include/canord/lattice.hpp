#pragma once

#include "canord/cyclotomic.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace canord {

enum class CurveKind { Exceptional, Transverse };

struct Curve {
    std::string label;
    CurveKind kind = CurveKind::Exceptional;
    int self_int = 0;  // meaningful for exceptional curves only
};

// Coefficients over the curve indices of a lattice.
using Divisor = std::vector<long>;

struct IntersectionLattice {
    std::vector<Curve> curves;
    std::vector<std::vector<int>> pairing;
    std::vector<int> contracted;

    int size() const { return static_cast<int>(curves.size()); }
    int index(const std::string& label) const;  // throws if absent
    std::vector<int> exceptional() const;

    int add_curve(const std::string& label, CurveKind kind, int self_int = 0);
    void set_pairing(int a, int b, int v);

    long dot(const Divisor& a, const Divisor& b) const;
    long dot_curve(const Divisor& a, int curve) const;
    Divisor zero() const { return Divisor(curves.size(), 0); }
    Divisor unit(int curve) const;

    bool is_symmetric() const;
    bool is_negative_definite(const std::vector<int>& subset) const;
    bool is_connected(const std::vector<int>& subset) const;
};

// Strings and trees of (-2)-curves, one transverse curve C_i per E_i.
// Exceptional labels E1..Em (or F1..Fm with prefix "F"), transverse C1..Cm.
IntersectionLattice a_string(int m, const std::string& prefix = "E");
IntersectionLattice d_tree(int m, const std::string& prefix = "E");  // m >= 3, centre E_{m-2}
IntersectionLattice e_tree(int m, const std::string& prefix = "E");  // m in {6,7,8}
IntersectionLattice ade_config(char letter, int rank, const std::string& prefix = "E");

// Smallest positive cycle supported on `subset` with Z.E_i <= 0 there.
Divisor fundamental_cycle(const IntersectionLattice& lat, const std::vector<int>& subset);

// Integers a_j on `support` with D.F_k = (sum a_j F_j).F_k for every
// contracted F_k; nullopt if the integer system has no solution.
std::optional<Divisor> linear_equivalence_solve(const IntersectionLattice& lat, const Divisor& d,
                                                const std::vector<int>& support);

// Smallest k >= 1 with k D solvable on `support`.
std::optional<long> torsion_order(const IntersectionLattice& lat, const Divisor& d, const std::vector<int>& support);

// Smallest k >= 1 with (1 + rho + ... + rho^{k-1}) D solvable, rho a
// permutation of curve indices acting on coefficient vectors.
std::optional<long> twisted_torsion_order(const IntersectionLattice& lat, const Divisor& d,
                                          const std::vector<int>& support, const std::vector<int>& rho);

Divisor permute(const Divisor& d, const std::vector<int>& rho);

// Divisor from label -> coefficient pairs.
Divisor divisor(const IntersectionLattice& lat, const std::map<std::string, long>& terms);

// Graphviz rendering; ram gives e_C per curve index (empty for none).
std::string to_dot(const IntersectionLattice& lat, const std::vector<int>& ram = {},
                   const std::string& name = "config");

// Diagonalisation U A V = D of an integer matrix, kept for callers that
// want the raw invariants.
struct Diagonalized {
    std::vector<std::vector<Integer>> u, v;
    std::vector<Integer> diag;  // nonzero pivots, length = rank
    int rows = 0, cols = 0;
};
Diagonalized diagonalize(const std::vector<std::vector<long>>& a);

}  // namespace canord
