#pragma once

#include "canord/matgroup.hpp"
#include "canord/ramdata.hpp"
#include "canord/twisted.hpp"

#include <nlohmann/json.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace canord {

// G of the table row (for ADE, the Kleinian group H itself).
FiniteMatrixGroup family_group(const CanonicalType& t);

// Binary polyhedral and cyclic subgroups of SL2.
FiniteMatrixGroup ade_group(char letter, int rank);

// G' with its central idempotent.  The idempotent refers to ext, so the two
// travel together.
struct TwistedSide {
    CentralExtension ext;
    CycloNumber omega;  // scalar by which rho acts on the block
    int qbar_order = 0;  // |G/H| when the twist comes from a quotient, else 0
};
std::unique_ptr<TwistedSide> twisted_side(const CanonicalType& t);

int count_from_group(const CanonicalType& t);

struct CurveCount {
    std::string label;
    CurveType type;
    int ni = 0;
};

struct ResolutionCount {
    int n0 = 0;
    std::vector<CurveCount> curves;
    int total = 0;
};

ResolutionCount count_from_resolution(const ResolutionRamData& res, const CanonicalType& t);

// The (n, e) of the cyclic quotient Gbar = Z/ne x Z/e behind each row.
std::pair<int, int> cyclic_params(const CanonicalType& t);

struct CharacterTable {
    int group_order = 0;
    ClassPartition classes;
    std::vector<int> class_sizes;
    std::vector<int> inverse_class;  // class of g^-1
    std::vector<int> degrees;
    std::vector<std::vector<CycloNumber>> chi;  // chi[i][k]: character i on class k

    bool rows_orthogonal() const;
    bool columns_orthogonal() const;
};

CharacterTable character_table(const AbstractGroup& g);
CharacterTable character_table(const FiniteMatrixGroup& g);
CharacterTable character_table(const CentralExtension& ext);

struct McKayQuiver {
    std::vector<int> dims;
    std::vector<std::vector<int>> adjacency;
    int trivial = 0;  // index of the trivial character

    bool dimension_identity() const;  // 2 d_i = sum_j a_ij d_j
};

McKayQuiver mckay_quiver(const FiniteMatrixGroup& h);

// Extended Dynkin diagram as an adjacency matrix; node 0 is the extending
// node.  Â_1 is two nodes joined by a double edge.
std::vector<std::vector<int>> affine_diagram(char letter, int rank);
bool graphs_isomorphic(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b);

std::string quiver_dot(const McKayQuiver& q, const std::string& name = "quiver");

struct TorsionCheck {
    std::string label;
    std::optional<long> order;
    long expected = 0;
    bool pass() const { return order && *order == expected; }
};

// The cyclic-cover divisors on the Y-side lattice for each row.
std::vector<TorsionCheck> torsion_checks(const CanonicalType& t);

struct McKayReport {
    CanonicalType type;
    int count_resolution = 0;
    int count_group = 0;
    ResolutionCount breakdown;
    std::optional<int> n0_group;  // n from |Gbar| = n e^2 where defined
    bool k_trivial = false;
    std::vector<TorsionCheck> torsion;
    SkewResult skew;
    bool agree = false;
    // unramified row only
    std::optional<int> irreps;
    std::optional<bool> quiver_ok;

    // agree plus every side check
    bool ok() const;
};

McKayReport verify(const CanonicalType& t);

nlohmann::json to_json(const McKayReport& r);
std::string to_text(const McKayReport& r);

}  // namespace canord
