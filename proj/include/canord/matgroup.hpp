#pragma once

#include "canord/cyclotomic.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace canord {

struct Matrix2 {
    std::array<CycloNumber, 4> a{CycloNumber(1), CycloNumber(0), CycloNumber(0), CycloNumber(1)};

    Matrix2() = default;
    Matrix2(CycloNumber a00, CycloNumber a01, CycloNumber a10, CycloNumber a11)
        : a{std::move(a00), std::move(a01), std::move(a10), std::move(a11)} {}

    static Matrix2 identity() { return Matrix2(); }
    static Matrix2 diag(const CycloNumber& x, const CycloNumber& y) { return {x, 0L, 0L, y}; }

    const CycloNumber& operator()(int i, int j) const { return a[2 * i + j]; }

    CycloNumber det() const;
    CycloNumber trace() const;
    Matrix2 embed(int m) const;
    int conductor() const;  // lcm of entry conductors
    std::string key() const;
    std::string str() const;

    friend Matrix2 operator*(const Matrix2& x, const Matrix2& y);
    friend bool operator==(const Matrix2& x, const Matrix2& y);
};

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A finite group given by its multiplication table.  Element 0 is the identity.
struct AbstractGroup {
    int order = 1;
    std::vector<int> table{0};  // table[a * order + b] = index of a*b
    std::vector<int> inv{0};
    std::vector<int> gens;

    int mul(int a, int b) const { return table[static_cast<size_t>(a) * order + b]; }
    int pow(int a, long k) const;
    int element_order(int a) const;
    int exponent() const;
    bool is_abelian() const;
    bool is_latin_square() const;

    // build inverse list from the table
    void fill_inverses();
};

using ClassPartition = std::vector<std::vector<int>>;

// Conjugacy classes, the class containing the identity first, the rest
// ordered by smallest member.
ClassPartition conjugacy_classes(const AbstractGroup& g);
std::vector<int> class_index(const ClassPartition& classes, int order);

// Subgroup generated by a set of elements, as a sorted index list.
std::vector<int> subgroup_closure(const AbstractGroup& g, const std::vector<int>& gens);

struct Quotient {
    AbstractGroup group;
    std::vector<int> projection;  // element of G -> coset index
    std::vector<int> coset_rep;   // coset -> chosen representative in G
};

// Coset table of G/H.  Throws std::invalid_argument with "not-a-subgroup"
// or "not-normal" on bad input.
Quotient quotient(const AbstractGroup& g, const std::vector<int>& h);

// Elements (x, y) with x of order a, y of order b and <x> meet <y> trivial,
// so that the abelian group g is the internal direct product <x> x <y>.
std::optional<std::pair<int, int>> iso_to_cyclic_product(const AbstractGroup& g, int a, int b);

// Homomorphism defined by images of g.gens in the target; nullopt if the
// images do not extend to a homomorphism.
std::optional<std::vector<int>> hom_from_generators(const AbstractGroup& g, const AbstractGroup& target,
                                                    const std::vector<int>& images);

struct FiniteMatrixGroup {
    std::vector<Matrix2> elements;
    AbstractGroup table;
    std::vector<int> generator_indices;
    int conductor = 1;
    std::unordered_map<std::string, int> lookup;  // Matrix2::key at `conductor`

    int order() const { return table.order; }
    int index_of(const Matrix2& m) const;  // -1 if absent
};

int default_cap();  // 10000, or CANORD_CAP when set

FiniteMatrixGroup generate_group(const std::vector<Matrix2>& gens, int cap = default_cap());

ClassPartition conjugacy_classes(const FiniteMatrixGroup& g);

struct LineOrbit {
    std::array<CycloNumber, 2> representative_line;
    int orbit_size = 0;
    int inertia_order = 0;
};

struct LineOrbitRamification {
    std::vector<LineOrbit> orbits;
    std::vector<int> indices() const;  // sorted inertia orders, one per orbit
};

LineOrbitRamification fixed_line_ramification(const FiniteMatrixGroup& g);

}  // namespace canord
