#pragma once

#include "canord/cyclotomic.hpp"
#include "canord/matgroup.hpp"

#include <map>
#include <vector>

namespace canord {

// G' as pairs (g, j), g in the base group and j in Z/e, with
// (g, i)(h, j) = (gh, i + j + c(g, h)).  Pair (g, j) has index g * e + j.
struct CentralExtension {
    AbstractGroup base;
    int e = 1;
    std::vector<int> cocycle;  // cocycle[g * |G| + h] in [0, e)

    int order() const { return base.order * e; }
    int elem(int g, long j) const { return g * e + static_cast<int>(mod_l(j, e)); }
    int base_of(int x) const { return x / e; }
    int level_of(int x) const { return x % e; }
    int c(int g, int h) const { return cocycle[static_cast<size_t>(g) * base.order + h]; }
    int mul(int x, int y) const;
    int rho() const { return elem(0, 1); }

    bool satisfies_cocycle_identity() const;
    bool is_normalized() const;  // c(1, g) = c(g, 1) = 0

    // Full table of G', generated by the level-0 lifts of the base
    // generators together with rho.
    AbstractGroup group() const;
};

CentralExtension trivial_extension(const AbstractGroup& g);

// Extension of qbar = <sigma> x <tau> (orders ne and e) by mu_e with the
// bilinear cocycle c(s^a t^b, s^a' t^b') = b a' mod e.
CentralExtension build_extension(const AbstractGroup& qbar, int sigma, int tau, int n, int e);

// Extension cut out by a cover group: proj is a surjection cover -> q whose
// kernel is the cyclic central subgroup generated by z.
CentralExtension extension_from_cover(const AbstractGroup& cover, const std::vector<int>& proj,
                                      const AbstractGroup& q, int z);

// Pull back along a surjective homomorphism phi: g -> ext.base.
CentralExtension pullback(const CentralExtension& ext, const AbstractGroup& g, const std::vector<int>& phi);

struct AlgebraElement {
    const CentralExtension* ext = nullptr;
    std::map<int, CycloNumber> coeffs;

    static AlgebraElement basis(const CentralExtension& ext, int x, const CycloNumber& c = CycloNumber(1));
    bool is_zero() const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement scaled(const CycloNumber& c) const;
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return (a - b).is_zero(); }
};

// (1/e) sum_k omega^{-k} rho^k for the given primitive e-th root omega; it
// is the central idempotent on which rho acts as omega.
AlgebraElement idempotent_epsilon(int e, const CycloNumber& omega, const CentralExtension& ext);

bool is_central(const AlgebraElement& a);

// Dimension of the centre of eps k G'.
int block_count(const CentralExtension& ext, const AlgebraElement& eps);

}  // namespace canord
