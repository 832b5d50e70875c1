#pragma once

#include "canord/cyclotomic.hpp"

#include <string>
#include <vector>

namespace canord {

struct Monomial {
    int a = 0, b = 0;  // s^a t^b
    int degree() const { return a + b; }
    bool operator==(const Monomial& o) const { return a == o.a && b == o.b; }
    bool operator<(const Monomial& o) const { return a != o.a ? a < o.a : b < o.b; }
    std::string str() const;
};

// Monomials of k[[s,t]] up to total degree d, split by the eigenvalues of
// tau = diag(z^n, z^-n) with z a primitive ne-th root: s^a t^b lies in
// space (a - b) mod e, with eigenvalue z^{n(a-b)}.
struct TruncatedEigenModule {
    int e = 1, n = 1, d = 0;
    std::vector<std::vector<Monomial>> spaces;
    std::vector<std::vector<Monomial>> generators;  // over the invariants: {s^i, t^(e-i)}, {1} for i = 0
    std::vector<Monomial> invariant_generators;     // s^e, st, t^e

    int index(const Monomial& m) const;
    CycloNumber eigenvalue(const Monomial& m) const;
    // m is an invariant times one of the generators of space i
    bool generated(const Monomial& m, int i) const;
};

TruncatedEigenModule eigenspace_decompose(int e, int n, int d);

struct CoverReport {
    int e = 1, n = 1, d = 0;
    bool ok = true;
    std::vector<std::string> failures;  // each names its witness monomials
    int checked_products = 0;
    int checked_triples = 0;
};

CoverReport cover_structure_check(int e, int n, int d = 12);

}  // namespace canord
