#include "canord/cycliccover.hpp"

#include <algorithm>
#include <stdexcept>

namespace canord {

std::string Monomial::str() const {
    if (a == 0 && b == 0) return "1";
    std::string out;
    auto part = [&](const char* v, int k) {
        if (k == 0) return;
        out += v;
        if (k > 1) out += "^" + std::to_string(k);
    };
    part("s", a);
    part("t", b);
    return out;
}

int TruncatedEigenModule::index(const Monomial& m) const { return static_cast<int>(mod_l(m.a - m.b, e)); }

CycloNumber TruncatedEigenModule::eigenvalue(const Monomial& m) const {
    return root_of_unity(n * e, static_cast<long>(n) * (m.a - m.b));
}

bool TruncatedEigenModule::generated(const Monomial& m, int i) const {
    for (const Monomial& g : generators[i]) {
        if (m.a < g.a || m.b < g.b) continue;
        Monomial q{m.a - g.a, m.b - g.b};
        if (index(q) == 0) return true;
    }
    return false;
}

TruncatedEigenModule eigenspace_decompose(int e, int n, int d) {
    if (e < 1 || n < 1) throw std::invalid_argument("cyclic cover needs e, n >= 1");
    if (d < 2 * e) throw std::invalid_argument("truncation degree must be at least 2e");
    TruncatedEigenModule mod;
    mod.e = e;
    mod.n = n;
    mod.d = d;
    mod.spaces.assign(e, {});
    for (int deg = 0; deg <= d; ++deg)
        for (int a = deg; a >= 0; --a) {
            Monomial m{a, deg - a};
            mod.spaces[mod.index(m)].push_back(m);
        }
    mod.generators.assign(e, {});
    mod.generators[0] = {{0, 0}};
    for (int i = 1; i < e; ++i) mod.generators[i] = {{i, 0}, {0, e - i}};
    mod.invariant_generators = {{e, 0}, {1, 1}, {0, e}};
    return mod;
}

namespace {

// a term c * m * sigma^k of the skew ring S[sigma; sigma]
struct Term {
    CycloNumber c;
    Monomial m;
    int k = 0;
};

// sigma = diag(zeta, 1), zeta primitive of order ne
CycloNumber sigma_scalar(const TruncatedEigenModule& mod, const Monomial& m, long power) {
    return root_of_unity(mod.n * mod.e, power * m.a);
}

Term product(const TruncatedEigenModule& mod, const Term& x, const Term& y) {
    return {x.c * y.c * sigma_scalar(mod, y.m, x.k), {x.m.a + y.m.a, x.m.b + y.m.b}, x.k + y.k};
}

bool in_power_of_L(const TruncatedEigenModule& mod, const Monomial& m, int i) {
    int e = mod.e;
    for (int k = 0; k <= i; ++k) {
        int ga = i - k, gb = k * (e - 1);
        if (m.a >= ga && m.b >= gb && mod.index({m.a - ga, m.b - gb}) == 0) return true;
    }
    return false;
}

}  // namespace

CoverReport cover_structure_check(int e, int n, int d) {
    TruncatedEigenModule mod = eigenspace_decompose(e, n, d);
    CoverReport r;
    r.e = e;
    r.n = n;
    r.d = d;
    auto fail = [&](const std::string& what) {
        r.ok = false;
        r.failures.push_back(what);
    };

    // decomposition and eigenvalues
    size_t total = 0;
    for (int i = 0; i < e; ++i) {
        total += mod.spaces[i].size();
        for (const Monomial& m : mod.spaces[i])
            if (mod.eigenvalue(m) != root_of_unity(n * e, static_cast<long>(n) * i))
                fail("eigenvalue of " + m.str() + " differs from its space " + std::to_string(i));
    }
    if (total != static_cast<size_t>((d + 1) * (d + 2) / 2)) fail("spaces do not partition the monomials");

    // invariants are products of s^e, st, t^e; E_i is generated by its two generators
    for (const Monomial& m : mod.spaces[0]) {
        bool found = false;
        for (int y = 0; y <= std::min(m.a, m.b) && !found; ++y) {
            int ra = m.a - y, rb = m.b - y;
            found = ra % e == 0 && rb % e == 0;
        }
        if (!found) fail("invariant " + m.str() + " is not a product of s^e, st, t^e");
    }
    for (int i = 0; i < e; ++i)
        for (const Monomial& m : mod.spaces[i])
            if (!mod.generated(m, i)) fail(m.str() + " is not in the span of the generators of E_" + std::to_string(i));

    // L^i sits inside E_i with finite colength, so its reflexive hull is E_i.
    // The quotient vanishes beyond a window of width e once it vanishes in it,
    // since st, s^e, t^e step down by at most e; gaps can reach degree (e-1)^2.
    int top = std::max(d, e * e + e);
    for (int i = 1; i < e; ++i) {
        for (int deg = 0; deg <= top; ++deg)
            for (int a = 0; a <= deg; ++a) {
                Monomial m{a, deg - a};
                bool inside = in_power_of_L(mod, m, i);
                if (inside && mod.index(m) != i) fail(m.str() + " in L^" + std::to_string(i) + " has the wrong eigenvalue");
                if (deg > top - e && mod.index(m) == i && !inside)
                    fail(m.str() + " in E_" + std::to_string(i) + " lies outside L^" + std::to_string(i) + " at high degree");
            }
    }

    // grading: E_i * sigma^i times E_j * sigma^j lands in E_{i+j}
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j)
            for (const Monomial& x : mod.spaces[i])
                for (const Monomial& y : mod.spaces[j]) {
                    if (x.degree() + y.degree() > d) continue;
                    Term p = product(mod, {1, x, i}, {1, y, j});
                    ++r.checked_products;
                    if (p.c.is_zero() || mod.index(p.m) != (i + j) % e)
                        fail("product " + x.str() + " * " + y.str() + " leaves E_" + std::to_string((i + j) % e));
                }

    // e-fold products of generators of L are invariant
    const auto& lg = e == 1 ? mod.generators[0] : mod.generators[1];
    std::vector<int> pick(e, 0);
    while (true) {
        Monomial m{0, 0};
        for (int p : pick) m = {m.a + lg[p].a, m.b + lg[p].b};
        if (mod.index(m) != 0) fail("e-fold product " + m.str() + " is not invariant");
        int pos = 0;
        while (pos < e && ++pick[pos] == static_cast<int>(lg.size())) pick[pos++] = 0;
        if (pos == e) break;
    }

    // associativity on generator triples
    std::vector<Term> gens;
    for (const Monomial& g : mod.invariant_generators) gens.push_back({1, g, 0});
    for (int i = 1; i < e; ++i)
        for (const Monomial& g : mod.generators[i]) gens.push_back({1, g, i});
    for (const Term& x : gens)
        for (const Term& y : gens)
            for (const Term& z : gens) {
                Term l = product(mod, product(mod, x, y), z);
                Term rr = product(mod, x, product(mod, y, z));
                ++r.checked_triples;
                if (!(l.m == rr.m) || l.k != rr.k || l.c != rr.c)
                    fail("associativity fails on " + x.m.str() + ", " + y.m.str() + ", " + z.m.str());
            }

    // sigma is diagonal on monomials, so it preserves each eigenspace as
    // long as it acts by a unit
    for (int i = 0; i < e; ++i)
        for (const Monomial& m : mod.spaces[i])
            if (root_order(sigma_scalar(mod, m, 1)) == 0) fail("sigma does not act by a unit on " + m.str());
    return r;
}

}  // namespace canord
