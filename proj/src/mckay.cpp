#include "canord/mckay.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace canord {

namespace {

Matrix2 diag_root(int m, long x, long y) { return Matrix2::diag(root_of_unity(m, x), root_of_unity(m, y)); }
Matrix2 swap_matrix() { return Matrix2(0L, 1L, 1L, 0L); }
Matrix2 quarter_turn() { return Matrix2(0L, 1L, -1L, 0L); }

// Unit quaternion x0 + x1 i + x2 j + x3 k as an SU2 matrix.
Matrix2 quaternion(const CycloNumber& x0, const CycloNumber& x1, const CycloNumber& x2, const CycloNumber& x3) {
    CycloNumber i = root_of_unity(4, 1);
    return Matrix2(x0 + x1 * i, x2 + x3 * i, -x2 + x3 * i, x0 - x1 * i);
}

}  // namespace

FiniteMatrixGroup ade_group(char letter, int rank) {
    if (!CanonicalType::ade(letter, rank).valid())
        throw std::invalid_argument("no Kleinian group " + std::string(1, letter) + std::to_string(rank));
    CycloNumber half(Rational(1, 2));
    Matrix2 qi = quaternion(0L, 1L, 0L, 0L), qj = quaternion(0L, 0L, 1L, 0L);
    Matrix2 w = quaternion(half, half, half, half);
    switch (letter) {
        case 'A': return generate_group({diag_root(rank + 1, 1, -1)});
        case 'D': return generate_group({diag_root(2 * (rank - 2), 1, -1), quarter_turn()});
        default: break;
    }
    if (rank == 6) return generate_group({qi, qj, w});
    if (rank == 7) return generate_group({qi, qj, w, diag_root(8, 1, -1)});
    // golden ratio phi = 1 + z5 + z5^4, phi^-1 = z5 + z5^4
    CycloNumber phi_inv = root_of_unity(5, 1) + root_of_unity(5, 4);
    CycloNumber phi = phi_inv + CycloNumber(1);
    return generate_group({qi, qj, w, quaternion(half * phi, half * phi_inv, half, 0L)});
}

FiniteMatrixGroup family_group(const CanonicalType& t) {
    t.validate();
    int n = t.n;
    switch (t.family) {
        case Family::A12: return generate_group({diag_root(2 * t.e, 1, 0), diag_root(2 * t.e, 0, 1)});
        case Family::BL: return generate_group({diag_root(2 * n + 1, 1, -1), swap_matrix()});
        case Family::B: return generate_group({diag_root(2 * n, 1, -1), swap_matrix()});
        case Family::L: return generate_group({diag_root(2 * n + 2, 1, -1), swap_matrix()});
        case Family::DL:
            return generate_group({diag_root(4 * n - 2, 1, -1), quarter_turn(), Matrix2::diag(-1L, 1L)});
        case Family::BD:
            return generate_group({diag_root(4 * n - 4, 1, -1), quarter_turn(), Matrix2::diag(-1L, 1L)});
        case Family::Anz: {
            int m = (n + 1) * t.e;
            return generate_group({diag_root(m, 1, -1), diag_root(m, 0, n + 1)});
        }
        case Family::ADE: return ade_group(t.letter, t.rank);
    }
    throw std::logic_error("unreachable");
}

std::pair<int, int> cyclic_params(const CanonicalType& t) {
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
    return {1, 1};
}

namespace {

// G' pulled back from Gbar = G/H = Z/ne x Z/e.
void quotient_twist(TwistedSide& side, const FiniteMatrixGroup& g, const std::vector<int>& hgens, int n, int e) {
    Quotient q = quotient(g.table, subgroup_closure(g.table, hgens));
    if (q.group.order != n * e * e) throw std::logic_error("quotient has order " + std::to_string(q.group.order));
    auto gens = iso_to_cyclic_product(q.group, n * e, e);
    if (!gens) throw std::logic_error("quotient is not Z/ne x Z/e");
    CentralExtension bar = build_extension(q.group, gens->first, gens->second, n, e);
    side.ext = pullback(bar, g.table, q.projection);
    side.omega = root_of_unity(n * e, n);
    side.qbar_order = q.group.order;
}

// G' as the preimage of G in a cover with central kernel <z>.
void cover_twist(TwistedSide& side, const FiniteMatrixGroup& cover, const FiniteMatrixGroup& g) {
    auto proj = hom_from_generators(cover.table, g.table, g.generator_indices);
    if (!proj) throw std::logic_error("cover generators do not map onto G");
    int z = cover.index_of(Matrix2::diag(-1L, -1L));
    side.ext = extension_from_cover(cover.table, *proj, g.table, z);
    side.omega = CycloNumber(-1);
}

}  // namespace

std::unique_ptr<TwistedSide> twisted_side(const CanonicalType& t) {
    FiniteMatrixGroup g = family_group(t);
    auto side = std::make_unique<TwistedSide>();
    const auto& gi = g.generator_indices;
    switch (t.family) {
        case Family::A12: quotient_twist(*side, g, {g.index_of(Matrix2::diag(-1L, -1L))}, 2, t.e); break;
        case Family::BL:
        case Family::B:
        case Family::ADE:
            side->ext = trivial_extension(g.table);
            side->omega = CycloNumber(1);
            // H = <sigma> for the dihedral rows, H = G for the Kleinian one
            side->qbar_order = t.family == Family::ADE
                                   ? 1
                                   : quotient(g.table, subgroup_closure(g.table, {gi[0]})).group.order;
            break;
        case Family::BD: {
            int s = gi[0];
            quotient_twist(*side, g, {g.table.mul(s, s), gi[1]}, 1, 2);
            break;
        }
        case Family::Anz: quotient_twist(*side, g, {g.table.pow(gi[0], t.e)}, 1, t.e); break;
        case Family::L: {
            FiniteMatrixGroup cover = generate_group({diag_root(4 * t.n + 4, 1, -1), swap_matrix()});
            cover_twist(*side, cover, g);
            break;
        }
        case Family::DL: {
            // G -> D8 = <x, y>: sigma -> x^2, tau -> x, rho -> y; then pull
            // back the dihedral cover of order 16.
            FiniteMatrixGroup d8 = generate_group({diag_root(4, 1, -1), swap_matrix()});
            FiniteMatrixGroup d16 = generate_group({diag_root(8, 1, -1), swap_matrix()});
            int x = d8.generator_indices[0], y = d8.generator_indices[1];
            auto phi = hom_from_generators(g.table, d8.table, {d8.table.mul(x, x), x, y});
            if (!phi) throw std::logic_error("no map onto D8");
            TwistedSide bar;
            cover_twist(bar, d16, d8);
            side->ext = pullback(bar.ext, g.table, *phi);
            side->omega = bar.omega;
            break;
        }
    }
    return side;
}

int count_from_group(const CanonicalType& t) {
    if (t.family == Family::ADE) return static_cast<int>(conjugacy_classes(family_group(t)).size());
    auto side = twisted_side(t);
    AlgebraElement eps = idempotent_epsilon(side->ext.e, side->omega, side->ext);
    return block_count(side->ext, eps);
}

ResolutionCount count_from_resolution(const ResolutionRamData& res, const CanonicalType& t) {
    ResolutionCount out;
    out.n0 = (t.family == Family::A12 || t.family == Family::BL || t.family == Family::B) ? 2 : 1;
    out.total = out.n0;
    for (int i : res.lattice.exceptional()) {
        CurveType ct = classify_exceptional(res, i);
        int ni = 0;
        switch (ct.tag) {
            case CurveType::Tag::Zero: ni = 1; break;
            case CurveType::Tag::I: ni = ct.a == 1 ? 1 : ct.a == 2 ? 2 : 0; break;
            case CurveType::Tag::C:
            case CurveType::Tag::X: ni = ct.a == 2 ? 1 : 0; break;
        }
        if (ni == 0) throw std::invalid_argument("curve type " + ct.str() + " is outside the counting rule");
        out.curves.push_back({res.lattice.curves[i].label, ct, ni});
        out.total += ni;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Character tables: Dixon's method modulo a prime p = 1 mod exp(G), lifted
// through eigenvalue multiplicities, then certified by exact orthogonality.

namespace {

using u64 = unsigned long long;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((__uint128_t)a * b % p); }
u64 powmod(u64 a, u64 k, u64 p) {
    u64 r = 1;
    a %= p;
    while (k) {
        if (k & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        k >>= 1;
    }
    return r;
}
u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

u64 primitive_root_of_unity(u64 order, u64 p) {
    std::vector<u64> factors;
    u64 m = p - 1;
    for (u64 d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) factors.push_back(m);
    for (u64 g = 2; g < p; ++g) {
        bool generator = true;
        for (u64 q : factors)
            if (powmod(g, (p - 1) / q, p) == 1) {
                generator = false;
                break;
            }
        if (generator) return powmod(g, (p - 1) / order, p);
    }
    throw std::logic_error("no primitive root");
}

using ModMatrix = std::vector<std::vector<u64>>;

// Characteristic polynomial via Hessenberg reduction; coefficients low to high.
std::vector<u64> char_poly(ModMatrix a, u64 p) {
    size_t n = a.size();
    for (size_t k = 0; k + 2 < n; ++k) {
        size_t piv = k + 1;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) continue;
        if (piv != k + 1) {
            std::swap(a[piv], a[k + 1]);
            for (auto& row : a) std::swap(row[piv], row[k + 1]);
        }
        u64 inv = invmod(a[k + 1][k], p);
        for (size_t i = k + 2; i < n; ++i) {
            if (a[i][k] == 0) continue;
            u64 f = mulmod(a[i][k], inv, p);
            for (size_t j = 0; j < n; ++j) a[i][j] = (a[i][j] + p - mulmod(f, a[k + 1][j], p)) % p;
            for (size_t j = 0; j < n; ++j) a[j][k + 1] = (a[j][k + 1] + mulmod(f, a[j][i], p)) % p;
        }
    }
    // p_m(x) = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}
    std::vector<std::vector<u64>> polys{{1}};
    for (size_t m = 0; m < n; ++m) {
        std::vector<u64> next(m + 2, 0);
        const auto& prev = polys[m];
        for (size_t d = 0; d < prev.size(); ++d) {
            next[d + 1] = (next[d + 1] + prev[d]) % p;
            next[d] = (next[d] + p - mulmod(a[m][m], prev[d], p)) % p;
        }
        u64 prod = 1;
        for (size_t i = m; i-- > 0;) {
            prod = mulmod(prod, a[i + 1][i], p);
            u64 c = mulmod(a[i][m], prod, p);
            if (c == 0) continue;
            for (size_t d = 0; d < polys[i].size(); ++d) next[d] = (next[d] + p - mulmod(c, polys[i][d], p)) % p;
        }
        polys.push_back(next);
    }
    return polys[n];
}

// One vector spanning the kernel of a - lambda, or empty if the kernel is
// not a line.
std::vector<u64> kernel_line(ModMatrix a, u64 lambda, u64 p) {
    size_t n = a.size();
    for (size_t i = 0; i < n; ++i) a[i][i] = (a[i][i] + p - lambda) % p;
    std::vector<int> pivot_of_col(n, -1);
    size_t row = 0;
    for (size_t col = 0; col < n && row < n; ++col) {
        size_t piv = row;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(a[piv], a[row]);
        u64 inv = invmod(a[row][col], p);
        for (auto& x : a[row]) x = mulmod(x, inv, p);
        for (size_t i = 0; i < n; ++i) {
            if (i == row || a[i][col] == 0) continue;
            u64 f = a[i][col];
            for (size_t j = 0; j < n; ++j) a[i][j] = (a[i][j] + p - mulmod(f, a[row][j], p)) % p;
        }
        pivot_of_col[col] = static_cast<int>(row++);
    }
    if (row != n - 1) return {};
    std::vector<u64> v(n, 0);
    size_t free_col = 0;
    while (pivot_of_col[free_col] >= 0) ++free_col;
    v[free_col] = 1;
    for (size_t col = 0; col < n; ++col)
        if (pivot_of_col[col] >= 0) v[col] = (p - a[pivot_of_col[col]][free_col]) % p;
    return v;
}

struct ModTable {
    std::vector<int> degrees;
    std::vector<std::vector<u64>> values;  // chi mod p on classes
};

std::optional<ModTable> dixon_mod_p(const AbstractGroup& g, const ClassPartition& classes,
                                    const std::vector<int>& cls, const std::vector<int>& inv_class, u64 p,
                                    std::mt19937_64& rng) {
    size_t r = classes.size();
    std::vector<int> rep(r);
    for (size_t k = 0; k < r; ++k) rep[k] = classes[k][0];
    // class matrices: M_j[k][l] = #{x in C_j : x^-1 g_l in C_k}
    std::vector<ModMatrix> mats(r, ModMatrix(r, std::vector<u64>(r, 0)));
    for (size_t j = 0; j < r; ++j)
        for (int x : classes[j])
            for (size_t l = 0; l < r; ++l) ++mats[j][cls[g.mul(g.inv[x], rep[l])]][l];

    for (int attempt = 0; attempt < 30; ++attempt) {
        ModMatrix a(r, std::vector<u64>(r, 0));
        for (size_t j = 0; j < r; ++j) {
            u64 c = rng() % p;
            for (size_t k = 0; k < r; ++k)
                for (size_t l = 0; l < r; ++l) a[k][l] = (a[k][l] + mulmod(c, mats[j][k][l], p)) % p;
        }
        std::vector<u64> cp = char_poly(a, p);
        std::vector<u64> roots;
        for (u64 x = 0; x < p && roots.size() < r; ++x) {
            u64 v = 0;
            for (size_t d = cp.size(); d-- > 0;) v = (mulmod(v, x, p) + cp[d]) % p;
            if (v == 0) roots.push_back(x);
        }
        if (roots.size() != r) continue;  // repeated eigenvalue, try another mix

        ModTable t;
        bool ok = true;
        for (u64 lambda : roots) {
            std::vector<u64> w = kernel_line(a, lambda, p);
            if (w.empty() || w[0] == 0) {
                ok = false;
                break;
            }
            u64 s = invmod(w[0], p);
            for (auto& x : w) x = mulmod(x, s, p);
            // sum_k w_k w_k' / h_k = |G| / d^2
            u64 sum = 0;
            for (size_t k = 0; k < r; ++k)
                sum = (sum + mulmod(mulmod(w[k], w[inv_class[k]], p), invmod(classes[k].size(), p), p)) % p;
            if (sum == 0) {
                ok = false;
                break;
            }
            u64 d2 = mulmod(g.order % p, invmod(sum, p), p);
            int d = 0;
            for (int c = 1; c * c <= g.order; ++c)
                if (static_cast<u64>(c * c) % p == d2) d = c;
            if (d == 0) {
                ok = false;
                break;
            }
            std::vector<u64> chi(r);
            for (size_t k = 0; k < r; ++k) chi[k] = mulmod(mulmod(d, w[k], p), invmod(classes[k].size(), p), p);
            t.degrees.push_back(d);
            t.values.push_back(chi);
        }
        if (ok) return t;
    }
    return std::nullopt;
}

}  // namespace

bool CharacterTable::rows_orthogonal() const {
    size_t r = chi.size();
    for (size_t i = 0; i < r; ++i)
        for (size_t j = i; j < r; ++j) {
            CycloNumber s(0);
            for (size_t k = 0; k < classes.size(); ++k) s += chi[i][k] * chi[j][k].conj() * CycloNumber(class_sizes[k]);
            if (!(s == CycloNumber(i == j ? group_order : 0))) return false;
        }
    return true;
}

bool CharacterTable::columns_orthogonal() const {
    size_t r = classes.size();
    for (size_t k = 0; k < r; ++k)
        for (size_t l = k; l < r; ++l) {
            CycloNumber s(0);
            for (size_t i = 0; i < chi.size(); ++i) s += chi[i][k] * chi[i][l].conj();
            Rational expected = k == l ? Rational(group_order, class_sizes[k]) : Rational(0);
            expected.canonicalize();
            if (!(s == CycloNumber(expected))) return false;
        }
    return true;
}

CharacterTable character_table(const AbstractGroup& g) {
    CharacterTable t;
    t.group_order = g.order;
    t.classes = conjugacy_classes(g);
    size_t r = t.classes.size();
    std::vector<int> cls = class_index(t.classes, g.order);
    for (const auto& c : t.classes) t.class_sizes.push_back(static_cast<int>(c.size()));
    for (size_t k = 0; k < r; ++k) t.inverse_class.push_back(cls[g.inv[t.classes[k][0]]]);

    const long ex = g.exponent();
    std::mt19937_64 rng(0x5eed);
    u64 p = static_cast<u64>(ex) * ((2 * g.order + 2) / ex + 1) + 1;
    for (int prime_tries = 0; prime_tries < 50; ++prime_tries, p += ex) {
        while (!is_prime(p)) p += ex;
        auto mod = dixon_mod_p(g, t.classes, cls, t.inverse_class, p, rng);
        if (!mod) continue;
        u64 zeta = primitive_root_of_unity(ex, p);
        // lift chi(g) = sum_l m_l z_o^l where m_l counts eigenvalue z_o^l
        std::vector<std::vector<CycloNumber>> exact;
        bool ok = true;
        for (size_t i = 0; i < r && ok; ++i) {
            std::vector<CycloNumber> row;
            for (size_t k = 0; k < r && ok; ++k) {
                int x = t.classes[k][0];
                long o = g.element_order(x);
                u64 zo = powmod(zeta, ex / o, p), inv_o = invmod(o, p);
                CycloNumber value(0);
                for (long l = 0; l < o; ++l) {
                    u64 m = 0, y = 0;  // y = x^j
                    for (long j = 0; j < o; ++j) {
                        u64 back = static_cast<u64>((o - (l * j) % o) % o);  // z_o^{-lj}
                        m = (m + mulmod(mod->values[i][cls[y]], powmod(zo, back, p), p)) % p;
                        y = g.mul(static_cast<int>(y), x);
                    }
                    m = mulmod(m, inv_o, p);
                    if (m > static_cast<u64>(mod->degrees[i])) {
                        ok = false;
                        break;
                    }
                    if (m) value += CycloNumber(static_cast<long>(m)) * root_of_unity(static_cast<int>(ex), (ex / o) * l);
                }
                row.push_back(value);
            }
            exact.push_back(row);
        }
        if (!ok) continue;
        // trivial character first, then by degree; ties keep Dixon order
        std::vector<size_t> order(r);
        std::iota(order.begin(), order.end(), 0);
        auto is_trivial = [&](size_t i) {
            return std::all_of(exact[i].begin(), exact[i].end(), [](const CycloNumber& v) { return v.is_one(); });
        };
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            bool ta = is_trivial(a), tb = is_trivial(b);
            if (ta != tb) return ta;
            return mod->degrees[a] < mod->degrees[b];
        });
        t.chi.clear();
        t.degrees.clear();
        for (size_t i : order) {
            t.chi.push_back(exact[i]);
            t.degrees.push_back(mod->degrees[i]);
        }
        long sum_sq = 0;
        for (int d : t.degrees) sum_sq += static_cast<long>(d) * d;
        if (sum_sq == g.order && t.rows_orthogonal() && t.columns_orthogonal()) return t;
    }
    throw std::runtime_error("character table could not be certified");
}

CharacterTable character_table(const FiniteMatrixGroup& g) { return character_table(g.table); }
CharacterTable character_table(const CentralExtension& ext) { return character_table(ext.group()); }

bool McKayQuiver::dimension_identity() const {
    for (size_t i = 0; i < dims.size(); ++i) {
        long s = 0;
        for (size_t j = 0; j < dims.size(); ++j) s += static_cast<long>(adjacency[i][j]) * dims[j];
        if (s != 2L * dims[i]) return false;
    }
    return true;
}

McKayQuiver mckay_quiver(const FiniteMatrixGroup& h) {
    for (const auto& m : h.elements)
        if (!m.det().is_one()) throw std::invalid_argument("group is not in SL2");
    CharacterTable t = character_table(h);
    size_t r = t.chi.size();
    std::vector<CycloNumber> tr;
    for (const auto& c : t.classes) tr.push_back(h.elements[c[0]].trace());
    McKayQuiver q;
    q.dims = t.degrees;
    q.adjacency.assign(r, std::vector<int>(r, 0));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
            CycloNumber s(0);
            for (size_t k = 0; k < t.classes.size(); ++k)
                s += CycloNumber(t.class_sizes[k]) * tr[k] * t.chi[i][k] * t.chi[j][k].conj();
            s = s * CycloNumber(Rational(1, h.order()));
            if (!s.is_rational() || s.rational().get_den() != 1 || s.rational() < 0)
                throw std::logic_error("non-integral McKay multiplicity");
            q.adjacency[i][j] = static_cast<int>(s.rational().get_num().get_si());
        }
    q.trivial = 0;
    return q;
}

std::vector<std::vector<int>> affine_diagram(char letter, int rank) {
    if (!CanonicalType::ade(letter, rank).valid()) throw std::invalid_argument("no affine diagram");
    int n = rank + 1;
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    auto edge = [&](int i, int j) {
        a[i][j] += 1;
        a[j][i] += 1;
    };
    if (letter == 'A') {
        for (int i = 0; i < n; ++i) edge(i, (i + 1) % n);
        return a;
    }
    IntersectionLattice fin = ade_config(letter, rank);
    for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j)
            if (fin.pairing[i][j]) edge(i + 1, j + 1);
    int attach = 0;
    if (letter == 'D') attach = 2;
    else if (rank == 6) attach = 6;
    else if (rank == 7) attach = 1;
    else attach = 7;
    edge(0, attach);
    return a;
}

bool graphs_isomorphic(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
    size_t n = a.size();
    if (b.size() != n) return false;
    auto signature = [](const std::vector<std::vector<int>>& m, size_t i) {
        std::vector<int> row = m[i];
        std::sort(row.begin(), row.end());
        row.push_back(m[i][i]);
        return row;
    };
    std::vector<std::vector<int>> sa, sb;
    for (size_t i = 0; i < n; ++i) {
        sa.push_back(signature(a, i));
        sb.push_back(signature(b, i));
    }
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(size_t)> extend = [&](size_t i) {
        if (i == n) return true;
        for (size_t j = 0; j < n; ++j) {
            if (used[j] || sa[i] != sb[j]) continue;
            bool fits = true;
            for (size_t k = 0; k < i && fits; ++k) fits = a[i][k] == b[j][map[k]];
            if (!fits || a[i][i] != b[j][j]) continue;
            map[i] = static_cast<int>(j);
            used[j] = 1;
            if (extend(i + 1)) return true;
            used[j] = 0;
        }
        return false;
    };
    return extend(0);
}

std::string quiver_dot(const McKayQuiver& q, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (size_t i = 0; i < q.dims.size(); ++i)
        os << "  \"chi" << i << "\" [label=\"chi" << i << "\\nd=" << q.dims[i] << "\""
           << (static_cast<int>(i) == q.trivial ? ", shape=doublecircle" : "") << "];\n";
    for (size_t i = 0; i < q.dims.size(); ++i)
        for (size_t j = i + 1; j < q.dims.size(); ++j)
            for (int k = 0; k < q.adjacency[i][j]; ++k) os << "  \"chi" << i << "\" -- \"chi" << j << "\";\n";
    os << "}\n";
    return os.str();
}

namespace {

std::string C(int i) { return "C" + std::to_string(i); }
std::string F(int i) { return "F" + std::to_string(i); }

Divisor terms(const IntersectionLattice& lat, const std::vector<std::pair<int, long>>& cs) {
    Divisor d = lat.zero();
    for (auto [i, c] : cs) d[lat.index(C(i))] += c;
    return d;
}

std::vector<int> f_support(const IntersectionLattice& lat, int m, const std::function<bool(int)>& keep) {
    std::vector<int> out;
    for (int j = 1; j <= m; ++j)
        if (keep(j)) out.push_back(lat.index(F(j)));
    return out;
}

std::vector<int> identity_perm(const IntersectionLattice& lat) {
    std::vector<int> p(lat.size());
    std::iota(p.begin(), p.end(), 0);
    return p;
}

}  // namespace

std::vector<TorsionCheck> torsion_checks(const CanonicalType& t) {
    std::vector<TorsionCheck> out;
    int n = t.n, e = t.e;
    switch (t.family) {
        case Family::A12: {
            int m = 2 * e - 1;
            IntersectionLattice lat = a_string(m, "F");
            Divisor d = terms(lat, {{1, 1}, {m, -1}});
            auto sup = f_support(lat, m, [e](int j) { return j != e; });
            out.push_back({"C1-C" + std::to_string(m), torsion_order(lat, d, sup), e});
            break;
        }
        case Family::L: {
            int m = 2 * n + 1;
            IntersectionLattice lat = a_string(m, "F");
            std::vector<int> tau(lat.size());
            for (int i = 1; i <= m; ++i) {
                tau[lat.index(F(i))] = lat.index(F(m + 1 - i));
                tau[lat.index(C(i))] = lat.index(C(m + 1 - i));
            }
            Divisor d = terms(lat, {{n + 1, 1}, {n, -1}});
            out.push_back({"(1+tau)(C" + std::to_string(n + 1) + "-C" + std::to_string(n) + ")",
                           twisted_torsion_order(lat, d, {lat.index(F(n + 1))}, tau), 2});
            break;
        }
        case Family::DL: {
            int m = 2 * n + 1;
            IntersectionLattice lat = d_tree(m, "F");
            std::vector<int> rho = identity_perm(lat);
            std::swap(rho[lat.index(F(2 * n))], rho[lat.index(F(2 * n + 1))]);
            std::swap(rho[lat.index(C(2 * n))], rho[lat.index(C(2 * n + 1))]);
            std::vector<std::pair<int, long>> alt;
            for (int j = 1; j <= 2 * n; ++j) alt.emplace_back(j, j % 2 ? 1 : -1);
            auto sup = f_support(lat, 2 * n - 1, [](int j) { return j % 2 == 1; });
            out.push_back({"(1+rho)(C1-C2+...-C" + std::to_string(2 * n) + ")",
                           twisted_torsion_order(lat, terms(lat, alt), sup, rho), 2});
            break;
        }
        case Family::BD: {
            int m = 2 * n;
            IntersectionLattice lat = d_tree(m, "F");
            std::vector<std::pair<int, long>> alt;
            for (int j = 1; j <= m - 1; ++j) alt.emplace_back(j, j % 2 ? 1 : -1);
            auto sup = f_support(lat, m - 1, [](int j) { return j % 2 == 1; });
            out.push_back({"C1-C2+...+C" + std::to_string(m - 1), torsion_order(lat, terms(lat, alt), sup), 2});
            break;
        }
        case Family::Anz: {
            int m = n * e + e - 1;
            IntersectionLattice lat = a_string(m, "F");
            std::vector<std::pair<int, long>> cs;
            for (int i = 0; i <= n; ++i) cs.emplace_back(i * e + 1, 1);
            for (int i = 1; i <= n; ++i) cs.emplace_back(i * e, -1);
            auto sup = f_support(lat, m, [e](int j) { return j % e != 0; });
            out.push_back({"sum C_(ie+1) - sum C_(ie)", torsion_order(lat, terms(lat, cs), sup), e});
            break;
        }
        case Family::BL:
        case Family::B:
        case Family::ADE: break;
    }
    return out;
}

bool McKayReport::ok() const {
    if (!agree || !k_trivial) return false;
    for (const auto& c : torsion)
        if (!c.pass()) return false;
    if (quiver_ok && !*quiver_ok) return false;
    if (n0_group && *n0_group != breakdown.n0) return false;
    return true;
}

McKayReport verify(const CanonicalType& t) {
    t.validate();
    McKayReport r;
    r.type = t;
    ResolutionRamData res = resolution_ram(t);
    r.breakdown = count_from_resolution(res, t);
    r.count_resolution = r.breakdown.total;

    auto k = canonical_check(res);
    r.k_trivial = std::all_of(k.begin(), k.end(), [](const Rational& x) { return x == 0; });
    r.torsion = torsion_checks(t);
    auto [sn, se] = cyclic_params(t);
    r.skew = skew_constructible(res, sn, se);

    if (t.family == Family::ADE) {
        FiniteMatrixGroup h = family_group(t);
        r.count_group = static_cast<int>(conjugacy_classes(h).size());
        McKayQuiver q = mckay_quiver(h);
        r.irreps = static_cast<int>(q.dims.size());
        long sum_sq = 0;
        for (int d : q.dims) sum_sq += static_cast<long>(d) * d;
        r.quiver_ok = sum_sq == h.order() && q.dimension_identity() &&
                      graphs_isomorphic(q.adjacency, affine_diagram(t.letter, t.rank)) &&
                      *r.irreps == static_cast<int>(res.lattice.exceptional().size()) + 1;
        r.n0_group = 1;
    } else {
        auto side = twisted_side(t);
        AlgebraElement eps = idempotent_epsilon(side->ext.e, side->omega, side->ext);
        r.count_group = block_count(side->ext, eps);
        if (side->qbar_order > 0) r.n0_group = side->qbar_order / (side->ext.e * side->ext.e);
    }
    r.agree = r.count_resolution == r.count_group;
    return r;
}

nlohmann::json to_json(const McKayReport& r) {
    nlohmann::json j;
    j["type"] = family_name(r.type.family);
    j["params"] = r.type.params();
    j["countResolution"] = r.count_resolution;
    j["countGroup"] = r.count_group;
    j["curves"] = nlohmann::json::array();
    for (const auto& c : r.breakdown.curves) j["curves"].push_back({{"label", c.label}, {"curveType", c.type.str()}, {"ni", c.ni}});
    j["n0"] = r.breakdown.n0;
    j["kTrivial"] = r.k_trivial;
    j["torsion"] = nlohmann::json::array();
    for (const auto& t : r.torsion) {
        nlohmann::json tj{{"label", t.label}, {"expected", t.expected}};
        tj["order"] = t.order ? nlohmann::json(*t.order) : nlohmann::json(nullptr);
        j["torsion"].push_back(tj);
    }
    j["agree"] = r.agree;
    j["skewConstructible"] = r.skew.ok;
    if (r.irreps) j["irreps"] = *r.irreps;
    if (r.quiver_ok) j["quiverOk"] = *r.quiver_ok;
    return j;
}

std::string to_text(const McKayReport& r) {
    std::ostringstream os;
    os << r.type.label() << ": resolution " << r.count_resolution << ", group " << r.count_group << ", "
       << (r.agree ? "agree" : "DISAGREE") << "\n";
    os << "  n0 = " << r.breakdown.n0;
    if (r.n0_group) os << " (group side " << *r.n0_group << ")";
    os << "\n";
    for (const auto& c : r.breakdown.curves) os << "  " << c.label << ": type " << c.type.str() << ", n_i = " << c.ni << "\n";
    os << "  K trivial: " << (r.k_trivial ? "yes" : "no") << "\n";
    for (const auto& t : r.torsion)
        os << "  torsion " << t.label << ": " << (t.order ? std::to_string(*t.order) : "none") << " (expected "
           << t.expected << ")\n";
    os << "  skew-constructible: " << (r.skew.ok ? "true" : "false") << "\n";
    if (r.irreps) os << "  irreducible characters: " << *r.irreps << ", quiver " << (*r.quiver_ok ? "ok" : "BAD") << "\n";
    return os.str();
}

}  // namespace canord
