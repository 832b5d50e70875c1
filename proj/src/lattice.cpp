#include "canord/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace canord {

int IntersectionLattice::index(const std::string& label) const {
    for (size_t i = 0; i < curves.size(); ++i)
        if (curves[i].label == label) return static_cast<int>(i);
    throw std::invalid_argument("unknown curve " + label);
}

std::vector<int> IntersectionLattice::exceptional() const {
    std::vector<int> out;
    for (size_t i = 0; i < curves.size(); ++i)
        if (curves[i].kind == CurveKind::Exceptional) out.push_back(static_cast<int>(i));
    return out;
}

int IntersectionLattice::add_curve(const std::string& label, CurveKind kind, int self_int) {
    for (const auto& c : curves)
        if (c.label == label) throw std::invalid_argument("duplicate curve " + label);
    curves.push_back({label, kind, self_int});
    for (auto& row : pairing) row.push_back(0);
    pairing.emplace_back(curves.size(), 0);
    int i = size() - 1;
    pairing[i][i] = self_int;
    return i;
}

void IntersectionLattice::set_pairing(int a, int b, int v) {
    pairing.at(a).at(b) = v;
    pairing.at(b).at(a) = v;
    if (a == b) curves[a].self_int = v;
}

long IntersectionLattice::dot_curve(const Divisor& a, int curve) const {
    long s = 0;
    for (int j = 0; j < size(); ++j) s += a[j] * pairing[j][curve];
    return s;
}

long IntersectionLattice::dot(const Divisor& a, const Divisor& b) const {
    long s = 0;
    for (int k = 0; k < size(); ++k)
        if (b[k] != 0) s += b[k] * dot_curve(a, k);
    return s;
}

Divisor IntersectionLattice::unit(int curve) const {
    Divisor d = zero();
    d.at(curve) = 1;
    return d;
}

bool IntersectionLattice::is_symmetric() const {
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j)
            if (pairing[i][j] != pairing[j][i]) return false;
    return true;
}

// -M is positive definite iff Gaussian elimination without pivoting sees
// only positive pivots.
bool IntersectionLattice::is_negative_definite(const std::vector<int>& subset) const {
    size_t n = subset.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = -pairing[subset[i]][subset[j]];
    for (size_t k = 0; k < n; ++k) {
        if (a[k][k] <= 0) return false;
        for (size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rational f = a[i][k] / a[k][k];
            for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return true;
}

bool IntersectionLattice::is_connected(const std::vector<int>& subset) const {
    if (subset.empty()) return false;
    std::vector<char> seen(subset.size(), 0);
    std::vector<size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        size_t i = stack.back();
        stack.pop_back();
        for (size_t j = 0; j < subset.size(); ++j)
            if (!seen[j] && pairing[subset[i]][subset[j]] != 0) {
                seen[j] = 1;
                stack.push_back(j);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

namespace {

IntersectionLattice tree_with_transversals(int m, const std::string& prefix,
                                           const std::vector<std::pair<int, int>>& edges) {
    IntersectionLattice lat;
    for (int i = 1; i <= m; ++i) lat.add_curve(prefix + std::to_string(i), CurveKind::Exceptional, -2);
    for (auto [a, b] : edges) lat.set_pairing(a - 1, b - 1, 1);
    for (int i = 1; i <= m; ++i) {
        int c = lat.add_curve("C" + std::to_string(i), CurveKind::Transverse);
        lat.set_pairing(c, i - 1, 1);
    }
    lat.contracted = lat.exceptional();
    return lat;
}

std::vector<std::pair<int, int>> chain(int m) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < m; ++i) e.emplace_back(i, i + 1);
    return e;
}

}  // namespace

IntersectionLattice a_string(int m, const std::string& prefix) {
    if (m < 1) throw std::invalid_argument("A_m needs m >= 1");
    return tree_with_transversals(m, prefix, chain(m));
}

IntersectionLattice d_tree(int m, const std::string& prefix) {
    // m = 3 is the fork shape of A_3, used for the smallest dihedral row
    if (m < 3) throw std::invalid_argument("D_m needs m >= 3");
    auto e = chain(m - 2);
    e.emplace_back(m - 2, m - 1);
    e.emplace_back(m - 2, m);
    return tree_with_transversals(m, prefix, e);
}

IntersectionLattice e_tree(int m, const std::string& prefix) {
    if (m < 6 || m > 8) throw std::invalid_argument("E_m needs 6 <= m <= 8");
    auto e = chain(m - 1);
    e.emplace_back(3, m);
    return tree_with_transversals(m, prefix, e);
}

IntersectionLattice ade_config(char letter, int rank, const std::string& prefix) {
    switch (letter) {
        case 'A': return a_string(rank, prefix);
        case 'D':
            if (rank < 4) throw std::invalid_argument("D_m needs m >= 4");
            return d_tree(rank, prefix);
        case 'E': return e_tree(rank, prefix);
        default: throw std::invalid_argument(std::string("unknown ADE letter ") + letter);
    }
}

// Laufer's algorithm: start from the reduced cycle and add any curve with
// positive intersection until none is left.
Divisor fundamental_cycle(const IntersectionLattice& lat, const std::vector<int>& subset) {
    if (!lat.is_connected(subset)) throw std::invalid_argument("configuration is not connected");
    if (!lat.is_negative_definite(subset)) throw std::invalid_argument("configuration is not negative definite");
    Divisor z = lat.zero();
    for (int i : subset) z[i] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i : subset)
            if (lat.dot_curve(z, i) > 0) {
                ++z[i];
                changed = true;
            }
    }
    return z;
}

Diagonalized diagonalize(const std::vector<std::vector<long>>& a) {
    Diagonalized out;
    int r = static_cast<int>(a.size());
    int c = r ? static_cast<int>(a[0].size()) : 0;
    out.rows = r;
    out.cols = c;
    std::vector<std::vector<Integer>> m(r, std::vector<Integer>(c));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m[i][j] = a[i][j];
    auto identity = [](int n) {
        std::vector<std::vector<Integer>> id(n, std::vector<Integer>(n, 0));
        for (int i = 0; i < n; ++i) id[i][i] = 1;
        return id;
    };
    out.u = identity(r);
    out.v = identity(c);

    auto swap_rows = [&](int i, int j) {
        std::swap(m[i], m[j]);
        std::swap(out.u[i], out.u[j]);
    };
    auto swap_cols = [&](int i, int j) {
        for (auto& row : m) std::swap(row[i], row[j]);
        for (auto& row : out.v) std::swap(row[i], row[j]);
    };

    for (int t = 0; t < std::min(r, c); ++t) {
        // smallest nonzero entry of the remaining block
        int pi = -1, pj = -1;
        for (int i = t; i < r; ++i)
            for (int j = t; j < c; ++j)
                if (m[i][j] != 0 && (pi < 0 || abs(m[i][j]) < abs(m[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        while (true) {
            bool clean = true;
            for (int i = t + 1; i < r; ++i) {
                if (m[i][t] == 0) continue;
                Integer q = m[i][t] / m[t][t];
                for (int j = t; j < c; ++j) m[i][j] -= q * m[t][j];
                for (int j = 0; j < r; ++j) out.u[i][j] -= q * out.u[t][j];
                if (m[i][t] != 0) clean = false;
            }
            for (int j = t + 1; j < c; ++j) {
                if (m[t][j] == 0) continue;
                Integer q = m[t][j] / m[t][t];
                for (int i = t; i < r; ++i) m[i][j] -= q * m[i][t];
                for (int i = 0; i < c; ++i) out.v[i][j] -= q * out.v[i][t];
                if (m[t][j] != 0) clean = false;
            }
            if (clean) break;
            // a remainder survived: move the smallest one into the pivot
            int bi = t, bj = t;
            for (int i = t + 1; i < r; ++i)
                if (m[i][t] != 0 && abs(m[i][t]) < abs(m[bi][bj])) bi = i, bj = t;
            for (int j = t + 1; j < c; ++j)
                if (m[t][j] != 0 && abs(m[t][j]) < abs(m[bi][bj])) bi = t, bj = j;
            if (bi != t) swap_rows(t, bi);
            if (bj != t) swap_cols(t, bj);
        }
        out.diag.push_back(m[t][t]);
    }
    return out;
}

namespace {

struct System {
    Diagonalized dz;
    std::vector<Integer> ub;  // U b
};

// Columns: support curves; rows: contracted curves.
System build_system(const IntersectionLattice& lat, const Divisor& d, const std::vector<int>& support) {
    if (static_cast<int>(d.size()) != lat.size()) throw std::invalid_argument("divisor length mismatch");
    std::vector<std::vector<long>> a;
    std::vector<Integer> b;
    for (int k : lat.contracted) {
        std::vector<long> row;
        for (int j : support) row.push_back(lat.pairing[j][k]);
        a.push_back(row);
        b.emplace_back(lat.dot_curve(d, k));
    }
    System s{diagonalize(a), {}};
    s.ub.assign(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) s.ub[i] += s.dz.u[i][j] * b[j];
    return s;
}

}  // namespace

std::optional<Divisor> linear_equivalence_solve(const IntersectionLattice& lat, const Divisor& d,
                                                const std::vector<int>& support) {
    System s = build_system(lat, d, support);
    size_t rank = s.dz.diag.size();
    for (size_t i = rank; i < s.ub.size(); ++i)
        if (s.ub[i] != 0) return std::nullopt;
    std::vector<Integer> y(support.size(), 0);
    for (size_t i = 0; i < rank; ++i) {
        if (s.ub[i] % s.dz.diag[i] != 0) return std::nullopt;
        y[i] = s.ub[i] / s.dz.diag[i];
    }
    Divisor out = lat.zero();
    for (size_t j = 0; j < support.size(); ++j) {
        Integer v = 0;
        for (size_t i = 0; i < support.size(); ++i) v += s.dz.v[j][i] * y[i];
        if (!v.fits_slong_p()) throw std::overflow_error("coefficient overflow");
        out[support[j]] = v.get_si();
    }
    return out;
}

std::optional<long> torsion_order(const IntersectionLattice& lat, const Divisor& d, const std::vector<int>& support) {
    System s = build_system(lat, d, support);
    size_t rank = s.dz.diag.size();
    for (size_t i = rank; i < s.ub.size(); ++i)
        if (s.ub[i] != 0) return std::nullopt;
    Integer k = 1;
    for (size_t i = 0; i < rank; ++i) {
        Integer di = abs(s.dz.diag[i]);
        Integer g;
        mpz_gcd(g.get_mpz_t(), di.get_mpz_t(), s.ub[i].get_mpz_t());
        Integer ki = di / g;
        mpz_lcm(k.get_mpz_t(), k.get_mpz_t(), ki.get_mpz_t());
    }
    if (!k.fits_slong_p()) throw std::overflow_error("torsion order overflow");
    return k.get_si();
}

Divisor permute(const Divisor& d, const std::vector<int>& rho) {
    if (rho.size() != d.size()) throw std::invalid_argument("permutation length mismatch");
    Divisor out(d.size(), 0);
    for (size_t j = 0; j < d.size(); ++j) out.at(rho[j]) += d[j];
    return out;
}

std::optional<long> twisted_torsion_order(const IntersectionLattice& lat, const Divisor& d,
                                          const std::vector<int>& support, const std::vector<int>& rho) {
    // order of rho
    long ord = 1;
    {
        std::vector<char> seen(rho.size(), 0);
        for (size_t i = 0; i < rho.size(); ++i) {
            if (seen[i]) continue;
            long len = 0;
            for (size_t j = i; !seen[j]; j = rho[j]) {
                seen[j] = 1;
                ++len;
            }
            ord = std::lcm(ord, len);
        }
    }
    // S_k only matters modulo solvable classes and S_{k+ord} = S_k + N, so
    // once N has torsion t the search period is ord * t.
    Divisor norm = lat.zero(), term = d;
    for (long i = 0; i < ord; ++i) {
        for (size_t j = 0; j < norm.size(); ++j) norm[j] += term[j];
        term = permute(term, rho);
    }
    auto t = torsion_order(lat, norm, support);
    long limit = t ? ord * *t : ord * 1000;
    Divisor sum = lat.zero();
    term = d;
    for (long k = 1; k <= limit; ++k) {
        for (size_t j = 0; j < sum.size(); ++j) sum[j] += term[j];
        term = permute(term, rho);
        if (linear_equivalence_solve(lat, sum, support)) return k;
    }
    return std::nullopt;
}

Divisor divisor(const IntersectionLattice& lat, const std::map<std::string, long>& terms) {
    Divisor d = lat.zero();
    for (const auto& [label, c] : terms) d[lat.index(label)] += c;
    return d;
}

std::string to_dot(const IntersectionLattice& lat, const std::vector<int>& ram, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int i = 0; i < lat.size(); ++i) {
        const Curve& c = lat.curves[i];
        os << "  \"" << c.label << "\" [label=\"" << c.label;
        if (c.kind == CurveKind::Exceptional) os << "\\n" << c.self_int;
        if (!ram.empty() && ram[i] > 1) os << "\\ne=" << ram[i];
        os << "\"";
        if (c.kind == CurveKind::Transverse) os << ", shape=box";
        os << "];\n";
    }
    for (int i = 0; i < lat.size(); ++i)
        for (int j = i + 1; j < lat.size(); ++j) {
            int m = lat.pairing[i][j];
            if (m == 0) continue;
            os << "  \"" << lat.curves[i].label << "\" -- \"" << lat.curves[j].label << "\"";
            if (m != 1) os << " [label=\"" << m << "\"]";
            os << ";\n";
        }
    os << "}\n";
    return os.str();
}

}  // namespace canord
