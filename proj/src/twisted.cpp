#include "canord/twisted.hpp"

#include <stdexcept>

namespace canord {

int CentralExtension::mul(int x, int y) const {
    int g = base_of(x), h = base_of(y);
    return elem(base.mul(g, h), static_cast<long>(level_of(x)) + level_of(y) + c(g, h));
}

bool CentralExtension::satisfies_cocycle_identity() const {
    int n = base.order;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            int gh = base.mul(g, h);
            for (int k = 0; k < n; ++k)
                if (mod_l(c(g, h) + c(gh, k) - c(h, k) - c(g, base.mul(h, k)), e) != 0) return false;
        }
    return true;
}

bool CentralExtension::is_normalized() const {
    for (int g = 0; g < base.order; ++g)
        if (c(0, g) != 0 || c(g, 0) != 0) return false;
    return true;
}

AbstractGroup CentralExtension::group() const {
    AbstractGroup t;
    int n = order();
    t.order = n;
    t.table.resize(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t.table[static_cast<size_t>(x) * n + y] = mul(x, y);
    t.fill_inverses();
    for (int s : base.gens) t.gens.push_back(elem(s, 0));
    if (e > 1) t.gens.push_back(rho());
    return t;
}

CentralExtension trivial_extension(const AbstractGroup& g) {
    CentralExtension ext;
    ext.base = g;
    ext.e = 1;
    ext.cocycle.assign(static_cast<size_t>(g.order) * g.order, 0);
    return ext;
}

CentralExtension build_extension(const AbstractGroup& qbar, int sigma, int tau, int n, int e) {
    if (n < 1 || e < 1) throw std::invalid_argument("extension parameters must be positive");
    int ne = n * e;
    if (qbar.order != ne * e || !qbar.is_abelian() || qbar.element_order(sigma) != ne ||
        qbar.element_order(tau) != e)
        throw std::invalid_argument("quotient group is not of shape Z/ne x Z/e");
    std::vector<int> ca(qbar.order, -1), cb(qbar.order, -1);
    for (int a = 0, x = 0; a < ne; ++a, x = qbar.mul(x, sigma))
        for (int b = 0, y = x; b < e; ++b, y = qbar.mul(y, tau)) {
            if (ca[y] >= 0) throw std::invalid_argument("quotient group is not of shape Z/ne x Z/e");
            ca[y] = a;
            cb[y] = b;
        }
    CentralExtension ext;
    ext.base = qbar;
    ext.e = e;
    ext.cocycle.resize(static_cast<size_t>(qbar.order) * qbar.order);
    for (int x = 0; x < qbar.order; ++x)
        for (int y = 0; y < qbar.order; ++y)
            ext.cocycle[static_cast<size_t>(x) * qbar.order + y] = static_cast<int>(mod_l(cb[x] * ca[y], e));
    return ext;
}

CentralExtension extension_from_cover(const AbstractGroup& cover, const std::vector<int>& proj,
                                      const AbstractGroup& q, int z) {
    int e = cover.element_order(z);
    if (cover.order != q.order * e) throw std::invalid_argument("cover order does not match |Q| * |z|");
    for (int x = 0; x < cover.order; ++x)
        if (cover.mul(x, z) != cover.mul(z, x)) throw std::invalid_argument("z is not central in the cover");
    std::vector<int> zlevel(cover.order, -1);
    for (int k = 0, p = 0; k < e; ++k, p = cover.mul(p, z)) {
        if (proj[p] != 0) throw std::invalid_argument("z does not lie in the kernel");
        zlevel[p] = k;
    }
    std::vector<int> section(q.order, -1);
    section[0] = 0;
    for (int x = 0; x < cover.order; ++x)
        if (section[proj[x]] < 0) section[proj[x]] = x;
    for (int s : section)
        if (s < 0) throw std::invalid_argument("map not surjective");

    CentralExtension ext;
    ext.base = q;
    ext.e = e;
    ext.cocycle.resize(static_cast<size_t>(q.order) * q.order);
    for (int a = 0; a < q.order; ++a)
        for (int b = 0; b < q.order; ++b) {
            // s(a) s(b) = z^j s(ab)
            int lhs = cover.mul(section[a], section[b]);
            int zpart = cover.mul(lhs, cover.inv[section[q.mul(a, b)]]);
            if (zlevel[zpart] < 0) throw std::invalid_argument("kernel of the cover map is not <z>");
            ext.cocycle[static_cast<size_t>(a) * q.order + b] = zlevel[zpart];
        }
    return ext;
}

CentralExtension pullback(const CentralExtension& ext, const AbstractGroup& g, const std::vector<int>& phi) {
    if (static_cast<int>(phi.size()) != g.order) throw std::invalid_argument("map must be defined on all of G");
    std::vector<char> hit(ext.base.order, 0);
    for (int v : phi) hit[v] = 1;
    for (char h : hit)
        if (!h) throw std::invalid_argument("map not surjective");
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            if (phi[g.mul(a, b)] != ext.base.mul(phi[a], phi[b]))
                throw std::invalid_argument("map is not a homomorphism");
    CentralExtension out;
    out.base = g;
    out.e = ext.e;
    out.cocycle.resize(static_cast<size_t>(g.order) * g.order);
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) out.cocycle[static_cast<size_t>(a) * g.order + b] = ext.c(phi[a], phi[b]);
    return out;
}

AlgebraElement AlgebraElement::basis(const CentralExtension& ext, int x, const CycloNumber& c) {
    AlgebraElement a;
    a.ext = &ext;
    if (!c.is_zero()) a.coeffs.emplace(x, c);
    return a;
}

bool AlgebraElement::is_zero() const {
    for (const auto& [k, v] : coeffs)
        if (!v.is_zero()) return false;
    return true;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    AlgebraElement r;
    r.ext = ext ? ext : o.ext;
    for (const auto& [x, a] : coeffs)
        for (const auto& [y, b] : o.coeffs) {
            int z = r.ext->mul(x, y);
            auto it = r.coeffs.find(z);
            if (it == r.coeffs.end())
                r.coeffs.emplace(z, a * b);
            else
                it->second += a * b;
        }
    std::erase_if(r.coeffs, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    if (!r.ext) r.ext = o.ext;
    for (const auto& [y, b] : o.coeffs) {
        auto it = r.coeffs.find(y);
        if (it == r.coeffs.end())
            r.coeffs.emplace(y, b);
        else
            it->second += b;
    }
    std::erase_if(r.coeffs, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const { return *this + o.scaled(CycloNumber(-1)); }

AlgebraElement AlgebraElement::scaled(const CycloNumber& c) const {
    AlgebraElement r;
    r.ext = ext;
    if (c.is_zero()) return r;
    for (const auto& [x, a] : coeffs) r.coeffs.emplace(x, a * c);
    return r;
}

AlgebraElement idempotent_epsilon(int e, const CycloNumber& omega, const CentralExtension& ext) {
    if (e != ext.e) throw std::invalid_argument("idempotent order does not match the extension");
    if (root_order(omega) != e) throw std::invalid_argument("omega is not a primitive e-th root of unity");
    AlgebraElement eps;
    eps.ext = &ext;
    CycloNumber inv = omega.inverse();
    CycloNumber w(Rational(1, e));
    for (int k = 0; k < e; ++k) {
        eps.coeffs.emplace(ext.elem(0, k), w);
        w *= inv;
    }
    return eps;
}

bool is_central(const AlgebraElement& a) {
    const CentralExtension& ext = *a.ext;
    std::vector<int> gens;
    for (int s : ext.base.gens) gens.push_back(ext.elem(s, 0));
    gens.push_back(ext.rho());
    if (ext.base.gens.empty())
        for (int g = 0; g < ext.base.order; ++g) gens.push_back(ext.elem(g, 0));
    for (int x : gens) {
        AlgebraElement b = AlgebraElement::basis(ext, x);
        if (!(a * b == b * a)) return false;
    }
    return true;
}

int block_count(const CentralExtension& ext, const AlgebraElement& eps) {
    if (!(eps * eps == eps)) throw std::invalid_argument("eps is not idempotent");
    if (!is_central(eps)) throw std::invalid_argument("eps is not central");
    AbstractGroup gp = ext.group();
    ClassPartition classes = conjugacy_classes(gp);

    struct Row {
        int pivot;
        std::map<int, CycloNumber> v;
    };
    std::vector<Row> rows;
    for (const auto& cls : classes) {
        AlgebraElement sum;
        sum.ext = &ext;
        for (int x : cls) sum.coeffs.emplace(x, CycloNumber(1));
        std::map<int, CycloNumber> v = (sum * eps).coeffs;
        for (const Row& r : rows) {
            auto it = v.find(r.pivot);
            if (it == v.end()) continue;
            CycloNumber f = it->second;
            for (const auto& [k, c] : r.v) {
                auto jt = v.find(k);
                if (jt == v.end())
                    v.emplace(k, -(f * c));
                else
                    jt->second -= f * c;
            }
            std::erase_if(v, [](const auto& kv) { return kv.second.is_zero(); });
        }
        if (v.empty()) continue;
        int p = v.begin()->first;
        CycloNumber inv = v.begin()->second.inverse();
        for (auto& [k, c] : v) c *= inv;
        rows.push_back({p, std::move(v)});
    }
    return static_cast<int>(rows.size());
}

}  // namespace canord
