#include "canord/matgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace canord {

CycloNumber Matrix2::det() const { return a[0] * a[3] - a[1] * a[2]; }
CycloNumber Matrix2::trace() const { return a[0] + a[3]; }

Matrix2 Matrix2::embed(int m) const {
    return {a[0].embed(m), a[1].embed(m), a[2].embed(m), a[3].embed(m)};
}

int Matrix2::conductor() const {
    long m = 1;
    for (const auto& x : a) m = lcm_l(m, x.conductor());
    return static_cast<int>(m);
}

std::string Matrix2::key() const {
    return a[0].key() + "|" + a[1].key() + "|" + a[2].key() + "|" + a[3].key();
}

std::string Matrix2::str() const {
    return "[[" + a[0].str() + ", " + a[1].str() + "], [" + a[2].str() + ", " + a[3].str() + "]]";
}

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    return {x.a[0] * y.a[0] + x.a[1] * y.a[2], x.a[0] * y.a[1] + x.a[1] * y.a[3],
            x.a[2] * y.a[0] + x.a[3] * y.a[2], x.a[2] * y.a[1] + x.a[3] * y.a[3]};
}

bool operator==(const Matrix2& x, const Matrix2& y) {
    for (int i = 0; i < 4; ++i)
        if (x.a[i] != y.a[i]) return false;
    return true;
}

int AbstractGroup::pow(int a, long k) const {
    k = mod_l(k, element_order(a));
    int r = 0;
    for (long i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

int AbstractGroup::element_order(int a) const {
    int k = 1, x = a;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

int AbstractGroup::exponent() const {
    long e = 1;
    for (int a = 0; a < order; ++a) e = lcm_l(e, element_order(a));
    return static_cast<int>(e);
}

bool AbstractGroup::is_abelian() const {
    for (int a = 0; a < order; ++a)
        for (int b = a + 1; b < order; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

bool AbstractGroup::is_latin_square() const {
    std::vector<char> seen(order);
    for (int a = 0; a < order; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < order; ++b) {
            int c = mul(a, b);
            if (c < 0 || c >= order || seen[c]) return false;
            seen[c] = 1;
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < order; ++b) {
            int c = mul(b, a);
            if (seen[c]) return false;
            seen[c] = 1;
        }
    }
    return true;
}

void AbstractGroup::fill_inverses() {
    inv.assign(order, -1);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            if (mul(a, b) == 0) {
                inv[a] = b;
                break;
            }
}

namespace {

std::vector<int> generators_or_all(const AbstractGroup& g) {
    if (!g.gens.empty()) return g.gens;
    std::vector<int> all(g.order);
    for (int i = 0; i < g.order; ++i) all[i] = i;
    return all;
}

}  // namespace

ClassPartition conjugacy_classes(const AbstractGroup& g) {
    std::vector<int> gens = generators_or_all(g);
    std::vector<int> seen(g.order, -1);
    ClassPartition classes;
    for (int x = 0; x < g.order; ++x) {
        if (seen[x] >= 0) continue;
        int id = static_cast<int>(classes.size());
        std::vector<int> cls{x};
        seen[x] = id;
        for (size_t i = 0; i < cls.size(); ++i) {
            for (int s : gens) {
                int y = g.mul(g.inv[s], g.mul(cls[i], s));
                if (seen[y] < 0) {
                    seen[y] = id;
                    cls.push_back(y);
                }
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::vector<int> class_index(const ClassPartition& classes, int order) {
    std::vector<int> idx(order, -1);
    for (size_t c = 0; c < classes.size(); ++c)
        for (int x : classes[c]) idx[x] = static_cast<int>(c);
    return idx;
}

std::vector<int> subgroup_closure(const AbstractGroup& g, const std::vector<int>& gens) {
    std::vector<char> in(g.order, 0);
    std::vector<int> elems{0};
    in[0] = 1;
    for (size_t i = 0; i < elems.size(); ++i)
        for (int s : gens) {
            int y = g.mul(elems[i], s);
            if (!in[y]) {
                in[y] = 1;
                elems.push_back(y);
            }
        }
    std::sort(elems.begin(), elems.end());
    return elems;
}

Quotient quotient(const AbstractGroup& g, const std::vector<int>& h) {
    std::vector<char> in(g.order, 0);
    for (int x : h) {
        if (x < 0 || x >= g.order) throw std::invalid_argument("not-a-subgroup");
        in[x] = 1;
    }
    if (h.empty() || !in[0]) throw std::invalid_argument("not-a-subgroup");
    for (int x : h)
        for (int y : h)
            if (!in[g.mul(x, y)]) throw std::invalid_argument("not-a-subgroup");
    for (int s : generators_or_all(g))
        for (int x : h)
            if (!in[g.mul(g.inv[s], g.mul(x, s))]) throw std::invalid_argument("not-normal");

    Quotient q;
    q.projection.assign(g.order, -1);
    std::vector<int> hs;
    for (int x = 0; x < g.order; ++x)
        if (in[x]) hs.push_back(x);
    for (int a = 0; a < g.order; ++a) {
        if (q.projection[a] >= 0) continue;
        int id = static_cast<int>(q.coset_rep.size());
        q.coset_rep.push_back(a);
        for (int x : hs) q.projection[g.mul(a, x)] = id;
    }
    int n = static_cast<int>(q.coset_rep.size());
    q.group.order = n;
    q.group.table.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            q.group.table[static_cast<size_t>(i) * n + j] = q.projection[g.mul(q.coset_rep[i], q.coset_rep[j])];
    q.group.fill_inverses();
    std::set<int> gset;
    for (int s : g.gens)
        if (q.projection[s] != 0) gset.insert(q.projection[s]);
    q.group.gens.assign(gset.begin(), gset.end());
    return q;
}

std::optional<std::pair<int, int>> iso_to_cyclic_product(const AbstractGroup& g, int a, int b) {
    if (a < 1 || b < 1 || g.order != a * b || !g.is_abelian()) return std::nullopt;
    for (int x = 0; x < g.order; ++x) {
        if (g.element_order(x) != a) continue;
        std::vector<char> inx(g.order, 0);
        for (int p = 0, k = 0; k < a; ++k, p = g.mul(p, x)) inx[p] = 1;
        for (int y = 0; y < g.order; ++y) {
            if (g.element_order(y) != b) continue;
            bool ok = true;
            for (int p = y, k = 1; k < b; ++k, p = g.mul(p, y))
                if (inx[p]) {
                    ok = false;
                    break;
                }
            if (ok) return std::make_pair(x, y);
        }
    }
    return std::nullopt;
}

std::optional<std::vector<int>> hom_from_generators(const AbstractGroup& g, const AbstractGroup& target,
                                                    const std::vector<int>& images) {
    if (images.size() != g.gens.size()) throw std::invalid_argument("one image per generator required");
    std::vector<int> img(g.order, -1);
    img[0] = 0;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (size_t i = 0; i < g.gens.size(); ++i) {
            int y = g.mul(x, g.gens[i]);
            int want = target.mul(img[x], images[i]);
            if (img[y] < 0) {
                img[y] = want;
                queue.push_back(y);
            } else if (img[y] != want) {
                return std::nullopt;
            }
        }
    }
    for (int v : img)
        if (v < 0) throw std::invalid_argument("generators do not generate the group");
    return img;
}

int FiniteMatrixGroup::index_of(const Matrix2& m) const {
    int c = m.conductor();
    if (conductor % c != 0) {
        // entries may still lie in the group's field after minimisation
        Matrix2 r(m.a[0].minimized(), m.a[1].minimized(), m.a[2].minimized(), m.a[3].minimized());
        if (conductor % r.conductor() != 0) return -1;
        return index_of(r);
    }
    auto it = lookup.find(m.embed(conductor).key());
    return it == lookup.end() ? -1 : it->second;
}

int default_cap() {
    if (const char* s = std::getenv("CANORD_CAP")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end != s && *end == '\0' && v > 0 && v < 100000000) return static_cast<int>(v);
    }
    return 10000;
}

FiniteMatrixGroup generate_group(const std::vector<Matrix2>& gens_in, int cap) {
    FiniteMatrixGroup g;
    long m = 1;
    for (const auto& x : gens_in) {
        if (x.det().is_zero()) throw std::invalid_argument("generator is not invertible");
        m = lcm_l(m, x.conductor());
    }
    g.conductor = static_cast<int>(m);
    std::vector<Matrix2> gens;
    for (const auto& x : gens_in) gens.push_back(x.embed(g.conductor));

    g.elements.push_back(Matrix2::identity().embed(g.conductor));
    g.lookup.emplace(g.elements[0].key(), 0);
    size_t ng = gens.size();
    std::vector<int> right;  // right[x * ng + i] = x * gens[i]
    std::vector<int> parent{-1}, pgen{-1};
    for (size_t x = 0; x < g.elements.size(); ++x) {
        for (size_t i = 0; i < ng; ++i) {
            Matrix2 y = g.elements[x] * gens[i];
            std::string k = y.key();
            auto it = g.lookup.find(k);
            int idx;
            if (it == g.lookup.end()) {
                idx = static_cast<int>(g.elements.size());
                if (idx >= cap) throw CapExceeded("group closure exceeded cap of " + std::to_string(cap));
                g.lookup.emplace(std::move(k), idx);
                g.elements.push_back(std::move(y));
                parent.push_back(static_cast<int>(x));
                pgen.push_back(static_cast<int>(i));
            } else {
                idx = it->second;
            }
            right.push_back(idx);
        }
    }
    int n = static_cast<int>(g.elements.size());
    AbstractGroup& t = g.table;
    t.order = n;
    t.table.assign(static_cast<size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a) {
        t.table[static_cast<size_t>(a) * n] = a;
        for (int b = 1; b < n; ++b) {
            int ap = t.table[static_cast<size_t>(a) * n + parent[b]];
            t.table[static_cast<size_t>(a) * n + b] = right[static_cast<size_t>(ap) * ng + pgen[b]];
        }
    }
    t.fill_inverses();
    for (size_t i = 0; i < ng; ++i) g.generator_indices.push_back(right[i]);
    t.gens = g.generator_indices;
    return g;
}

ClassPartition conjugacy_classes(const FiniteMatrixGroup& g) { return conjugacy_classes(g.table); }

namespace {

using Line = std::array<CycloNumber, 2>;

Line normalize_line(const CycloNumber& x, const CycloNumber& y) {
    if (!x.is_zero()) return {CycloNumber(1), y / x};
    return {CycloNumber(0), CycloNumber(1)};
}

std::string line_key(const Line& l, int m) { return l[0].embed(m).key() + "|" + l[1].embed(m).key(); }

}  // namespace

LineOrbitRamification fixed_line_ramification(const FiniteMatrixGroup& g) {
    int m = g.conductor;
    std::vector<Line> lines;
    std::map<std::string, int> line_id;
    std::vector<int> stab;  // pointwise stabiliser order per line
    for (int i = 1; i < g.order(); ++i) {
        const Matrix2& x = g.elements[i];
        CycloNumber a = x.a[0] - 1, b = x.a[1], c = x.a[2], d = x.a[3] - 1;
        if (!(a * d - b * c).is_zero()) continue;  // no eigenvalue 1
        Line l = (!a.is_zero() || !b.is_zero()) ? normalize_line(-b, a) : normalize_line(-d, c);
        std::string k = line_key(l, m);
        auto it = line_id.find(k);
        if (it == line_id.end()) {
            line_id.emplace(k, static_cast<int>(lines.size()));
            lines.push_back(l);
            stab.push_back(2);
        } else {
            ++stab[it->second];
        }
    }
    LineOrbitRamification out;
    std::vector<char> done(lines.size(), 0);
    for (size_t s = 0; s < lines.size(); ++s) {
        if (done[s]) continue;
        std::vector<int> orbit{static_cast<int>(s)};
        done[s] = 1;
        for (size_t i = 0; i < orbit.size(); ++i) {
            const Line& l = lines[orbit[i]];
            for (int gi : g.generator_indices) {
                const Matrix2& h = g.elements[gi];
                Line img = normalize_line(h.a[0] * l[0] + h.a[1] * l[1], h.a[2] * l[0] + h.a[3] * l[1]);
                auto it = line_id.find(line_key(img, m));
                if (it == line_id.end()) throw std::logic_error("fixed line orbit left the fixed locus");
                if (!done[it->second]) {
                    done[it->second] = 1;
                    orbit.push_back(it->second);
                }
            }
        }
        LineOrbit o;
        o.representative_line = lines[s];
        o.orbit_size = static_cast<int>(orbit.size());
        o.inertia_order = stab[s];
        out.orbits.push_back(std::move(o));
    }
    return out;
}

std::vector<int> LineOrbitRamification::indices() const {
    std::vector<int> r;
    for (const auto& o : orbits) r.push_back(o.inertia_order);
    std::sort(r.begin(), r.end());
    return r;
}

}  // namespace canord
