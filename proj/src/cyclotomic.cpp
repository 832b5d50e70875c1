#include "canord/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace canord {

long gcd_l(long a, long b) { return std::gcd(a, b); }
long lcm_l(long a, long b) { return a / std::gcd(a, b) * b; }
long mod_l(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

namespace {

using Poly = std::vector<long>;

int moebius(int n) {
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// exact division by a monic polynomial
Poly poly_div(Poly a, const Poly& b) {
    size_t db = b.size() - 1;
    Poly q(a.size() - db, 0);
    for (size_t k = a.size(); k-- > db;) {
        long c = a[k];
        q[k - db] = c;
        for (size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
    }
    for (size_t j = 0; j < db; ++j)
        if (a[j] != 0) throw std::logic_error("inexact cyclotomic division");
    return q;
}

Poly x_pow_minus_one(int d) {
    Poly p(d + 1, 0);
    p[0] = -1;
    p[d] = 1;
    return p;
}

std::unique_ptr<CycloField> build_field(int m) {
    Poly num{1};
    std::vector<int> dens;
    for (int d = 1; d <= m; ++d) {
        if (m % d) continue;
        int mu = moebius(m / d);
        if (mu == 1) num = poly_mul(num, x_pow_minus_one(d));
        if (mu == -1) dens.push_back(d);
    }
    for (int d : dens) num = poly_div(num, x_pow_minus_one(d));

    auto f = std::make_unique<CycloField>();
    f->m = m;
    f->phi = static_cast<int>(num.size()) - 1;
    f->cyclo = num;
    int phi = f->phi;
    f->powers.assign(m, std::vector<long>(phi, 0));
    std::vector<long> cur(phi + 1, 0);
    cur[0] = 1;
    for (int k = 0; k < m; ++k) {
        for (int j = 0; j < phi; ++j) f->powers[k][j] = cur[j];
        // multiply by zeta and reduce
        for (int j = phi; j > 0; --j) cur[j] = cur[j - 1];
        cur[0] = 0;
        long top = cur[phi];
        if (top != 0)
            for (int j = 0; j <= phi; ++j) cur[j] -= top * f->cyclo[j];
    }
    return f;
}

std::vector<Rational> zeros(int n) { return std::vector<Rational>(n, Rational(0)); }

}  // namespace

const CycloField& cyclo_field(int m) {
    if (m < 1) throw std::invalid_argument("conductor must be positive");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycloField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, build_field(m)).first;
    return *it->second;
}

CycloNumber::CycloNumber() : m_(1), c_(1, Rational(0)) {}
CycloNumber::CycloNumber(long v) : m_(1), c_(1, Rational(v)) {}
CycloNumber::CycloNumber(const Rational& q) : m_(1), c_(1, q) {}

CycloNumber::CycloNumber(int conductor, const std::vector<Rational>& coeffs) : m_(conductor) {
    const CycloField& f = cyclo_field(conductor);
    c_ = zeros(f.phi);
    for (size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] == 0) continue;
        const auto& p = f.powers[j % conductor];
        for (int i = 0; i < f.phi; ++i)
            if (p[i] != 0) c_[i] += coeffs[j] * p[i];
    }
}

CycloNumber CycloNumber::root_of_unity(int m, long k) {
    if (m < 1) throw std::invalid_argument("root_of_unity: m must be positive");
    const CycloField& f = cyclo_field(m);
    CycloNumber r;
    r.m_ = m;
    r.c_ = zeros(f.phi);
    const auto& p = f.powers[mod_l(k, m)];
    for (int i = 0; i < f.phi; ++i) r.c_[i] = p[i];
    return r;
}

bool CycloNumber::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool CycloNumber::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool CycloNumber::is_one() const { return is_rational() && c_[0] == 1; }

Rational CycloNumber::rational() const {
    if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
    return c_[0];
}

CycloNumber CycloNumber::embed(int m) const {
    if (m == m_) return *this;
    if (m % m_ != 0) throw std::invalid_argument("embed: target conductor must be a multiple");
    const CycloField& f = cyclo_field(m);
    int step = m / m_;
    CycloNumber r;
    r.m_ = m;
    r.c_ = zeros(f.phi);
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        const auto& p = f.powers[(j * step) % m];
        for (int i = 0; i < f.phi; ++i)
            if (p[i] != 0) r.c_[i] += c_[j] * p[i];
    }
    return r;
}

CycloNumber CycloNumber::galois(long k) const {
    if (gcd_l(mod_l(k, m_), m_) != 1 && m_ > 1)
        throw std::invalid_argument("galois: exponent not coprime to conductor");
    if (m_ <= 2) return *this;
    const CycloField& f = cyclo_field(m_);
    CycloNumber r;
    r.m_ = m_;
    r.c_ = zeros(f.phi);
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        const auto& p = f.powers[mod_l(static_cast<long>(j) * k, m_)];
        for (int i = 0; i < f.phi; ++i)
            if (p[i] != 0) r.c_[i] += c_[j] * p[i];
    }
    return r;
}

void CycloNumber::add_scaled(const CycloNumber& o, int sign) {
    if (o.m_ != m_) {
        int m = static_cast<int>(lcm_l(m_, o.m_));
        if (m != m_) *this = embed(m);
        CycloNumber t = o.embed(m);
        for (size_t i = 0; i < c_.size(); ++i) sign > 0 ? c_[i] += t.c_[i] : c_[i] -= t.c_[i];
        return;
    }
    for (size_t i = 0; i < c_.size(); ++i) sign > 0 ? c_[i] += o.c_[i] : c_[i] -= o.c_[i];
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
    add_scaled(o, 1);
    return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) {
    add_scaled(o, -1);
    return *this;
}

CycloNumber CycloNumber::operator-() const {
    CycloNumber r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
    if (o.m_ == 1) {
        for (auto& q : c_) q *= o.c_[0];
        return *this;
    }
    if (m_ == 1) {
        Rational s = c_[0];
        *this = o;
        for (auto& q : c_) q *= s;
        return *this;
    }
    int m = static_cast<int>(lcm_l(m_, o.m_));
    CycloNumber a = embed(m);
    CycloNumber b = o.embed(m);
    const CycloField& f = cyclo_field(m);
    std::vector<Rational> raw = zeros(2 * f.phi - 1);
    for (int i = 0; i < f.phi; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; j < f.phi; ++j)
            if (b.c_[j] != 0) raw[i + j] += a.c_[i] * b.c_[j];
    }
    *this = CycloNumber(m, raw);
    return *this;
}

CycloNumber CycloNumber::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (is_rational()) return CycloNumber(Rational(1) / c_[0]);
    // a^{-1} = (product of the other conjugates) / norm
    CycloNumber others(1);
    for (long k = 2; k < m_; ++k)
        if (gcd_l(k, m_) == 1) others *= galois(k);
    CycloNumber norm = others * *this;
    Rational n = norm.rational();
    return others * CycloNumber(Rational(1) / n);
}

CycloNumber& CycloNumber::operator/=(const CycloNumber& o) {
    *this *= o.inverse();
    return *this;
}

CycloNumber CycloNumber::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    CycloNumber r(1), b = *this;
    while (k > 0) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
    if (a.m_ == b.m_) return a.c_ == b.c_;
    int m = static_cast<int>(lcm_l(a.m_, b.m_));
    return a.embed(m).c_ == b.embed(m).c_;
}

namespace {

// Solve sum_j x_j v_j = target over Q; returns false if inconsistent.
bool solve_rational(const std::vector<std::vector<Rational>>& cols, const std::vector<Rational>& target,
                    std::vector<Rational>& x) {
    size_t rows = target.size(), n = cols.size();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(n + 1));
    for (size_t r = 0; r < rows; ++r) {
        for (size_t j = 0; j < n; ++j) a[r][j] = cols[j][r];
        a[r][n] = target[r];
    }
    std::vector<int> pivcol;
    size_t pr = 0;
    for (size_t j = 0; j < n && pr < rows; ++j) {
        size_t p = pr;
        while (p < rows && a[p][j] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[pr]);
        Rational inv = Rational(1) / a[pr][j];
        for (size_t k = j; k <= n; ++k) a[pr][k] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == pr || a[r][j] == 0) continue;
            Rational f = a[r][j];
            for (size_t k = j; k <= n; ++k) a[r][k] -= f * a[pr][k];
        }
        pivcol.push_back(static_cast<int>(j));
        ++pr;
    }
    for (size_t r = pr; r < rows; ++r)
        if (a[r][n] != 0) return false;
    x.assign(n, Rational(0));
    for (size_t r = 0; r < pivcol.size(); ++r) x[pivcol[r]] = a[r][n];
    return true;
}

}  // namespace

CycloNumber CycloNumber::minimized() const {
    if (is_rational()) return CycloNumber(c_[0]);
    const CycloField& f = cyclo_field(m_);
    for (int d = 3; d < m_; ++d) {
        if (m_ % d || d % 4 == 2) continue;
        const CycloField& g = cyclo_field(d);
        int step = m_ / d;
        std::vector<std::vector<Rational>> cols(g.phi, std::vector<Rational>(f.phi));
        for (int j = 0; j < g.phi; ++j)
            for (int i = 0; i < f.phi; ++i) cols[j][i] = f.powers[(j * step) % m_][i];
        std::vector<Rational> x;
        if (solve_rational(cols, c_, x)) return CycloNumber(d, x);
    }
    return *this;
}

std::string CycloNumber::key() const {
    std::string s = std::to_string(m_);
    for (const auto& q : c_) {
        s += ':';
        s += q.get_str();
    }
    return s;
}

std::string CycloNumber::str() const {
    if (is_rational()) return c_[0].get_str();
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        const Rational& q = c_[i];
        if (q == 0) continue;
        bool neg = q < 0;
        Rational a = neg ? Rational(-q) : q;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        os << "z" << m_;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

CycloNumber root_of_unity(int m, long k) { return CycloNumber::root_of_unity(m, k); }

CycloNumber arith(const CycloNumber& a, const CycloNumber& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
    }
    throw std::invalid_argument("unknown arithmetic op");
}

CycloNumber minimize_conductor(const CycloNumber& a) { return a.minimized(); }

long root_order(const CycloNumber& a) {
    if (a.is_zero()) return 0;
    int m = a.conductor();
    // any root of unity in Q(zeta_m) has order dividing lcm(2, m)
    long bound = lcm_l(2, m);
    CycloNumber p = a;
    for (long k = 1; k <= bound; ++k) {
        if (p.is_one()) return k;
        p *= a;
    }
    return 0;
}

}  // namespace canord
