#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace canord {

using Rational = mpq_class;
using Integer = mpz_class;

// Precomputed data for Q(zeta_m): the cyclotomic polynomial and the reduced
// form of every power zeta^k, k in [0, m).  Instances are cached for the
// life of the process and never mutated after construction.
struct CycloField {
    int m = 1;
    int phi = 1;
    std::vector<long> cyclo;                // Phi_m, low degree first, monic
    std::vector<std::vector<long>> powers;  // powers[k] = zeta^k in the power basis
};

const CycloField& cyclo_field(int m);

long gcd_l(long a, long b);
long lcm_l(long a, long b);
long mod_l(long a, long m);

// An exact element of Q(zeta_m), stored in the power basis modulo Phi_m.
// Two values at the same conductor are equal iff their coefficients are.
class CycloNumber {
public:
    CycloNumber();
    CycloNumber(long v);  // NOLINT: implicit rational embedding is intended
    CycloNumber(const Rational& q);  // NOLINT
    // coeffs of any length are read as a polynomial in zeta_m and reduced.
    CycloNumber(int conductor, const std::vector<Rational>& coeffs);

    static CycloNumber root_of_unity(int m, long k);

    int conductor() const { return m_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rational rational() const;  // throws if not rational

    CycloNumber embed(int m) const;       // m must be a multiple of conductor()
    CycloNumber galois(long k) const;     // zeta -> zeta^k, gcd(k, m) = 1
    CycloNumber conj() const { return galois(-1); }
    CycloNumber inverse() const;
    CycloNumber minimized() const;
    CycloNumber pow(long k) const;

    CycloNumber operator-() const;
    CycloNumber& operator+=(const CycloNumber& o);
    CycloNumber& operator-=(const CycloNumber& o);
    CycloNumber& operator*=(const CycloNumber& o);
    CycloNumber& operator/=(const CycloNumber& o);

    friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
    friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
    friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
    friend CycloNumber operator/(CycloNumber a, const CycloNumber& b) { return a /= b; }
    friend bool operator==(const CycloNumber& a, const CycloNumber& b);
    friend bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }

    // Coefficient string at the current conductor; only comparable between
    // values that share a conductor.
    std::string key() const;
    std::string str() const;

private:
    int m_ = 1;
    std::vector<Rational> c_;

    void add_scaled(const CycloNumber& o, int sign);
};

enum class ArithOp { Add, Sub, Mul, Div };

CycloNumber root_of_unity(int m, long k);
CycloNumber arith(const CycloNumber& a, const CycloNumber& b, ArithOp op);
CycloNumber minimize_conductor(const CycloNumber& a);

// Multiplicative order of a root of unity, 0 if a is not one.
long root_order(const CycloNumber& a);

}  // namespace canord
