#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "strata/error.hpp"

namespace strata {

using Integer = mpz_class;

// Exact rational number, always reduced with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(v) {}
    Rational(long long v);
    Rational(const Integer& v) : q_(v) {}
    // gmpxx expression templates, e.g. a * b with Integer operands.
    template <class T, class U>
    Rational(const __gmp_expr<T, U>& e) : q_(e)
    {
        q_.canonicalize();
    }
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "a", "-a", "a/b".
    static Rational parse(const std::string& s);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational abs() const;
    Rational inv() const;
    Rational pow(long e) const;
    double to_double() const { return q_.get_d(); }

    // Always "num/den", e.g. "4/1".
    std::string str() const;
    // "num" when integral, otherwise "num/den".
    std::string short_str() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Integer factorial(long n);
Integer binomial(long n, long k);
// n!! with (-1)!! = 0!! = 1.
Integer double_factorial(long n);

// B_n with B_1 = -1/2.
Rational bernoulli(unsigned n);
// zeta(-j) = -B_{j+1}/(j+1) for j >= 1.
Rational zeta_neg(unsigned j);

// coeff * pi^pi_power, pi_power even.
struct PiScalar {
    Rational coeff;
    int pi_power = 0;

    PiScalar() = default;
    PiScalar(Rational c, int p);

    PiScalar operator-() const { return {-coeff, pi_power}; }
    double to_float() const;
    std::string str() const;

    friend bool operator==(const PiScalar& a, const PiScalar& b)
    {
        return a.pi_power == b.pi_power && a.coeff == b.coeff;
    }
};

// Throws PI_POWER_MISMATCH when the powers differ.
PiScalar operator+(const PiScalar& a, const PiScalar& b);
PiScalar operator-(const PiScalar& a, const PiScalar& b);
PiScalar operator*(const PiScalar& a, const PiScalar& b);
// Compares |a| with |b| as real numbers: -1, 0 or 1.
int cmp_abs(const PiScalar& a, const PiScalar& b);

// pi to at least 50 significant digits, as a multiprecision float.
const mpf_class& pi_mpf();
double pi_power_float(int e);

} // namespace strata
