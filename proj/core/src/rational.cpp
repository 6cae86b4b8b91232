#include "strata/rational.hpp"

#include <mutex>
#include <ostream>
#include <vector>

namespace strata {

Rational::Rational(long long v)
{
    q_ = mpz_class(std::to_string(v));
}

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw Error("DIVISION_BY_ZERO", "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational Rational::parse(const std::string& s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(s));
        return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw Error("PARSE_ERROR", "not a rational: '" + s + "'");
    }
}

Rational Rational::abs() const
{
    Rational r;
    r.q_ = ::abs(q_);
    return r;
}

Rational Rational::inv() const
{
    if (is_zero())
        throw Error("DIVISION_BY_ZERO", "inverse of zero");
    Rational r;
    r.q_ = 1 / q_;
    r.q_.canonicalize();
    return r;
}

Rational Rational::pow(long e) const
{
    if (e < 0)
        return inv().pow(-e);
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

std::string Rational::str() const
{
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::short_str() const
{
    if (is_integer())
        return q_.get_num().get_str();
    return str();
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw Error("DIVISION_BY_ZERO", "division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::operator-() const
{
    Rational r;
    r.q_ = -q_;
    return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    int c = cmp(a.q_, b.q_);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.short_str();
}

Integer factorial(long n)
{
    if (n < 0)
        throw Error("DOMAIN_ERROR", "factorial of negative integer");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer double_factorial(long n)
{
    if (n < -1)
        throw Error("DOMAIN_ERROR", "double factorial below -1");
    if (n <= 0)
        return 1;
    Integer r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Rational bernoulli(unsigned n)
{
    static std::mutex mu;
    static std::vector<Rational> table{Rational(1)};
    std::lock_guard lock(mu);
    // B_m = -1/(m+1) * sum_{k<m} C(m+1,k) B_k
    while (table.size() <= n) {
        long m = static_cast<long>(table.size());
        Rational s;
        for (long k = 0; k < m; ++k)
            s += Rational(binomial(m + 1, k)) * table[k];
        table.push_back(-s / Rational(m + 1));
    }
    return table[n];
}

Rational zeta_neg(unsigned j)
{
    if (j == 0)
        throw Error("DOMAIN_ERROR", "zeta_neg needs j >= 1");
    return -bernoulli(j + 1) / Rational(static_cast<long>(j) + 1);
}

PiScalar::PiScalar(Rational c, int p) : coeff(std::move(c)), pi_power(p)
{
    if (p % 2 != 0)
        throw Error("ODD_PI_POWER", "pi power must be even");
}

const mpf_class& pi_mpf()
{
    static const mpf_class pi(
        "3.14159265358979323846264338327950288419716939937510582097494459230781640628620899",
        320);
    return pi;
}

double pi_power_float(int e)
{
    mpf_class r(1, 320);
    const mpf_class& pi = pi_mpf();
    for (int i = 0; i < (e < 0 ? -e : e); ++i)
        r *= pi;
    if (e < 0)
        r = mpf_class(1, 320) / r;
    return r.get_d();
}

double PiScalar::to_float() const
{
    mpf_class r(coeff.raw(), 320);
    const mpf_class& pi = pi_mpf();
    int e = pi_power < 0 ? -pi_power : pi_power;
    for (int i = 0; i < e; ++i) {
        if (pi_power > 0)
            r *= pi;
        else
            r /= pi;
    }
    return r.get_d();
}

std::string PiScalar::str() const
{
    if (pi_power == 0)
        return coeff.short_str();
    return coeff.short_str() + "*pi^" + std::to_string(pi_power);
}

PiScalar operator+(const PiScalar& a, const PiScalar& b)
{
    if (a.pi_power != b.pi_power)
        throw Error("PI_POWER_MISMATCH",
                    "cannot add pi^" + std::to_string(a.pi_power) + " and pi^" +
                        std::to_string(b.pi_power));
    return {a.coeff + b.coeff, a.pi_power};
}

PiScalar operator-(const PiScalar& a, const PiScalar& b)
{
    return a + (-b);
}

PiScalar operator*(const PiScalar& a, const PiScalar& b)
{
    return {a.coeff * b.coeff, a.pi_power + b.pi_power};
}

int cmp_abs(const PiScalar& a, const PiScalar& b)
{
    if (a.pi_power == b.pi_power) {
        auto c = a.coeff.abs() <=> b.coeff.abs();
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    mpf_class x(a.coeff.abs().raw(), 320), y(b.coeff.abs().raw(), 320);
    const mpf_class& pi = pi_mpf();
    int d = a.pi_power - b.pi_power;
    for (int i = 0; i < (d < 0 ? -d : d); ++i) {
        if (d > 0)
            x *= pi;
        else
            y *= pi;
    }
    int c = cmp(x, y);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

} // namespace strata
