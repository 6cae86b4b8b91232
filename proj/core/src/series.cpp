#include "strata/series.hpp"

#include <algorithm>
#include <sstream>

namespace strata {

namespace {

LaurentSeries blank(int min_exp, int trunc)
{
    if (trunc < min_exp)
        return LaurentSeries(trunc + 1, {});
    return LaurentSeries(min_exp, std::vector<Rational>(trunc - min_exp + 1));
}

} // namespace

LaurentSeries::LaurentSeries(int min_exp, std::vector<Rational> coeffs)
    : min_exp_(min_exp), trunc_(min_exp + static_cast<int>(coeffs.size()) - 1), c_(std::move(coeffs))
{
}

LaurentSeries LaurentSeries::zero(int trunc_order)
{
    return LaurentSeries(trunc_order + 1, {});
}

LaurentSeries LaurentSeries::monomial(const Rational& c, int e, int trunc_order)
{
    if (e > trunc_order)
        return zero(trunc_order);
    std::vector<Rational> v(trunc_order - e + 1);
    v[0] = c;
    return LaurentSeries(e, std::move(v));
}

Rational LaurentSeries::coeff(int e) const
{
    if (e > trunc_)
        throw Error("TRUNCATED", "coefficient " + std::to_string(e) + " beyond order " +
                                     std::to_string(trunc_));
    if (e < min_exp_)
        return 0;
    return c_[e - min_exp_];
}

int LaurentSeries::valuation() const
{
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero())
            return min_exp_ + static_cast<int>(i);
    return trunc_ + 1;
}

LaurentSeries LaurentSeries::truncate(int order) const
{
    if (order > trunc_)
        throw Error("TRUNCATED", "cannot raise order " + std::to_string(trunc_) + " to " +
                                     std::to_string(order));
    LaurentSeries r = blank(min_exp_, order);
    for (int e = r.min_exp_; e <= order; ++e)
        r.c_[e - r.min_exp_] = coeff(e);
    return r;
}

LaurentSeries LaurentSeries::shift(int k) const
{
    LaurentSeries r = *this;
    r.min_exp_ += k;
    r.trunc_ += k;
    return r;
}

LaurentSeries LaurentSeries::scaled(const Rational& c) const
{
    LaurentSeries r = *this;
    for (auto& x : r.c_)
        x *= c;
    return r;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const
{
    LaurentSeries r = blank(std::min(min_exp_, o.min_exp_), std::min(trunc_, o.trunc_));
    for (int e = r.min_exp_; e <= r.trunc_; ++e)
        r.c_[e - r.min_exp_] = coeff(e) + o.coeff(e);
    return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const
{
    return *this + o.scaled(-1);
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const
{
    int va = valuation(), vb = o.valuation();
    int trunc = std::min(trunc_ + vb, o.trunc_ + va);
    LaurentSeries r = blank(va + vb, trunc);
    for (int e = r.min_exp_; e <= trunc; ++e) {
        Rational s;
        int lo = std::max(va, e - o.trunc_), hi = std::min(trunc_, e - vb);
        for (int i = lo; i <= hi; ++i)
            s += c_[i - min_exp_] * o.c_[e - i - o.min_exp_];
        r.c_[e - r.min_exp_] = s;
    }
    return r;
}

LaurentSeries LaurentSeries::operator/(const LaurentSeries& o) const
{
    return *this * o.inverse();
}

LaurentSeries LaurentSeries::inverse() const
{
    int v = valuation();
    if (v > trunc_)
        throw Error("NOT_INVERTIBLE", "series is zero to its known order");
    int r = trunc_ - v;
    Rational c0inv = coeff(v).inv();
    std::vector<Rational> w(r + 1);
    w[0] = c0inv;
    for (int k = 1; k <= r; ++k) {
        Rational s;
        for (int i = 1; i <= k; ++i)
            s += coeff(v + i) * w[k - i];
        w[k] = -c0inv * s;
    }
    return LaurentSeries(-v, std::move(w));
}

LaurentSeries LaurentSeries::pow(long k) const
{
    if (k < 0)
        return inverse().pow(-k);
    if (k == 0)
        return one(trunc_ - valuation());
    LaurentSeries base = *this, result;
    bool have = false;
    while (k > 0) {
        if (k & 1) {
            result = have ? result * base : base;
            have = true;
        }
        k >>= 1;
        if (k > 0)
            base = base * base;
    }
    return result;
}

LaurentSeries LaurentSeries::exp() const
{
    for (int e = min_exp_; e <= std::min(0, trunc_); ++e)
        if (!coeff(e).is_zero())
            throw Error("BAD_VALUATION", "exp needs positive valuation");
    int n = trunc_;
    if (n < 0)
        throw Error("BAD_VALUATION", "exp of a series known below order 0");
    std::vector<Rational> E(n + 1);
    E[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rational s;
        for (int k = 1; k <= m; ++k) {
            Rational f = coeff(k);
            if (!f.is_zero())
                s += Rational(k) * f * E[m - k];
        }
        E[m] = s / Rational(m);
    }
    return LaurentSeries(0, std::move(E));
}

LaurentSeries LaurentSeries::log() const
{
    for (int e = min_exp_; e < 0; ++e)
        if (!coeff(e).is_zero())
            throw Error("BAD_VALUATION", "log needs a power series");
    if (trunc_ < 0 || coeff(0) != Rational(1))
        throw Error("BAD_VALUATION", "log needs constant term 1");
    int n = trunc_;
    std::vector<Rational> L(n + 1);
    for (int m = 1; m <= n; ++m) {
        Rational s = Rational(m) * coeff(m);
        for (int k = 1; k < m; ++k)
            s -= Rational(k) * L[k] * coeff(m - k);
        L[m] = s / Rational(m);
    }
    return LaurentSeries(0, std::move(L));
}

LaurentSeries LaurentSeries::derivative() const
{
    LaurentSeries r = blank(min_exp_ - 1, trunc_ - 1);
    for (int e = r.min_exp_; e <= r.trunc_; ++e)
        r.c_[e - r.min_exp_] = Rational(e + 1) * coeff(e + 1);
    return r;
}

LaurentSeries LaurentSeries::compose(const LaurentSeries& g) const
{
    for (int e = min_exp_; e < 0; ++e)
        if (!coeff(e).is_zero())
            throw Error("BAD_VALUATION", "compose needs an outer power series");
    for (int e = g.min_exp_; e <= std::min(0, g.trunc_); ++e)
        if (!g.coeff(e).is_zero())
            throw Error("BAD_VALUATION", "compose needs an inner series of positive valuation");
    int vg = g.valuation();
    int T = g.trunc_;
    if (vg <= g.trunc_)
        T = std::min(T, vg * (trunc_ + 1) - 1);
    if (trunc_ < 0)
        return zero(T);
    LaurentSeries r = monomial(coeff(trunc_), 0, T);
    for (int k = trunc_ - 1; k >= 0; --k)
        r = (r * g).truncate(T) + monomial(coeff(k), 0, T);
    return r;
}

LaurentSeries LaurentSeries::revert() const
{
    for (int e = min_exp_; e <= std::min(0, trunc_); ++e)
        if (!coeff(e).is_zero())
            throw Error("BAD_VALUATION", "revert needs the form z*unit");
    if (trunc_ < 1 || coeff(1).is_zero())
        throw Error("NOT_INVERTIBLE", "revert needs a nonzero linear coefficient");
    int N = trunc_;
    // Lagrange: [t^n] G = (1/n) [z^{n-1}] (z/F)^n
    LaurentSeries phi = shift(-1).inverse().truncate(N - 1);
    std::vector<Rational> G(N);
    LaurentSeries pw = phi;
    for (int n = 1; n <= N; ++n) {
        G[n - 1] = pw.coeff(n - 1) / Rational(n);
        if (n < N)
            pw = (pw * phi).truncate(N - 1);
    }
    return LaurentSeries(1, std::move(G));
}

std::string LaurentSeries::str() const
{
    std::ostringstream os;
    for (int e = min_exp_; e <= trunc_; ++e)
        os << e << ": " << coeff(e).str() << "\n";
    return os.str();
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b)
{
    if (a.trunc_ != b.trunc_)
        return false;
    for (int e = std::min(a.min_exp_, b.min_exp_); e <= a.trunc_; ++e)
        if (a.coeff(e) != b.coeff(e))
            return false;
    return true;
}

std::vector<Rational> b_table(int N)
{
    if (N < 0)
        throw Error("BAD_ORDER", "b_table needs N >= 0");
    // sinh(z/2)/(z/2) = sum z^{2k} / (4^k (2k+1)!)
    std::vector<Rational> s(N + 1);
    for (int k = 0; 2 * k <= N; ++k)
        s[2 * k] = Rational(Integer(1), Integer(factorial(2 * k + 1) * (Integer(1) << (2 * k))));
    LaurentSeries B = LaurentSeries(0, s).inverse();
    std::vector<Rational> b(N + 1);
    for (int j = 0; j <= N; ++j)
        b[j] = B.coeff(j);
    return b;
}

LaurentSeries PB_series(int N)
{
    std::vector<Rational> b = b_table(N + 1);
    std::vector<Rational> x(N + 1);
    for (int j = 1; j + 1 <= N; ++j)
        x[j + 1] = -Rational(factorial(j)) * b[j + 1];
    return LaurentSeries(0, x).exp();
}

LaurentSeries PZ_series(int N)
{
    std::vector<Rational> x(N + 1);
    for (int j = 1; j + 1 <= N; j += 2)
        x[j + 1] = Rational(1, 2).pow((j + 1) / 2) * zeta_neg(j);
    return LaurentSeries(0, x).exp();
}

namespace {

std::vector<Rational> alpha_from(const LaurentSeries& P, int N)
{
    LaurentSeries F = P.inverse().shift(1);
    LaurentSeries A = F.revert().inverse();
    std::vector<Rational> out(N);
    for (int l = 1; l <= N; ++l)
        out[l - 1] = A.coeff(l);
    return out;
}

} // namespace

std::vector<Rational> alpha_table(int N)
{
    if (N < 1)
        throw Error("BAD_ORDER", "alpha_table needs N >= 1");
    return alpha_from(PB_series(N + 1), N);
}

std::vector<Rational> bold_alpha_table(int N)
{
    if (N < 1)
        throw Error("BAD_ORDER", "bold_alpha_table needs N >= 1");
    return alpha_from(PZ_series(N + 1), N);
}

LaurentSeries A_series(int N)
{
    std::vector<Rational> a = alpha_table(N);
    std::vector<Rational> c(N + 2);
    c[0] = 1;
    for (int l = 1; l <= N; ++l)
        c[l + 1] = a[l - 1];
    return LaurentSeries(-1, std::move(c));
}

LaurentSeries Q_series(int N)
{
    std::vector<Rational> b = b_table(N);
    std::vector<Rational> x(N);
    for (int k = 1; k <= N - 1; ++k)
        x[k] = Rational(factorial(k - 1)) * b[k];
    return LaurentSeries(0, x).exp().shift(1);
}

bool lagrange_consistency_check(int N)
{
    LaurentSeries viaQ = Q_series(N + 2).revert().inverse();
    LaurentSeries A = A_series(N);
    for (int e = -1; e <= N; ++e)
        if (viaQ.coeff(e) != A.coeff(e))
            return false;
    return true;
}

LaurentSeries delta_series(int N)
{
    if (N < 2 || N % 2 != 0)
        throw Error("BAD_ORDER", "delta_series needs an even order >= 2");
    std::vector<Rational> b = b_table(N + 2);
    LaurentSeries A = A_series(N + 1);
    std::vector<Rational> delta(N + 1);
    for (int g = 1; 2 * g <= N; ++g) {
        int j = 2 * g - 1;
        LaurentSeries Aj = A.pow(j);
        Rational pivot = Aj.coeff(1 - 2 * g);
        if (pivot.is_zero())
            throw Error("UNDERDETERMINED", "vanishing pivot at genus " + std::to_string(g));
        Rational rhs = Rational(factorial(j)) / Rational(2) * b[j - 1];
        for (int h = 1; h < g; ++h)
            rhs -= delta[2 * h] * Aj.coeff(1 - 2 * h);
        delta[2 * g] = rhs / pivot;
    }
    return LaurentSeries(0, std::move(delta));
}

LaurentSeries d_min_series(int N)
{
    LaurentSeries A = A_series(N + 4);
    LaurentSeries A1 = A.derivative();
    LaurentSeries A2 = A1.derivative();
    LaurentSeries num = A1 + A2.shift(1);
    LaurentSeries den = (A1 * A1).shift(1);
    return (num / den).truncate(N);
}

} // namespace strata
