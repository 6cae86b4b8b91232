#pragma once

#include <string>
#include <vector>

#include "strata/rational.hpp"

namespace strata {

// Truncated Laurent series sum_{e=min_exp}^{trunc_order} c_e z^e.
// Coefficients above trunc_order are unknown; asking for them throws TRUNCATED.
class LaurentSeries {
public:
    LaurentSeries() = default;
    LaurentSeries(int min_exp, std::vector<Rational> coeffs);

    static LaurentSeries zero(int trunc_order);
    static LaurentSeries monomial(const Rational& c, int e, int trunc_order);
    static LaurentSeries one(int trunc_order) { return monomial(1, 0, trunc_order); }
    static LaurentSeries var(int trunc_order) { return monomial(1, 1, trunc_order); }

    int min_exp() const { return min_exp_; }
    int trunc_order() const { return trunc_; }
    Rational coeff(int e) const;
    // First exponent with a nonzero coefficient, trunc_order+1 if none is known.
    int valuation() const;

    LaurentSeries truncate(int order) const;
    LaurentSeries shift(int k) const;
    LaurentSeries scaled(const Rational& c) const;

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator-() const { return scaled(-1); }
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries operator/(const LaurentSeries& o) const;

    LaurentSeries inverse() const;
    LaurentSeries pow(long k) const;
    LaurentSeries exp() const;
    LaurentSeries log() const;
    LaurentSeries derivative() const;
    // this(g) for a power series `this` and g of positive valuation.
    LaurentSeries compose(const LaurentSeries& g) const;
    // Compositional inverse of F = z*unit.
    LaurentSeries revert() const;

    // One "exp: num/den" line per coefficient.
    std::string str() const;

    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

private:
    int min_exp_ = 0;
    int trunc_ = -1;
    std::vector<Rational> c_;
};

// Coefficients b_0..b_N of (z/2)/sinh(z/2).
std::vector<Rational> b_table(int N);

// exp(-sum_{j>=1} j! b_{j+1} u^{j+1}) to order N.
LaurentSeries PB_series(int N);
// exp(sum_{j>=1} (1/2)^{(j+1)/2} zeta(-j) u^{j+1}) to order N; only odd j contribute.
LaurentSeries PZ_series(int N);

// alpha_1..alpha_N with alpha_l = [u^l] 1/revert(u/P_B).
std::vector<Rational> alpha_table(int N);
// Same with P_Z.
std::vector<Rational> bold_alpha_table(int N);

// 1/t + sum alpha_l t^l, known to order N.
LaurentSeries A_series(int N);
// u * exp(sum_{k>=1} (k-1)! b_k u^k), known to order N.
LaurentSeries Q_series(int N);
bool lagrange_consistency_check(int N);

// Even series Delta(t) = sum delta_{2g} t^{2g} with
// b_{j-1} = (2/j!) [t^1](Delta * A^j); known to order N (N even).
LaurentSeries delta_series(int N);
// (A' + u A'')/(u A'^2), known to order N.
LaurentSeries d_min_series(int N);

} // namespace strata
