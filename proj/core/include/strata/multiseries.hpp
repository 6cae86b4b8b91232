#pragma once

#include <map>
#include <vector>

#include "strata/poly.hpp"

namespace strata {

using Exponent = std::vector<int>;

// Truncated series in z_1..z_n with WeightedPoly coefficients.
class MultiSeries {
public:
    MultiSeries(Basis basis, std::vector<int> bounds);

    Basis basis() const { return basis_; }
    int nvars() const { return static_cast<int>(bounds_.size()); }
    const std::vector<int>& variables() const { return vars_; }
    const std::vector<int>& bounds() const { return bounds_; }
    const std::map<Exponent, WeightedPoly>& terms() const { return terms_; }

    bool within_bounds(const Exponent& e) const;
    // Zero polynomial when absent; OUT_OF_BOUNDS past the truncation.
    WeightedPoly coeff(const Exponent& e) const;
    void add(const Exponent& e, const WeightedPoly& c);

    // Variable perm[i] of the result is variable i of this series.
    MultiSeries permuted(const std::vector<int>& perm) const;

private:
    Basis basis_;
    std::vector<int> vars_;
    std::vector<int> bounds_;
    std::map<Exponent, WeightedPoly> terms_;
};

// H_{i,j} = (1 + z_i z_j S1)/(1 - z_i z_j S0) - 1 in basis h or bold_h.
// total_cap >= 0 drops coefficients of total degree above it.
MultiSeries two_point(Basis basis, int bound_i, int bound_j, int total_cap = -1);

// Full series H_n via the subset recursion with the bi-differential D2.
MultiSeries H_n(const std::vector<int>& bounds, Basis basis);

// [z^e] H_n for e with all entries >= 1, memoized on the sorted exponents.
WeightedPoly H_n_coefficient(const Exponent& e, Basis basis);

} // namespace strata
