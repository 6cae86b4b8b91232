#pragma once

#include <string>
#include <vector>

#include "strata/rational.hpp"

namespace strata {

// (k-1)! [t^{m1+1}] prod_i t(1 - t^{p_i})/(1 - t); 0 unless sum (p_i+1) = m1+m2+2.
Rational h_p1_two(int m1, int m2, const std::vector<int>& p);

// Sum over genus-0 rooted trees of products of two-zero numbers. The first two
// entries of mu0 are distinguished. INCONSISTENT_PROFILE on a bad degree.
Rational h_p1_general(const std::vector<int>& mu0, const std::vector<int>& mu_inf);

// |{(s1, s2)}| / d! over an (m1+1)-cycle s1 and an (m2+1)-cycle s2 in S_d with
// s1*s2 of cycle type p and <s1, s2> transitive. DEGREE_TOO_LARGE when d > 8.
Rational hurwitz_tuple_oracle(int m1, int m2, const std::vector<int>& p);

// Cache key "hp1|m1,m2,<sorted tail>/<sorted p>|all".
std::string hurwitz_cache_key(const std::vector<int>& mu0, const std::vector<int>& mu_inf);

} // namespace strata
