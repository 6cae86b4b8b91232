#pragma once

#include <vector>

#include "strata/combinatorics.hpp"
#include "strata/rational.hpp"

namespace strata {

// d(mu): delta_{2g}/(2g-1)^2 for n = 1, otherwise the recursion with zeros
// 0 and 1 of the canonical signature distinguished. Memoized.
Rational d_value(const Signature& mu);
// One level of the d recursion with zeros i, j (0-based) distinguished.
Rational d_value_pair(const Signature& mu, int i, int j);

// c_area = -1/(4 pi^2) d(mu)/a(mu); pi_power -2.
PiScalar c_area(const Signature& mu);
// -1/(8 pi^2) [z^{m+1}] partial2(H_n) / [z^{m+1}] H_n at the alpha values.
PiScalar c_area_partial2(const Signature& mu);
// -1/(8 pi^2) [u^{2g-1}] D(u) / alpha_{2g-1}; minimal strata only.
PiScalar c_area_minimal_D(int g);

// (m_i+1)(m_j+1); TOO_FEW_ZEROS for n < 2.
Integer c_sc_hom(const Signature& mu, int i, int j);

struct ConfigurationValue {
    Configuration config;
    Rational c_hom;  // (m_i+1)(m_j+1) T(C) / v(mu)
    Rational c_area; // sum of c_area(part) * pi^2 over the pieces
};

std::vector<ConfigurationValue> configuration_values(const Signature& mu, int i, int j);
// Sum_C c_hom(C) = (m_i+1)(m_j+1) and
// (m_i+1)(m_j+1) c_area(mu) = Sum_C c_hom(C) c_area(C), both exactly.
bool sc_decomposition_check(const Signature& mu, int i, int j);

struct AreaAsymptoticRow {
    Signature mu;
    double c_area = 0;    // numeric value including 1/pi^2
    double predicted = 0; // 1/2 - 1/(2 sum (m_i+1))
    double g2_diff = 0;
};

std::vector<AreaAsymptoticRow> c_area_asymptotic_report(const std::vector<Signature>& list);

} // namespace strata
