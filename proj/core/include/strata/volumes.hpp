#pragma once

#include <string>
#include <vector>

#include "strata/combinatorics.hpp"
#include "strata/rational.hpp"

namespace strata {

// alpha_1..alpha_N and the bold variant, cached and grown on demand.
const std::vector<Rational>& alpha_values(int N);
const std::vector<Rational>& bold_alpha_values(int N);

// v(2g-2) = 2 (-4)^g alpha_{2g-1} / (2g-1)! * pi^{2g}.
PiScalar v_minimal(int g);

// Backbone recursion, memoized on the sorted signature.
PiScalar v_stratum(const Signature& mu);
// One level of the backbone recursion with zeros i, j (0-based) distinguished.
PiScalar v_stratum_pair(const Signature& mu, int i, int j);
// Contribution of one decomposition (including its labeled multiplicity).
PiScalar backbone_term(const Signature& mu, int i, int j, const BackboneDecomposition& d);

// 2 (-4)^g / (2g-2+n)! * [z^{m+1}] H_n at h_l -> alpha_l.
PiScalar v_stratum_d2(const Signature& mu);

// a(mu) from the backbone volume and from the H_n coefficient.
Rational a_value(const Signature& mu);
Rational a_value_d2(const Signature& mu);

// v^even - v^odd via the bold recursion; ODD_ENTRY unless all entries are even.
PiScalar v_spin_delta(const Signature& mu);
// (v -+ v^delta)/2.
PiScalar v_spin(const Signature& mu, Parity parity);
// Backbone sum over spin assignments of the requested parity.
PiScalar v_spin_backbone(const Signature& mu, Parity parity);
bool v_spin_backbone_check(const Signature& mu);

// Closed forms for (2g-2) and (g-1,g-1); NOT_HYPERELLIPTIC_SHAPE otherwise.
PiScalar v_hyp(const Signature& mu);
bool hyp_recursion_check(int g);
// Coefficientwise check to x^order of
//   which = 1: sum C(2l,l)/(2l+1) x^{2l} = arctan(2x/sqrt(1-4x^2))/(2x)
//   which = 2: sum 2 16^g/((g+1)^2 C(2g+2,g+1)) x^{2g} = arctan(2x/sqrt(1-4x^2))^2/(4x^2)
bool arctan_identity_check(int which, int order);

// component is one of all, odd, even, hyp.
PiScalar v_component(const Signature& mu, const std::string& component);

// Canonical signatures of genus g with positive entries, lexicographically descending.
std::vector<Signature> strata_of_genus(int g);

struct AsymptoticRow {
    Signature mu;
    double v = 0;
    double v_hat = 0;     // v - 4 + 2 pi^2 / (3 (2g-3+n))
    double g2_v_hat = 0;
    bool monotone = true; // v(mu) >= v(mu') for every merge of two entries
};

std::vector<AsymptoticRow> asymptotic_report(const std::vector<Signature>& list);

} // namespace strata
