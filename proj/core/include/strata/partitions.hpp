#pragma once

#include <functional>
#include <vector>

#include "strata/rational.hpp"
#include "strata/series.hpp"

namespace strata {

// Weakly decreasing positive parts; the empty partition is allowed.
using Partition = std::vector<int>;
using PartitionFunction = std::function<Rational(const Partition&)>;

// All partitions of n, lexicographically descending.
const std::vector<Partition>& partitions_of(int n);
int partition_size(const Partition& lambda);

// p_l(lambda) = sum_i ((lambda_i - i + 1/2)^l - (-i + 1/2)^l) + (1 - 2^{-l}) zeta(-l).
Rational p_eval(int l, const Partition& lambda);

// chi^lambda(rho) by border-strip removal on beta-sets; SIZE_MISMATCH unless |lambda| = |rho|.
Integer mn_character(const Partition& lambda, const Partition& rho);
// Hook length formula.
Integer dimension(const Partition& lambda);

// z_rho(d) chi^lambda(rho 1^{d-|rho|}) / dim lambda with d = |lambda| and
// z_rho(d) = d! / ((d-|rho|)! prod rho_j prod m_j(rho)!); 0 when |rho| > d.
// z_rho(d) counts the ways to mark disjoint cycles of lengths rho, so 1-parts
// of rho are marked fixed points.
Rational f_class_eval(const Partition& rho, const Partition& lambda);
// f_class_eval({l}, lambda).
Rational f_eval(int l, const Partition& lambda);

// <F>_q = sum F(lambda) q^{|lambda|} / sum q^{|lambda|} to order D <= 20.
LaurentSeries q_bracket(const PartitionFunction& f, int D);
// Cumulant over set partitions with weights (-1)^{l-1} (l-1)!; at most 4 functions, D <= 16.
LaurentSeries connected_bracket(const std::vector<PartitionFunction>& fs, int D);

// (1/d!) #{(a, b, g_1..g_n) in S_d : [a, b] = g_1...g_n} where g_i has marked
// cycles of type profile[i] and every unmarked cycle is a fixed point.
// connected restricts to transitive tuples. DEGREE_TOO_LARGE when d > 6.
Rational count_covers_brute(const std::vector<Partition>& profile, int d, bool connected);
// Sum over |lambda| = d of prod_i f_{profile[i]}(lambda).
Rational count_covers_character(const std::vector<Partition>& profile, int d);
// [q^d] of the connected bracket of the f_{profile[i]}.
Rational count_covers_connected_character(const std::vector<Partition>& profile, int d);

} // namespace strata
