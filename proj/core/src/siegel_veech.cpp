#include "strata/siegel_veech.hpp"

#include <algorithm>

#include "strata/hurwitz.hpp"
#include "strata/multiseries.hpp"
#include "strata/series.hpp"
#include "strata/volumes.hpp"
#include "store.hpp"

namespace strata {

namespace {

Exponent shifted(const Signature& mu)
{
    Exponent e;
    for (int m : mu.entries())
        e.push_back(m + 1);
    return e;
}

Rational part_weight(const BackbonePart& part)
{
    Signature s = part.stratum();
    return Rational(2 * part.g - 1 + static_cast<long>(part.mu.size())) * Rational(part.p)
           * a_value(s);
}

} // namespace

Rational d_value_pair(const Signature& mu, int i, int j)
{
    if (mu.n() == 1)
        return d_value(mu);
    Rational total;
    for (const auto& d : enumerate_backbones(mu, i, j)) {
        std::vector<int> p;
        for (const auto& part : d.parts)
            p.push_back(part.p);
        Rational h = h_p1_two(mu[i], mu[j], p);
        if (h.is_zero())
            continue;
        Rational term = h * Rational(d.multiplicity) / Rational(factorial(d.k - 1));
        Signature first = d.parts[0].stratum();
        term *= d_value(first) / a_value(first);
        for (const auto& part : d.parts)
            term *= part_weight(part);
        total += term;
    }
    return total / Rational((mu[i] + 1) * (mu[j] + 1));
}

Rational d_value(const Signature& mu)
{
    Signature c = mu.canonical();
    return detail::value_store().get(detail::value_key("d", c), [&] {
        if (c.n() == 1) {
            int g = c.genus();
            Rational delta = delta_series(2 * g).coeff(2 * g);
            return delta / Rational((2 * g - 1) * (2 * g - 1));
        }
        return d_value_pair(c, 0, 1);
    });
}

PiScalar c_area(const Signature& mu)
{
    return {Rational(-1, 4) * d_value(mu) / a_value(mu), -2};
}

PiScalar c_area_partial2(const Signature& mu)
{
    WeightedPoly h = H_n_coefficient(shifted(mu), Basis::h);
    WeightedPoly p = to_basis(h, Basis::p);
    WeightedPoly dp = partial2(p);
    int N = std::max({1, h.max_index(), p.max_index(), dp.max_index()});
    SubstitutionTable alpha = table_from_list(alpha_values(N));
    SubstitutionTable pvals;
    for (int l = 1; l <= N; ++l)
        pvals[l] = substitute(p_in_h(l), alpha);
    Rational num = substitute(dp, pvals);
    Rational den = substitute(h, alpha);
    return {Rational(-1, 8) * num / den, -2};
}

PiScalar c_area_minimal_D(int g)
{
    if (g < 1)
        throw Error("BAD_GENUS", "genus must be >= 1");
    Rational dcoef = d_min_series(2 * g - 1).coeff(2 * g - 1);
    Rational a = alpha_values(2 * g - 1)[2 * g - 2];
    return {Rational(-1, 8) * dcoef / a, -2};
}

Integer c_sc_hom(const Signature& mu, int i, int j)
{
    if (mu.n() < 2)
        throw Error("TOO_FEW_ZEROS", "saddle connections join two distinct zeros");
    if (i == j || i < 0 || j < 0 || i >= mu.n() || j >= mu.n())
        throw Error("BAD_INDEX", "zero indices must be distinct and in range");
    return Integer(mu[i] + 1) * (mu[j] + 1);
}

std::vector<ConfigurationValue> configuration_values(const Signature& mu, int i, int j)
{
    Rational scale = Rational(c_sc_hom(mu, i, j)) / v_stratum(mu).coeff;
    std::vector<ConfigurationValue> out;
    for (const auto& c : configurations(mu, i, j)) {
        ConfigurationValue cv;
        cv.config = c;
        cv.c_hom = scale * backbone_term(mu, i, j, c.representative).coeff;
        for (const auto& part : c.representative.parts)
            cv.c_area += c_area(part.stratum()).coeff;
        out.push_back(std::move(cv));
    }
    return out;
}

bool sc_decomposition_check(const Signature& mu, int i, int j)
{
    Rational hom = Rational(c_sc_hom(mu, i, j));
    Rational sum_hom, sum_area;
    for (const auto& cv : configuration_values(mu, i, j)) {
        sum_hom += cv.c_hom;
        sum_area += cv.c_hom * cv.c_area;
    }
    return sum_hom == hom && sum_area == hom * c_area(mu).coeff;
}

std::vector<AreaAsymptoticRow> c_area_asymptotic_report(const std::vector<Signature>& list)
{
    std::vector<AreaAsymptoticRow> rows;
    for (const auto& mu : list) {
        AreaAsymptoticRow row;
        row.mu = mu;
        row.c_area = c_area(mu).to_float();
        int s = 0;
        for (int m : mu.entries())
            s += m + 1;
        row.predicted = 0.5 - 0.5 / s;
        double g = mu.genus();
        row.g2_diff = g * g * (row.c_area - row.predicted);
        rows.push_back(row);
    }
    return rows;
}

} // namespace strata
