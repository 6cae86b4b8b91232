#include "strata/volumes.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>

#include "strata/cache.hpp"
#include "strata/hurwitz.hpp"
#include "strata/multiseries.hpp"
#include "strata/series.hpp"
#include "store.hpp"

namespace strata {

namespace detail {

Memo<std::string, Rational>& value_store()
{
    static Memo<std::string, Rational> m;
    return m;
}

void volume_cache_export(CacheEntries& out)
{
    for (const auto& [k, v] : value_store().snapshot())
        out[k] = v;
}

void volume_cache_import(const std::string& key, const Rational& value)
{
    value_store().put(key, value);
}

void volume_cache_clear()
{
    value_store().clear();
}

} // namespace detail

namespace {

struct GrowingTable {
    std::mutex mu;
    std::vector<Rational> values;
};

const std::vector<Rational>& grow(GrowingTable& t, int N, std::vector<Rational> (*make)(int))
{
    std::lock_guard lock(t.mu);
    if (static_cast<int>(t.values.size()) < N) {
        int target = std::max<int>(N, 2 * static_cast<int>(t.values.size()));
        t.values = make(target);
    }
    return t.values;
}

Rational pi_prefactor(int g)
{
    // 2 (2 pi i)^{2g} = 2 (-4)^g pi^{2g}
    return Rational(2) * Rational(-4).pow(g);
}

Rational backbone_denominator(const Signature& mu, int k)
{
    int g = mu.genus();
    return Rational(Integer(1) << (k - 1)) * Rational(factorial(k))
           * Rational(factorial(2 * g - 3 + mu.n()));
}

std::vector<int> pole_profile(const BackboneDecomposition& d)
{
    std::vector<int> p;
    for (const auto& part : d.parts)
        p.push_back(part.p);
    return p;
}

Rational part_factorial(const BackbonePart& part)
{
    return Rational(factorial(2 * part.g - 1 + static_cast<long>(part.mu.size())));
}

Exponent shifted(const Signature& mu)
{
    Exponent e;
    for (int m : mu.entries())
        e.push_back(m + 1);
    return e;
}

void require_even(const Signature& mu)
{
    if (!mu.all_even())
        throw Error("ODD_ENTRY", "spin components need all entries even: " + mu.str());
}

} // namespace

const std::vector<Rational>& alpha_values(int N)
{
    static GrowingTable t;
    return grow(t, N, &alpha_table);
}

const std::vector<Rational>& bold_alpha_values(int N)
{
    static GrowingTable t;
    return grow(t, N, &bold_alpha_table);
}

PiScalar v_minimal(int g)
{
    if (g < 1)
        throw Error("BAD_GENUS", "genus must be >= 1");
    const auto& a = alpha_values(2 * g - 1);
    return {pi_prefactor(g) * a[2 * g - 2] / Rational(factorial(2 * g - 1)), 2 * g};
}

PiScalar backbone_term(const Signature& mu, int i, int j, const BackboneDecomposition& d)
{
    Rational h = h_p1_two(mu[i], mu[j], pole_profile(d));
    if (h.is_zero())
        return {0, 2 * mu.genus()};
    Rational term = h * Rational(d.multiplicity);
    for (const auto& part : d.parts)
        term *= part_factorial(part) * v_stratum(part.stratum()).coeff;
    return {term / backbone_denominator(mu, d.k), 2 * mu.genus()};
}

PiScalar v_stratum_pair(const Signature& mu, int i, int j)
{
    if (mu.n() == 1)
        return v_minimal(mu.genus());
    Rational total;
    for (const auto& d : enumerate_backbones(mu, i, j))
        total += backbone_term(mu, i, j, d).coeff;
    return {total, 2 * mu.genus()};
}

PiScalar v_stratum(const Signature& mu)
{
    if (mu.n() == 1)
        return v_minimal(mu.genus());
    Signature c = mu.canonical();
    Rational coeff = detail::value_store().get(detail::value_key("v", c),
                                               [&] { return v_stratum_pair(c, 0, 1).coeff; });
    return {coeff, 2 * mu.genus()};
}

PiScalar v_stratum_d2(const Signature& mu)
{
    Exponent e = shifted(mu);
    WeightedPoly h = H_n_coefficient(e, Basis::h);
    int N = std::max(1, h.max_index());
    Rational val = substitute(h, table_from_list(alpha_values(N)));
    int g = mu.genus();
    return {pi_prefactor(g) * val / Rational(factorial(2 * g - 2 + mu.n())), 2 * g};
}

Rational a_value(const Signature& mu)
{
    return detail::value_store().get(detail::value_key("a", mu), [&] {
        int g = mu.genus();
        Rational prod = 1;
        for (int m : mu.entries())
            prod *= Rational(m + 1);
        return v_stratum(mu).coeff * Rational(factorial(2 * g - 3 + mu.n()))
               / (pi_prefactor(g) * prod);
    });
}

Rational a_value_d2(const Signature& mu)
{
    WeightedPoly h = H_n_coefficient(shifted(mu), Basis::h);
    int N = std::max(1, h.max_index());
    Rational prod = 1;
    for (int m : mu.entries())
        prod *= Rational(m + 1);
    return substitute(h, table_from_list(alpha_values(N)))
           / (Rational(2 * mu.genus() - 2 + mu.n()) * prod);
}

PiScalar v_spin_delta(const Signature& mu)
{
    require_even(mu);
    int g = mu.genus();
    Rational coeff = detail::value_store().get(detail::value_key("vdelta", mu), [&] {
        WeightedPoly h = H_n_coefficient(shifted(mu.canonical()), Basis::bold_h);
        int N = std::max(1, h.max_index());
        Rational val = substitute(h, table_from_list(bold_alpha_values(N)));
        return pi_prefactor(g) * val / Rational(factorial(2 * g - 2 + mu.n()));
    });
    return {coeff, 2 * g};
}

PiScalar v_spin(const Signature& mu, Parity parity)
{
    require_even(mu);
    Rational v = v_stratum(mu).coeff;
    Rational delta = v_spin_delta(mu).coeff;
    Rational c = parity == Parity::odd ? (v - delta) / Rational(2) : (v + delta) / Rational(2);
    return {c, 2 * mu.genus()};
}

PiScalar v_spin_backbone(const Signature& mu, Parity parity)
{
    require_even(mu);
    if (mu.n() == 1)
        return v_spin(mu, parity);
    Rational total;
    for (const auto& d : enumerate_backbones(mu, 0, 1)) {
        Rational h = h_p1_two(mu[0], mu[1], pole_profile(d));
        if (h.is_zero())
            continue;
        Rational weight = h * Rational(d.multiplicity);
        for (const auto& part : d.parts)
            weight *= part_factorial(part);
        Rational spin_sum;
        for (const auto& phi : spin_assignments(d.k, parity)) {
            Rational prod = 1;
            for (int b = 0; b < d.k; ++b)
                prod *= v_spin(d.parts[b].stratum(), phi[b] ? Parity::odd : Parity::even).coeff;
            spin_sum += prod;
        }
        total += weight * spin_sum / backbone_denominator(mu, d.k);
    }
    return {total, 2 * mu.genus()};
}

bool v_spin_backbone_check(const Signature& mu)
{
    return v_spin_backbone(mu, Parity::odd) == v_spin(mu, Parity::odd)
           && v_spin_backbone(mu, Parity::even) == v_spin(mu, Parity::even);
}

PiScalar v_hyp(const Signature& mu)
{
    int g = mu.genus();
    if (mu.n() == 1) {
        Rational c = Rational(2 * (2 * g - 1)) / Rational(factorial(2 * g + 1))
                     * Rational(double_factorial(2 * g - 3), double_factorial(2 * g - 2));
        return {c, 2 * g};
    }
    if (mu.n() == 2 && mu[0] == mu[1]) {
        Rational c = Rational(8L * g * g) / Rational(factorial(2 * g + 2))
                     * Rational(double_factorial(2 * g - 2), double_factorial(2 * g - 1));
        return {c, 2 * g};
    }
    throw Error("NOT_HYPERELLIPTIC_SHAPE",
                "hyperelliptic components exist only for (2g-2) and (g-1,g-1): " + mu.str());
}

bool hyp_recursion_check(int g)
{
    if (g < 2)
        throw Error("BAD_GENUS", "the hyperelliptic recursion needs g >= 2");
    Rational lhs = v_hyp(Signature({g - 1, g - 1})).coeff;
    Rational rhs = v_hyp(Signature({2 * g - 2})).coeff;
    for (int l = 1; l <= g - 1; ++l) {
        rhs += Rational(factorial(2 * l - 1)) * v_hyp(Signature({2 * l - 2})).coeff
               * Rational(factorial(2 * (g - l) - 1)) * v_hyp(Signature({2 * g - 2 * l - 2})).coeff
               / (Rational(4) * Rational(factorial(2 * g - 1)));
    }
    return lhs == rhs;
}

bool arctan_identity_check(int which, int order)
{
    if (which != 1 && which != 2)
        throw Error("BAD_INDEX", "arctan identities are numbered 1 and 2");
    int N = order + 2;
    LaurentSeries one_minus = LaurentSeries::one(N) - LaurentSeries::monomial(4, 2, N);
    LaurentSeries inv_sqrt = (one_minus.log().scaled(Rational(-1, 2))).exp();
    LaurentSeries y = (inv_sqrt * LaurentSeries::monomial(2, 1, N)).truncate(N);
    std::vector<Rational> atan(N + 1);
    for (int k = 0; 2 * k + 1 <= N; ++k)
        atan[2 * k + 1] = Rational(k % 2 ? -1 : 1, 2 * k + 1);
    LaurentSeries at = LaurentSeries(0, atan).compose(y);
    LaurentSeries rhs = which == 1 ? at.scaled(Rational(1, 2)).shift(-1)
                                   : (at * at).scaled(Rational(1, 4)).shift(-2);
    for (int e = 0; e <= order; ++e) {
        Rational lhs;
        if (e % 2 == 0) {
            int l = e / 2;
            if (which == 1)
                lhs = Rational(binomial(2 * l, l), Integer(2 * l + 1));
            else
                lhs = Rational(2) * Rational(Integer(16)).pow(l)
                      / (Rational((l + 1) * (l + 1)) * Rational(binomial(2 * l + 2, l + 1)));
        }
        if (rhs.coeff(e) != lhs)
            return false;
    }
    return true;
}

PiScalar v_component(const Signature& mu, const std::string& component)
{
    if (component == "all")
        return v_stratum(mu);
    if (component == "odd")
        return v_spin(mu, Parity::odd);
    if (component == "even")
        return v_spin(mu, Parity::even);
    if (component == "hyp")
        return v_hyp(mu);
    throw Error("BAD_COMPONENT", "component must be all, odd, even or hyp");
}

std::vector<Signature> strata_of_genus(int g)
{
    if (g < 1)
        throw Error("BAD_GENUS", "genus must be >= 1");
    std::vector<Signature> out;
    int total = 2 * g - 2;
    if (total == 0)
        return {Signature({0})};
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int x = std::min(left, maxpart); x >= 1; --x) {
            cur.push_back(x);
            rec(left - x, x);
            cur.pop_back();
        }
    };
    rec(total, total);
    return out;
}

std::vector<AsymptoticRow> asymptotic_report(const std::vector<Signature>& list)
{
    std::vector<AsymptoticRow> rows;
    const double pi = std::acos(-1.0);
    for (const auto& mu : list) {
        AsymptoticRow row;
        row.mu = mu;
        int g = mu.genus();
        PiScalar v = v_stratum(mu);
        row.v = v.to_float();
        row.v_hat = row.v - 4.0 + 2.0 * pi * pi / (3.0 * (2 * g - 3 + mu.n()));
        row.g2_v_hat = double(g) * g * row.v_hat;
        for (int a = 0; a < mu.n() && row.monotone; ++a)
            for (int b = a + 1; b < mu.n() && row.monotone; ++b) {
                std::vector<int> merged;
                for (int c = 0; c < mu.n(); ++c)
                    if (c != a && c != b)
                        merged.push_back(mu[c]);
                merged.push_back(mu[a] + mu[b]);
                if (v.coeff < v_stratum(Signature(merged)).coeff)
                    row.monotone = false;
            }
        rows.push_back(row);
    }
    return rows;
}

} // namespace strata
