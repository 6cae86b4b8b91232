#include "strata/multiseries.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <tuple>

#include "strata/memo.hpp"

namespace strata {

MultiSeries::MultiSeries(Basis basis, std::vector<int> bounds)
    : basis_(basis), bounds_(std::move(bounds))
{
    vars_.resize(bounds_.size());
    std::iota(vars_.begin(), vars_.end(), 0);
}

bool MultiSeries::within_bounds(const Exponent& e) const
{
    if (e.size() != bounds_.size())
        return false;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 || e[i] > bounds_[i])
            return false;
    return true;
}

WeightedPoly MultiSeries::coeff(const Exponent& e) const
{
    if (!within_bounds(e))
        throw Error("OUT_OF_BOUNDS", "exponent outside the truncation box");
    auto it = terms_.find(e);
    return it == terms_.end() ? WeightedPoly(basis_) : it->second;
}

void MultiSeries::add(const Exponent& e, const WeightedPoly& c)
{
    if (!within_bounds(e))
        throw Error("OUT_OF_BOUNDS", "exponent outside the truncation box");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

MultiSeries MultiSeries::permuted(const std::vector<int>& perm) const
{
    std::vector<int> nb(bounds_.size());
    for (size_t i = 0; i < perm.size(); ++i)
        nb[perm[i]] = bounds_[i];
    MultiSeries r(basis_, nb);
    for (const auto& [e, c] : terms_) {
        Exponent f(e.size());
        for (size_t i = 0; i < perm.size(); ++i)
            f[perm[i]] = e[i];
        r.add(f, c);
    }
    return r;
}

namespace {

void check_h_basis(Basis basis)
{
    if (basis != Basis::h && basis != Basis::bold_h)
        throw Error("WRONG_BASIS", "H series live in the h or bold_h basis");
}

bool generator_allowed(Basis basis, int l)
{
    return l >= 1 && !(is_bold(basis) && l % 2 == 0);
}

} // namespace

MultiSeries two_point(Basis basis, int bound_i, int bound_j, int total_cap)
{
    check_h_basis(basis);
    if (bound_i < 1 || bound_j < 1)
        throw Error("BAD_BOUND", "two_point bounds must be >= 1");
    auto in_cap = [&](int a, int b) { return total_cap < 0 || a + b <= total_cap; };
    auto gen = [&](int l) {
        return generator_allowed(basis, l) ? WeightedPoly::generator(basis, l) : WeightedPoly(basis);
    };
    // H = x (S0 + S1) + x S0 H with x = z_i z_j; [z_i^c z_j^d] S0 = h_{c+d+1}
    std::vector<std::vector<WeightedPoly>> H(bound_i + 1,
                                             std::vector<WeightedPoly>(bound_j + 1, WeightedPoly(basis)));
    for (int a = 1; a <= bound_i; ++a)
        for (int b = 1; b <= bound_j; ++b) {
            if (!in_cap(a, b))
                continue;
            int l = a + b - 1;
            WeightedPoly c = gen(l) * Rational(l + 1);
            for (int cc = 0; cc <= a - 2; ++cc)
                for (int dd = 0; dd <= b - 2; ++dd) {
                    const WeightedPoly& rest = H[a - 1 - cc][b - 1 - dd];
                    if (rest.is_zero())
                        continue;
                    int s = cc + dd + 1;
                    if (!generator_allowed(basis, s))
                        continue;
                    c += gen(s) * rest;
                }
            H[a][b] = std::move(c);
        }
    MultiSeries out(basis, {bound_i, bound_j});
    for (int a = 1; a <= bound_i; ++a)
        for (int b = 1; b <= bound_j; ++b)
            out.add({a, b}, H[a][b]);
    return out;
}

namespace {

// Two-point coefficients h_{a,b}, kept for the largest total degree requested so far.
WeightedPoly two_point_coeff(Basis basis, int a, int b)
{
    static std::mutex mu;
    static std::map<Basis, std::pair<int, MultiSeries>> tables;
    std::lock_guard lock(mu);
    auto it = tables.find(basis);
    if (it == tables.end() || it->second.first < a + b) {
        int cap = std::max(a + b, it == tables.end() ? 0 : it->second.first + 4);
        tables.insert_or_assign(basis, std::make_pair(cap, two_point(basis, cap, cap, cap)));
        it = tables.find(basis);
    }
    return it->second.second.coeff({a, b});
}

using Partials = std::vector<std::pair<int, WeightedPoly>>;

Partials partials(const WeightedPoly& f)
{
    Partials out;
    for (int l = 1; l <= f.max_index(); ++l) {
        WeightedPoly d = f.derivative(l);
        if (!d.is_zero())
            out.emplace_back(l, std::move(d));
    }
    return out;
}

// sum_{l1,l2} h_{l1,l2} (df/dh_l1)(dg/dh_l2)
WeightedPoly D2(Basis basis, const Partials& df, const Partials& dg)
{
    WeightedPoly out(basis);
    for (const auto& [l1, d1] : df)
        for (const auto& [l2, d2] : dg) {
            WeightedPoly h12 = two_point_coeff(basis, l1, l2);
            if (h12.is_zero())
                continue;
            out += h12 * d1 * d2;
        }
    return out;
}

} // namespace

MultiSeries H_n(const std::vector<int>& bounds, Basis basis)
{
    check_h_basis(basis);
    int n = static_cast<int>(bounds.size());
    if (n < 1)
        throw Error("BAD_BOUND", "H_n needs at least one variable");
    for (int b : bounds)
        if (b < 1)
            throw Error("BAD_BOUND", "H_n bounds must be >= 1");
    if (n == 2)
        return two_point(basis, bounds[0], bounds[1]);

    // Series for each nonempty subset mask, exponents over all n variables.
    std::vector<std::map<Exponent, WeightedPoly>> sub(1u << n);
    for (int i = 0; i < n; ++i)
        for (int l = 1; l <= bounds[i]; ++l)
            if (generator_allowed(basis, l)) {
                Exponent e(n, 0);
                e[i] = l;
                sub[1u << i][e] = WeightedPoly::generator(basis, l);
            }
    std::vector<unsigned> masks;
    for (unsigned m = 1; m < (1u << n); ++m)
        if (__builtin_popcount(m) >= 2)
            masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(),
                     [](unsigned a, unsigned b) { return __builtin_popcount(a) < __builtin_popcount(b); });

    for (unsigned S : masks) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (S & (1u << i))
                idx.push_back(i);
        int k = static_cast<int>(idx.size());
        if (k == 2) {
            MultiSeries tp = two_point(basis, bounds[idx[0]], bounds[idx[1]]);
            for (const auto& [e2, c] : tp.terms()) {
                Exponent e(n, 0);
                e[idx[0]] = e2[0];
                e[idx[1]] = e2[1];
                sub[S][e] = c;
            }
            continue;
        }
        // Partial derivatives of every coefficient of every proper subset.
        std::map<std::pair<unsigned, Exponent>, Partials> dcache;
        auto get_partials = [&](unsigned T, const Exponent& e) -> const Partials& {
            auto key = std::make_pair(T, e);
            auto it = dcache.find(key);
            if (it != dcache.end())
                return it->second;
            auto cit = sub[T].find(e);
            Partials p = cit == sub[T].end() ? Partials{} : partials(cit->second);
            return dcache.emplace(key, std::move(p)).first->second;
        };
        Exponent e(n, 0);
        std::vector<int> ctr(k, 1);
        while (true) {
            for (int t = 0; t < k; ++t)
                e[idx[t]] = ctr[t];
            WeightedPoly total(basis);
            // ordered splits S = S1 + S2, both nonempty
            for (unsigned S1 = (S - 1) & S; S1 > 0; S1 = (S1 - 1) & S) {
                unsigned S2 = S & ~S1;
                Exponent e1(n, 0), e2(n, 0);
                for (int i : idx)
                    ((S1 & (1u << i)) ? e1 : e2)[i] = e[i];
                const Partials& d1 = get_partials(S1, e1);
                if (d1.empty())
                    continue;
                const Partials& d2 = get_partials(S2, e2);
                if (d2.empty())
                    continue;
                total += D2(basis, d1, d2);
            }
            if (!total.is_zero())
                sub[S][e] = total * Rational(1, 2 * (k - 1));
            int t = 0;
            while (t < k && ++ctr[t] > bounds[idx[t]]) {
                ctr[t] = 1;
                ++t;
            }
            if (t == k)
                break;
        }
    }
    MultiSeries out(basis, bounds);
    for (const auto& [e, c] : sub[(1u << n) - 1])
        out.add(e, c);
    return out;
}

WeightedPoly H_n_coefficient(const Exponent& e_in, Basis basis)
{
    check_h_basis(basis);
    static Memo<std::pair<Basis, Exponent>, WeightedPoly> memo;
    Exponent e = e_in;
    if (e.empty())
        throw Error("BAD_BOUND", "empty exponent");
    for (int x : e)
        if (x < 1)
            throw Error("BAD_BOUND", "exponents must be >= 1");
    std::sort(e.begin(), e.end());
    return memo.get({basis, e}, [&]() -> WeightedPoly {
        int n = static_cast<int>(e.size());
        if (n == 1)
            return generator_allowed(basis, e[0]) ? WeightedPoly::generator(basis, e[0])
                                                   : WeightedPoly(basis);
        if (n == 2)
            return two_point_coeff(basis, e[0], e[1]);
        // Unordered splits with position 0 in the first part; D2 is symmetric,
        // so this is half of the ordered sum.
        WeightedPoly total(basis);
        unsigned full = (1u << n) - 1;
        for (unsigned S1 = 1; S1 < full; ++S1) {
            if (!(S1 & 1u))
                continue;
            Exponent e1, e2;
            for (int i = 0; i < n; ++i)
                ((S1 & (1u << i)) ? e1 : e2).push_back(e[i]);
            Partials d1 = partials(H_n_coefficient(e1, basis));
            if (d1.empty())
                continue;
            Partials d2 = partials(H_n_coefficient(e2, basis));
            if (d2.empty())
                continue;
            total += D2(basis, d1, d2);
        }
        return total * Rational(1, n - 1);
    });
}

} // namespace strata
