#include "strata/poly.hpp"

#include <algorithm>
#include <sstream>

#include "strata/memo.hpp"

namespace strata {

const char* basis_name(Basis b)
{
    switch (b) {
    case Basis::h: return "h";
    case Basis::p: return "p";
    case Basis::bold_h: return "bh";
    case Basis::bold_p: return "bp";
    }
    return "?";
}

bool is_bold(Basis b)
{
    return b == Basis::bold_h || b == Basis::bold_p;
}

int monomial_weight(const Monomial& m)
{
    int w = 0;
    for (int l : m)
        w += l + 1;
    return w;
}

WeightedPoly WeightedPoly::constant(Basis basis, const Rational& c)
{
    WeightedPoly f(basis);
    f.add_term({}, c);
    return f;
}

WeightedPoly WeightedPoly::generator(Basis basis, int l)
{
    if (l < 1)
        throw Error("BAD_INDEX", "generator index must be positive");
    if (is_bold(basis) && l % 2 == 0)
        throw Error("EVEN_INDEX", "bold generators have odd index, got " + std::to_string(l));
    WeightedPoly f(basis);
    f.add_term({l}, 1);
    return f;
}

Rational WeightedPoly::coeff(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void WeightedPoly::add_term(const Monomial& m, const Rational& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void WeightedPoly::check_same_basis(const WeightedPoly& o) const
{
    if (basis_ != o.basis_ && !terms_.empty() && !o.terms_.empty())
        throw Error("WRONG_BASIS", std::string("mixing bases ") + basis_name(basis_) + " and " +
                                       basis_name(o.basis_));
}

WeightedPoly& WeightedPoly::operator+=(const WeightedPoly& o)
{
    check_same_basis(o);
    if (terms_.empty())
        basis_ = o.basis_;
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

WeightedPoly& WeightedPoly::operator-=(const WeightedPoly& o)
{
    return *this += -o;
}

WeightedPoly& WeightedPoly::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

WeightedPoly WeightedPoly::operator+(const WeightedPoly& o) const
{
    WeightedPoly r = *this;
    return r += o;
}

WeightedPoly WeightedPoly::operator-(const WeightedPoly& o) const
{
    WeightedPoly r = *this;
    return r -= o;
}

WeightedPoly WeightedPoly::operator*(const Rational& c) const
{
    WeightedPoly r = *this;
    return r *= c;
}

WeightedPoly WeightedPoly::operator*(const WeightedPoly& o) const
{
    check_same_basis(o);
    WeightedPoly r(terms_.empty() ? o.basis_ : basis_);
    Monomial m;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            m.resize(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), m.begin());
            r.add_term(m, ca * cb);
        }
    return r;
}

WeightedPoly WeightedPoly::pow(int e) const
{
    WeightedPoly r = constant(basis_, 1);
    for (int i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

WeightedPoly WeightedPoly::derivative(int l) const
{
    WeightedPoly r(basis_);
    for (const auto& [m, c] : terms_) {
        auto lo = std::lower_bound(m.begin(), m.end(), l);
        auto hi = std::upper_bound(m.begin(), m.end(), l);
        long mult = hi - lo;
        if (mult == 0)
            continue;
        Monomial rest(m.begin(), lo);
        rest.insert(rest.end(), lo + 1, m.end());
        r.add_term(rest, c * Rational(mult));
    }
    return r;
}

int WeightedPoly::max_weight() const
{
    int w = -1;
    for (const auto& [m, c] : terms_)
        w = std::max(w, monomial_weight(m));
    return w;
}

int WeightedPoly::max_index() const
{
    int l = 0;
    for (const auto& [m, c] : terms_)
        if (!m.empty())
            l = std::max(l, m.back());
    return l;
}

bool WeightedPoly::is_homogeneous(int weight) const
{
    for (const auto& [m, c] : terms_)
        if (monomial_weight(m) != weight)
            return false;
    return true;
}

WeightedPoly WeightedPoly::weight_part(int w) const
{
    WeightedPoly r(basis_);
    for (const auto& [m, c] : terms_)
        if (monomial_weight(m) == w)
            r.add_term(m, c);
    return r;
}

std::string WeightedPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << c.short_str();
        if (m.empty())
            continue;
        os << " * ";
        bool firstgen = true;
        for (auto it = m.rbegin(); it != m.rend();) {
            int l = *it;
            int e = 0;
            while (it != m.rend() && *it == l) {
                ++e;
                ++it;
            }
            if (!firstgen)
                os << "*";
            firstgen = false;
            os << basis_name(basis_) << l;
            if (e > 1)
                os << "^" << e;
        }
    }
    return os.str();
}

SubstitutionTable table_from_list(const std::vector<Rational>& list)
{
    SubstitutionTable t;
    for (size_t i = 0; i < list.size(); ++i)
        t[static_cast<int>(i) + 1] = list[i];
    return t;
}

Rational substitute(const WeightedPoly& f, const SubstitutionTable& table)
{
    Rational total;
    for (const auto& [m, c] : f.terms()) {
        Rational term = c;
        for (int l : m) {
            auto it = table.find(l);
            if (it == table.end())
                throw Error("MISSING_GENERATOR", "no value for generator " + std::to_string(l));
            term *= it->second;
        }
        total += term;
    }
    return total;
}

namespace {

// Truncated power series in one variable with polynomial coefficients.
using PolySeries = std::vector<WeightedPoly>;

PolySeries series_exp(const PolySeries& x, Basis basis)
{
    size_t n = x.size();
    PolySeries e(n, WeightedPoly(basis));
    e[0] = WeightedPoly::constant(basis, 1);
    for (size_t m = 1; m < n; ++m) {
        WeightedPoly s(basis);
        for (size_t k = 1; k <= m; ++k)
            if (!x[k].is_zero())
                s += x[k] * e[m - k] * Rational(static_cast<long>(k));
        e[m] = s * Rational(1, static_cast<long>(m));
    }
    return e;
}

WeightedPoly h_from_power_sums(int l, Basis pbasis, bool odd_only)
{
    // P(u)^l = exp(-l sum_s u^{s+1} p_s)
    PolySeries x(l + 2, WeightedPoly(pbasis));
    for (int s = 1; s <= l; ++s) {
        if (odd_only && s % 2 == 0)
            continue;
        x[s + 1] = WeightedPoly::generator(pbasis, s) * Rational(-l);
    }
    PolySeries e = series_exp(x, pbasis);
    return e[l + 1] * Rational(-1, l);
}

Memo<int, WeightedPoly> h_memo, p_memo, bh_memo, bp_memo, bf_memo;

void check_odd(int l)
{
    if (l < 1)
        throw Error("BAD_INDEX", "index must be positive");
    if (l % 2 == 0)
        throw Error("EVEN_INDEX", "bold generators have odd index, got " + std::to_string(l));
}

} // namespace

WeightedPoly h_in_p(int l)
{
    if (l < 1)
        throw Error("BAD_INDEX", "index must be positive");
    return h_memo.get(l, [&] { return h_from_power_sums(l, Basis::p, false); });
}

WeightedPoly p_in_h(int l)
{
    if (l < 1)
        throw Error("BAD_INDEX", "index must be positive");
    return p_memo.get(l, [&] {
        // p_l = h_l - (lower terms of h_l in p, rewritten in h)
        WeightedPoly rest = h_in_p(l) - WeightedPoly::generator(Basis::p, l);
        WeightedPoly out = WeightedPoly::generator(Basis::h, l);
        out -= substitute_generators(rest, Basis::h, [](int j) { return p_in_h(j); });
        return out;
    });
}

WeightedPoly bold_h_in_p(int l)
{
    check_odd(l);
    return bh_memo.get(l, [&] { return h_from_power_sums(l, Basis::bold_p, true); });
}

WeightedPoly bold_p_in_h(int l)
{
    check_odd(l);
    return bp_memo.get(l, [&] {
        WeightedPoly rest = bold_h_in_p(l) - WeightedPoly::generator(Basis::bold_p, l);
        WeightedPoly out = WeightedPoly::generator(Basis::bold_h, l);
        out -= substitute_generators(rest, Basis::bold_h, [](int j) { return bold_p_in_h(j); });
        return out;
    });
}

WeightedPoly bold_f_in_p(int l)
{
    check_odd(l);
    return bf_memo.get(l, [&] {
        const Basis B = Basis::bold_p;
        int n = l + 2;
        // exponent sum_{j odd} (2 p_j / j) t^j (1 - (1 - l t)^{-j})
        PolySeries y(n, WeightedPoly(B));
        for (int j = 1; j <= l; j += 2) {
            WeightedPoly pj = WeightedPoly::generator(B, j) * Rational(2, j);
            Rational lpow = 1;
            for (int m = 1; j + m < n; ++m) {
                lpow *= Rational(l);
                Rational c = -Rational(binomial(m + j - 1, m)) * lpow;
                y[j + m] += pj * c;
            }
        }
        PolySeries e = series_exp(y, B);
        std::vector<Rational> prod(n);
        prod[0] = 1;
        for (int j = 1; j <= l - 1; ++j)
            for (int k = n - 1; k >= 1; --k)
                prod[k] -= Rational(j) * prod[k - 1];
        WeightedPoly out(B);
        for (int k = 0; k <= l + 1; ++k)
            if (!prod[k].is_zero())
                out += e[l + 1 - k] * prod[k];
        return out * Rational(-1, 2 * l);
    });
}

WeightedPoly to_basis(const WeightedPoly& f, Basis target)
{
    Basis src = f.basis();
    if (src == target || f.is_zero()) {
        WeightedPoly r = f;
        if (f.is_zero())
            return WeightedPoly(target);
        return r;
    }
    if (is_bold(src) != is_bold(target))
        throw Error("WRONG_BASIS", std::string("cannot convert ") + basis_name(src) + " to " +
                                       basis_name(target));
    switch (target) {
    case Basis::p: return substitute_generators(f, target, [](int l) { return h_in_p(l); });
    case Basis::h: return substitute_generators(f, target, [](int l) { return p_in_h(l); });
    case Basis::bold_p:
        return substitute_generators(f, target, [](int l) { return bold_h_in_p(l); });
    case Basis::bold_h:
        return substitute_generators(f, target, [](int l) { return bold_p_in_h(l); });
    }
    return f;
}

WeightedPoly partial2(const WeightedPoly& f)
{
    Basis B = f.basis();
    if (B != Basis::p && B != Basis::bold_p)
        throw Error("WRONG_BASIS", std::string("partial2 needs a power-sum basis, got ") +
                                       basis_name(B));
    WeightedPoly out = f.derivative(1);
    // the l = 2 term carries p_0 = 0
    for (int l = 3; l <= f.max_index(); ++l) {
        if (is_bold(B) && l % 2 == 0)
            continue;
        WeightedPoly d = f.derivative(l);
        if (d.is_zero())
            continue;
        out += WeightedPoly::generator(B, l - 2) * d * Rational(l * (l - 1));
    }
    if (out.is_zero())
        return WeightedPoly(B);
    return out;
}

} // namespace strata
