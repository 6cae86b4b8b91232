#pragma once

#include <map>
#include <string>
#include <vector>

#include "strata/rational.hpp"

namespace strata {

enum class Basis { h, p, bold_h, bold_p };

const char* basis_name(Basis b);
bool is_bold(Basis b);

// Sorted (ascending) multiset of generator indices.
using Monomial = std::vector<int>;

// Generator l has weight l+1.
int monomial_weight(const Monomial& m);

// Sparse polynomial over Q in one family of generators.
class WeightedPoly {
public:
    explicit WeightedPoly(Basis basis = Basis::h) : basis_(basis) {}

    static WeightedPoly constant(Basis basis, const Rational& c);
    // Bold bases reject even l with EVEN_INDEX.
    static WeightedPoly generator(Basis basis, int l);

    Basis basis() const { return basis_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Monomial& m) const;

    void add_term(const Monomial& m, const Rational& c);

    WeightedPoly& operator+=(const WeightedPoly& o);
    WeightedPoly& operator-=(const WeightedPoly& o);
    WeightedPoly& operator*=(const Rational& c);
    WeightedPoly operator+(const WeightedPoly& o) const;
    WeightedPoly operator-(const WeightedPoly& o) const;
    WeightedPoly operator*(const WeightedPoly& o) const;
    WeightedPoly operator*(const Rational& c) const;
    WeightedPoly operator-() const { return *this * Rational(-1); }
    WeightedPoly pow(int e) const;

    // d/d(gen_l).
    WeightedPoly derivative(int l) const;

    // -1 for the zero polynomial.
    int max_weight() const;
    int max_index() const;
    bool is_homogeneous(int weight) const;
    WeightedPoly weight_part(int w) const;

    // "c * h3*h1^2 + ..." with monomials in canonical order.
    std::string str() const;

    friend bool operator==(const WeightedPoly& a, const WeightedPoly& b)
    {
        return a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }

private:
    void check_same_basis(const WeightedPoly& o) const;

    Basis basis_;
    std::map<Monomial, Rational> terms_;
};

using SubstitutionTable = std::map<int, Rational>;

// Index l -> list[l-1].
SubstitutionTable table_from_list(const std::vector<Rational>& list);

// Evaluates with gen_l -> table[l]; MISSING_GENERATOR when an index is absent.
Rational substitute(const WeightedPoly& f, const SubstitutionTable& table);

// Replaces each generator by a polynomial in `target`.
template <class Image>
WeightedPoly substitute_generators(const WeightedPoly& f, Basis target, Image&& image)
{
    WeightedPoly out(target);
    for (const auto& [mono, c] : f.terms()) {
        WeightedPoly term = WeightedPoly::constant(target, c);
        for (int l : mono)
            term = term * image(l);
        out += term;
    }
    return out;
}

// h_l = (-1/l) [u^{l+1}] P(u)^l with P(u) = exp(-sum_s u^{s+1} p_s).
WeightedPoly h_in_p(int l);
WeightedPoly p_in_h(int l);
// Same construction with odd s only; odd l.
WeightedPoly bold_h_in_p(int l);
WeightedPoly bold_p_in_h(int l);
// (-1/2l) [t^{l+1}] prod_{j<l}(1-jt) exp(sum_{j odd} (2 p_j t^j / j)(1 - (1-lt)^{-j})).
WeightedPoly bold_f_in_p(int l);

// h <-> p and bold_h <-> bold_p.
WeightedPoly to_basis(const WeightedPoly& f, Basis target);

// d/dp_1 + sum_{l>=2} l(l-1) p_{l-2} d/dp_l with p_0 = 0.
WeightedPoly partial2(const WeightedPoly& f);

} // namespace strata
