#include <doctest.h>

#include <algorithm>

#include "strata/multiseries.hpp"
#include "strata/series.hpp"

using namespace strata;

namespace {

template <class F>
std::string error_code(F&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

WeightedPoly h(int l) { return WeightedPoly::generator(Basis::h, l); }

// Checks (H_ij + 1)(H(z_j) - H(z_i)) = z_i H'(z_i) - z_j H'(z_j) with
// H(z) = 1/z + sum h_l z^l, coefficientwise for exponents where the
// truncation at bound B does not interfere.
void check_fraction_identity(const MultiSeries& s, int B)
{
    auto c = [&](int a, int b) -> WeightedPoly {
        if (a == 0 && b == 0)
            return WeightedPoly::constant(Basis::h, 1);
        if (a < 1 || b < 1)
            return WeightedPoly(Basis::h);
        return s.coeff({a, b});
    };
    for (int x = -1; x <= B - 1; ++x) {
        for (int y = -1; y <= B - 1; ++y) {
            // Factor terms: 1/z_j -> (0,-1), -1/z_i -> (-1,0), h_l z_j^l, -h_l z_i^l.
            WeightedPoly lhs = c(x, y + 1) - c(x + 1, y);
            for (int l = 1; l <= B; ++l) {
                lhs += c(x, y - l) * h(l);
                lhs -= c(x - l, y) * h(l);
            }
            WeightedPoly rhs(Basis::h);
            if (x == -1 && y == 0)
                rhs = WeightedPoly::constant(Basis::h, -1);
            if (x == 0 && y == -1)
                rhs = WeightedPoly::constant(Basis::h, 1);
            if (y == 0 && x >= 1)
                rhs = h(x) * Rational(x);
            if (x == 0 && y >= 1)
                rhs = h(y) * Rational(-y);
            CHECK_MESSAGE(lhs == rhs, "exponent ", x, ",", y);
        }
    }
}

} // namespace

TEST_CASE("two point anchors")
{
    auto s = two_point(Basis::h, 4, 4);
    CHECK(s.coeff({1, 1}) == h(1) * Rational(2));
    CHECK(s.coeff({2, 1}) == h(2) * Rational(3));
    CHECK(s.coeff({1, 2}) == h(2) * Rational(3));
    CHECK(s.coeff({2, 2}) == h(1).pow(2) * Rational(2) + h(3) * Rational(4));
    auto alpha = table_from_list(alpha_table(8));
    CHECK(substitute(s.coeff({2, 2}), alpha) == Rational(1, 45));
    CHECK(substitute(s.coeff({3, 3}), alpha) == Rational(-153, 8960));
}

TEST_CASE("two point satisfies the defining fraction")
{
    check_fraction_identity(two_point(Basis::h, 7, 7), 7);
}

TEST_CASE("H_n base case and errors")
{
    auto s = two_point(Basis::h, 5, 5);
    auto t = H_n({5, 5}, Basis::h);
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b)
            CHECK(s.coeff({a, b}) == t.coeff({a, b}));
    CHECK(error_code([&] { (void)t.coeff({6, 1}); }) == "OUT_OF_BOUNDS");
    CHECK(error_code([] { H_n({3, 3}, Basis::p); }) == "WRONG_BASIS");
    CHECK(error_code([] { H_n({0, 3}, Basis::h); }) == "BAD_BOUND");
}

// [z^l] H_n has weight sum(l) - (n - 2): each D2 step removes two units.
TEST_CASE("H_n homogeneity")
{
    auto s1 = H_n({9, 9}, Basis::h);
    for (const auto& [e, c] : s1.terms())
        if (e[0] + e[1] <= 10)
            CHECK(c.is_homogeneous(e[0] + e[1]));
    auto s2 = H_n({6, 6, 6}, Basis::h);
    for (const auto& [e, c] : s2.terms())
        if (e[0] + e[1] + e[2] <= 10)
            CHECK(c.is_homogeneous(e[0] + e[1] + e[2] - 1));
    auto s3 = H_n({4, 4, 4, 4}, Basis::h);
    for (const auto& [e, c] : s3.terms())
        if (e[0] + e[1] + e[2] + e[3] <= 10)
            CHECK(c.is_homogeneous(e[0] + e[1] + e[2] + e[3] - 2));
    auto s4 = H_n({5, 5, 5}, Basis::bold_h);
    for (const auto& [e, c] : s4.terms())
        CHECK(c.is_homogeneous(e[0] + e[1] + e[2] - 1));
    CHECK(H_n({1, 1, 1}, Basis::h).coeff({1, 1, 1}) == h(1) * Rational(6));
}

TEST_CASE("H_n symmetry")
{
    for (int n : {3, 4}) {
        std::vector<int> bounds(n, n == 3 ? 5 : 3);
        auto s = H_n(bounds, Basis::h);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i)
            perm[i] = i;
        while (std::next_permutation(perm.begin(), perm.end())) {
            auto p = s.permuted(perm);
            for (const auto& [e, c] : s.terms())
                CHECK(p.coeff(e) == s.coeff(e));
        }
    }
}

TEST_CASE("single coefficient agrees with the full series")
{
    auto s = H_n({4, 4, 4}, Basis::h);
    for (const auto& [e, c] : s.terms())
        CHECK(H_n_coefficient(e, Basis::h) == c);
    CHECK(H_n_coefficient({2, 2}, Basis::h) == two_point(Basis::h, 2, 2).coeff({2, 2}));
}
