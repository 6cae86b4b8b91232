#include <doctest.h>

#include <random>

#include "strata/series.hpp"

using strata::LaurentSeries;
using strata::Rational;

namespace {

template <class F>
std::string error_code(F&& f)
{
    try {
        f();
    } catch (const strata::Error& e) {
        return e.code();
    }
    return "";
}

LaurentSeries random_unit_series(std::mt19937& rng, int N)
{
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    std::vector<Rational> c(N);
    c[0] = 1;
    for (int i = 1; i < N; ++i)
        c[i] = Rational(num(rng), den(rng));
    return LaurentSeries(1, c);
}

} // namespace

TEST_CASE("basic series arithmetic")
{
    const int N = 10;
    auto z = LaurentSeries::var(N);
    auto one = LaurentSeries::one(N);
    auto g = (one - z).inverse();
    for (int e = 0; e <= N; ++e)
        CHECK(g.coeff(e) == 1);
    auto l = (one + z).log();
    CHECK(l.coeff(3) == Rational(1, 3));
    CHECK((l.exp() - one - z).valuation() > N);
    auto laurent = LaurentSeries(-1, {Rational(1), Rational(0), Rational(-1, 24)}).truncate(1);
    CHECK((laurent * laurent).coeff(-2) == 1);
    CHECK((laurent * laurent).coeff(0) == Rational(-1, 12));
}

TEST_CASE("series errors")
{
    auto z = LaurentSeries::var(5);
    CHECK(error_code([&] { (void)z.coeff(6); }) == "TRUNCATED");
    CHECK(error_code([&] { (void)LaurentSeries::zero(5).inverse(); }) == "NOT_INVERTIBLE");
    CHECK(error_code([&] { (void)(LaurentSeries::one(5) + z).exp(); }) == "BAD_VALUATION");
    CHECK(error_code([&] { (void)(LaurentSeries::one(5) + z).revert(); }) == "BAD_VALUATION");
}

TEST_CASE("reversion round trip")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        auto F = random_unit_series(rng, 12);
        auto G = F.revert();
        auto id = F.compose(G);
        auto z = LaurentSeries::var(id.trunc_order());
        CHECK((id - z).valuation() > id.trunc_order());
        auto id2 = G.compose(F);
        CHECK((id2 - LaurentSeries::var(id2.trunc_order())).valuation() > id2.trunc_order());
    }
    auto F = LaurentSeries(1, {Rational(1), Rational(0), Rational(-1, 24)});
    auto G = F.revert();
    CHECK(G.coeff(3) == Rational(1, 24));
}

TEST_CASE("b table")
{
    auto b = strata::b_table(12);
    CHECK(b[0] == 1);
    CHECK(b[2] == Rational(-1, 24));
    CHECK(b[4] == Rational(7, 5760));
    for (int l = 1; l <= 11; l += 2) {
        CHECK(b[l] == 0);
        Rational lhs = Rational(strata::factorial(l)) * b[l + 1];
        Rational rhs = (Rational(1) - Rational(1, 2).pow(l)) * strata::zeta_neg(l);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("alpha anchors")
{
    auto a = strata::alpha_table(8);
    CHECK(a[0] == Rational(-1, 24));
    CHECK(a[2] == Rational(3, 640));
    CHECK(a[4] == Rational(-1525, 580608));
    CHECK(a[6] == Rational(615881, 199065600));
    for (int l = 2; l <= 8; l += 2)
        CHECK(a[l - 1] == 0);
    auto A = strata::A_series(7);
    CHECK(A.coeff(-1) == 1);
    CHECK(A.coeff(5) == Rational(-1525, 580608));
    CHECK(strata::lagrange_consistency_check(9));
    auto bold = strata::bold_alpha_table(3);
    CHECK(bold[0] == -strata::PZ_series(2).coeff(2));
    CHECK(bold[1] == 0);
}

TEST_CASE("auxiliary series")
{
    auto pz = strata::PZ_series(6);
    CHECK(pz.coeff(2) == Rational(-1, 24));
    CHECK(pz.coeff(3) == 0);
    auto q = strata::Q_series(5);
    CHECK(q.coeff(1) == 1);
    CHECK(q.coeff(2) == 0);
    CHECK(q.coeff(3) == Rational(-1, 24));
    auto pb = strata::PB_series(4);
    CHECK(pb.coeff(0) == 1);
    CHECK(pb.coeff(2) == Rational(1, 24));
    CHECK(pb.coeff(3) == 0);
}

TEST_CASE("delta series")
{
    auto d = strata::delta_series(8);
    CHECK(d.coeff(2) == Rational(1, 2));
    CHECK(d.coeff(4) == Rational(-1, 16));
    CHECK(d.coeff(6) == Rational(91, 2304));
    // Independent symbolic solve of the defining system.
    CHECK(d.coeff(8) == Rational(-41737, 829440));
    for (int e = 1; e <= 7; e += 2)
        CHECK(d.coeff(e) == 0);
}

TEST_CASE("delta defining identity")
{
    const int N = 14;
    auto delta = strata::delta_series(N);
    auto A = strata::A_series(N + 2);
    auto b = strata::b_table(N);
    for (int j = 1; j <= N - 1; ++j) {
        auto prod = delta * A.pow(j);
        Rational lhs = Rational(2) / Rational(strata::factorial(j)) * prod.coeff(1);
        CHECK(lhs == b[j - 1]);
    }
}

TEST_CASE("D series")
{
    auto D = strata::d_min_series(9);
    auto delta = strata::delta_series(10);
    CHECK(D.coeff(1) == 1);
    CHECK(D.coeff(3) == Rational(-1, 8));
    CHECK(D.coeff(5) == Rational(91, 1152));
    for (int e = 1; e <= 9; e += 2)
        CHECK(D.coeff(e) == Rational(2) * delta.coeff(e + 1));
}
