#include <doctest.h>

#include "strata/volumes.hpp"

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

Signature S(const char* text) { return Signature::parse(text); }
PiScalar P(long num, long den, int pow) { return PiScalar(Rational(num, den), pow); }

} // namespace

TEST_CASE("volume anchors")
{
    CHECK(v_stratum(S("0")) == P(1, 3, 2));
    CHECK(v_stratum(S("2")) == P(1, 40, 4));
    CHECK(v_stratum(S("1,1")) == P(4, 135, 4));
    CHECK(v_stratum(S("4")) == P(305, 108864, 6));
    CHECK(v_stratum(S("3,1")) == P(128, 42525, 6));
    // Includes the k = 3 backbone term.
    CHECK(v_stratum(S("2,2")) == P(17, 5600, 6));
    CHECK(v_stratum(S("2,1,1")) == P(1, 315, 6));
    CHECK(v_stratum(S("1,1,1,1")) == P(4, 1215, 6));
    CHECK(v_stratum(S("3,3")) == P(1472, 4465125, 8));
    CHECK(v_minimal(2) == v_stratum(S("2")));
}

TEST_CASE("a values")
{
    CHECK(a_value(S("4")) == Rational(-61, 580608));
    CHECK(a_value(S("2,2")) == Rational(-17, 53760));
    for (const char* text : {"2", "1,1", "4", "3,1", "2,2", "2,1,1", "1,1,1,1"})
        CHECK(a_value(S(text)) == a_value_d2(S(text)));
}

TEST_CASE("dual recursion equivalence")
{
    for (int g = 2; g <= 4; ++g)
        for (const auto& mu : strata_of_genus(g))
            if (mu.n() <= 4)
                CHECK_MESSAGE(v_stratum(mu) == v_stratum_d2(mu), mu.str());
}

TEST_CASE("distinguished pair independence")
{
    for (const char* text : {"3,1", "2,1,1", "1,1,1,1", "4,2", "3,2,1", "2,2,2"}) {
        auto mu = S(text);
        for (int i = 0; i < mu.n(); ++i)
            for (int j = i + 1; j < mu.n(); ++j)
                CHECK_MESSAGE(v_stratum_pair(mu, i, j) == v_stratum(mu), text, " ", i, j);
    }
}

TEST_CASE("order and marked points")
{
    CHECK(v_stratum(S("1,3")) == v_stratum(S("3,1")));
    CHECK(v_stratum(S("1,2,1")) == v_stratum(S("2,1,1")));
    CHECK(v_stratum(S("2,0")).coeff.sign() > 0);
}

TEST_CASE("positivity")
{
    for (int g = 1; g <= 4; ++g)
        for (const auto& mu : strata_of_genus(g))
            CHECK(v_stratum(mu).coeff.sign() > 0);
}

TEST_CASE("spin components")
{
    const long num[] = {-1, -1, -143, -15697, -2561};
    const long den[] = {3, 40, 108864, 279936000, 1103872000};
    for (int g = 1; g <= 5; ++g) {
        auto mu = Signature({2 * g - 2});
        CHECK(v_spin_delta(mu) == P(num[g - 1], den[g - 1], 2 * g));
    }
    CHECK(v_spin(S("4"), Parity::even) == P(1, 1344, 6));
    for (const char* text : {"4", "2,2", "6", "4,2", "2,2,2"}) {
        auto mu = S(text);
        auto even = v_spin(mu, Parity::even);
        auto odd = v_spin(mu, Parity::odd);
        CHECK(even + odd == v_stratum(mu));
        CHECK(even.coeff.sign() >= 0);
        CHECK(odd.coeff.sign() > 0);
        CHECK(v_spin_backbone_check(mu));
    }
    CHECK(error_code([] { v_spin_delta(Signature({1, 1})); }) == "ODD_ENTRY");
}

TEST_CASE("hyperelliptic components")
{
    CHECK(v_hyp(S("2")) == v_stratum(S("2")));
    CHECK(v_hyp(S("1,1")) == v_stratum(S("1,1")));
    for (int g = 3; g <= 6; ++g) {
        CHECK(cmp_abs(v_hyp(Signature({2 * g - 2})), v_stratum(Signature({2 * g - 2}))) < 0);
        CHECK(cmp_abs(v_hyp(Signature({g - 1, g - 1})), v_stratum(Signature({g - 1, g - 1}))) < 0);
    }
    for (int g = 2; g <= 6; ++g)
        CHECK(hyp_recursion_check(g));
    CHECK(arctan_identity_check(1, 20));
    CHECK(arctan_identity_check(2, 20));
    CHECK(error_code([] { v_hyp(Signature({2, 1, 1})); }) == "NOT_HYPERELLIPTIC_SHAPE");
}

TEST_CASE("components")
{
    auto mu = S("4");
    CHECK(v_component(mu, "all") == v_stratum(mu));
    CHECK(v_component(mu, "even") + v_component(mu, "odd") == v_stratum(mu));
    CHECK(v_component(mu, "hyp") == v_hyp(mu));
    CHECK(error_code([&] { v_component(mu, "green"); }) == "BAD_COMPONENT");
}

TEST_CASE("strata of genus")
{
    CHECK(strata_of_genus(1) == std::vector<Signature>{S("0")});
    CHECK(strata_of_genus(2) == std::vector<Signature>{S("2"), S("1,1")});
    CHECK(strata_of_genus(3).size() == 5);
    CHECK(strata_of_genus(4).size() == 11);
}

TEST_CASE("asymptotic report")
{
    auto rows = asymptotic_report({S("2"), S("1,1")});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].v == doctest::Approx(2.43523).epsilon(1e-5));
    CHECK(rows[0].monotone);
    CHECK(rows[0].g2_v_hat == doctest::Approx(4 * rows[0].v_hat));
}
