#include <doctest.h>

#include "strata/cache.hpp"
#include "strata/hurwitz.hpp"
#include "strata/siegel_veech.hpp"
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

} // namespace

TEST_CASE("export, clear and import")
{
    clear_caches();
    auto mu = Signature::parse("2,2");
    PiScalar v = v_stratum(mu);
    Rational d = d_value(mu);
    Rational a = a_value(mu);
    (void)h_p1_two(2, 2, {2, 2});
    auto entries = export_cache();
    CHECK(entries.at("v|2,2|all") == Rational(17, 5600));
    CHECK(entries.count("d|2,2|all") == 1);
    CHECK(entries.count("a|2,2|all") == 1);

    clear_caches();
    CHECK(export_cache().empty());
    import_cache(entries);
    CHECK(export_cache() == entries);
    CHECK(v_stratum(mu) == v);
    CHECK(d_value(mu) == d);
    CHECK(a_value(mu) == a);
}

TEST_CASE("imported values are used")
{
    clear_caches();
    import_cache({{"v|3,1|all", Rational(7)}});
    CHECK(v_stratum(Signature::parse("1,3")).coeff == 7);
    clear_caches();
    CHECK(v_stratum(Signature::parse("1,3")).coeff == Rational(128, 42525));
}

TEST_CASE("bad keys")
{
    CHECK(error_code([] { import_cache({{"zzz|2|all", Rational(1)}}); }) == "UNKNOWN_CACHE_KEY");
    CHECK(error_code([] { import_cache({{"v|2", Rational(1)}}); }) == "UNKNOWN_CACHE_KEY");
    clear_caches();
}
