#include <doctest.h>

#include <algorithm>

#include "strata/hurwitz.hpp"

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

// Partitions of d into parts >= 1, weakly decreasing.
void partitions(int d, int max, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (d == 0) {
        out.push_back(cur);
        return;
    }
    for (int x = std::min(d, max); x >= 1; --x) {
        cur.push_back(x);
        partitions(d - x, x, cur, out);
        cur.pop_back();
    }
}

} // namespace

TEST_CASE("two-zero examples")
{
    CHECK(h_p1_two(1, 1, {3}) == 1);
    CHECK(h_p1_two(2, 2, {2, 2}) == 2);
    CHECK(h_p1_two(1, 1, {2}) == 0);
    CHECK(h_p1_two(1, 1, {1, 1}) == 1);
    for (int m1 = 0; m1 <= 5; ++m1)
        for (int m2 = 0; m2 <= 5; ++m2)
            CHECK(h_p1_two(m1, m2, {m1 + m2 + 1}) == 1);
}

TEST_CASE("tuple oracle examples")
{
    CHECK(hurwitz_tuple_oracle(1, 1, {3}) == 1);
    CHECK(hurwitz_tuple_oracle(1, 1, {1, 1}) == Rational(1, 2));
    CHECK(hurwitz_tuple_oracle(2, 2, {1, 3}) == 1);
    CHECK(error_code([] { hurwitz_tuple_oracle(4, 4, {9}); }) == "DEGREE_TOO_LARGE");
}

TEST_CASE("closed formula matches the oracle on distinct pole orders")
{
    int compared = 0;
    for (int d = 1; d <= 7; ++d) {
        std::vector<std::vector<int>> list;
        std::vector<int> cur;
        partitions(d, d, cur, list);
        for (const auto& p : list) {
            if (std::adjacent_find(p.begin(), p.end()) != p.end())
                continue;
            int k = static_cast<int>(p.size());
            int total = d + k - 2;
            for (int m1 = 0; m1 <= total; ++m1) {
                int m2 = total - m1;
                if (m1 + 1 > d || m2 + 1 > d)
                    continue;
                CHECK_MESSAGE(h_p1_two(m1, m2, p) == hurwitz_tuple_oracle(m1, m2, p),
                              m1, ",", m2, " d=", d);
                ++compared;
            }
        }
    }
    CHECK(compared > 20);
}

TEST_CASE("two-zero symmetry and vanishing")
{
    for (int m1 = 0; m1 <= 10; ++m1)
        for (int m2 = 0; m1 + m2 <= 10; ++m2) {
            int total = m1 + m2 + 2;
            std::vector<std::vector<int>> list;
            std::vector<int> cur;
            for (int d = 1; d <= total; ++d) {
                list.clear();
                partitions(d, d, cur, list);
                for (auto p : list) {
                    Rational v = h_p1_two(m1, m2, p);
                    CHECK(v == h_p1_two(m2, m1, p));
                    std::reverse(p.begin(), p.end());
                    CHECK(v == h_p1_two(m1, m2, p));
                    int k = static_cast<int>(p.size());
                    if (!v.is_zero()) {
                        CHECK(k <= std::min(m1, m2) + 1);
                        CHECK(d + k == total);
                    }
                }
            }
        }
}

TEST_CASE("rooted tree recursion")
{
    CHECK(h_p1_general({1, 1}, {3}) == h_p1_two(1, 1, {3}));
    CHECK(h_p1_general({2, 2}, {2, 2}) == 2);
    CHECK(error_code([] { h_p1_general({1, 1}, {2}); }) == "INCONSISTENT_PROFILE");
    CHECK(h_p1_general({2, 1, 0, 1}, {1, 3}) == h_p1_general({2, 1, 1, 0}, {3, 1}));
    CHECK(h_p1_general({1, 2, 1, 1}, {1, 4}) == h_p1_general({1, 2, 1, 1}, {4, 1}));
    CHECK(h_p1_general({2, 1, 0, 2}, {1, 1, 2}) == h_p1_general({2, 1, 2, 0}, {2, 1, 1}));
    CHECK(h_p1_general({1, 1, 0}, {3}).sign() > 0);
}

TEST_CASE("cache keys")
{
    CHECK(hurwitz_cache_key({2, 1, 3, 0}, {3, 1}) == "hp1|2,1,3,0/3,1|all");
}
