#include <doctest.h>

#include <functional>
#include <map>

#include "strata/combinatorics.hpp"
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

using PartsKey = std::vector<BackbonePart>;

// Labeled brute force: every map from the other zeros to k blocks and every
// genus composition, filtered by p >= 1.
std::map<PartsKey, Integer> backbone_oracle(const Signature& mu, int i, int j)
{
    std::vector<int> rest;
    for (int t = 0; t < mu.n(); ++t)
        if (t != i && t != j)
            rest.push_back(mu[t]);
    const int g = mu.genus();
    const int kmax = std::min(mu[i], mu[j]) + 1;
    std::map<PartsKey, Integer> out;
    for (int k = 1; k <= kmax; ++k) {
        std::vector<int> block(rest.size(), 0);
        std::function<void(size_t)> assign = [&](size_t pos) {
            if (pos == rest.size()) {
                std::vector<int> genera(k, 1);
                std::function<void(int, int)> comp = [&](int b, int left) {
                    if (b == k - 1) {
                        genera[b] = left;
                        if (left < 1)
                            return;
                        PartsKey parts(k);
                        for (int x = 0; x < k; ++x) {
                            parts[x].g = genera[x];
                            int size = 0;
                            for (size_t r = 0; r < rest.size(); ++r)
                                if (block[r] == x) {
                                    parts[x].mu.push_back(rest[r]);
                                    size += rest[r];
                                }
                            std::sort(parts[x].mu.rbegin(), parts[x].mu.rend());
                            parts[x].p = 2 * genera[x] - 1 - size;
                            if (parts[x].p < 1)
                                return;
                        }
                        out[parts] += 1;
                        return;
                    }
                    for (int v = 1; v < left; ++v) {
                        genera[b] = v;
                        comp(b + 1, left - v);
                    }
                };
                comp(0, g);
                return;
            }
            for (int x = 0; x < k; ++x) {
                block[pos] = x;
                assign(pos + 1);
            }
        };
        assign(0);
    }
    return out;
}

std::map<PartsKey, Integer> as_map(const std::vector<BackboneDecomposition>& list)
{
    std::map<PartsKey, Integer> out;
    for (const auto& d : list) {
        CHECK(d.k == static_cast<int>(d.parts.size()));
        out[d.parts] += d.multiplicity;
    }
    return out;
}

} // namespace

TEST_CASE("signature parsing")
{
    auto s = Signature::parse("1,3");
    CHECK(s.genus() == 3);
    CHECK(s.n() == 2);
    CHECK(s.canonical().str() == "3,1");
    CHECK(s.str() == "1,3");
    CHECK(Signature::parse("2,2").all_even());
    CHECK(error_code([] { Signature::parse("2,x"); }) == "PARSE_ERROR");
    CHECK(error_code([] { Signature({1}); }) == "ODD_TOTAL");
    CHECK(error_code([] { Signature({3, -1}); }) == "NEGATIVE_ENTRY");
    CHECK(error_code([] { Signature(std::vector<int>{}); }) == "EMPTY_SIGNATURE");
}

TEST_CASE("backbone examples")
{
    auto b11 = enumerate_backbones(Signature({1, 1}), 0, 1);
    REQUIRE(b11.size() == 2);
    CHECK(b11[0].parts == PartsKey{{2, {}, 3}});
    CHECK(b11[1].parts == PartsKey{{1, {}, 1}, {1, {}, 1}});
    // k = 1, the two ordered k = 2 tuples, and the k = 3 tuple of genus-one parts.
    auto b22 = enumerate_backbones(Signature({2, 2}), 0, 1);
    CHECK(b22.size() == 4);
    CHECK(as_map(b22).count(PartsKey{{1, {}, 1}, {1, {}, 1}, {1, {}, 1}}) == 1);
    CHECK(error_code([] { enumerate_backbones(Signature({4}), 0, 1); }) == "TOO_FEW_ZEROS");
}

TEST_CASE("backbones match the labeled oracle")
{
    for (const char* text : {"1,1", "2,2", "3,1", "1,1,1,1", "2,1,1", "2,2,2", "3,1,1,1",
                             "1,1,2,2", "4,2", "0,2", "2,0,0"}) {
        auto mu = Signature::parse(text);
        for (int i = 0; i < mu.n(); ++i)
            for (int j = 0; j < mu.n(); ++j)
                if (i != j)
                    CHECK_MESSAGE(as_map(enumerate_backbones(mu, i, j)) == backbone_oracle(mu, i, j),
                                  text, " pair ", i, ",", j);
    }
}

TEST_CASE("backbone constraints with nonzero Hurwitz factor")
{
    for (const char* text : {"2,2", "3,1", "2,1,1", "3,3", "4,2", "2,2,2"}) {
        auto mu = Signature::parse(text);
        for (const auto& d : enumerate_backbones(mu, 0, 1)) {
            std::vector<int> p;
            int sum = 0;
            for (const auto& part : d.parts) {
                p.push_back(part.p);
                sum += part.p + 1;
            }
            if (h_p1_two(mu[0], mu[1], p).is_zero())
                continue;
            CHECK(sum == mu[0] + mu[1] + 2);
            CHECK(d.k <= std::min(mu[0], mu[1]) + 1);
        }
    }
}

TEST_CASE("backbones are stable under permuting the other zeros")
{
    auto a = as_map(enumerate_backbones(Signature({1, 1, 2, 0}), 0, 1));
    auto b = as_map(enumerate_backbones(Signature({1, 1, 0, 2}), 0, 1));
    CHECK(a == b);
}

TEST_CASE("spin assignments")
{
    CHECK(spin_assignments(1, Parity::odd) == std::vector<std::vector<int>>{{1}});
    auto two = spin_assignments(2, Parity::odd);
    CHECK(two.size() == 2);
    CHECK(std::find(two.begin(), two.end(), std::vector<int>{1, 0}) != two.end());
    CHECK(std::find(two.begin(), two.end(), std::vector<int>{0, 1}) != two.end());
    for (int k = 1; k <= 6; ++k)
        for (Parity par : {Parity::even, Parity::odd}) {
            auto list = spin_assignments(k, par);
            CHECK(list.size() == (1u << (k - 1)));
            for (const auto& a : list) {
                int s = 0;
                for (int x : a)
                    s += x;
                CHECK(s % 2 == static_cast<int>(par));
            }
        }
}

TEST_CASE("configurations")
{
    auto c11 = configurations(Signature({1, 1}), 0, 1);
    REQUIRE(c11.size() == 2);
    CHECK(c11[0].k == 1);
    CHECK(c11[1].k == 2);
    CHECK(c11[1].automorphisms == 2);
    // The two ordered k = 2 tuples merge; the k = 3 class is also present.
    auto c22 = configurations(Signature({2, 2}), 0, 1);
    CHECK(c22.size() == 3);
    for (const char* text : {"2,2", "3,1", "2,1,1", "1,1,1,1"}) {
        auto mu = Signature::parse(text);
        Integer ordered = 0, total = 0;
        for (const auto& c : configurations(mu, 0, 1))
            ordered += c.ordered_count;
        for (const auto& d : enumerate_backbones(mu, 0, 1))
            total += d.multiplicity;
        CHECK(ordered == total);
    }
}

TEST_CASE("rooted trees")
{
    auto trivial = enumerate_rooted_trees({1, 1}, {3});
    CHECK(trivial.size() == 1);
    CHECK(error_code([] { enumerate_rooted_trees({1, 1}, {2}); }) == "INCONSISTENT_PROFILE");
    for (auto [mu0, mu_inf] : std::vector<std::pair<std::vector<int>, std::vector<int>>>{
             {{1, 1, 0}, {3}}, {{1, 1, 0}, {1, 1}}, {{2, 1, 1}, {2, 2}}, {{1, 0, 0, 1}, {1, 1}},
             {{2, 2, 1}, {2, 1, 1}}, {{2, 2, 1}, {1, 4}}}) {
        auto trees = enumerate_rooted_trees(mu0, mu_inf);
        CHECK(!trees.empty());
        for (const auto& t : trees) {
            CHECK(t.parent[0] == -1);
            for (int v = 1; v < t.vertices(); ++v) {
                CHECK(t.twist[v] >= 1);
                CHECK(t.level[t.parent[v]] < t.level[v]);
                // Balancing at a genus-0 vertex with one zero leg.
                int in = mu0[v + 1] + 1 + t.twist[v];
                int out = 0;
                for (int x : t.lower_profile(v, mu_inf))
                    out += x;
                CHECK(in - out == 2 * 0 - 2 + 2 + static_cast<int>(t.lower_profile(v, mu_inf).size()));
            }
        }
    }
}
