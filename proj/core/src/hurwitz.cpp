#include "strata/hurwitz.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

#include "strata/cache.hpp"
#include "strata/combinatorics.hpp"
#include "strata/memo.hpp"

namespace strata {

namespace {

Memo<std::string, Rational>& hp1_memo()
{
    static Memo<std::string, Rational> m;
    return m;
}

void check_profile(const std::vector<int>& mu0, const std::vector<int>& p)
{
    for (int m : mu0)
        if (m < 0)
            throw Error("NEGATIVE_ENTRY", "zero orders must be >= 0");
    for (int x : p)
        if (x < 1)
            throw Error("INCONSISTENT_PROFILE", "pole orders must be >= 1");
}

} // namespace

Rational h_p1_two(int m1, int m2, const std::vector<int>& p)
{
    check_profile({m1, m2}, p);
    int k = static_cast<int>(p.size());
    if (k == 0)
        return 0;
    long s = 0;
    for (int x : p)
        s += x + 1;
    if (s != m1 + m2 + 2)
        return 0;
    // prod (t + t^2 + ... + t^{p_i}), coefficients up to t^{m1+1}
    int top = m1 + 1;
    std::vector<Integer> poly(top + 1, 0);
    poly[0] = 1;
    for (int x : p) {
        std::vector<Integer> next(top + 1, 0);
        for (int e = 0; e <= top; ++e) {
            if (poly[e] == 0)
                continue;
            for (int a = 1; a <= x && e + a <= top; ++a)
                next[e + a] += poly[e];
        }
        poly.swap(next);
    }
    return Rational(factorial(k - 1) * poly[top]);
}

std::string hurwitz_cache_key(const std::vector<int>& mu0, const std::vector<int>& mu_inf)
{
    std::vector<int> tail(mu0.begin() + std::min<size_t>(2, mu0.size()), mu0.end());
    std::sort(tail.rbegin(), tail.rend());
    std::vector<int> p = mu_inf;
    std::sort(p.rbegin(), p.rend());
    std::string s = "hp1|";
    for (size_t i = 0; i < std::min<size_t>(2, mu0.size()); ++i)
        s += (i ? "," : "") + std::to_string(mu0[i]);
    for (int x : tail)
        s += "," + std::to_string(x);
    s += "/";
    for (size_t i = 0; i < p.size(); ++i)
        s += (i ? "," : "") + std::to_string(p[i]);
    return s + "|all";
}

namespace detail {

Rational h_p1_general_uncached(const std::vector<int>& mu0, const std::vector<int>& mu_inf)
{
    check_profile(mu0, mu_inf);
    auto trees = enumerate_rooted_trees(mu0, mu_inf);
    if (mu0.size() == 2)
        return h_p1_two(mu0[0], mu0[1], mu_inf);
    Rational total;
    for (const auto& t : trees) {
        Rational term = h_p1_two(mu0[0], mu0[1], t.lower_profile(0, mu_inf));
        for (int v = 1; v < t.vertices() && !term.is_zero(); ++v)
            term *= h_p1_two(mu0[v + 1], t.twist[v] - 1, t.lower_profile(v, mu_inf));
        total += term;
    }
    return total;
}

void hurwitz_cache_export(CacheEntries& out)
{
    for (const auto& [k, v] : hp1_memo().snapshot())
        out[k] = v;
}

void hurwitz_cache_import(const std::string& key, const Rational& value)
{
    hp1_memo().put(key, value);
}

void hurwitz_cache_clear()
{
    hp1_memo().clear();
}

} // namespace detail

Rational h_p1_general(const std::vector<int>& mu0, const std::vector<int>& mu_inf)
{
    if (mu0.size() < 2)
        throw Error("TOO_FEW_ZEROS", "Hurwitz numbers need at least two zeros");
    check_profile(mu0, mu_inf);
    return hp1_memo().get(hurwitz_cache_key(mu0, mu_inf),
                          [&] { return detail::h_p1_general_uncached(mu0, mu_inf); });
}

namespace {

using Perm = std::array<unsigned char, 8>;

// All L-cycles in S_d (L >= 2), smallest element first.
std::vector<Perm> cycles(int d, int L)
{
    std::vector<Perm> out;
    std::vector<int> seq;
    std::vector<bool> used(d, false);
    std::function<void()> rec = [&] {
        if (static_cast<int>(seq.size()) == L) {
            Perm p;
            for (int x = 0; x < 8; ++x)
                p[x] = static_cast<unsigned char>(x);
            for (int a = 0; a < L; ++a)
                p[seq[a]] = static_cast<unsigned char>(seq[(a + 1) % L]);
            out.push_back(p);
            return;
        }
        for (int x = 0; x < d; ++x) {
            if (used[x] || (!seq.empty() && x < seq[0]))
                continue;
            used[x] = true;
            seq.push_back(x);
            rec();
            seq.pop_back();
            used[x] = false;
        }
    };
    rec();
    return out;
}

int find_root(std::array<int, 8>& uf, int x)
{
    while (uf[x] != x)
        x = uf[x] = uf[uf[x]];
    return x;
}

} // namespace

Rational hurwitz_tuple_oracle(int m1, int m2, const std::vector<int>& p)
{
    check_profile({m1, m2}, p);
    int d = std::accumulate(p.begin(), p.end(), 0);
    if (d > 8)
        throw Error("DEGREE_TOO_LARGE", "oracle is limited to degree 8");
    if (d < 1 || m1 + 1 > d || m2 + 1 > d)
        return 0;
    // A 1-cycle is a choice of one of d fixed points.
    auto family = [&](int L, Integer& weight) {
        if (L == 1) {
            Perm id;
            for (int x = 0; x < 8; ++x)
                id[x] = static_cast<unsigned char>(x);
            weight = d;
            return std::vector<Perm>{id};
        }
        weight = 1;
        return cycles(d, L);
    };
    Integer w1, w2;
    auto c1 = family(m1 + 1, w1);
    auto c2 = family(m2 + 1, w2);
    std::vector<int> target = p;
    std::sort(target.begin(), target.end());

    long count = 0;
    std::vector<int> type;
    for (const auto& s1 : c1)
        for (const auto& s2 : c2) {
            std::array<bool, 8> seen{};
            type.clear();
            for (int x = 0; x < d; ++x) {
                if (seen[x])
                    continue;
                int len = 0, y = x;
                do {
                    seen[y] = true;
                    y = s1[s2[y]];
                    ++len;
                } while (y != x);
                type.push_back(len);
            }
            std::sort(type.begin(), type.end());
            if (type != target)
                continue;
            std::array<int, 8> uf;
            std::iota(uf.begin(), uf.end(), 0);
            for (int x = 0; x < d; ++x) {
                uf[find_root(uf, x)] = find_root(uf, s1[x]);
                uf[find_root(uf, x)] = find_root(uf, s2[x]);
            }
            int r = find_root(uf, 0);
            bool transitive = true;
            for (int x = 1; x < d; ++x)
                if (find_root(uf, x) != r)
                    transitive = false;
            if (transitive)
                ++count;
        }
    return Rational(Integer(count) * w1 * w2, factorial(d));
}

} // namespace strata
