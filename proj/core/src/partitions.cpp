#include "strata/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "strata/memo.hpp"

namespace strata {

namespace {

void check_partition(const Partition& p)
{
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1)
            throw Error("BAD_PARTITION", "parts must be positive");
        if (i && p[i] > p[i - 1])
            throw Error("BAD_PARTITION", "parts must be weakly decreasing");
    }
}

void build_partitions(int left, int maxpart, Partition& cur, std::vector<Partition>& out)
{
    if (left == 0) {
        out.push_back(cur);
        return;
    }
    for (int x = std::min(left, maxpart); x >= 1; --x) {
        cur.push_back(x);
        build_partitions(left - x, x, cur, out);
        cur.pop_back();
    }
}

Integer character_rec(const Partition& lambda, const Partition& rho, size_t next)
{
    if (next == rho.size())
        return lambda.empty() ? 1 : 0;
    int r = rho[next];
    int L = static_cast<int>(lambda.size());
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i)
        beta[i] = lambda[i] + (L - 1 - i);
    Integer total = 0;
    for (int i = 0; i < L; ++i) {
        int target = beta[i] - r;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end())
            continue;
        int between = 0;
        for (int b : beta)
            if (b > target && b < beta[i])
                ++between;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        Partition mu;
        for (int k = 0; k < L; ++k) {
            int part = nb[k] - (L - 1 - k);
            if (part > 0)
                mu.push_back(part);
        }
        Integer sub = character_rec(mu, rho, next + 1);
        total += (between % 2 ? -sub : sub);
    }
    return total;
}

Memo<std::pair<Partition, Partition>, Integer>& character_memo()
{
    static Memo<std::pair<Partition, Partition>, Integer> m;
    return m;
}

// All set partitions of {0..k-1} as lists of blocks.
void set_partitions(int k, int i, std::vector<std::vector<int>>& cur,
                    std::vector<std::vector<std::vector<int>>>& out)
{
    if (i == k) {
        out.push_back(cur);
        return;
    }
    for (size_t b = 0; b < cur.size(); ++b) {
        cur[b].push_back(i);
        set_partitions(k, i + 1, cur, out);
        cur[b].pop_back();
    }
    cur.push_back({i});
    set_partitions(k, i + 1, cur, out);
    cur.pop_back();
}

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b)
{
    Perm c(a.size());
    for (size_t x = 0; x < a.size(); ++x)
        c[x] = a[b[x]];
    return c;
}

Perm inverse(const Perm& a)
{
    Perm c(a.size());
    for (size_t x = 0; x < a.size(); ++x)
        c[a[x]] = static_cast<int>(x);
    return c;
}

std::vector<int> cycle_type(const Perm& a)
{
    std::vector<int> type;
    std::vector<bool> seen(a.size(), false);
    for (size_t x = 0; x < a.size(); ++x) {
        if (seen[x])
            continue;
        int len = 0;
        for (size_t y = x; !seen[y]; y = a[y]) {
            seen[y] = true;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

// Ways to read a as marked cycles of type rho with all unmarked cycles fixed points.
Integer marking_weight(const Perm& a, const Partition& rho)
{
    std::vector<int> type = cycle_type(a);
    std::vector<int> big_a, big_rho;
    int fixed = 0, marked_fixed = 0;
    for (int c : type)
        c > 1 ? big_a.push_back(c) : void(++fixed);
    for (int c : rho)
        c > 1 ? big_rho.push_back(c) : void(++marked_fixed);
    if (big_a != big_rho || marked_fixed > fixed)
        return 0;
    return binomial(fixed, marked_fixed);
}

// S_d with a multiplication table and the pairs (a, b) bucketed by a b a^-1 b^-1.
struct SymmetricGroup {
    std::vector<Perm> perms;
    std::map<Perm, int> index;
    std::vector<int> mult; // mult[a * N + b] = index of a*b
    std::vector<int> inv;
    std::vector<std::vector<std::pair<int, int>>> by_commutator;

    int size() const { return static_cast<int>(perms.size()); }
    int times(int a, int b) const { return mult[a * size() + b]; }
};

const SymmetricGroup& symmetric_group(int d)
{
    static std::mutex mu;
    static std::map<int, SymmetricGroup> groups;
    std::lock_guard lock(mu);
    auto it = groups.find(d);
    if (it != groups.end())
        return it->second;
    SymmetricGroup G;
    Perm p(d);
    std::iota(p.begin(), p.end(), 0);
    do {
        G.index[p] = static_cast<int>(G.perms.size());
        G.perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    int N = G.size();
    G.mult.resize(static_cast<size_t>(N) * N);
    G.inv.resize(N);
    for (int a = 0; a < N; ++a) {
        G.inv[a] = G.index.at(inverse(G.perms[a]));
        for (int b = 0; b < N; ++b)
            G.mult[a * N + b] = G.index.at(compose(G.perms[a], G.perms[b]));
    }
    G.by_commutator.resize(N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            G.by_commutator[G.times(G.times(a, b), G.times(G.inv[a], G.inv[b]))].emplace_back(a, b);
    return groups.emplace(d, std::move(G)).first->second;
}

int find_root(std::vector<int>& uf, int x)
{
    while (uf[x] != x)
        x = uf[x] = uf[uf[x]];
    return x;
}

bool transitive(const std::vector<const Perm*>& gens, int d)
{
    std::vector<int> uf(d);
    std::iota(uf.begin(), uf.end(), 0);
    for (const Perm* g : gens)
        for (int x = 0; x < d; ++x)
            uf[find_root(uf, x)] = find_root(uf, (*g)[x]);
    int r = find_root(uf, 0);
    for (int x = 1; x < d; ++x)
        if (find_root(uf, x) != r)
            return false;
    return true;
}

} // namespace

const std::vector<Partition>& partitions_of(int n)
{
    if (n < 0)
        throw Error("BAD_SIZE", "partition size must be >= 0");
    static std::mutex mu;
    static std::map<int, std::vector<Partition>> table;
    std::lock_guard lock(mu);
    auto it = table.find(n);
    if (it != table.end())
        return it->second;
    std::vector<Partition> out;
    Partition cur;
    build_partitions(n, n, cur, out);
    return table.emplace(n, std::move(out)).first->second;
}

int partition_size(const Partition& lambda)
{
    return std::accumulate(lambda.begin(), lambda.end(), 0);
}

Rational p_eval(int l, const Partition& lambda)
{
    if (l < 1)
        throw Error("BAD_INDEX", "p_l needs l >= 1");
    check_partition(lambda);
    Rational half(1, 2);
    Rational total;
    for (size_t k = 0; k < lambda.size(); ++k) {
        long i = static_cast<long>(k) + 1;
        total += (Rational(lambda[k] - i) + half).pow(l) - (Rational(-i) + half).pow(l);
    }
    Rational constant = (Rational(1) - Rational(2).pow(-l)) * zeta_neg(static_cast<unsigned>(l));
    return total + constant;
}

Integer mn_character(const Partition& lambda, const Partition& rho)
{
    check_partition(lambda);
    for (int r : rho)
        if (r < 1)
            throw Error("BAD_PARTITION", "cycle lengths must be positive");
    if (partition_size(lambda) != partition_size(rho))
        throw Error("SIZE_MISMATCH", "|lambda| must equal |rho|");
    Partition sorted = rho;
    std::sort(sorted.rbegin(), sorted.rend());
    return character_memo().get({lambda, sorted}, [&] { return character_rec(lambda, sorted, 0); });
}

Integer dimension(const Partition& lambda)
{
    check_partition(lambda);
    int n = partition_size(lambda);
    Integer hooks = 1;
    for (size_t i = 0; i < lambda.size(); ++i)
        for (int j = 0; j < lambda[i]; ++j) {
            int arm = lambda[i] - j - 1;
            int leg = 0;
            for (size_t k = i + 1; k < lambda.size() && lambda[k] > j; ++k)
                ++leg;
            hooks *= arm + leg + 1;
        }
    return factorial(n) / hooks;
}

Rational f_class_eval(const Partition& rho, const Partition& lambda)
{
    int d = partition_size(lambda);
    int r = partition_size(rho);
    if (r > d)
        return 0;
    Partition full = rho;
    full.insert(full.end(), d - r, 1);
    Integer denom = factorial(d - r);
    std::map<int, int> mult;
    for (int x : rho) {
        denom *= x;
        ++mult[x];
    }
    for (const auto& [x, m] : mult)
        denom *= factorial(m);
    Rational z(factorial(d), denom);
    return z * Rational(mn_character(lambda, full), dimension(lambda));
}

Rational f_eval(int l, const Partition& lambda)
{
    if (l < 1)
        throw Error("BAD_INDEX", "f_l needs l >= 1");
    return f_class_eval({l}, lambda);
}

LaurentSeries q_bracket(const PartitionFunction& f, int D)
{
    if (D < 0 || D > 20)
        throw Error("BAD_ORDER", "q-brackets are limited to order 20");
    std::vector<Rational> num(D + 1), den(D + 1);
    for (int n = 0; n <= D; ++n)
        for (const auto& lambda : partitions_of(n)) {
            num[n] += f(lambda);
            den[n] += 1;
        }
    return LaurentSeries(0, num) * LaurentSeries(0, den).inverse();
}

LaurentSeries connected_bracket(const std::vector<PartitionFunction>& fs, int D)
{
    int k = static_cast<int>(fs.size());
    if (k < 1 || k > 4)
        throw Error("BAD_ARITY", "connected brackets take 1 to 4 functions");
    if (D < 0 || D > 16)
        throw Error("BAD_ORDER", "connected brackets are limited to order 16");
    std::vector<std::vector<std::vector<int>>> all;
    std::vector<std::vector<int>> cur;
    set_partitions(k, 0, cur, all);

    std::map<std::vector<int>, LaurentSeries> block_cache;
    auto block = [&](const std::vector<int>& b) -> const LaurentSeries& {
        auto it = block_cache.find(b);
        if (it != block_cache.end())
            return it->second;
        PartitionFunction prod = [&fs, b](const Partition& lambda) {
            Rational v = 1;
            for (int i : b)
                v *= fs[i](lambda);
            return v;
        };
        return block_cache.emplace(b, q_bracket(prod, D)).first->second;
    };

    LaurentSeries total = LaurentSeries::zero(D);
    for (const auto& sp : all) {
        int l = static_cast<int>(sp.size());
        LaurentSeries term = LaurentSeries::one(D);
        for (const auto& b : sp)
            term = term * block(b);
        Rational w = Rational(factorial(l - 1)) * Rational(l % 2 ? 1 : -1);
        total = total + term.scaled(w);
    }
    return total;
}

Rational count_covers_brute(const std::vector<Partition>& profile, int d, bool connected)
{
    if (d > 6)
        throw Error("DEGREE_TOO_LARGE", "brute-force cover counts are limited to degree 6");
    if (d < 1)
        throw Error("BAD_SIZE", "degree must be >= 1");
    for (const auto& rho : profile) {
        check_partition(rho);
        if (partition_size(rho) > d)
            return 0;
    }
    const SymmetricGroup& G = symmetric_group(d);
    int N = G.size();

    // Weighted choices for each g_i.
    std::vector<std::vector<std::pair<int, Integer>>> choices(profile.size());
    for (size_t i = 0; i < profile.size(); ++i) {
        for (int a = 0; a < N; ++a) {
            Integer w = marking_weight(G.perms[a], profile[i]);
            if (w != 0)
                choices[i].emplace_back(a, w);
        }
        if (choices[i].empty())
            return 0;
    }

    Integer count = 0;
    std::vector<size_t> pick(profile.size(), 0);
    std::vector<const Perm*> gens;
    while (true) {
        int prod = 0; // identity is the first permutation
        Integer w = 1;
        gens.clear();
        for (size_t i = 0; i < profile.size(); ++i) {
            const auto& [a, wa] = choices[i][pick[i]];
            prod = G.times(prod, a);
            w *= wa;
            gens.push_back(&G.perms[a]);
        }
        const auto& pairs = G.by_commutator[prod];
        if (!connected) {
            count += w * static_cast<long>(pairs.size());
        } else {
            long t = 0;
            size_t base = gens.size();
            for (const auto& [a, b] : pairs) {
                gens.resize(base);
                gens.push_back(&G.perms[a]);
                gens.push_back(&G.perms[b]);
                if (transitive(gens, d))
                    ++t;
            }
            count += w * t;
        }
        size_t i = 0;
        while (i < profile.size() && ++pick[i] == choices[i].size()) {
            pick[i] = 0;
            ++i;
        }
        if (i == profile.size())
            break;
    }
    return Rational(count, factorial(d));
}

Rational count_covers_character(const std::vector<Partition>& profile, int d)
{
    Rational total;
    for (const auto& lambda : partitions_of(d)) {
        Rational prod = 1;
        for (const auto& rho : profile)
            prod *= f_class_eval(rho, lambda);
        total += prod;
    }
    return total;
}

Rational count_covers_connected_character(const std::vector<Partition>& profile, int d)
{
    std::vector<PartitionFunction> fs;
    for (const auto& rho : profile)
        fs.push_back([rho](const Partition& lambda) { return f_class_eval(rho, lambda); });
    if (fs.empty())
        throw Error("BAD_ARITY", "connected counts need at least one ramification profile");
    return connected_bracket(fs, d).coeff(d);
}

} // namespace strata
