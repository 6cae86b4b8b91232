#include "strata/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace strata {

Signature::Signature(std::vector<int> entries) : m_(std::move(entries))
{
    if (m_.empty())
        throw Error("EMPTY_SIGNATURE", "a signature needs at least one entry");
    for (int m : m_)
        if (m < 0)
            throw Error("NEGATIVE_ENTRY", "zero orders must be >= 0");
    if (total() % 2 != 0)
        throw Error("ODD_TOTAL", "zero orders must sum to an even number");
}

Signature Signature::parse(const std::string& text)
{
    std::vector<int> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789 ") != std::string::npos)
            throw Error("PARSE_ERROR", "bad signature '" + text + "'");
        v.push_back(std::stoi(item));
    }
    return Signature(v);
}

int Signature::total() const
{
    return std::accumulate(m_.begin(), m_.end(), 0);
}

Signature Signature::canonical() const
{
    std::vector<int> v = m_;
    std::sort(v.rbegin(), v.rend());
    return Signature(v);
}

bool Signature::all_even() const
{
    return std::all_of(m_.begin(), m_.end(), [](int m) { return m % 2 == 0; });
}

std::string Signature::str() const
{
    std::string s;
    for (size_t i = 0; i < m_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(m_[i]);
    }
    return s;
}

Signature BackbonePart::stratum() const
{
    std::vector<int> v = mu;
    v.push_back(p - 1);
    std::sort(v.rbegin(), v.rend());
    return Signature(v);
}

namespace {

// All compositions of `total` into k parts, each >= lo, in lexicographic order.
void compositions(int total, int k, int lo, std::vector<std::vector<int>>& out)
{
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int slots) {
        if (slots == 1) {
            if (left >= lo) {
                cur.push_back(left);
                out.push_back(cur);
                cur.pop_back();
            }
            return;
        }
        for (int x = lo; x <= left - lo * (slots - 1); ++x) {
            cur.push_back(x);
            rec(left - x, slots - 1);
            cur.pop_back();
        }
    };
    if (k >= 1)
        rec(total, k);
}

} // namespace

std::vector<BackboneDecomposition> enumerate_backbones(const Signature& mu, int i, int j)
{
    int n = mu.n();
    if (n < 2)
        throw Error("TOO_FEW_ZEROS", "backbone decompositions need two distinguished zeros");
    if (i == j || i < 0 || j < 0 || i >= n || j >= n)
        throw Error("BAD_INDEX", "distinguished indices must be distinct and in range");

    std::map<int, int, std::greater<int>> groups;
    for (int t = 0; t < n; ++t)
        if (t != i && t != j)
            ++groups[mu[t]];
    std::vector<std::pair<int, int>> vals(groups.begin(), groups.end());

    int g = mu.genus();
    int kmax = std::min({mu[i] + 1, mu[j] + 1, g});
    std::vector<BackboneDecomposition> out;
    for (int k = 1; k <= kmax; ++k) {
        std::vector<std::vector<int>> genera;
        compositions(g, k, 1, genera);
        // per value group: ways to split its count over the k blocks
        std::vector<std::vector<std::vector<int>>> splits(vals.size());
        for (size_t v = 0; v < vals.size(); ++v)
            compositions(vals[v].second, k, 0, splits[v]);

        for (const auto& gs : genera) {
            std::vector<size_t> pick(vals.size(), 0);
            while (true) {
                BackboneDecomposition d;
                d.k = k;
                d.parts.resize(k);
                Integer mult = 1;
                for (size_t v = 0; v < vals.size(); ++v) {
                    const auto& sp = splits[v][pick[v]];
                    mult *= factorial(vals[v].second);
                    for (int b = 0; b < k; ++b) {
                        mult /= factorial(sp[b]);
                        for (int c = 0; c < sp[b]; ++c)
                            d.parts[b].mu.push_back(vals[v].first);
                    }
                }
                bool ok = true;
                for (int b = 0; b < k; ++b) {
                    auto& part = d.parts[b];
                    part.g = gs[b];
                    int s = std::accumulate(part.mu.begin(), part.mu.end(), 0);
                    part.p = 2 * part.g - 1 - s;
                    if (part.p < 1)
                        ok = false;
                }
                if (ok) {
                    d.multiplicity = mult;
                    out.push_back(std::move(d));
                }
                size_t v = 0;
                while (v < vals.size() && ++pick[v] == splits[v].size()) {
                    pick[v] = 0;
                    ++v;
                }
                if (v == vals.size())
                    break;
            }
        }
    }
    return out;
}

std::vector<int> RootedTree::children(int v) const
{
    std::vector<int> c;
    for (int u = 0; u < vertices(); ++u)
        if (parent[u] == v)
            c.push_back(u);
    return c;
}

std::vector<int> RootedTree::lower_profile(int v, const std::vector<int>& mu_inf) const
{
    std::vector<int> prof;
    for (size_t q = 0; q < pole_vertex.size(); ++q)
        if (pole_vertex[q] == v)
            prof.push_back(mu_inf[q]);
    for (int c : children(v))
        prof.push_back(twist[c]);
    return prof;
}

std::vector<RootedTree> enumerate_rooted_trees(const std::vector<int>& mu0,
                                               const std::vector<int>& mu_inf)
{
    int n = static_cast<int>(mu0.size());
    if (n < 2)
        throw Error("TOO_FEW_ZEROS", "rooted trees need at least two zeros");
    long balance = 0;
    for (int m : mu0)
        balance += m;
    for (int p : mu_inf) {
        if (p < 1)
            throw Error("INCONSISTENT_PROFILE", "pole orders must be >= 1");
        balance -= p + 1;
    }
    if (balance != -2)
        throw Error("INCONSISTENT_PROFILE", "genus-0 degree condition fails");

    int V = n - 1;
    int k = static_cast<int>(mu_inf.size());
    std::vector<RootedTree> out;
    std::vector<int> parent(V, -1);

    auto depth_order = [&](const std::vector<int>& par, std::vector<int>& order) {
        std::vector<int> depth(V, 0);
        for (int v = 1; v < V; ++v) {
            int d = 0, u = v;
            while (u != 0) {
                u = par[u];
                if (++d > V)
                    return false;
            }
            depth[v] = d;
        }
        order.resize(V);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return depth[a] > depth[b]; });
        return true;
    };

    std::function<void(int)> rec_parent = [&](int v) {
        if (v == V) {
            std::vector<int> order;
            if (!depth_order(parent, order))
                return;
            std::vector<int> poles(k, 0);
            while (true) {
                RootedTree t;
                t.parent = parent;
                t.pole_vertex = poles;
                t.twist.assign(V, 0);
                t.level.assign(V, 0);
                bool ok = true;
                for (int u : order) {
                    long in = 0;
                    for (int q = 0; q < k; ++q)
                        if (poles[q] == u)
                            in += mu_inf[q] + 1;
                    bool leaf = true;
                    int lvl = 0;
                    for (int c = 0; c < V; ++c)
                        if (parent[c] == u) {
                            in += t.twist[c] + 1;
                            lvl = leaf ? t.level[c] - 1 : std::min(lvl, t.level[c] - 1);
                            leaf = false;
                        }
                    t.level[u] = leaf ? 0 : lvl;
                    if (u == 0)
                        continue;
                    long tw = in - mu0[u + 1] - 1;
                    if (tw < 1) {
                        ok = false;
                        break;
                    }
                    t.twist[u] = static_cast<int>(tw);
                }
                if (ok)
                    out.push_back(std::move(t));
                int q = 0;
                while (q < k && ++poles[q] == V) {
                    poles[q] = 0;
                    ++q;
                }
                if (q == k)
                    break;
            }
            return;
        }
        for (int p = 0; p < V; ++p) {
            if (p == v)
                continue;
            parent[v] = p;
            rec_parent(v + 1);
        }
        parent[v] = -1;
    };
    rec_parent(1);
    return out;
}

std::vector<std::vector<int>> spin_assignments(int k, Parity parity)
{
    if (k < 1)
        throw Error("BAD_INDEX", "spin assignments need k >= 1");
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        if (static_cast<int>(__builtin_popcount(mask) % 2) != static_cast<int>(parity))
            continue;
        std::vector<int> phi(k);
        for (int b = 0; b < k; ++b)
            phi[b] = (mask >> b) & 1u;
        out.push_back(phi);
    }
    return out;
}

std::vector<Configuration> configurations(const Signature& mu, int i, int j)
{
    std::vector<Configuration> out;
    std::map<std::vector<BackbonePart>, size_t> index;
    for (const auto& d : enumerate_backbones(mu, i, j)) {
        std::vector<BackbonePart> key = d.parts;
        std::sort(key.begin(), key.end());
        auto it = index.find(key);
        if (it == index.end()) {
            Configuration c;
            c.representative.k = d.k;
            c.representative.parts = key;
            c.k = d.k;
            for (size_t a = 0; a < key.size();) {
                size_t b = a;
                while (b < key.size() && key[b] == key[a])
                    ++b;
                c.automorphisms *= factorial(static_cast<long>(b - a));
                a = b;
            }
            it = index.emplace(key, out.size()).first;
            out.push_back(std::move(c));
        }
        out[it->second].ordered_count += d.multiplicity;
    }
    for (auto& c : out)
        c.representative.multiplicity = c.ordered_count;
    return out;
}

} // namespace strata
