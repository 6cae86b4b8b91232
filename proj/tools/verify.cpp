#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "strata/hurwitz.hpp"
#include "strata/partitions.hpp"
#include "strata/series.hpp"
#include "strata/siegel_veech.hpp"
#include "strata/volumes.hpp"

namespace strata::verify {

namespace {

struct Checker {
    int failed = 0;
    int checked = 0;
    bool known_failed = false;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what)
    {
        ++checked;
        if (!ok) {
            ++failed;
            notes.push_back("failed: " + what);
        }
    }

    // A literal anchor whose failure has been analysed.
    void expect_known(bool ok, const std::string& what)
    {
        ++checked;
        if (!ok) {
            known_failed = true;
            notes.push_back("known failure: " + what);
        }
    }

    void note(const std::string& s) { notes.push_back(s); }
};

struct Outcome {
    bool pass;
    bool known;
    std::string detail;
};

Outcome finish(const Checker& c)
{
    std::ostringstream os;
    os << c.checked << " checks";
    for (const auto& n : c.notes)
        os << "; " << n;
    return {c.failed == 0 && !c.known_failed, c.failed == 0 && c.known_failed, os.str()};
}

int cap(int bound, int gmax)
{
    return gmax < 0 ? bound : std::min(bound, gmax);
}

Signature sig(std::vector<int> v)
{
    return Signature(std::move(v));
}

PiScalar pis(long num, long den, int pi_power)
{
    return {Rational(num, den), pi_power};
}

Outcome series_anchors(int)
{
    Checker c;
    auto alpha = alpha_table(7);
    c.expect(alpha[0] == Rational(-1, 24), "alpha_1 = -1/24");
    c.expect(alpha[2] == Rational(3, 640), "alpha_3 = 3/640");
    c.expect(alpha[4] == Rational(-1525, 580608), "alpha_5 = -1525/580608");
    LaurentSeries delta = delta_series(8);
    c.expect(delta.coeff(2) == Rational(1, 2), "delta_2 = 1/2");
    c.expect(delta.coeff(4) == Rational(-1, 16), "delta_4 = -1/16");
    c.expect(delta.coeff(6) == Rational(91, 2304), "delta_6 = 91/2304");
    c.expect(delta.coeff(8) == Rational(-41737, 829440), "delta_8 = -41737/829440 from the defining identity");
    c.expect(c_area(sig({6})) == c_area_partial2(sig({6})) && c_area(sig({6})) == c_area_minimal_D(4),
             "delta_8 agrees with the partial2 and D(u) routes at (6)");
    c.expect_known(delta.coeff(8) == Rational(-4173, 829440),
                   "literal anchor delta_8 = -4173/829440; computed " + delta.coeff(8).short_str()
                       + ", the literal drops a digit");
    return finish(c);
}

Outcome volume_anchors(int)
{
    Checker c;
    for (const auto& [mu, want] :
         {std::pair{sig({2}), pis(1, 40, 4)}, std::pair{sig({1, 1}), pis(4, 135, 4)}}) {
        c.expect(v_stratum(mu) == want, "backbone v(" + mu.str() + ") = " + want.str());
        c.expect(v_stratum_d2(mu) == want, "D2 v(" + mu.str() + ") = " + want.str());
        c.expect(v_hyp(mu) == want, "closed-form hyperelliptic v(" + mu.str() + ") = " + want.str());
    }
    c.expect(v_stratum(sig({4})) == pis(305, 108864, 6), "v(4) = 305/108864 pi^6");
    c.expect(v_stratum_d2(sig({4})) == pis(305, 108864, 6), "D2 v(4) = 305/108864 pi^6");

    PiScalar b = v_stratum(sig({2, 2}));
    PiScalar d = v_stratum_d2(sig({2, 2}));
    c.expect(b == d, "v(2,2) backbone = D2");
    c.expect(b == pis(17, 5600, 6), "v(2,2) = 17/5600 pi^6 including the k=3 backbone");
    PiScalar anchor = pis(128, 42525, 6);
    c.expect_known(b == anchor && d == anchor,
                   "literal anchor v(2,2) = 128/42525 pi^6; both routes give " + b.str()
                       + ", and 128/42525 pi^6 equals v(3,1)");
    c.expect(v_stratum(sig({3, 1})) == anchor, "v(3,1) = 128/42525 pi^6");
    return finish(c);
}

Outcome dual_recursion(int gmax)
{
    Checker c;
    int G = cap(5, gmax);
    int count = 0;
    for (int g = 1; g <= G; ++g)
        for (const auto& mu : signatures(g, 1, 4, true)) {
            ++count;
            PiScalar v = v_stratum(mu);
            c.expect(v == v_stratum_d2(mu), "backbone = D2 at " + mu.str());
            for (int i = 0; i < mu.n(); ++i)
                for (int j = 0; j < mu.n(); ++j)
                    if (i != j)
                        c.expect(v_stratum_pair(mu, i, j) == v,
                                 "pair (" + std::to_string(i) + "," + std::to_string(j)
                                     + ") at " + mu.str());
            std::vector<int> rev(mu.entries().rbegin(), mu.entries().rend());
            c.expect(v_stratum_d2(sig(rev)) == v, "D2 permutation invariance at " + mu.str());
        }
    c.note(std::to_string(count) + " strata with g <= " + std::to_string(G) + ", n <= 4");
    return finish(c);
}

Outcome spin(int gmax)
{
    Checker c;
    const std::vector<std::pair<long, long>> table = {
        {1, 3}, {1, 40}, {143, 108864}, {15697, 279936000}, {2561, 1103872000}};
    for (int g = 1; g <= cap(5, gmax); ++g) {
        PiScalar d = v_spin_delta(sig({2 * g - 2}));
        auto [n, m] = table[g - 1];
        c.expect(d.coeff.abs() == Rational(n, m) && d.pi_power == 2 * g,
                 "|v^delta(" + std::to_string(2 * g - 2) + ")| = " + std::to_string(n) + "/"
                     + std::to_string(m));
    }
    c.expect(v_spin_delta(sig({0})) == -v_stratum(sig({0})), "v^delta(0) = -v(0)");
    c.expect(v_spin_delta(sig({2})) == -v_stratum(sig({2})), "v^delta(2) = -v(2)");
    PiScalar two_hyp = v_hyp(sig({4})) + v_hyp(sig({4}));
    c.expect(v_spin_delta(sig({4})) == two_hyp - v_stratum(sig({4})), "v^delta(4) = 2 v^hyp(4) - v(4)");
    for (int g = 1; g <= cap(4, gmax); ++g)
        for (const auto& mu : signatures(g, 1, 4, true)) {
            if (!mu.all_even())
                continue;
            c.expect(v_spin(mu, Parity::odd) + v_spin(mu, Parity::even) == v_stratum(mu),
                     "v^odd + v^even = v at " + mu.str());
        }
    std::vector<Signature> backbone = {sig({2, 2}), sig({4, 2})};
    for (int g = 1; g <= cap(4, gmax); ++g)
        for (const auto& mu : signatures(g, 2, 4, false))
            if (mu.all_even() && std::find(backbone.begin(), backbone.end(), mu) == backbone.end())
                backbone.push_back(mu);
    for (const auto& mu : backbone)
        c.expect(v_spin_backbone_check(mu), "spin backbone recursion at " + mu.str());
    return finish(c);
}

Outcome hyperelliptic(int)
{
    Checker c;
    for (int g = 2; g <= 10; ++g)
        c.expect(hyp_recursion_check(g), "hyperelliptic recursion at g = " + std::to_string(g));
    c.expect(arctan_identity_check(1, 20), "first arctan identity to order 20");
    c.expect(arctan_identity_check(2, 20), "second arctan identity to order 20");
    return finish(c);
}

Outcome area(int gmax)
{
    Checker c;
    const std::vector<std::pair<Signature, PiScalar>> anchors = {
        {sig({0}), pis(3, 1, -2)}, {sig({2}), pis(10, 3, -2)}, {sig({1, 1}), pis(15, 4, -2)}};
    for (const auto& [mu, want] : anchors) {
        c.expect(c_area(mu) == want, "d-recursion c_area(" + mu.str() + ") = " + want.str());
        c.expect(c_area_partial2(mu) == want, "partial2 c_area(" + mu.str() + ") = " + want.str());
        if (mu.n() == 1)
            c.expect(c_area_minimal_D(mu.genus()) == want, "D(u) c_area(" + mu.str() + ") = " + want.str());
    }
    int count = 0;
    for (int g = 1; g <= cap(4, gmax); ++g)
        for (const auto& mu : signatures(g, 1, 3, true)) {
            ++count;
            c.expect(c_area(mu) == c_area_partial2(mu), "route agreement at " + mu.str());
        }
    LaurentSeries D = d_min_series(12);
    LaurentSeries delta = delta_series(12);
    bool ok = true;
    for (int e = 0; e <= 12; ++e) {
        Rational lhs = e >= 1 ? D.coeff(e - 1) : Rational(0);
        if (lhs != Rational(2) * delta.coeff(e))
            ok = false;
    }
    c.expect(ok, "u D(u) = 2 Delta(u) to order 12");
    c.note(std::to_string(count) + " strata in the route comparison");
    return finish(c);
}

Outcome saddle(int gmax)
{
    Checker c;
    auto cv = configuration_values(sig({1, 1}), 0, 1);
    c.expect(cv.size() == 2 && cv[0].c_hom == Rational(27, 8) && cv[1].c_hom == Rational(5, 8),
             "configurations of (1,1) carry 27/8 and 5/8");
    Rational lhs = Rational(27, 8) * Rational(10, 3) + Rational(5, 8) * Rational(6);
    c.expect(lhs == Rational(15) && lhs == Rational(4) * c_area(sig({1, 1})).coeff,
             "27/8 * 10/3 + 5/8 * 6 = 15 = 4 pi^2 c_area(1,1)");
    int count = 0;
    for (int g = 1; g <= cap(4, gmax); ++g)
        for (const auto& mu : signatures(g, 2, 4, true))
            for (int i = 0; i < mu.n(); ++i)
                for (int j = i + 1; j < mu.n(); ++j) {
                    ++count;
                    Rational hom = Rational(c_sc_hom(mu, i, j));
                    c.expect(hom == Rational((mu[i] + 1) * (mu[j] + 1)), "c^hom product at " + mu.str());
                    c.expect(sc_decomposition_check(mu, i, j),
                             "configuration identity at " + mu.str() + " zeros " + std::to_string(i + 1)
                                 + "," + std::to_string(j + 1));
                }
    c.note(std::to_string(count) + " (stratum, pair) cases");
    return finish(c);
}

Outcome hurwitz(int)
{
    Checker c;
    int cases = 0;
    for (int d = 1; d <= 7; ++d)
        for (const auto& p : partitions_of(d)) {
            if (std::adjacent_find(p.begin(), p.end()) != p.end())
                continue;
            int s = d + static_cast<int>(p.size());
            for (int m1 = 0; m1 <= s - 2; ++m1) {
                int m2 = s - 2 - m1;
                ++cases;
                c.expect(h_p1_two(m1, m2, p) == hurwitz_tuple_oracle(m1, m2, p),
                         "formula = oracle at (" + std::to_string(m1) + "," + std::to_string(m2) + ")");
            }
        }
    for (int m1 = 0; m1 <= 10; ++m1)
        for (int m2 = 0; m1 + m2 <= 10; ++m2)
            for (int d = 1; d <= 12; ++d)
                for (const auto& p : partitions_of(d)) {
                    Rational h = h_p1_two(m1, m2, p);
                    c.expect(h == h_p1_two(m2, m1, p), "symmetry");
                    if (d + static_cast<int>(p.size()) != m1 + m2 + 2)
                        c.expect(h.is_zero(), "degree-condition vanishing");
                }
    Rational f = h_p1_two(1, 1, {1, 1});
    Rational o = hurwitz_tuple_oracle(1, 1, {1, 1});
    c.expect(f == Rational(1) && o == Rational(1, 2), "repeated-pole instance (1,1,(1,1))");
    c.note(std::to_string(cases) + " distinct-pole cases; (1,1,(1,1)) gives formula " + f.short_str()
           + " vs oracle " + o.short_str());
    return finish(c);
}

Outcome oracle(int)
{
    Checker c;
    for (int n = 0; n <= 8; ++n)
        for (const auto& lambda : partitions_of(n)) {
            Rational p1 = p_eval(1, lambda), p2 = p_eval(2, lambda), p3 = p_eval(3, lambda);
            c.expect(f_eval(1, lambda) == p1 + Rational(1, 24), "f_1 = p_1 + 1/24");
            c.expect(f_eval(2, lambda) == p2 / Rational(2), "f_2 = p_2 / 2");
            c.expect(f_eval(3, lambda) == p3 / Rational(3) - p1 * p1 / Rational(2)
                                              + Rational(3, 8) * p1 + Rational(9, 640),
                     "f_3 = p_3/3 - p_1^2/2 + 3p_1/8 + 9/640");
        }
    for (int d = 1; d <= 6; ++d) {
        Integer s = 0;
        for (const auto& lambda : partitions_of(d))
            s += dimension(lambda) * dimension(lambda);
        c.expect(s == factorial(d), "sum of dim^2 = d!");
    }
    std::vector<std::vector<Partition>> profiles;
    for (int r = 1; r <= 6; ++r)
        for (const auto& rho : partitions_of(r))
            if (rho[0] <= 4)
                profiles.push_back({rho});
    for (int a = 2; a <= 4; ++a)
        for (int b = a; b <= 4; ++b)
            profiles.push_back({{a}, {b}});
    int cases = 0;
    for (const auto& prof : profiles)
        for (int d = 1; d <= 6; ++d) {
            ++cases;
            Rational dis = count_covers_brute(prof, d, false);
            Rational con = count_covers_brute(prof, d, true);
            c.expect(dis == count_covers_character(prof, d), "Burnside sum = brute count");
            // Cumulants separate ramification points, so this needs one marked cycle per point.
            bool single = std::all_of(prof.begin(), prof.end(), [](const Partition& p) { return p.size() == 1; });
            if (single)
                c.expect(con == count_covers_connected_character(prof, d), "connected bracket = transitive count");
            c.expect(con <= dis, "connected <= disconnected");
        }
    c.note(std::to_string(cases) + " (profile, degree) cases");
    return finish(c);
}

Outcome asymptotics(int gmax)
{
    Checker c;
    int G = cap(10, gmax);
    double worst_v = 0, worst_c = 0;
    int count = 0;
    for (int g = 2; g <= G; ++g) {
        auto list = strata_of_genus(g);
        for (const auto& row : asymptotic_report(list)) {
            ++count;
            worst_v = std::max(worst_v, std::abs(row.g2_v_hat));
            c.expect(row.monotone, "merge monotonicity at " + row.mu.str());
        }
        for (const auto& row : c_area_asymptotic_report(list))
            worst_c = std::max(worst_c, std::abs(row.g2_diff));
    }
    c.expect(worst_v <= 10, "g^2 |v - 4 + 2pi^2/(3(2g-3+n))| <= 10");
    c.expect(worst_c <= 10, "g^2 |c_area - 1/2 + 1/(2 sum(m_i+1))| <= 10");
    std::ostringstream os;
    os << count << " strata with 2 <= g <= " << G << "; max volume deviation " << worst_v
       << ", max area deviation " << worst_c;
    c.note(os.str());
    return finish(c);
}

struct CriterionDef {
    const char* title;
    double budget;
    Outcome (*run)(int);
};

const std::vector<CriterionDef>& definitions()
{
    static const std::vector<CriterionDef> s = {
        {"series anchors", 1, series_anchors},
        {"volume anchors", 5, volume_anchors},
        {"dual-recursion equivalence", 300, dual_recursion},
        {"spin components", 120, spin},
        {"hyperelliptic components", 10, hyperelliptic},
        {"area Siegel-Veech constants", 120, area},
        {"saddle-connection Siegel-Veech constants", 120, saddle},
        {"Hurwitz numbers", 120, hurwitz},
        {"partition oracle", 300, oracle},
        {"asymptotic trends", 600, asymptotics},
    };
    return s;
}

} // namespace

std::vector<Signature> signatures(int g, int nmin, int nmax, bool with_zeros)
{
    std::vector<Signature> out;
    int total = 2 * g - 2;
    std::vector<int> cur;
    for (int n = nmin; n <= nmax; ++n) {
        std::function<void(int, int, int)> rec = [&](int left, int maxpart, int slots) {
            if (slots == 0) {
                if (left == 0)
                    out.emplace_back(cur);
                return;
            }
            int lo = with_zeros ? 0 : 1;
            for (int x = std::min(left, maxpart); x >= lo; --x) {
                cur.push_back(x);
                rec(left - x, x, slots - 1);
                cur.pop_back();
            }
        };
        rec(total, total, n);
    }
    return out;
}

int criterion_count()
{
    return static_cast<int>(definitions().size());
}

Criterion run_criterion(int id, int gmax)
{
    if (id < 1 || id > criterion_count())
        throw Error("BAD_CRITERION", "criterion ids run from 1 to " + std::to_string(criterion_count()));
    const CriterionDef& s = definitions()[id - 1];
    Criterion c;
    c.id = id;
    c.title = s.title;
    c.budget_seconds = s.budget;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = s.run(gmax);
    } catch (const Error& e) {
        o = {false, false, std::string("error ") + e.what()};
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.pass = o.pass;
    c.known_failure = o.known;
    c.detail = o.detail;
    if (c.pass && c.seconds > c.budget_seconds) {
        c.pass = false;
        c.detail += "; over the time budget";
    }
    return c;
}

std::vector<int> suite_criteria(const std::string& suite)
{
    if (suite == "core")
        return {1, 2, 3, 4, 5, 6, 7, 8};
    if (suite == "all")
        return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    throw Error("BAD_SUITE", "suite must be core or all");
}

std::vector<Criterion> run_suite(const std::string& suite, int gmax)
{
    std::vector<Criterion> out;
    for (int id : suite_criteria(suite))
        out.push_back(run_criterion(id, gmax));
    return out;
}

std::string format_line(const Criterion& c, bool timing)
{
    std::ostringstream os;
    os << (c.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title;
    if (c.known_failure)
        os << " (expected failure)";
    os << ": " << c.detail;
    if (timing) {
        os.precision(2);
        os << std::fixed << " (" << c.seconds << " s of " << c.budget_seconds << " s)";
    }
    return os.str();
}

} // namespace strata::verify
