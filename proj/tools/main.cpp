#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "strata/cache.hpp"
#include "strata/hurwitz.hpp"
#include "strata/partitions.hpp"
#include "strata/series.hpp"
#include "strata/siegel_veech.hpp"
#include "strata/volumes.hpp"
#include "verify.hpp"

using nlohmann::json;
using namespace strata;

namespace {

constexpr int cache_version = 1;

struct Options {
    std::string cache_path;
    bool as_json = false;
    std::string format = "text";

    std::string mu;
    std::string component = "all";
    std::string method = "backbone";
    std::vector<int> zeros;
    std::string hz_zeros;
    std::string hz_poles;
    bool hz_oracle = false;
    std::string series_name;
    int order = 10;
    std::string oracle_kind;
    std::string profile;
    int dmax = 6;
    bool connected = false;
    std::string lambda;
    std::string rho;
    int gmax = -1;
    std::string suite = "core";
    bool timing = false;
};

json rational_json(const Rational& r)
{
    return {{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

json pi_json(const PiScalar& v)
{
    json j = rational_json(v.coeff);
    j["pi_pow"] = v.pi_power;
    return j;
}

std::vector<int> parse_ints(const std::string& text, char sep)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw Error("PARSE_ERROR", "expected an integer list, got '" + text + "'");
        }
        if (used != item.size())
            throw Error("PARSE_ERROR", "expected an integer list, got '" + text + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw Error("PARSE_ERROR", "empty list");
    return out;
}

// "2+1,3" -> {{2,1},{3}}: commas separate ramification points, '+' separates cycles.
std::vector<Partition> parse_profile(const std::string& text)
{
    std::vector<Partition> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        Partition p = parse_ints(item, '+');
        std::sort(p.rbegin(), p.rend());
        out.push_back(p);
    }
    return out;
}

Partition parse_partition(const std::string& text)
{
    if (text.empty())
        return {};
    Partition p = parse_ints(text, ',');
    std::sort(p.rbegin(), p.rend());
    return p;
}

std::string cache_file(const Options& o)
{
    if (const char* env = std::getenv("STRATA_CACHE"); env && *env)
        return env;
    return o.cache_path;
}

void load_cache(const std::string& path)
{
    if (path.empty())
        return;
    std::ifstream in(path);
    if (!in)
        return;
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error("CACHE_FORMAT", std::string("unreadable cache file: ") + e.what());
    }
    if (!j.contains("version") || j["version"] != cache_version)
        throw Error("CACHE_VERSION", "unsupported cache version in " + path);
    CacheEntries entries;
    for (const auto& [key, value] : j["entries"].items())
        entries[key] = Rational::parse(value.get<std::string>());
    import_cache(entries);
}

void save_cache(const std::string& path)
{
    if (path.empty())
        return;
    json entries = json::object();
    for (const auto& [key, value] : export_cache())
        entries[key] = value.str();
    std::ofstream out(path);
    if (!out)
        throw Error("CACHE_WRITE", "cannot write cache file " + path);
    out << json{{"version", cache_version}, {"entries", entries}}.dump(1) << "\n";
}

json signature_json(const Signature& mu)
{
    return {{"mu", mu.entries()}, {"g", mu.genus()}, {"n", mu.n()}};
}

int cmd_volume(const Options& o)
{
    Signature mu = Signature::parse(o.mu);
    PiScalar value;
    std::string method = o.method;
    if (o.component == "hyp") {
        value = v_hyp(mu);
        method = "closed_form";
    } else if (o.component == "odd" || o.component == "even") {
        value = v_component(mu, o.component);
        method = "d2";
    } else if (o.component == "all") {
        if (o.method == "backbone") {
            value = v_stratum(mu);
        } else if (o.method == "d2") {
            value = v_stratum_d2(mu);
        } else {
            PiScalar b = v_stratum(mu);
            PiScalar d = v_stratum_d2(mu);
            if (!(b == d)) {
                std::cerr << "error: ROUTE_MISMATCH: backbone " << b.str() << " vs d2 " << d.str() << "\n";
                return 1;
            }
            value = b;
        }
    } else {
        throw Error("BAD_COMPONENT", "component must be all, odd, even or hyp");
    }
    if (o.as_json) {
        json j = signature_json(mu);
        j["component"] = o.component;
        j["value"] = pi_json(value);
        j["method"] = method;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "v(" << mu.str() << ")";
        if (o.component != "all")
            std::cout << "^" << o.component;
        std::cout << " = " << value.str() << "  [" << method << "]\n";
    }
    return 0;
}

int cmd_sv_area(const Options& o)
{
    Signature mu = Signature::parse(o.mu);
    PiScalar c = c_area(mu);
    bool agree = c == c_area_partial2(mu);
    if (mu.n() == 1)
        agree = agree && c == c_area_minimal_D(mu.genus());
    if (o.as_json) {
        json j = signature_json(mu);
        j["c_area"] = pi_json(c);
        j["d"] = rational_json(d_value(mu));
        j["a"] = rational_json(a_value(mu));
        j["routes_agree"] = agree;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "c_area(" << mu.str() << ") = " << c.str() << "  (" << c.to_float() << ")\n"
                  << "routes agree: " << (agree ? "yes" : "no") << "\n";
    }
    return agree ? 0 : 1;
}

int cmd_sv_sc(const Options& o)
{
    Signature mu = Signature::parse(o.mu);
    int i = o.zeros.size() == 2 ? o.zeros[0] - 1 : 0;
    int j = o.zeros.size() == 2 ? o.zeros[1] - 1 : 1;
    Integer hom = c_sc_hom(mu, i, j);
    auto values = configuration_values(mu, i, j);
    bool identity = sc_decomposition_check(mu, i, j);
    if (o.as_json) {
        json j_out = signature_json(mu);
        j_out["zeros"] = {i + 1, j + 1};
        j_out["c_hom"] = std::stol(hom.get_str());
        json configs = json::array();
        for (const auto& cv : values) {
            json parts = json::array();
            for (const auto& p : cv.config.representative.parts)
                parts.push_back({{"g", p.g}, {"mu", p.mu}, {"p", p.p}});
            configs.push_back({{"k", cv.config.k},
                               {"c_hom", cv.c_hom.short_str()},
                               {"c_area_pi2", cv.c_area.short_str()},
                               {"parts", parts}});
        }
        j_out["configurations"] = configs;
        j_out["identity_holds"] = identity;
        std::cout << j_out.dump() << "\n";
    } else {
        std::cout << "c_hom(" << mu.str() << "; " << i + 1 << "," << j + 1 << ") = " << hom.get_str() << "\n";
        for (const auto& cv : values) {
            std::cout << "  k=" << cv.config.k << " parts:";
            for (const auto& p : cv.config.representative.parts)
                std::cout << " [g=" << p.g << " p=" << p.p << " mu=" << p.stratum().str() << "]";
            std::cout << "  c_hom=" << cv.c_hom.short_str() << "  pi^2 c_area=" << cv.c_area.short_str() << "\n";
        }
        std::cout << "identity holds: " << (identity ? "yes" : "no") << "\n";
    }
    return identity ? 0 : 1;
}

int cmd_hurwitz(const Options& o)
{
    std::vector<int> zeros = parse_ints(o.hz_zeros, ',');
    std::vector<int> poles = parse_ints(o.hz_poles, ',');
    Rational h = h_p1_general(zeros, poles);
    json j = {{"zeros", zeros}, {"poles", poles}, {"value", h.short_str()}};
    if (o.hz_oracle) {
        if (zeros.size() != 2)
            throw Error("TOO_MANY_ZEROS", "the permutation oracle handles two zeros");
        j["oracle"] = hurwitz_tuple_oracle(zeros[0], zeros[1], poles).short_str();
    }
    if (o.as_json) {
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "h = " << h.short_str() << "\n";
        if (o.hz_oracle)
            std::cout << "oracle = " << j["oracle"].get<std::string>() << "\n";
    }
    return 0;
}

int cmd_series(const Options& o)
{
    const std::string& name = o.series_name;
    int N = o.order;
    std::vector<std::pair<int, Rational>> coeffs;
    auto from_series = [&](const LaurentSeries& s) {
        for (int e = s.min_exp(); e <= s.trunc_order(); ++e)
            coeffs.emplace_back(e, s.coeff(e));
    };
    auto from_list = [&](const std::vector<Rational>& v, int first) {
        for (size_t k = 0; k < v.size(); ++k)
            coeffs.emplace_back(first + static_cast<int>(k), v[k]);
    };
    if (name == "alpha")
        from_list(alpha_table(N), 1);
    else if (name == "bold-alpha")
        from_list(bold_alpha_table(N), 1);
    else if (name == "b")
        from_list(b_table(N), 0);
    else if (name == "A")
        from_series(A_series(N));
    else if (name == "Q")
        from_series(Q_series(N));
    else if (name == "PB")
        from_series(PB_series(N));
    else if (name == "PZ")
        from_series(PZ_series(N));
    else if (name == "Delta" || name == "delta")
        from_series(delta_series(N + N % 2));
    else if (name == "D")
        from_series(d_min_series(N));
    else
        throw Error("UNKNOWN_SERIES", "series must be one of alpha, bold-alpha, b, A, Q, PB, PZ, Delta, D");
    if (o.as_json) {
        json arr = json::array();
        for (const auto& [e, c] : coeffs)
            arr.push_back({{"e", e}, {"value", c.short_str()}});
        std::cout << json{{"name", name}, {"order", N}, {"coeffs", arr}}.dump() << "\n";
    } else {
        for (const auto& [e, c] : coeffs)
            std::cout << e << ": " << c.str() << "\n";
    }
    return 0;
}

int cmd_oracle(const Options& o)
{
    if (o.oracle_kind == "covers") {
        std::vector<Partition> prof = parse_profile(o.profile);
        json rows = json::array();
        if (!o.as_json)
            std::cout << "d  brute  character\n";
        for (int d = 1; d <= o.dmax; ++d) {
            Rational brute = count_covers_brute(prof, d, o.connected);
            Rational chr = o.connected ? count_covers_connected_character(prof, d)
                                       : count_covers_character(prof, d);
            if (o.as_json)
                rows.push_back({{"d", d}, {"brute", brute.short_str()}, {"character", chr.short_str()}});
            else
                std::cout << d << "  " << brute.short_str() << "  " << chr.short_str() << "\n";
        }
        if (o.as_json)
            std::cout << json{{"profile", o.profile}, {"connected", o.connected}, {"rows", rows}}.dump() << "\n";
        return 0;
    }
    if (o.oracle_kind == "character") {
        Partition lambda = parse_partition(o.lambda);
        Partition rho = parse_partition(o.rho);
        Integer chi = mn_character(lambda, rho);
        if (o.as_json)
            std::cout << json{{"lambda", lambda}, {"rho", rho}, {"chi", chi.get_str()}}.dump() << "\n";
        else
            std::cout << "chi = " << chi.get_str() << "\n";
        return 0;
    }
    throw Error("UNKNOWN_ORACLE", "oracle must be covers or character");
}

std::string pairs_cell(const Signature& mu)
{
    std::string s;
    for (int i = 0; i < mu.n(); ++i)
        for (int j = i + 1; j < mu.n(); ++j) {
            if (!s.empty())
                s += " ";
            s += std::to_string(i + 1) + "-" + std::to_string(j + 1) + ":" + c_sc_hom(mu, i, j).get_str();
        }
    return s.empty() ? "-" : s;
}

int cmd_table(const Options& o)
{
    int gmax = o.gmax < 0 ? 3 : o.gmax;
    if (gmax > 8)
        throw Error("GMAX_TOO_LARGE", "table is limited to gmax <= 8");
    bool json_out = o.as_json || o.format == "json";
    json rows = json::array();
    if (!json_out)
        std::cout << "g;mu;v;v_pi;c_area;c_area_pi;c_hom\n";
    for (int g = 1; g <= gmax; ++g)
        for (const auto& mu : strata_of_genus(g)) {
            PiScalar v = v_stratum(mu);
            PiScalar c = c_area(mu);
            if (json_out) {
                json j = signature_json(mu);
                j["v"] = pi_json(v);
                j["c_area"] = pi_json(c);
                j["c_hom"] = pairs_cell(mu);
                rows.push_back(j);
            } else {
                std::string mus = "[" + mu.str() + "]";
                std::cout << g << ";" << mus << ";" << v.coeff.short_str() << ";pi^" << v.pi_power << ";"
                          << c.coeff.short_str() << ";pi^" << c.pi_power << ";" << pairs_cell(mu) << "\n";
            }
        }
    if (json_out)
        std::cout << rows.dump() << "\n";
    return 0;
}

int cmd_verify(const Options& o)
{
    auto results = verify::run_suite(o.suite, o.gmax);
    bool ok = true;
    for (const auto& c : results)
        if (!c.pass && !c.known_failure)
            ok = false;
    if (o.as_json) {
        json arr = json::array();
        for (const auto& c : results) {
            json j = {{"id", c.id}, {"title", c.title}, {"pass", c.pass},
                      {"expected_failure", c.known_failure}, {"detail", c.detail}};
            if (o.timing)
                j["seconds"] = c.seconds;
            arr.push_back(j);
        }
        std::cout << json{{"suite", o.suite}, {"gmax", o.gmax}, {"criteria", arr}, {"ok", ok}}.dump(1) << "\n";
    } else {
        for (const auto& c : results)
            std::cout << verify::format_line(c, o.timing) << "\n";
        std::cout << (ok ? "suite passed" : "suite failed") << "\n";
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    Options o;
    CLI::App app{"Exact volumes, Siegel-Veech constants and Hurwitz numbers of strata of abelian differentials"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--cache", o.cache_path, "Cache file (the STRATA_CACHE environment variable overrides)");
    app.add_flag("--json", o.as_json, "Print JSON");

    auto* volume = app.add_subcommand("volume", "Rescaled volume of a stratum");
    volume->add_option("mu", o.mu, "Signature, e.g. 2,2")->required();
    volume->add_option("--component", o.component, "all, odd, even or hyp")
        ->check(CLI::IsMember({"all", "odd", "even", "hyp"}));
    volume->add_option("--method", o.method, "backbone, d2 or both")
        ->check(CLI::IsMember({"backbone", "d2", "both"}));

    auto* area = app.add_subcommand("sv-area", "Area Siegel-Veech constant");
    area->add_option("mu", o.mu, "Signature")->required();

    auto* sc = app.add_subcommand("sv-sc", "Saddle-connection Siegel-Veech constants between two zeros");
    sc->add_option("mu", o.mu, "Signature")->required();
    sc->add_option("--zeros", o.zeros, "Two 1-based zero indices")->expected(2);

    auto* hz = app.add_subcommand("hurwitz", "Hurwitz number of the sphere");
    hz->add_option("--zeros", o.hz_zeros, "Zero orders, the first two distinguished")->required();
    hz->add_option("--poles", o.hz_poles, "Pole profile")->required();
    hz->add_flag("--oracle", o.hz_oracle, "Also run the permutation oracle (two zeros)");

    auto* series = app.add_subcommand("series", "Coefficients of a named series");
    series->add_option("--which,name", o.series_name, "alpha, bold-alpha, b, A, Q, PB, PZ, Delta or D")->required();
    series->add_option("--order", o.order, "Truncation order")->check(CLI::Range(1, 200));

    auto* oracle = app.add_subcommand("oracle", "Partition and permutation oracles");
    oracle->add_option("kind", o.oracle_kind, "covers or character")->required();
    oracle->add_option("--profile", o.profile, "Ramification profile, e.g. 2,2 or 2+1,3");
    oracle->add_option("--dmax", o.dmax, "Largest degree")->check(CLI::Range(1, 6));
    oracle->add_flag("--connected", o.connected, "Count connected covers only");
    oracle->add_option("--lambda", o.lambda, "Partition for character values");
    oracle->add_option("--rho", o.rho, "Cycle type for character values");

    auto* table = app.add_subcommand("table", "Volumes and constants for all strata up to a genus");
    table->add_option("--gmax", o.gmax, "Largest genus (at most 8)");
    table->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json", "text"}));

    auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
    verify->add_option("--suite", o.suite, "core or all")->check(CLI::IsMember({"core", "all"}));
    verify->add_option("--gmax", o.gmax, "Cap on the genus ranges");
    verify->add_flag("--timing", o.timing, "Report timings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        std::string path = cache_file(o);
        load_cache(path);
        int rc = 0;
        if (*volume)
            rc = cmd_volume(o);
        else if (*area)
            rc = cmd_sv_area(o);
        else if (*sc)
            rc = cmd_sv_sc(o);
        else if (*hz)
            rc = cmd_hurwitz(o);
        else if (*series)
            rc = cmd_series(o);
        else if (*oracle)
            rc = cmd_oracle(o);
        else if (*table)
            rc = cmd_table(o);
        else if (*verify)
            rc = cmd_verify(o);
        save_cache(path);
        return rc;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (e.code() == "PARSE_ERROR") {
            std::cerr << app.help();
            return 2;
        }
        return 1;
    }
}
