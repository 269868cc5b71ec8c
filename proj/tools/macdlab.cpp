// Command line driver: compute exact objects (finite and stable nonsymmetric
// Macdonald polynomials, Hall-Littlewood and Macdonald bases, weights and
// eigenvalue scalars) and run the named verification suites with a JSON-lines
// report. Exit status 0 iff every instance passes.

#include <CLI11.hpp>
#include <json.hpp>

#include <macdlab/verify_suites.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace macdlab;
using nlohmann::json;

namespace {

struct Caps {
    int max_degree = 3;
    int max_window = 2;
    int max_m = 8;
    int max_size = 3;
    int oracle_trials = 2;
};

// MACDLAB_CAPS="max_degree=4,max_window=3,max_m=10,max_size=4"
Caps caps_from_env() {
    Caps caps;
    const char* env = std::getenv("MACDLAB_CAPS");
    if (!env) return caps;
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) continue;
        std::string key = item.substr(0, eq);
        int val = std::stoi(item.substr(eq + 1));
        if (key == "max_degree") caps.max_degree = val;
        else if (key == "max_window") caps.max_window = val;
        else if (key == "max_m") caps.max_m = val;
        else if (key == "max_size") caps.max_size = val;
        else if (key == "oracle_trials") caps.oracle_trials = val;
        else throw CLI::ValidationError("MACDLAB_CAPS", "unknown key: " + key);
    }
    return caps;
}

Composition parse_comp_flag(const std::string& s) {
    if (s.empty()) return {};
    return parse_composition(s);
}

Partition parse_partition_flag(const std::string& s) {
    Composition c = parse_comp_flag(s);
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (c[i] < c[i + 1]) throw CLI::ValidationError("--lambda", "not weakly decreasing");
    if (!c.empty() && c.back() == 0)
        throw CLI::ValidationError("--lambda", "partitions have positive parts");
    return c;
}

std::string symfunc_text(const SymFunc& f) {
    return f.to_string();
}

json symfunc_json(const SymFunc& f) {
    json terms = json::array();
    for (const auto& [lam, c] : f.m_terms())
        terms.push_back({{"m", lam}, {"coeff", c.to_string()}});
    return json{{"basis", "m"}, {"terms", terms}};
}

json finite_json(const FinitePoly& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back({{"x", e}, {"coeff", c.to_string()}});
    return json{{"n", f.n()}, {"terms", terms}};
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream os(out_path);
        os << text << "\n";
    }
}

int run_compute(const std::string& object, const Composition& mu, const Partition& lam, int n,
                const std::string& format, const std::string& out_path) {
    const bool as_json = format == "json";
    std::string text;
    if (object == "E") {
        if (n > 0 && n < static_cast<int>(mu.size()))
            throw CLI::ValidationError("--n", "fewer variables than parts");
        FinitePoly E = E_hhl(n > 0 ? Composition(macdlab::verify::detail::pad_zeros(mu, n)) : mu);
        text = as_json ? finite_json(E).dump() : E.to_string();
    } else if (object == "Etilde") {
        AlmostSym e = E_tilde(mu);
        text = as_json ? to_json(e).dump() : almost_sym_to_string(e);
    } else if (object == "EtildePair") {
        AlmostSym e = E_tilde_pair({mu, lam});
        text = as_json ? to_json(e).dump() : almost_sym_to_string(e);
    } else if (object == "A") {
        SymFunc f = A_lambda(lam);
        text = as_json ? symfunc_json(f).dump() : symfunc_text(f);
    } else if (object == "HL") {
        SymFunc f = hall_littlewood_P(lam);
        text = as_json ? symfunc_json(f).dump() : symfunc_text(f);
    } else if (object == "MacP") {
        SymFunc f = macdonald_P(lam);
        text = as_json ? symfunc_json(f).dump() : symfunc_text(f);
    } else if (object == "weight") {
        std::vector<RatQT> w = stable_weight({mu, lam});
        if (as_json) {
            json arr = json::array();
            for (const auto& c : w) arr.push_back(c.to_string());
            text = json{{"weight", arr}, {"tail", "0,..."}}.dump();
        } else {
            std::string s = "(";
            for (const auto& c : w) s += c.to_string() + ", ";
            s += "0, ...)";
            text = s;
        }
    } else if (object == "kappa") {
        RatQT k = kappa_scalar(concat(mu, lam));
        text = as_json ? json{{"kappa", k.to_string()}}.dump() : k.to_string();
    } else if (object == "gamma") {
        RatQT g = gamma_scalar(concat(mu, lam));
        text = as_json ? json{{"gamma", g.to_string()}}.dump() : g.to_string();
    } else {
        std::cerr << "unknown object: " << object << "\n";
        return 2;
    }
    emit(text, out_path);
    return 0;
}

int run_verify(const std::string& suite, const Caps& caps, int n, int degree, int max_m, int seed,
               const std::string& out_path) {
    using namespace macdlab::verify;
    std::vector<CheckResult> results;
    const int deg = degree > 0 ? degree : caps.max_degree;
    const int mm = max_m > 0 ? max_m : caps.max_m;
    if (suite == "daha-relations") {
        for (int nn : (n > 0 ? std::vector<int>{n} : std::vector<int>{3, 4})) {
            auto r = suite_daha_relations(nn, deg);
            results.insert(results.end(), r.begin(), r.end());
        }
    } else if (suite == "hhl-oracle") {
        results = suite_hhl_oracle(caps.max_size, n > 0 ? n : caps.max_size);
        auto r = suite_eigenvalue(caps.max_size, n > 0 ? n : caps.max_size);
        results.insert(results.end(), r.begin(), r.end());
    } else if (suite == "tail-expansion") {
        results = suite_tail_expansion(caps.max_size, caps.max_window, std::min(mm, 3));
    } else if (suite == "stable-weights") {
        results = suite_stable_weights(caps.max_size, caps.max_window);
    } else if (suite == "basis-rank") {
        results = suite_basis_rank(caps.max_degree, caps.max_window,
                                   std::min(caps.max_degree, 3), seed);
    } else if (suite == "hl-duality") {
        results = suite_hl_duality(caps.max_size);
    } else if (suite == "A-macdonald") {
        results = suite_A_macdonald(caps.max_size);
    } else if (suite == "recurrences") {
        results = suite_recurrences(caps.max_size, caps.max_window);
    } else if (suite == "psi") {
        results = suite_psi(caps.max_size, caps.max_window, caps.max_size + 1);
    } else if (suite == "convergence") {
        results = suite_convergence(caps.max_size, caps.max_window, 3);
    } else if (suite == "examples") {
        results = suite_examples();
    } else if (suite == "hhl-stats") {
        results = suite_hhl_stats();
    } else {
        std::cerr << "unknown suite: " << suite << "\n";
        return 2;
    }
    std::sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
        return std::tie(a.suite, a.instance) < std::tie(b.suite, b.instance);
    });
    std::ostringstream os;
    for (const auto& r : results) {
        json line{{"suite", r.suite}, {"instance", r.instance},
                  {"status", r.ok ? "pass" : "fail"}};
        if (r.min_margin) line["min_valuation_margin"] = *r.min_margin;
        if (!r.witness.empty()) line["witness"] = r.witness;
        os << line.dump() << "\n";
    }
    if (out_path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(out_path);
        f << os.str();
    }
    return all_pass(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with stable-limit nonsymmetric Macdonald functions"};
    app.require_subcommand(1);

    std::string mu_s, lam_s, format = "text", out_path;
    int n = 0, degree = 0, max_m = 0, seed = 1;

    auto* compute = app.add_subcommand("compute", "print one object exactly");
    std::string object;
    compute->add_option("object", object,
                        "E|Etilde|EtildePair|A|HL|MacP|weight|kappa|gamma")->required();
    compute->add_option("--mu", mu_s, "composition, comma separated");
    compute->add_option("--lambda", lam_s, "partition, comma separated");
    compute->add_option("--n", n, "number of variables (finite E)");
    compute->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    compute->add_option("--out", out_path, "write output to file");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify->add_option("suite", suite,
                       "daha-relations|hhl-oracle|tail-expansion|stable-weights|basis-rank|"
                       "hl-duality|A-macdonald|recurrences|psi|convergence|examples|hhl-stats")
        ->required();
    verify->add_option("--n", n, "rank for operator suites");
    verify->add_option("--degree", degree, "degree cap override");
    verify->add_option("--max-m", max_m, "certificate horizon override");
    verify->add_option("--seed", seed, "seed for rational specializations");
    verify->add_option("--out", out_path, "write report to file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed())
            return run_compute(object, parse_comp_flag(mu_s), parse_partition_flag(lam_s), n,
                               format, out_path);
        return run_verify(suite, caps_from_env(), n, degree, max_m, seed, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
