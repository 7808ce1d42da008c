// Command-line front end: census tables, series evaluation, identity
// verification, and the on-disk census cache.
//
// Exit codes: 0 all equal / success, 1 at least one mismatch finding,
// 2 usage or parameter error, 3 refusal (e.g. non-compact regime, missing
// character data).

#include "qcensus/cache.hpp"
#include "qcensus/dsl.hpp"
#include "qcensus/serialize.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

using namespace qcensus;

std::shared_ptr<JsonlCensusStore> make_store(const std::string& cache_flag) {
    std::string path = cache_flag;
    if (path.empty()) {
        if (const char* env = std::getenv("MODULI_CACHE")) path = env;
    }
    if (path.empty()) return nullptr;
    return std::make_shared<JsonlCensusStore>(path);
}

std::vector<int> parse_int_list(const std::string& text, char sep, const char* what) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, sep)) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": cannot parse integer '" + tok + "'");
        }
    }
    return out;
}

// --params r=2,m=1,w=0:1  (vector values use colons)
ParamMap parse_params(const std::string& text) {
    ParamMap params;
    if (text.empty()) return params;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--params: expected key=value, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        if (key.empty()) throw std::invalid_argument("--params: empty key");
        if (key == "w" || value.find(':') != std::string::npos) {
            params.vecs[key] = parse_int_list(value, ':', "--params");
        } else {
            try {
                params.ints[key] = std::stoll(value);
            } catch (const std::exception&) {
                throw std::invalid_argument("--params: cannot parse integer '" + value + "'");
            }
        }
    }
    return params;
}

int status_exit(Status s) {
    switch (s) {
        case Status::Equal: return 0;
        case Status::Mismatch: return 1;
        case Status::Refused: return 3;
    }
    return 2;
}

struct CensusOptions {
    int r = 0;
    int alpha = 0;
    int beta = 0;
    std::string weights;
    int ow = -1;
    int max_n = 0;
    bool csv = false;
    bool json = false;
    std::string cache;
};

int run_census(const CensusOptions& opt) {
    std::vector<int> w;
    if (opt.ow >= 0) {
        if (!opt.weights.empty())
            throw std::invalid_argument("census: give either --weights or --ow, not both");
        w = Cocharacter::ones_vector(opt.r, opt.ow);
    } else {
        w = parse_int_list(opt.weights, ',', "--weights");
    }
    if (static_cast<int>(w.size()) != opt.r)
        throw std::invalid_argument("census: weight vector length must equal --r");
    Cocharacter c(opt.alpha, opt.beta, w);
    if (!is_compact_regime(c))
        throw Refusal("cocharacter outside the compact regime: requires max(w) - min(w) < alpha + beta");

    auto store = make_store(opt.cache);
    CellCensus census(store);

    std::vector<std::vector<int>> dims_by_n;
    for (int n = 0; n <= opt.max_n; ++n) dims_by_n.push_back(census.dimensions(c, n));
    Series h0 = census.h0_series(c, opt.max_n);
    Bivariate poincare = census.poincare_series(c, opt.max_n);

    if (opt.csv) {
        std::string out = "n,h0,poincare,dims\n";
        for (int n = 0; n <= opt.max_n; ++n) {
            out += std::to_string(n) + "," + h0[n].str() + ",";
            const QPoly& poly = poincare[n];
            for (std::size_t k = 0; k < poly.size(); ++k) out += (k ? " " : "") + poly[k].str();
            out += ",";
            const auto& dims = dims_by_n[static_cast<std::size_t>(n)];
            for (std::size_t k = 0; k < dims.size(); ++k)
                out += (k ? " " : "") + std::to_string(dims[k]);
            out += "\n";
        }
        std::cout << out;
    } else {
        Json j;
        j["r"] = opt.r;
        j["alpha"] = opt.alpha;
        j["beta"] = opt.beta;
        j["w"] = w;
        j["max_n"] = opt.max_n;
        Json per_n = Json::array();
        for (int n = 0; n <= opt.max_n; ++n)
            per_n.push_back(Json{{"n", n}, {"dims", dims_by_n[static_cast<std::size_t>(n)]}});
        j["census"] = std::move(per_n);
        j["h0"] = series_to_json(h0);
        j["poincare"] = bivariate_to_json(poincare);
        std::cout << j.dump(2) << "\n";
    }
    if (store) store->save();
    return 0;
}

struct SeriesOptions {
    std::string expr;
    int order = -1;
    int t_order = -1;
    bool json = false;
    bool csv = false;
    std::string cache;
};

int run_series(const SeriesOptions& opt) {
    dsl::AstPtr ast = dsl::parse(opt.expr);
    auto store = make_store(opt.cache);
    CellCensus census(store);
    std::optional<int> t_order;
    if (opt.t_order >= 0) t_order = opt.t_order;
    SeriesValue value = dsl::evaluate(*ast, opt.order, t_order, &census);
    if (opt.json) {
        Json j = std::holds_alternative<Series>(value) ? series_to_json(std::get<Series>(value))
                                                       : bivariate_to_json(std::get<Bivariate>(value));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (std::holds_alternative<Series>(value)
                          ? series_to_csv(std::get<Series>(value))
                          : bivariate_to_csv(std::get<Bivariate>(value)));
    }
    if (store) store->save();
    return 0;
}

struct VerifyOptions {
    std::string identity;
    std::string params;
    int order = -1;
    int t_order = -1;
    std::string char_file;
    std::string cache;
    bool no_runtime = false;
};

int run_verify(const VerifyOptions& opt) {
    IdentityCase c;
    c.name = opt.identity;
    c.params = parse_params(opt.params);
    c.order = opt.order;
    c.t_order = opt.t_order;
    auto store = make_store(opt.cache);
    CellCensus census(store);
    RunContext ctx;
    ctx.census = &census;
    ctx.char_file = opt.char_file;
    Report rep = run_case(c, ctx);
    std::cout << report_to_json(rep, !opt.no_runtime).dump(2) << "\n";
    if (store) store->save();
    return status_exit(rep.status);
}

struct VerifyAllOptions {
    int order = -1;
    int t_order = -1;
    std::string cache;
    bool no_runtime = false;
};

int run_verify_all(const VerifyAllOptions& opt) {
    auto store = make_store(opt.cache);
    CellCensus census(store);
    RunContext ctx;
    ctx.census = &census;
    Json results = Json::array();
    bool any_mismatch = false;
    for (const IdentityCase& c : default_cases(opt.order, opt.t_order)) {
        Report rep = run_case(c, ctx);
        any_mismatch = any_mismatch || rep.status == Status::Mismatch;
        results.push_back(report_to_json(rep, !opt.no_runtime));
    }
    std::cout << results.dump(2) << "\n";
    if (store) store->save();
    return any_mismatch ? 1 : 0;
}

int run_list(bool as_json) {
    if (as_json) {
        Json j = Json::array();
        for (const IdentitySchema& s : catalog())
            j.push_back(Json{{"name", s.name},
                             {"params", s.params_doc},
                             {"anchor", s.anchor},
                             {"kind", s.bivariate ? "bivariate" : "univariate"}});
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    for (const IdentitySchema& s : catalog()) {
        std::cout << s.name << "\n    params: " << s.params_doc << "\n    " << s.anchor << "\n";
    }
    return 0;
}

struct CompareOptions {
    std::string lhs;
    std::string rhs;
    int order = -1;
    int t_order = -1;
    std::string cache;
    bool no_runtime = false;
};

int run_compare(const CompareOptions& opt) {
    dsl::AstPtr lhs_ast = dsl::parse(opt.lhs);
    dsl::AstPtr rhs_ast = dsl::parse(opt.rhs);
    auto store = make_store(opt.cache);
    CellCensus census(store);
    std::optional<int> t_order;
    if (opt.t_order >= 0) t_order = opt.t_order;
    const auto started = std::chrono::steady_clock::now();
    SeriesValue lhs = dsl::evaluate(*lhs_ast, opt.order, t_order, &census);
    SeriesValue rhs = dsl::evaluate(*rhs_ast, opt.order, t_order, &census);
    Report rep = compare(lhs, rhs, "COMPARE");
    rep.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    rep.anchor = "command-line comparison";
    Json j = report_to_json(rep, !opt.no_runtime);
    j["lhs_expr"] = opt.lhs;
    j["rhs_expr"] = opt.rhs;
    std::cout << j.dump(2) << "\n";
    if (store) store->save();
    return status_exit(rep.status);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series census of torus-fixed loci of framed-sheaf moduli"};
    app.require_subcommand(1);

    CensusOptions census_opt;
    CLI::App* census_cmd = app.add_subcommand("census", "per-n cell-dimension multisets, h0 and Poincare coefficients");
    census_cmd->add_option("--r", census_opt.r, "rank (number of framing weights)")->required();
    census_cmd->add_option("--alpha", census_opt.alpha, "first torus exponent")->required();
    census_cmd->add_option("--beta", census_opt.beta, "second torus exponent")->required();
    census_cmd->add_option("--weights", census_opt.weights, "comma-separated framing weights w1,..,wR");
    census_cmd->add_option("--ow", census_opt.ow, "shorthand: m leading ones, zeros after");
    census_cmd->add_option("--max-n", census_opt.max_n, "largest size n to tabulate")->required();
    auto* census_json = census_cmd->add_flag("--json", census_opt.json, "JSON output (default)");
    census_cmd->add_flag("--csv", census_opt.csv, "CSV output")->excludes(census_json);
    census_cmd->add_option("--cache", census_opt.cache, "census cache path (or MODULI_CACHE)");

    SeriesOptions series_opt;
    CLI::App* series_cmd = app.add_subcommand("series", "evaluate a series expression");
    series_cmd->add_option("--expr", series_opt.expr, "expression over q, t and builtins")->required();
    series_cmd->add_option("--order", series_opt.order, "q-truncation order")->required();
    series_cmd->add_option("--t-order", series_opt.t_order, "t-truncation order (needed when t occurs)");
    auto* series_json = series_cmd->add_flag("--json", series_opt.json, "JSON output");
    series_cmd->add_flag("--csv", series_opt.csv, "CSV output (default)")->excludes(series_json);
    series_cmd->add_option("--cache", series_opt.cache, "census cache path (or MODULI_CACHE)");

    VerifyOptions verify_opt;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run one identity case and report");
    verify_cmd->add_option("--identity", verify_opt.identity, "catalog name (see list-identities)")->required();
    verify_cmd->add_option("--params", verify_opt.params, "comma-separated k=v (vectors use colons, e.g. w=0:1)");
    verify_cmd->add_option("--order", verify_opt.order, "q-truncation order");
    verify_cmd->add_option("--t-order", verify_opt.t_order, "t-truncation order");
    verify_cmd->add_option("--char-file", verify_opt.char_file, "imported character CSV (CONJ1, alpha+beta >= 3)");
    verify_cmd->add_option("--cache", verify_opt.cache, "census cache path (or MODULI_CACHE)");
    verify_cmd->add_flag("--no-runtime", verify_opt.no_runtime, "omit runtime from the report");

    VerifyAllOptions all_opt;
    CLI::App* all_cmd = app.add_subcommand("verify-all", "run every fully-computable catalog case");
    all_cmd->add_option("--order", all_opt.order, "override the per-case q-order");
    all_cmd->add_option("--t-order", all_opt.t_order, "override the per-case t-order");
    all_cmd->add_option("--cache", all_opt.cache, "census cache path (or MODULI_CACHE)");
    all_cmd->add_flag("--no-runtime", all_opt.no_runtime, "omit runtimes from the reports");

    bool list_json = false;
    CLI::App* list_cmd = app.add_subcommand("list-identities", "show the identity catalog");
    list_cmd->add_flag("--json", list_json, "JSON output");

    CompareOptions compare_opt;
    CLI::App* compare_cmd = app.add_subcommand("compare", "compare two series expressions");
    compare_cmd->add_option("--lhs", compare_opt.lhs, "left expression")->required();
    compare_cmd->add_option("--rhs", compare_opt.rhs, "right expression")->required();
    compare_cmd->add_option("--order", compare_opt.order, "q-truncation order")->required();
    compare_cmd->add_option("--t-order", compare_opt.t_order, "t-truncation order");
    compare_cmd->add_option("--cache", compare_opt.cache, "census cache path (or MODULI_CACHE)");
    compare_cmd->add_flag("--no-runtime", compare_opt.no_runtime, "omit runtime from the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(census_cmd)) return run_census(census_opt);
        if (app.got_subcommand(series_cmd)) return run_series(series_opt);
        if (app.got_subcommand(verify_cmd)) return run_verify(verify_opt);
        if (app.got_subcommand(all_cmd)) return run_verify_all(all_opt);
        if (app.got_subcommand(list_cmd)) return run_list(list_json);
        if (app.got_subcommand(compare_cmd)) return run_compare(compare_opt);
    } catch (const Refusal& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 3;
    } catch (const dsl::SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
