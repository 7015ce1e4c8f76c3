#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "covdepth/closedform.hpp"
#include "covdepth/codes.hpp"
#include "covdepth/errors.hpp"
#include "covdepth/exact.hpp"
#include "covdepth/io.hpp"
#include "covdepth/montecarlo.hpp"
#include "covdepth/search.hpp"
#include "json.hpp"

namespace {

using covdepth::GenMatrix;
using covdepth::Limits;
using covdepth::Rat;
using covdepth::Target;
using json = nlohmann::ordered_json;

struct GlobalOpts {
    int threads = 0;
    Limits limits;
    bool no_timing = false;
    std::string format;  // "", "json" or "csv"
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    std::string format_or(const std::string& fallback) const {
        return format.empty() ? fallback : format;
    }

    void emit(json& report) const {
        if (!no_timing) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
            report["timing_ms"] = ms;
        }
        std::cout << report.dump(2) << "\n";
    }
};

json rat_json(const Rat& v) {
    auto f = covdepth::rational_fields(v);
    return json{{"num", f.num}, {"den", f.den}, {"decimal", f.decimal}};
}

json matrix_json(const GenMatrix& g) {
    json rows = json::array();
    for (int r = 0; r < g.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < g.cols(); ++c) row.push_back(g.entry(r, c));
        rows.push_back(std::move(row));
    }
    return json{{"q", g.field()->order()}, {"k", g.rows()}, {"n", g.cols()}, {"rows", rows}};
}

std::map<std::string, long> parse_params(const std::string& text) {
    std::map<std::string, long> params;
    if (text.empty()) return params;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        std::string piece = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        size_t eq = piece.find('=');
        if (eq == std::string::npos || eq == 0)
            throw covdepth::bad_input("--params entries look like name=value, got '" + piece + "'");
        try {
            size_t used = 0;
            long value = std::stol(piece.substr(eq + 1), &used);
            if (used != piece.size() - eq - 1) throw std::invalid_argument("");
            params[piece.substr(0, eq)] = value;
        } catch (const std::logic_error&) {
            throw covdepth::bad_input("unreadable value in --params entry '" + piece + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return params;
}

long need(const std::map<std::string, long>& params, const std::string& key,
          const std::string& family) {
    auto it = params.find(key);
    if (it == params.end())
        throw covdepth::bad_input("family '" + family + "' needs " + key + "=<value> in --params");
    return it->second;
}

GenMatrix build_family(const std::string& name, const std::map<std::string, long>& p) {
    if (name == "identity") return covdepth::identity_code(need(p, "q", name), static_cast<int>(need(p, "k", name)));
    if (name == "parity") {
        long k = need(p, "k", name);
        return covdepth::mds_rs(need(p, "q", name), static_cast<int>(k), static_cast<int>(k + 1));
    }
    if (name == "mds")
        return covdepth::mds_rs(need(p, "q", name), static_cast<int>(need(p, "k", name)),
                                static_cast<int>(need(p, "n", name)));
    if (name == "hamming")
        return covdepth::hamming(need(p, "q", name), static_cast<int>(need(p, "r", name)));
    if (name == "simplex")
        return covdepth::simplex(need(p, "q", name), static_cast<int>(need(p, "k", name)));
    if (name == "ext-hamming")
        return covdepth::extended_hamming_binary(static_cast<int>(need(p, "r", name)));
    if (name == "rm")
        return covdepth::reed_muller_binary(static_cast<int>(need(p, "r", name)),
                                            static_cast<int>(need(p, "m", name)));
    if (name == "golay") return covdepth::golay_binary(static_cast<int>(need(p, "n", name)));
    if (name == "lrc") return covdepth::lrc_example_f13();
    if (name == "lrc-sum") return covdepth::lrc_sum_code_f13();
    throw covdepth::bad_input("unknown code family '" + name + "'");
}

struct TargetOpts {
    long basis = 0;   // 1-based; 0 = unset
    long column = 0;  // 1-based; 0 = unset
    std::vector<long> set;

    int count() const { return (basis > 0) + (column > 0) + !set.empty(); }

    Target single(const GenMatrix& g) const {
        if (count() > 1)
            throw covdepth::bad_input("choose one of --target, --column, --set");
        if (column > 0) {
            if (column > g.cols())
                throw covdepth::index_out_of_range("--column past the matrix width");
            return Target::column(static_cast<int>(column - 1));
        }
        if (!set.empty()) {
            std::vector<int> zero_based;
            for (long v : set) {
                if (v < 1 || v > g.rows())
                    throw covdepth::index_out_of_range("--set entries index message coordinates");
                zero_based.push_back(static_cast<int>(v - 1));
            }
            return Target::basis_set(zero_based);
        }
        long i = basis > 0 ? basis : 1;
        if (i > g.rows()) throw covdepth::index_out_of_range("--target past the message length");
        return Target::basis(static_cast<int>(i - 1));
    }
};

void add_target_options(CLI::App* cmd, TargetOpts& t) {
    cmd->add_option("--target", t.basis, "1-based message coordinate (e_i)");
    cmd->add_option("--column", t.column, "1-based codeword coordinate (g_j)");
    cmd->add_option("--set", t.set, "comma-separated message coordinates, all required at once")
        ->delimiter(',');
}

json report_json(const covdepth::ExpectationReport& rep) {
    json targets = json::array();
    for (const auto& te : rep.per_target) {
        json row = rat_json(te.value);
        row["target"] = te.target.describe_1based();
        if (te.zero_column) row["zero_column"] = true;
        targets.push_back(std::move(row));
    }
    json argmax = json::array();
    for (int pos : rep.argmax) argmax.push_back(rep.per_target[pos].target.describe_1based());
    return json{{"engine", rep.engine},
                {"per_target", targets},
                {"t_max", rat_json(rep.t_max)},
                {"argmax", argmax}};
}

int run(int argc, char** argv) {
    GlobalOpts global;
    CLI::App app{"Expected uniform-draw counts to recover coordinates of a linear code"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--threads", global.threads, "worker threads (0 = all cores)");
    app.add_option("--max-enum-bits", global.limits.enum_bits,
                   "guard: refuse subset enumerations past 2^bits");
    app.add_option("--max-dual-bits", global.limits.dual_bits,
                   "guard: refuse dual enumerations past 2^bits words");
    app.add_option("--max-beta-sets", global.limits.beta_sets,
                   "guard: refuse recovery families past 2^sets subfamilies");
    app.add_option("--max-dp-bits", global.limits.dp_bits,
                   "guard: refuse subset DP past 2^bits states");
    app.add_flag("--force", global.limits.force, "run anyway past any guard");
    app.add_flag("--no-timing", global.no_timing, "omit the timing field for comparable output");
    app.add_option("--format", global.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // exact
    auto* exact = app.add_subcommand("exact", "Exact expected draw counts");
    std::string exact_matrix;
    TargetOpts exact_target;
    std::string exact_engine = "alpha";
    exact->add_option("--matrix", exact_matrix, "matrix file")->required();
    add_target_options(exact, exact_target);
    exact->add_option("--engine", exact_engine, "alpha, beta or dp")
        ->check(CLI::IsMember({"alpha", "beta", "dp"}));
    exact->callback([&] {
        GenMatrix g = covdepth::parse_matrix_file(exact_matrix);
        covdepth::ExpectationReport rep;
        if (exact_target.count() == 0) {
            rep = covdepth::t_max(g, exact_engine, global.limits, global.threads);
        } else {
            Target t = exact_target.single(g);
            rep.engine = exact_engine;
            rep.per_target.push_back(
                {t, covdepth::expectation(g, t, exact_engine, global.limits, global.threads),
                 t.kind == Target::Kind::Column && g.column_is_zero(t.index)});
            rep.t_max = rep.per_target.front().value;
            rep.argmax = {0};
        }
        if (global.format_or("json") == "csv") {
            std::cout << "target,num,den,decimal\n";
            for (const auto& te : rep.per_target) {
                auto f = covdepth::rational_fields(te.value);
                std::cout << te.target.describe_1based() << "," << f.num << "," << f.den << ","
                          << f.decimal << "\n";
            }
            auto f = covdepth::rational_fields(rep.t_max);
            std::cout << "t_max," << f.num << "," << f.den << "," << f.decimal << "\n";
            return;
        }
        json out{{"verb", "exact"}, {"matrix", matrix_json(g)}};
        out.update(report_json(rep));
        global.emit(out);
    });

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of the draw count");
    std::string sim_matrix;
    TargetOpts sim_target;
    covdepth::SimConfig sim_cfg;
    simulate->add_option("--matrix", sim_matrix, "matrix file")->required();
    add_target_options(simulate, sim_target);
    simulate->add_option("--trials", sim_cfg.trials, "number of trials");
    simulate->add_option("--seed", sim_cfg.seed, "master seed");
    simulate->add_option("--streams", sim_cfg.streams, "independent trial streams");
    simulate->callback([&] {
        GenMatrix g = covdepth::parse_matrix_file(sim_matrix);
        Target t = sim_target.single(g);
        sim_cfg.threads = global.threads;
        auto res = covdepth::simulate(g, t, sim_cfg);
        json out{{"verb", "simulate"},
                 {"matrix", matrix_json(g)},
                 {"target", t.describe_1based()},
                 {"trials", res.trials},
                 {"seed", sim_cfg.seed},
                 {"streams", static_cast<long>(res.stream_seeds.size())},
                 {"mean", res.mean},
                 {"stddev", res.stddev},
                 {"std_error", res.std_error},
                 {"stream_seeds", res.stream_seeds}};
        global.emit(out);
    });

    // closed-form
    auto* closed = app.add_subcommand("closed-form", "Evaluate a closed formula");
    std::string cf_family;
    std::string cf_params;
    long cf_xmax = 1;
    closed->add_option("--family", cf_family,
                       "mds, hamming, simplex, ext-mds, ext-simplex, avg-general or avg-systematic")
        ->required();
    closed->add_option("--params", cf_params, "comma list, e.g. q=2,k=4");
    closed->add_option("--x-max", cf_xmax, "sweep 1..x for the ext-* families");
    closed->callback([&] {
        auto p = parse_params(cf_params);
        if (cf_family == "ext-mds" || cf_family == "ext-simplex") {
            long k = need(p, "k", cf_family);
            std::optional<covdepth::QBinomialContext> ctx;
            long n = 0;
            if (cf_family == "ext-mds") {
                n = need(p, "n", cf_family);
            } else {
                ctx.emplace(need(p, "q", cf_family));
                covdepth::Int length = (ctx->qpow(k) - 1) / (ctx->q() - 1);
                n = mpz_get_si(length.get_mpz_t());
            }
            json rows = json::array();
            std::string csv = "x,normalized\n";
            for (long x = 1; x <= cf_xmax; ++x) {
                Rat t = cf_family == "ext-mds" ? covdepth::ext_mds_tmax(k, n, x)
                                               : covdepth::ext_simplex_tmax(*ctx, k, x);
                Rat normalized = t / Rat(k);
                csv += std::to_string(x) + "," + covdepth::decimal_string(normalized) + "\n";
                rows.push_back(json{{"x", x},
                                    {"n_cols", x * k + n - k},
                                    {"t_max", rat_json(t)},
                                    {"normalized", covdepth::decimal_string(normalized)}});
            }
            if (global.format_or("csv") == "csv") {
                std::cout << csv;
                return;
            }
            json out{{"verb", "closed-form"}, {"family", cf_family}, {"rows", rows}};
            global.emit(out);
            return;
        }
        Rat value;
        if (cf_family == "mds")
            value = covdepth::mds_expectation(need(p, "k", cf_family), need(p, "n", cf_family));
        else if (cf_family == "hamming")
            value = covdepth::hamming_expectation(need(p, "q", cf_family), need(p, "r", cf_family));
        else if (cf_family == "simplex")
            value =
                covdepth::simplex_expectation(need(p, "q", cf_family), need(p, "k", cf_family));
        else if (cf_family == "avg-general" || cf_family == "avg-systematic") {
            covdepth::QBinomialContext ctx(need(p, "q", cf_family));
            value = cf_family == "avg-general"
                        ? covdepth::avg_general(ctx, need(p, "k", cf_family), need(p, "n", cf_family))
                        : covdepth::avg_systematic(ctx, need(p, "k", cf_family),
                                                   need(p, "n", cf_family));
        } else {
            throw covdepth::bad_input("unknown closed-form family '" + cf_family + "'");
        }
        if (global.format_or("json") == "csv") {
            auto f = covdepth::rational_fields(value);
            std::cout << "family,num,den,decimal\n"
                      << cf_family << "," << f.num << "," << f.den << "," << f.decimal << "\n";
            return;
        }
        json out{{"verb", "closed-form"}, {"family", cf_family}, {"value", rat_json(value)}};
        global.emit(out);
    });

    // sweep
    auto* sweep = app.add_subcommand("sweep", "T_max of (I|I|...|R) while varying the identity count");
    std::string sweep_matrix, sweep_family, sweep_params;
    std::string sweep_engine = "alpha";
    long sweep_xmax = 1;
    sweep->add_option("--matrix", sweep_matrix, "systematic base matrix file");
    sweep->add_option("--family", sweep_family, "base code family (see closed-form)");
    sweep->add_option("--params", sweep_params, "family parameters");
    sweep->add_option("--x-max", sweep_xmax, "largest identity-block count")->required();
    sweep->add_option("--engine", sweep_engine, "alpha, beta, dp, ext-mds or ext-simplex")
        ->check(CLI::IsMember({"alpha", "beta", "dp", "ext-mds", "ext-simplex"}));
    sweep->callback([&] {
        if (sweep_matrix.empty() == sweep_family.empty())
            throw covdepth::bad_input("sweep needs exactly one of --matrix or --family");
        GenMatrix base = sweep_matrix.empty() ? build_family(sweep_family, parse_params(sweep_params))
                                              : covdepth::parse_matrix_file(sweep_matrix);
        auto res = covdepth::sweep_x(base, sweep_xmax, sweep_engine, global.limits, global.threads);
        if (global.format_or("json") == "csv") {
            std::cout << "x,n_cols,t_max,normalized\n";
            for (const auto& row : res.rows)
                std::cout << row.x << "," << row.n_cols << ","
                          << covdepth::decimal_string(row.t_max) << ","
                          << covdepth::decimal_string(row.normalized) << "\n";
            return;
        }
        json rows = json::array();
        for (const auto& row : res.rows)
            rows.push_back(json{{"x", row.x},
                                {"n_cols", row.n_cols},
                                {"t_max", rat_json(row.t_max)},
                                {"normalized", covdepth::decimal_string(row.normalized)}});
        json out{{"verb", "sweep"},
                 {"engine", sweep_engine},
                 {"base", matrix_json(base)},
                 {"rows", rows},
                 {"argmin_x", res.argmin_x}};
        global.emit(out);
    });

    // balance
    auto* balance = app.add_subcommand("balance", "Are all column expectations equal?");
    std::string bal_matrix, bal_family, bal_params;
    balance->add_option("--matrix", bal_matrix, "matrix file");
    balance->add_option("--family", bal_family, "code family (see closed-form)");
    balance->add_option("--params", bal_params, "family parameters");
    balance->callback([&] {
        if (bal_matrix.empty() == bal_family.empty())
            throw covdepth::bad_input("balance needs exactly one of --matrix or --family");
        GenMatrix g = bal_matrix.empty() ? build_family(bal_family, parse_params(bal_params))
                                         : covdepth::parse_matrix_file(bal_matrix);
        auto rep = covdepth::is_recovery_balanced(g, global.limits, global.threads);
        if (global.format_or("json") == "csv") {
            std::cout << "column,num,den,decimal\n";
            for (size_t j = 0; j < rep.values.size(); ++j) {
                auto f = covdepth::rational_fields(rep.values[j]);
                std::cout << "g" << (j + 1) << "," << f.num << "," << f.den << "," << f.decimal
                          << "\n";
            }
            std::cout << "balanced,,," << (rep.balanced ? "true" : "false") << "\n";
            return;
        }
        json values = json::array();
        for (size_t j = 0; j < rep.values.size(); ++j) {
            json row = rat_json(rep.values[j]);
            row["column"] = "g" + std::to_string(j + 1);
            values.push_back(std::move(row));
        }
        json out{{"verb", "balance"},
                 {"matrix", matrix_json(g)},
                 {"balanced", rep.balanced},
                 {"values", values}};
        if (rep.witness)
            out["witness"] = json{{"first", "g" + std::to_string(rep.witness->first + 1)},
                                  {"second", "g" + std::to_string(rep.witness->second + 1)}};
        global.emit(out);
    });

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "Exact lower bounds for given parameters");
    long b_q = 0, b_n = 0, b_k = 0;
    bounds_cmd->add_option("--q", b_q, "field order")->required();
    bounds_cmd->add_option("--n", b_n, "code length")->required();
    bounds_cmd->add_option("--k", b_k, "code dimension")->required();
    bounds_cmd->callback([&] {
        auto rep = covdepth::bounds(b_q, b_n, b_k);
        json out{{"verb", "bounds"},
                 {"q", rep.q},
                 {"n", rep.n},
                 {"k", rep.k},
                 {"bound_rate", rat_json(rep.bound_rate)},
                 {"bound_dimension", rat_json(rep.bound_dimension)}};
        global.emit(out);
    });

    // search
    auto* search_cmd = app.add_subcommand("search", "Random search for matrices with small T_max");
    long s_q = 0, s_n = 0, s_k = 0, s_iters = 100;
    uint64_t s_seed = 1;
    bool s_systematic = false;
    search_cmd->add_option("--q", s_q, "field order")->required();
    search_cmd->add_option("--k", s_k, "code dimension")->required();
    search_cmd->add_option("--n", s_n, "code length")->required();
    search_cmd->add_option("--iters", s_iters, "matrices to sample");
    search_cmd->add_option("--seed", s_seed, "master seed");
    search_cmd->add_flag("--systematic", s_systematic, "sample (I | R) only");
    search_cmd->callback([&] {
        auto rep = covdepth::random_search(s_q, s_k, s_n, s_iters, s_seed, s_systematic,
                                           global.limits, global.threads);
        json out{{"verb", "search"},
                 {"q", rep.q},
                 {"k", rep.k},
                 {"n", rep.n},
                 {"iterations", rep.samples},
                 {"seed", s_seed},
                 {"systematic", s_systematic},
                 {"bound_rate", rat_json(rep.bound_rate)},
                 {"bound_dimension", rat_json(rep.bound_dimension)},
                 {"best_t_max", rat_json(*rep.best_t_max)},
                 {"witness", matrix_json(*rep.witness)}};
        global.emit(out);
    });

    // duality
    auto* duality = app.add_subcommand("duality", "Balance of codes next to their duals");
    std::vector<std::string> dual_codes;
    duality->add_option("--code", dual_codes, "family spec name:params, e.g. hamming:q=2,r=3")
        ->required();
    duality->callback([&] {
        std::vector<std::pair<std::string, GenMatrix>> codes;
        for (const auto& spec : dual_codes) {
            size_t colon = spec.find(':');
            std::string name = spec.substr(0, colon);
            std::string params = colon == std::string::npos ? "" : spec.substr(colon + 1);
            codes.emplace_back(spec, build_family(name, parse_params(params)));
        }
        auto rows = covdepth::duality_balance_report(codes, global.limits, global.threads);
        if (global.format_or("json") == "csv") {
            std::cout << "code,balanced,dual_balanced,counterexample_candidate\n";
            for (const auto& row : rows)
                std::cout << row.name << "," << (row.balanced ? "true" : "false") << ","
                          << (row.dual_balanced ? "true" : "false") << ","
                          << (row.counterexample_candidate ? "true" : "false") << "\n";
            return;
        }
        json jrows = json::array();
        for (const auto& row : rows)
            jrows.push_back(json{{"code", row.name},
                                 {"balanced", row.balanced},
                                 {"dual_balanced", row.dual_balanced},
                                 {"counterexample_candidate", row.counterexample_candidate}});
        json out{{"verb", "duality"}, {"rows", jrows}};
        global.emit(out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const covdepth::GuardError& e) {
        std::cerr << "guard[" << e.kind() << "]: " << e.message() << "\n";
        if (!e.cost_estimate().empty())
            std::cerr << "estimated cost: " << e.cost_estimate() << "\n";
        std::cerr << "raise the matching --max-* limit or pass --force to run anyway\n";
        return 3;
    } catch (const covdepth::Error& e) {
        std::cerr << "error[" << e.kind() << "]: " << e.message() << "\n";
        const std::string kind = e.kind();
        bool usage = kind == "BadInput" || kind == "IndexOutOfRange" || kind == "NotPrimePower" ||
                     kind == "NotSystematic" || kind == "NotSystematizable" ||
                     kind == "RateMismatch" || kind == "LengthExceedsField";
        return usage ? 2 : 4;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
