// Command-line front end for the aloha shared library. Talks to the core
// exclusively through the C API in aloha/aloha.h.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aloha/aloha.h"

using nlohmann::json;

namespace {

constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;

struct CurveTable {
    json metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

std::string fmt_num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_table(const CurveTable& t, const std::string& format,
                 const std::string& out_path) {
    std::ostringstream os;
    if (format == "json") {
        json doc;
        doc["metadata"] = t.metadata;
        doc["columns"] = t.columns;
        doc["rows"] = json::array();
        for (const auto& row : t.rows) {
            json r = json::array();
            for (double v : row)
                r.push_back(v);
            doc["rows"].push_back(std::move(r));
        }
        os << doc.dump(2) << "\n";
    } else {
        os << "# " << t.metadata.dump() << "\n";
        for (size_t i = 0; i < t.columns.size(); ++i)
            os << (i ? "," : "") << t.columns[i];
        os << "\n";
        for (const auto& row : t.rows) {
            for (size_t i = 0; i < row.size(); ++i)
                os << (i ? "," : "") << fmt_num(row[i]);
            os << "\n";
        }
    }
    if (out_path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::cerr << "cannot open output file '" << out_path << "'\n";
            std::exit(kExitInputError);
        }
        f << os.str();
    }
}

std::vector<double> parse_grid(const std::string& text) {
    double start = 0, stop = 0, step = 0;
    char colon1 = 0, colon2 = 0;
    std::istringstream is(text);
    if (!(is >> start >> colon1 >> stop >> colon2 >> step) || colon1 != ':' ||
        colon2 != ':' || step <= 0) {
        std::cerr << "bad --grid '" << text << "', expected START:STOP:STEP\n";
        std::exit(kExitInputError);
    }
    std::vector<double> pts;
    for (double v = start; v <= stop + 1e-9 * step; v += step)
        pts.push_back(v);
    return pts;
}

[[noreturn]] void die(aloha_status st) {
    std::cerr << "error: " << aloha_last_error() << "\n";
    std::exit(kExitInputError);
}

void require_ok(aloha_status st) {
    if (st != ALOHA_OK)
        die(st);
}

struct Scenario {
    aloha_scenario* h = nullptr;
    ~Scenario() { aloha_scenario_free(h); }
};

void load_and_validate(const std::string& path, Scenario& sc) {
    require_ok(aloha_scenario_load(path.c_str(), &sc.h));
    char buf[8192];
    int n_errors = 0;
    require_ok(aloha_scenario_check(sc.h, buf, sizeof buf, &n_errors, nullptr));
    if (n_errors > 0) {
        std::cerr << "scenario validation failed:\n" << buf;
        std::exit(kExitInputError);
    }
}

json base_metadata(const std::string& command, const std::string& scenario_path,
                   const Scenario& sc) {
    char digest[64] = {0};
    aloha_scenario_digest(sc.h, digest, sizeof digest);
    json meta;
    meta["command"] = command;
    meta["scenario"] = scenario_path;
    meta["scenario_digest"] = digest;
    meta["version"] = aloha_version();
    return meta;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interference, outage and local-throughput toolkit for "
                 "isotropic slotted-Aloha networks"};
    app.require_subcommand(1);

    std::string scenario_path, grid_text, format = "csv", out_path, dump_path;
    long long trials = 10000;
    uint64_t seed = 1;

    auto add_common = [&](CLI::App* cmd, bool needs_grid) {
        cmd->add_option("--scenario", scenario_path, "scenario JSON file")
            ->required();
        auto* g = cmd->add_option("--grid", grid_text, "grid START:STOP:STEP");
        if (needs_grid)
            g->required();
        cmd->add_option("--format", format, "output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", out_path, "output file (default stdout)");
    };

    // op-curve
    auto* op = app.add_subcommand("op-curve",
                                  "outage probability vs receiver norm");
    bool op_simulate = false;
    add_common(op, true);
    op->add_flag("--simulate", op_simulate, "add Monte Carlo columns");
    op->add_option("--trials", trials, "Monte Carlo trials per grid point");
    op->add_option("--seed", seed, "master seed");

    // gamma-curve
    auto* gm = app.add_subcommand(
        "gamma-curve", "log-ratio of exact to approximate success probability");
    add_common(gm, true);

    // sum-rate
    auto* sr = app.add_subcommand("sum-rate",
                                  "expected sum rate vs SINR threshold (dB)");
    double lambda_r = 0.0;
    bool do_optimize = false;
    add_common(sr, true);
    sr->add_option("--lambda-r", lambda_r, "receiver process intensity")
        ->required();
    sr->add_flag("--optimize", do_optimize, "append argmax beta to metadata");

    // validate
    auto* va = app.add_subcommand("validate", "run the self-validation suite");
    bool full = false;
    va->add_option("--scenario", scenario_path, "scenario JSON file")->required();
    va->add_flag("--full", full, "include the Monte Carlo tier");
    va->add_option("--trials", trials, "Monte Carlo trials");
    va->add_option("--seed", seed, "master seed");

    // simulate
    auto* si = app.add_subcommand("simulate",
                                  "raw Monte Carlo estimate of one quantity");
    std::string quantity;
    double y0 = 0.0, s_arg = 0.0;
    std::optional<double> sim_lambda_r;
    si->add_option("--scenario", scenario_path, "scenario JSON file")->required();
    si->add_option("--quantity", quantity, "mean-interference|outage|laplace|ast")
        ->required()
        ->check(CLI::IsMember({"mean-interference", "outage", "laplace", "ast"}));
    si->add_option("--y0", y0, "receiver norm");
    si->add_option("--s", s_arg, "Laplace argument");
    si->add_option("--lambda-r", [&sim_lambda_r](const std::vector<std::string>& v) {
        sim_lambda_r = std::stod(v[0]);
        return true;
    }, "receiver intensity (ast connectivity variant)");
    si->add_option("--trials", trials, "Monte Carlo trials");
    si->add_option("--seed", seed, "master seed");
    si->add_option("--dump", dump_path, "per-trial raw sample CSV");
    si->add_option("--format", format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    si->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    Scenario sc;

    if (op->parsed()) {
        load_and_validate(scenario_path, sc);
        CurveTable t;
        t.metadata = base_metadata("op-curve", scenario_path, sc);
        t.metadata["grid"] = grid_text;
        t.columns = {"y0", "q_analytic"};
        if (op_simulate) {
            t.metadata["seed"] = seed;
            t.metadata["trials"] = trials;
            t.columns.insert(t.columns.end(), {"q_mc", "ci_low", "ci_high"});
        }
        for (double y : parse_grid(grid_text)) {
            double q = 0.0;
            require_ok(aloha_outage(sc.h, y, &q));
            std::vector<double> row{y, q};
            if (op_simulate) {
                aloha_estimate e;
                require_ok(aloha_sim_outage(sc.h, y, trials, seed, nullptr, &e));
                row.insert(row.end(), {e.mean, e.ci95_low, e.ci95_high});
            }
            t.rows.push_back(std::move(row));
        }
        write_table(t, format, out_path);
        return 0;
    }

    if (gm->parsed()) {
        load_and_validate(scenario_path, sc);
        CurveTable t;
        t.metadata = base_metadata("gamma-curve", scenario_path, sc);
        t.metadata["grid"] = grid_text;
        t.columns = {"y0", "gamma", "F"};
        for (double y : parse_grid(grid_text)) {
            double g = 0.0, F = 0.0;
            require_ok(aloha_gamma_ratio(sc.h, y, &g));
            require_ok(aloha_shape_eval(sc.h, y, &F));
            t.rows.push_back({y, g, F});
        }
        write_table(t, format, out_path);
        return 0;
    }

    if (sr->parsed()) {
        load_and_validate(scenario_path, sc);
        CurveTable t;
        t.metadata = base_metadata("sum-rate", scenario_path, sc);
        t.metadata["grid"] = grid_text;
        t.metadata["lambda_r"] = lambda_r;
        t.columns = {"beta_db", "rate"};
        std::vector<double> grid = parse_grid(grid_text);
        for (double db : grid) {
            double rate = 0.0;
            require_ok(
                aloha_sum_rate(sc.h, lambda_r, std::pow(10.0, db / 10.0), &rate));
            t.rows.push_back({db, rate});
        }
        if (do_optimize) {
            double bstar = 0.0, rstar = 0.0;
            int boundary = 0;
            require_ok(aloha_optimize_beta(sc.h, lambda_r, grid.front(),
                                           grid.back(), &bstar, &rstar,
                                           &boundary));
            t.metadata["beta_star_db"] = bstar;
            t.metadata["rate_star"] = rstar;
            t.metadata["at_boundary"] = boundary != 0;
        }
        write_table(t, format, out_path);
        return 0;
    }

    if (va->parsed()) {
        require_ok(aloha_scenario_load(scenario_path.c_str(), &sc.h));
        std::vector<char> buf(1 << 16);
        int n_failed = 0;
        aloha_status st = aloha_run_checks(sc.h, full ? 1 : 0, trials, seed,
                                           buf.data(), buf.size(), &n_failed);
        if (st != ALOHA_OK)
            die(st);
        std::cout << buf.data();
        return n_failed == 0 ? 0 : kExitCheckFailure;
    }

    if (si->parsed()) {
        load_and_validate(scenario_path, sc);
        aloha_estimate e;
        const char* dump = dump_path.empty() ? nullptr : dump_path.c_str();
        if (quantity == "mean-interference")
            require_ok(aloha_sim_mean_interference(sc.h, y0, trials, seed, dump, &e));
        else if (quantity == "outage")
            require_ok(aloha_sim_outage(sc.h, y0, trials, seed, dump, &e));
        else if (quantity == "laplace")
            require_ok(aloha_sim_laplace(sc.h, y0, s_arg, trials, seed, dump, &e));
        else
            require_ok(aloha_sim_ast(sc.h, trials, seed,
                                     sim_lambda_r ? &*sim_lambda_r : nullptr, &e));
        CurveTable t;
        t.metadata = base_metadata("simulate", scenario_path, sc);
        t.metadata["quantity"] = quantity;
        t.metadata["seed"] = seed;
        t.metadata["trials"] = trials;
        if (quantity == "laplace")
            t.metadata["s"] = s_arg;
        if (quantity != "ast")
            t.metadata["y0"] = y0;
        t.columns = {"mean", "std_error", "ci95_low", "ci95_high"};
        t.rows.push_back({e.mean, e.std_error, e.ci95_low, e.ci95_high});
        write_table(t, format, out_path);
        return 0;
    }

    return kExitInputError;
}
