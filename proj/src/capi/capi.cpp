#include "aloha/aloha.h"

#include <cstring>
#include <string>

#include "core/analytic.hpp"
#include "core/checks.hpp"
#include "core/scenario.hpp"
#include "core/sim.hpp"
#include "core/throughput.hpp"

using namespace aloha;

struct aloha_scenario_s {
    NetworkScenario sc;
};

namespace {

thread_local std::string g_last_error;

aloha_status fail(aloha_status st, const char* msg) {
    g_last_error = msg;
    return st;
}

// Translates the C++ error hierarchy at the boundary.
template <typename Fn>
aloha_status guarded(Fn&& fn) {
    try {
        fn();
        return ALOHA_OK;
    } catch (const ParseError& e) {
        return fail(ALOHA_ERR_PARSE, e.what());
    } catch (const TailConditionError& e) {
        return fail(ALOHA_ERR_TAIL_CONDITION, e.what());
    } catch (const NonConvergence& e) {
        return fail(ALOHA_ERR_NO_CONVERGENCE, e.what());
    } catch (const InfeasibleError& e) {
        return fail(ALOHA_ERR_INFEASIBLE, e.what());
    } catch (const FlatObjectiveError& e) {
        return fail(ALOHA_ERR_FLAT_OBJECTIVE, e.what());
    } catch (const DomainError& e) {
        return fail(ALOHA_ERR_DOMAIN, e.what());
    } catch (const std::exception& e) {
        return fail(ALOHA_ERR_INTERNAL, e.what());
    }
}

aloha_status copy_out(const std::string& text, char* buf, size_t buflen) {
    if (!buf || buflen == 0)
        return fail(ALOHA_ERR_INVALID_ARG, "null/empty output buffer");
    const size_t n = std::min(buflen - 1, text.size());
    std::memcpy(buf, text.data(), n);
    buf[n] = '\0';
    return ALOHA_OK;
}

void convert(const SimEstimate& e, aloha_estimate* out) {
    out->mean = e.mean;
    out->std_error = e.std_error;
    out->ci95_low = e.ci95_low;
    out->ci95_high = e.ci95_high;
    out->trials = e.trials;
    out->master_seed = e.master_seed;
}

} // namespace

extern "C" {

const char* aloha_version(void) { return "0.1.0"; }

const char* aloha_last_error(void) { return g_last_error.c_str(); }

aloha_status aloha_scenario_load(const char* path, aloha_scenario** out) {
    if (!path || !out)
        return fail(ALOHA_ERR_INVALID_ARG, "null argument");
    return guarded([&] { *out = new aloha_scenario_s{load_scenario(path)}; });
}

aloha_status aloha_scenario_parse(const char* json_text, aloha_scenario** out) {
    if (!json_text || !out)
        return fail(ALOHA_ERR_INVALID_ARG, "null argument");
    return guarded([&] { *out = new aloha_scenario_s{parse_scenario(json_text)}; });
}

void aloha_scenario_free(aloha_scenario* s) { delete s; }

aloha_status aloha_scenario_digest(const aloha_scenario* s, char* buf,
                                   size_t buflen) {
    if (!s)
        return fail(ALOHA_ERR_INVALID_ARG, "null scenario");
    return copy_out(scenario_digest(s->sc), buf, buflen);
}

aloha_status aloha_scenario_check(const aloha_scenario* s, char* buf,
                                  size_t buflen, int* n_errors,
                                  int* n_warnings) {
    if (!s)
        return fail(ALOHA_ERR_INVALID_ARG, "null scenario");
    return guarded([&] {
        auto violations = validate_scenario(s->sc);
        int ne = 0, nw = 0;
        std::string text;
        for (const auto& v : violations) {
            if (v.severity == Violation::Severity::Error) {
                ++ne;
                text += "error: ";
            } else {
                ++nw;
                text += "warning: ";
            }
            text += v.message + "\n";
        }
        if (n_errors)
            *n_errors = ne;
        if (n_warnings)
            *n_warnings = nw;
        if (buf && buflen > 0)
            copy_out(text, buf, buflen);
    });
}

#define ALOHA_SCALAR_PRELUDE(s, out)                                 \
    if (!(s) || !(out))                                              \
        return fail(ALOHA_ERR_INVALID_ARG, "null argument");

aloha_status aloha_shape_eval(const aloha_scenario* s, double r, double* out) {
    ALOHA_SCALAR_PRELUDE(s, out)
    return guarded([&] { *out = s->sc.shape.eval(r); });
}

aloha_status aloha_path_loss(const aloha_scenario* s, double dist, double* out) {
    ALOHA_SCALAR_PRELUDE(s, out)
    return guarded([&] { *out = path_loss(dist, s->sc.channel); });
}

aloha_status aloha_mean_interference(const aloha_scenario* s, double y0,
                                     double* out) {
    ALOHA_SCALAR_PRELUDE(s, out)
    return guarded([&] { *out = mean_interference(s->sc, y0); });
}

aloha_status aloha_laplace_interference(const aloha_scenario* s, double y0,
                                        double s_arg, double* out) {
    ALOHA_SCALAR_PRELUDE(s, out)
    return guarded([&] { *out = laplace_interference(s->sc, y0, s_arg); });
}

aloha_status aloha_outage(const aloha_scenario* s, double y0, double* out) {
    ALOHA_SCALAR_PRELUDE(s, out)
    return guarded([&] { *out = outage_probability(s->sc, y0); });
}

aloha_status aloha_approx_outage(const aloha_scenario* s, double y0,
                                 double* out) {
    ALOHA_SCALAR_PRELUDE(s, out)
    return guarded([&] { *out = approx_outage(s->sc, y0); });
}

aloha_status aloha_gamma_ratio(const aloha_scenario* s, double y0, double* out) {
    ALOHA_SCALAR_PRELUDE(s, out)
    return guarded([&] { *out = gamma_ratio(s->sc, y0); });
}

aloha_status aloha_dtc(const aloha_scenario* s, double y0, double epsilon,
                       double* out) {
    ALOHA_SCALAR_PRELUDE(s, out)
    return guarded([&] { *out = dtc(s->sc, y0, epsilon); });
}

aloha_status aloha_ast(const aloha_scenario* s, const double* beta_override,
                       double* out) {
    ALOHA_SCALAR_PRELUDE(s, out)
    return guarded([&] {
        *out = ast(s->sc, beta_override ? std::optional<double>(*beta_override)
                                        : std::nullopt);
    });
}

aloha_status aloha_sum_rate(const aloha_scenario* s, double lambda_r,
                            double beta, double* out) {
    ALOHA_SCALAR_PRELUDE(s, out)
    return guarded([&] { *out = expected_sum_rate(s->sc, lambda_r, beta); });
}

aloha_status aloha_optimize_beta(const aloha_scenario* s, double lambda_r,
                                 double lo_db, double hi_db,
                                 double* beta_star_db, double* rate_star,
                                 int* at_boundary) {
    if (!s || !beta_star_db || !rate_star)
        return fail(ALOHA_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        BetaOptimum opt = optimize_beta(s->sc, lambda_r, lo_db, hi_db);
        *beta_star_db = opt.beta_db;
        *rate_star = opt.rate;
        if (at_boundary)
            *at_boundary = opt.at_boundary ? 1 : 0;
    });
}

} // extern "C"

namespace {

template <typename Fn>
aloha_status sim_guarded(const aloha_scenario* s, long long trials,
                         uint64_t seed, const char* dump, aloha_estimate* out,
                         Fn&& run) {
    if (!s || !out)
        return fail(ALOHA_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        SimConfig cfg;
        cfg.trials = trials;
        cfg.master_seed = seed;
        SimEstimate e = run(cfg, dump);
        convert(e, out);
    });
}

} // namespace

extern "C" {

aloha_status aloha_sim_mean_interference(const aloha_scenario* s, double y0,
                                         long long trials, uint64_t seed,
                                         const char* dump_csv_path,
                                         aloha_estimate* out) {
    return sim_guarded(s, trials, seed, dump_csv_path, out,
                       [&](const SimConfig& cfg, const char* dump) {
                           LinkSamples ls = simulate_link(s->sc, y0, 0.0, cfg);
                           if (dump)
                               dump_link_samples(ls, dump);
                           return estimate_mean_interference(s->sc, y0, cfg, &ls);
                       });
}

aloha_status aloha_sim_outage(const aloha_scenario* s, double y0,
                              long long trials, uint64_t seed,
                              const char* dump_csv_path, aloha_estimate* out) {
    return sim_guarded(s, trials, seed, dump_csv_path, out,
                       [&](const SimConfig& cfg, const char* dump) {
                           LinkSamples ls = simulate_link(s->sc, y0, 0.0, cfg);
                           if (dump)
                               dump_link_samples(ls, dump);
                           return estimate_outage(s->sc, y0, cfg, &ls);
                       });
}

aloha_status aloha_sim_laplace(const aloha_scenario* s, double y0, double s_arg,
                               long long trials, uint64_t seed,
                               const char* dump_csv_path, aloha_estimate* out) {
    return sim_guarded(s, trials, seed, dump_csv_path, out,
                       [&](const SimConfig& cfg, const char* dump) {
                           LinkSamples ls = simulate_link(s->sc, y0, 0.0, cfg);
                           if (dump)
                               dump_link_samples(ls, dump);
                           return estimate_laplace(s->sc, y0, s_arg, cfg, &ls);
                       });
}

aloha_status aloha_sim_ast(const aloha_scenario* s, long long trials,
                           uint64_t seed, const double* lambda_r,
                           aloha_estimate* out) {
    return sim_guarded(s, trials, seed, nullptr, out,
                       [&](const SimConfig& cfg, const char*) {
                           return estimate_ast(
                               s->sc, cfg,
                               lambda_r ? std::optional<double>(*lambda_r)
                                        : std::nullopt);
                       });
}

aloha_status aloha_run_checks(const aloha_scenario* s, int full,
                              long long trials, uint64_t seed, char* report_buf,
                              size_t buflen, int* n_failed) {
    if (!s)
        return fail(ALOHA_ERR_INVALID_ARG, "null scenario");
    return guarded([&] {
        auto results = run_checks(s->sc, full != 0, trials, seed);
        int failed = 0;
        for (const auto& r : results)
            if (!r.pass)
                ++failed;
        if (n_failed)
            *n_failed = failed;
        if (report_buf && buflen > 0)
            copy_out(format_report(results), report_buf, buflen);
    });
}

} // extern "C"
