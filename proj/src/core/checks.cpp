#include "core/checks.hpp"

#include <cmath>
#include <sstream>

#include "core/analytic.hpp"
#include "core/quadrature.hpp"
#include "core/sim.hpp"

namespace aloha {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(8);
    os << v;
    return os.str();
}

// Positions probed: origin, the shape's outermost breakpoint (or 100), and
// 1.5x beyond it.
std::vector<double> probe_positions(const ShapeFunction& shape) {
    const double scale =
        shape.breakpoints().empty() ? 100.0 : shape.breakpoints().back();
    return {0.0, 0.7 * scale, 1.5 * scale};
}

} // namespace

std::vector<CheckResult> run_checks(const NetworkScenario& s, bool full,
                                    long long trials, uint64_t seed) {
    std::vector<CheckResult> out;

    // 1. Model restrictions.
    {
        CheckResult r{"scenario-restrictions", true, ""};
        auto violations = validate_scenario(s);
        std::ostringstream os;
        for (const auto& v : violations) {
            if (v.severity == Violation::Severity::Error)
                r.pass = false;
            os << (v.severity == Violation::Severity::Error ? "error: " : "warning: ")
               << v.message << "; ";
        }
        r.detail = os.str().empty() ? "all restrictions hold" : os.str();
        out.push_back(std::move(r));
        if (!out.back().pass)
            return out; // later checks assume a valid scenario
    }

    const ChannelParams& ch = s.channel;
    const bool mean_ok = ch.alpha == 4 || s.shape.tail_nu() > 0.0;

    // 2. Analytic mean interference vs brute-force 2D quadrature.
    if (mean_ok && s.lambda > 0.0) {
        for (double y0 : probe_positions(s.shape)) {
            CheckResult r{"mean-vs-bruteforce y0=" + fmt(y0), false, ""};
            try {
                const double analytic = mean_interference(s, y0);
                const double r_max = choose_r_max(s, y0, 1e-8 * std::max(1.0, analytic));
                QuadratureSpec spec;
                spec.rel_tol = 1e-7;
                spec.abs_tol = 1e-12;
                const double brute =
                    s.lambda *
                    brute_force_field([&](double r) { return s.shape.eval(r); },
                                      [&](double dist) { return path_loss(dist, ch); },
                                      y0, r_max, spec);
                const double rel =
                    std::abs(analytic - brute) / std::max(1e-300, std::abs(brute));
                r.pass = rel <= 1e-5;
                r.detail = "analytic=" + fmt(analytic) + " brute=" + fmt(brute) +
                           " rel=" + fmt(rel);
            } catch (const Error& e) {
                r.detail = e.what();
            }
            out.push_back(std::move(r));
        }
    }

    // 3. Laplace transform: 1 at s=0, positive, completely monotone on a grid.
    if (mean_ok) {
        CheckResult r{"laplace-complete-monotone", false, ""};
        try {
            const double y0 = probe_positions(s.shape)[1];
            const double s0 = ch.beta / path_loss(ch.d, ch);
            std::vector<double> vals;
            for (int i = 0; i <= 8; ++i)
                vals.push_back(laplace_interference(s, y0, s0 * i / 4.0));
            bool ok = std::abs(vals[0] - 1.0) < 1e-12;
            for (size_t i = 0; ok && i < vals.size(); ++i)
                ok = vals[i] > 0.0;
            for (size_t i = 0; ok && i + 1 < vals.size(); ++i)
                ok = vals[i + 1] - vals[i] <= 1e-12;
            for (size_t i = 0; ok && i + 2 < vals.size(); ++i)
                ok = vals[i + 2] - 2.0 * vals[i + 1] + vals[i] >= -1e-12;
            r.pass = ok;
            r.detail = "L(0)=" + fmt(vals[0]) + " L(smax)=" + fmt(vals.back());
        } catch (const Error& e) {
            r.detail = e.what();
        }
        out.push_back(std::move(r));
    }

    // 4. Outage probability range and monotonicity in beta.
    if (mean_ok) {
        CheckResult r{"outage-range-monotone-beta", false, ""};
        try {
            const double y0 = probe_positions(s.shape)[1];
            NetworkScenario t = s;
            double prev = -1.0;
            bool ok = true;
            for (double b : {0.125, 0.5, 2.0, 8.0}) {
                t.channel.beta = b;
                const double q = outage_probability(t, y0);
                ok = ok && q >= 0.0 && q <= 1.0 && q >= prev - 1e-12;
                prev = q;
            }
            r.pass = ok;
            r.detail = "q(beta=8)=" + fmt(prev);
        } catch (const Error& e) {
            r.detail = e.what();
        }
        out.push_back(std::move(r));
    }

    // 5. Monte Carlo tier: CI agreement at 3 standard errors.
    if (full && mean_ok && s.lambda > 0.0) {
        SimConfig cfg;
        cfg.trials = trials;
        cfg.master_seed = seed;
        for (double y0 : {probe_positions(s.shape)[0], probe_positions(s.shape)[1]}) {
            CheckResult rm{"mc-mean y0=" + fmt(y0), false, ""};
            CheckResult ro{"mc-outage y0=" + fmt(y0), false, ""};
            try {
                const LinkSamples ls = simulate_link(s, y0, 0.0, cfg);
                const SimEstimate em = estimate_mean_interference(s, y0, cfg, &ls);
                const double am = mean_interference(s, y0);
                rm.pass = std::abs(em.mean - am) <= 3.0 * em.std_error + 1e-12;
                rm.detail = "analytic=" + fmt(am) + " mc=" + fmt(em.mean) +
                            " se=" + fmt(em.std_error);
                const SimEstimate eo = estimate_outage(s, y0, cfg, &ls);
                const double ao = outage_probability(s, y0);
                ro.pass = std::abs(eo.mean - ao) <= 3.0 * eo.std_error + 1e-12;
                ro.detail = "analytic=" + fmt(ao) + " mc=" + fmt(eo.mean) +
                            " se=" + fmt(eo.std_error);
            } catch (const Error& e) {
                rm.detail = e.what();
                ro.detail = e.what();
            }
            out.push_back(std::move(rm));
            out.push_back(std::move(ro));
        }
    }
    return out;
}

std::string format_report(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    for (const auto& r : results)
        os << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    return os.str();
}

} // namespace aloha
