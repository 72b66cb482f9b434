#include "core/throughput.hpp"

#include <cmath>
#include <future>
#include <vector>

#include "core/analytic.hpp"
#include "core/quadrature.hpp"

namespace aloha {

namespace {
const double kPi = std::acos(-1.0);
}

double dtc_intensity(const NetworkScenario& s, double y0, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw DomainError("dtc: epsilon must lie in (0,1)");
    const ChannelParams& ch = s.channel;
    const double budget = std::log(1.0 / (1.0 - epsilon));
    if (ch.beta * ch.eta >= budget)
        throw InfeasibleError(
            "dtc: noise alone exceeds the outage budget (beta*eta >= "
            "ln(1/(1-eps)))");
    const double s_arg = ch.beta / path_loss(ch.d, ch);
    const double a =
        driving_function(s.shape, ch.alpha, y0, s_arg + ch.c).value;
    return (budget - ch.beta * ch.eta) / (s_arg * a);
}

double dtc(const NetworkScenario& s, double y0, double epsilon) {
    return dtc_intensity(s, y0, epsilon) * (1.0 - epsilon);
}

double ast(const NetworkScenario& s, std::optional<double> beta_override) {
    if (!(s.shape.tail_nu() > 2.0))
        throw TailConditionError(
            "ast: denominator integral needs tail_nu > 2");
    NetworkScenario sc = s;
    if (beta_override)
        sc.channel.beta = *beta_override;

    QuadratureSpec outer;
    outer.rel_tol = 1e-7;
    outer.abs_tol = 1e-12;
    auto rF = [&](double r) { return r * sc.shape.eval(r); };
    const double den =
        integrate_semi_infinite(rF, outer, 0.0, sc.shape.breakpoints()).value;
    if (den == 0.0)
        throw DomainError("ast: int r F(r) dr vanishes");
    auto num_g = [&](double r) {
        const double F = sc.shape.eval(r);
        if (F == 0.0)
            return 0.0;
        return r * F * (1.0 - outage_probability(sc, r));
    };
    const double num =
        integrate_semi_infinite(num_g, outer, 0.0, sc.shape.breakpoints()).value;
    return num / den;
}

double nearest_neighbor_cdf(double d, double local_intensity) {
    if (!(d >= 0.0) || !(local_intensity >= 0.0))
        throw DomainError("nearest_neighbor_cdf: negative argument");
    return 1.0 - std::exp(-local_intensity * kPi * d * d);
}

namespace {

// Success probability of a link at receiver norm r with distance d: the OP of
// (r, beta, d) with the eta(d) convention.
double link_success(const NetworkScenario& s, double r, double beta, double d) {
    NetworkScenario sc = s;
    sc.channel.beta = beta;
    sc.channel.d = d;
    sc.channel.eta = eta_at_distance(s.channel, d);
    return 1.0 - outage_probability(sc, r);
}

} // namespace

double expected_sum_rate(const NetworkScenario& s, double lambda_r, double beta,
                         std::optional<double> fixed_d) {
    if (!(beta > 0.0))
        throw DomainError("expected_sum_rate: beta must be positive");
    if (!fixed_d && !(lambda_r > 0.0))
        throw DomainError("expected_sum_rate: lambda_r must be positive");
    if (!(s.shape.tail_nu() > 2.0))
        throw TailConditionError(
            "expected_sum_rate: denominator integral needs tail_nu > 2");

    QuadratureSpec outer;
    outer.rel_tol = 1e-6;
    outer.abs_tol = 1e-12;
    QuadratureSpec inner;
    inner.rel_tol = 1e-6;
    inner.abs_tol = 1e-13;

    auto rF = [&](double r) { return r * s.shape.eval(r); };
    const double den =
        integrate_semi_infinite(rF, outer, 0.0, s.shape.breakpoints()).value;
    if (den == 0.0)
        throw DomainError("expected_sum_rate: int r F(r) dr vanishes");

    auto num_g = [&](double r) {
        const double F = s.shape.eval(r);
        // F < 1e-14 contributes below the quadrature tolerance and would
        // overflow the d_hi truncation radius through mu -> 0.
        if (F < 1e-14)
            return 0.0;
        if (fixed_d)
            return r * F * link_success(s, r, beta, *fixed_d);
        const double mu = lambda_r * F; // local receiver intensity
        // truncate where 1 - F_d(d) < 1e-8
        const double d_hi = std::sqrt(std::log(1e8) / (mu * kPi));
        auto g = [&](double d) {
            const double density = 2.0 * kPi * mu * d * std::exp(-mu * kPi * d * d);
            return density * link_success(s, r, beta, d);
        };
        const double mean_succ = integrate(g, 0.0, d_hi, inner).value;
        return r * F * mean_succ;
    };
    const double num =
        integrate_semi_infinite(num_g, outer, 0.0, s.shape.breakpoints()).value;
    return std::log2(1.0 + beta) * num / den;
}

BetaOptimum optimize_beta(const NetworkScenario& s, double lambda_r,
                          double beta_lo_db, double beta_hi_db) {
    if (!(beta_hi_db > beta_lo_db))
        throw DomainError("optimize_beta: empty range");
    auto rate_at = [&](double db) {
        return expected_sum_rate(s, lambda_r, std::pow(10.0, db / 10.0));
    };

    constexpr int kGrid = 25;
    std::vector<double> dbs(kGrid), vals(kGrid);
    std::vector<std::future<double>> fut(kGrid);
    for (int i = 0; i < kGrid; ++i) {
        dbs[i] = beta_lo_db + (beta_hi_db - beta_lo_db) * i / (kGrid - 1);
        fut[i] = std::async(std::launch::async, rate_at, dbs[i]);
    }
    int best = 0;
    double vmin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kGrid; ++i) {
        vals[i] = fut[i].get();
        if (vals[i] > vals[best])
            best = i;
        vmin = std::min(vmin, vals[i]);
    }
    if (vals[best] - vmin < 1e-12)
        throw FlatObjectiveError(
            "optimize_beta: objective varies below 1e-12 over the range");

    BetaOptimum out;
    if (best == 0 || best == kGrid - 1) {
        out.beta_db = dbs[best];
        out.rate = vals[best];
        out.at_boundary = true;
        return out;
    }

    // Golden-section on the bracketing interval, down to 0.05 dB.
    double a = dbs[best - 1], b = dbs[best + 1];
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = rate_at(x1), f2 = rate_at(x2);
    while (b - a > 0.05) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = rate_at(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = rate_at(x1);
        }
    }
    out.beta_db = f1 > f2 ? x1 : x2;
    out.rate = std::max(f1, f2);
    out.at_boundary = false;
    return out;
}

} // namespace aloha
