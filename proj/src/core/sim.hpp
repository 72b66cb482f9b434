#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/scenario.hpp"

namespace aloha {

struct SimConfig {
    long long trials = 100000;
    uint64_t master_seed = 1;
    double r_max = 0.0;     // sampling window radius; 0 = derive from tail bound
    double tail_tol = 1e-6; // bound on neglected mean interference beyond r_max
    bool unit_gain = false; // deterministic gain 1 instead of Exp(1) fading
};

struct SimEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    double ci95_low = 0.0;
    double ci95_high = 0.0;
    long long trials = 0;
    uint64_t master_seed = 0;
};

struct Point {
    double x, y;
};

// lambda * int_{r_max}^inf 2 pi r F(r) / (c + max(0, r - y0)^alpha) dr:
// analytic bound on the mean interference neglected by window truncation.
double tail_interference_bound(const NetworkScenario& s, double y0,
                               double r_max);

// Smallest power-of-two multiple of the shape scale whose tail bound is below
// tail_tol. Throws NonConvergence if the bound does not decay (dense tails).
double choose_r_max(const NetworkScenario& s, double y0, double tail_tol);

// Distance-dependent thinning of a homogeneous PPP of intensity lambda on the
// disk of radius r_max: candidate count ~ Poisson(lambda pi r_max^2), each
// candidate kept with probability F(|x|). Deterministic given seed.
std::vector<Point> sample_ppp(const ShapeFunction& shape, double lambda,
                              double r_max, uint64_t seed);

// One independent draw per trial of the reference link at receiver (x, y):
// interference sum, reference SINR, outage flag. Fresh PPP draws realize the
// reduced Palm distribution exactly (Slivnyak). Trials are computed in
// parallel with per-trial substreams and reduced pairwise, so results are
// bit-identical regardless of scheduling.
struct LinkSamples {
    std::vector<double> interference;
    std::vector<double> sinr;
    std::vector<uint8_t> outage;
    double r_max = 0.0;
};

LinkSamples simulate_link(const NetworkScenario& s, double rx_x, double rx_y,
                          const SimConfig& cfg);

// Optional raw per-trial dump (CSV: trial_index, interference, sinr, outage_flag).
void dump_link_samples(const LinkSamples& ls, const std::string& path);

SimEstimate estimate_mean_interference(const NetworkScenario& s, double y0,
                                       const SimConfig& cfg,
                                       const LinkSamples* pre = nullptr);
SimEstimate estimate_outage(const NetworkScenario& s, double y0,
                            const SimConfig& cfg,
                            const LinkSamples* pre = nullptr);
SimEstimate estimate_laplace(const NetworkScenario& s, double y0, double s_arg,
                             const SimConfig& cfg,
                             const LinkSamples* pre = nullptr);

// Empirical AST: per trial, draw the transmitter process, give every
// transmitter a receiver at distance d and uniform angle, and evaluate each
// link's SINR against interference from all other transmitters. Ratio of the
// two Campbell sums with a ratio-estimator CI. When lambda_r is given, the
// receivers instead form an independent PPP of intensity lambda_r F(r),
// each transmitter attaches to its nearest receiver, and eta scales with the
// realized link distance.
SimEstimate estimate_ast(const NetworkScenario& s, const SimConfig& cfg,
                         std::optional<double> lambda_r = std::nullopt,
                         std::optional<double> beta_override = std::nullopt);

// Deterministic pairwise reduction (fixed tree shape).
double pairwise_sum(const double* v, size_t n);

uint64_t trial_seed(uint64_t master, uint64_t trial);

} // namespace aloha
