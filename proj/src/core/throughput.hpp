#pragma once

#include <optional>

#include "core/scenario.hpp"

namespace aloha {

// Differential transmission capacity at receiver norm y0 under outage budget
// epsilon: the intensity solving q = epsilon, discounted by (1 - epsilon).
//   lambda(y0, eps) = [ln(1/(1-eps)) - beta eta] / [s A_alpha(y0, s + c)],
// s = beta (c + d^alpha). Throws InfeasibleError when beta*eta >= ln(1/(1-eps)).
double dtc(const NetworkScenario& s, double y0, double epsilon);

// Intensity before the (1-eps) discount; outage at this intensity equals eps.
double dtc_intensity(const NetworkScenario& s, double y0, double epsilon);

// Average sum throughput Omega = int r (1-q(r)) F(r) dr / int r F(r) dr.
// Requires tail_nu > 2. beta_override substitutes the SINR threshold.
double ast(const NetworkScenario& s,
           std::optional<double> beta_override = std::nullopt);

// Nearest-neighbor distance CDF of a PPP with the given local intensity:
// 1 - exp(-intensity pi d^2).
double nearest_neighbor_cdf(double d, double local_intensity);

// Expected sum rate log2(1+beta) * Omega_conn(beta) where connectivity enters
// through the nearest-neighbor distance of a receiver PPP of intensity
// lambda_r F(r), localized at the transmitter:
//   num = int r F(r) int (1 - q(r, beta, d)) f_d(d | r) dd dr,
//   f_d(d|r) = 2 pi lambda_r F(r) d exp(-lambda_r F(r) pi d^2),
// denominator int r F(r) dr; eta rescales with d (eta_at_distance).
// fixed_d (testing hook) replaces the distance distribution with a point mass.
double expected_sum_rate(const NetworkScenario& s, double lambda_r, double beta,
                         std::optional<double> fixed_d = std::nullopt);

struct BetaOptimum {
    double beta_db = 0.0;
    double rate = 0.0;
    bool at_boundary = false;
};

// arg max_beta log2(1+beta) Omega(beta): 25-point coarse grid over the dB
// range, then golden-section to 0.05 dB. Deterministic.
BetaOptimum optimize_beta(const NetworkScenario& s, double lambda_r,
                          double beta_lo_db, double beta_hi_db);

} // namespace aloha
