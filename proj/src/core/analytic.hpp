#pragma once

#include <complex>

#include "core/scenario.hpp"

namespace aloha {

// Result of evaluating an interference-driving function A_alpha.
struct DrivingResult {
    double value = 0.0;
    double quadrature_error = 0.0;
    double boundary_term = 0.0;
};

// kappa(r, c, y0) = (r^2 - y0^2 - j sqrt(c)) /
//                   sqrt((sqrt(c) + j (r^2 + y0^2))^2 + 4 r^2 y0^2),
// principal square root. |kappa| <= 1 up to roundoff.
std::complex<double> kappa(double r, double c_like, double y0);

// Continuous-in-r branch of arctan(2 Re{kappa} / (1 - |kappa|^2)). Since
// |kappa| <= 1 identically, the value lies in [-pi/2, pi/2]; it is computed
// through a cancellation-free algebraic reduction to a single arctan that
// stays accurate where the complex form degenerates (|kappa| -> 1: large r,
// or y0 -> 0 where kappa == -j). Limits: -pi/2 at r -> 0, +pi/2 at r -> inf.
double angle_term(double r, double c_like, double y0);

// A_2(y0, c) = pi [ F(0) arcsinh((y0^2-c)/(2 y0 sqrt(c)))
//                   + int arcsinh((y0^2-r^2-c)/(2 y0 sqrt(c))) dF(r) ],
// Stieltjes convention for dF. Mean interference at alpha=2 is lambda * A_2.
// The y0 -> 0 limit  pi [ -F(0) log c - int log(r^2+c) dF(r) ]  is evaluated
// directly below y0 < 1e-3 sqrt(c). Requires tail_nu > 0.
DrivingResult a2(const ShapeFunction& shape, double y0, double c_like,
                 const QuadratureSpec& spec = {});

// A_4(y0, c) = pi/(2 sqrt(c)) ( [F(r) theta(r)]_0^inf - int theta(r) dF(r) ),
// theta = angle_term. Finite for every admissible shape.
DrivingResult a4(const ShapeFunction& shape, double y0, double c_like,
                 const QuadratureSpec& spec = {});

// Dispatch on alpha.
DrivingResult driving_function(const ShapeFunction& shape, int alpha, double y0,
                               double c_like, const QuadratureSpec& spec = {});

// E[I(y0)] = lambda * A_alpha(y0, c).
double mean_interference(const NetworkScenario& s, double y0);

// L_I(s) = exp{-lambda s A_alpha(y0, s + c)}; 1 at s=0, non-increasing in s.
double laplace_interference(const NetworkScenario& s, double y0, double s_arg);

// Rayleigh-fading outage: q = 1 - L_I(beta (c + d^alpha)) exp(-beta eta).
double outage_probability(const NetworkScenario& s, double y0);

// Locally-homogeneous approximation (alpha = 4 only):
// q~ = 1 - exp{-F(y0) lambda pi^2 d^2 beta^(2/alpha) (2/alpha) csc(2 pi/alpha)}.
double approx_outage(const NetworkScenario& s, double y0);

// gamma = log[(1-q)/(1-q~)] in the c -> 0 limit of the desired-link gain:
// gamma = lambda d^2 sqrt(beta) (pi^2/2 F(y0) - d^2 sqrt(beta) A_4(y0, beta d^4)).
double gamma_ratio(const NetworkScenario& s, double y0);

} // namespace aloha
