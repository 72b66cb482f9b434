#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "core/errors.hpp"

namespace aloha {

struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_subdivisions = 2000;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0; // achieved error estimate
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod (G7,K15) on [a,b]. Throws NonConvergence when the
// subdivision budget is exhausted with the error estimate above tolerance.
QuadResult integrate(const Integrand& g, double a, double b,
                     const QuadratureSpec& spec = {});

// Same, but pre-split at the given interior breakpoints (kinks, jumps).
QuadResult integrate(const Integrand& g, double a, double b,
                     const std::vector<double>& breakpoints,
                     const QuadratureSpec& spec = {});

// Improper integral over [lo, inf), mapped to (0,1] via r = lo + t/(1-t).
// Breakpoints are given in r-space.
QuadResult integrate_semi_infinite(const Integrand& g,
                                   const QuadratureSpec& spec = {},
                                   double lo = 0.0,
                                   const std::vector<double>& breakpoints = {});

// Legendre polynomial P_n(x), three-term recurrence. Valid for all real x.
double legendre_p(int n, double x);
std::complex<double> legendre_p(int n, std::complex<double> x);

// Closed form of  int_0^pi dphi / (a + b cos phi)^(n+1)  for a > |b|:
//   pi * P_n(a / sqrt(a^2-b^2)) / (a^2-b^2)^((n+1)/2).
double identity1(double a, double b, int n);

// Complex-parameter counterpart, principal branches throughout.
std::complex<double> identity1(std::complex<double> a, std::complex<double> b,
                               int n);

// Antiderivative (in t) of  2 t sqrt(a3) / sqrt(a1 + a2 t^2 + a3 t^4)
// with a3 > 0. Branch selected by the sign of Delta = 4 a1 a3 - a2^2:
//   Delta < 0 : log((2 sqrt(a3 R) + 2 a3 t^2 + a2) / sqrt(-Delta))
//   Delta > 0 : arcsinh((2 a3 t^2 + a2) / sqrt(Delta))
//   Delta = 0 : log(2 a3 t^2 + a2)
// |Delta| < 1e-12 * (4|a1 a3| + a2^2) is treated as the Delta = 0 branch.
double identity2_antiderivative(double t, double a1, double a2, double a3);

// Complex-parameter counterpart, principal log/sqrt/arcsinh.
std::complex<double> identity2_antiderivative(std::complex<double> t,
                                              std::complex<double> a1,
                                              std::complex<double> a2,
                                              std::complex<double> a3);

// 2D integral over the disk of radius r_max of an integrand h(x1, x2) that is
// symmetric about the x1-axis (isotropic fields with the receiver placed at
// (y0_norm, 0) satisfy this):  2 * int_0^rmax r int_0^pi h(r cos, r sin) dphi dr.
// Serves as the brute-force oracle for mean interference and the Laplace
// exponent; the caller picks r_max so the neglected tail is below tolerance.
double brute_force_field(const std::function<double(double, double)>& h,
                         double r_max, const QuadratureSpec& spec = {});

// Convenience form: integrand F(|x|) * kernel(|x - (y0,0)|).
double brute_force_field(const Integrand& radial_weight, const Integrand& kernel,
                         double y0_norm, double r_max,
                         const QuadratureSpec& spec = {});

} // namespace aloha
