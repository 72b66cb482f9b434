#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "core/quadrature.hpp"

namespace aloha {

// Location of a downward discontinuity of F; drop > 0 is the jump height.
struct Jump {
    double r;
    double drop;
};

// Radial density shape F(r) modulating the base intensity: lambda(r) = lambda F(r).
// Restrictions: F >= 0 everywhere and max F = 1 (attained at `maximizer`).
// Non-differentiable shapes carry an explicit jump set; every integral against
// dF is taken in the Lebesgue-Stieltjes sense: continuous density part minus
// the sum of downward jumps.
class ShapeFunction {
public:
    static constexpr double kNuInfinity = std::numeric_limits<double>::infinity();

    // exp{-(r/a)^b}
    static ShapeFunction exp_power(double a, double b);
    // exp{-r/a}
    static ShapeFunction exponential(double a);
    // 1 for r <= R, 0 beyond
    static ShapeFunction disk(double radius);
    // F = 1 everywhere (homogeneous network)
    static ShapeFunction constant();
    // (1+r)^-nu, complementary-CDF style polynomial tail
    static ShapeFunction power_law(double nu);
    // 1 on [0,r0], raised-cosine decay on (r0,r1), 0 beyond. C^1 everywhere.
    static ShapeFunction hotspot(double r0, double r1);
    // Monotone-cubic (Fritsch-Carlson) interpolation of samples; clamped to the
    // last sample beyond the table. tail_nu/tail_onset/tail_limit are declared
    // by the caller and spot-verified, not inferred.
    static ShapeFunction tabulated(std::vector<double> radii,
                                   std::vector<double> values, double tail_nu,
                                   double tail_onset, double tail_limit);

    double eval(double r) const { return eval_(r); }
    // Continuous part of dF/dr; the jump set carries the rest.
    double deriv(double r) const { return deriv_(r); }

    const std::vector<Jump>& jumps() const { return jumps_; }
    // Kinks and jump locations; quadrature splits integrals here.
    const std::vector<double>& breakpoints() const { return breakpoints_; }

    double tail_nu() const { return tail_nu_; }
    double tail_onset() const { return tail_onset_; }
    double tail_limit() const { return tail_limit_; }
    double maximizer() const { return maximizer_; }
    // F(inf): tail_limit when nu = 0, else 0.
    double value_at_infinity() const { return tail_nu_ == 0.0 ? tail_limit_ : 0.0; }
    bool has_continuous_part() const { return has_continuous_part_; }

    const std::string& kind() const { return kind_; }
    const std::string& describe() const { return describe_; }

    // Lebesgue-Stieltjes integral  int_0^inf G(r) dF(r):
    // continuous-density part plus jump atoms (each contributes -drop * G(r_k)).
    QuadResult stieltjes(const Integrand& g,
                         const QuadratureSpec& spec = {}) const;

private:
    ShapeFunction() = default;

    std::function<double(double)> eval_;
    std::function<double(double)> deriv_;
    std::vector<Jump> jumps_;
    std::vector<double> breakpoints_;
    double tail_nu_ = kNuInfinity;
    double tail_onset_ = 0.0;
    double tail_limit_ = 0.0;
    double maximizer_ = 0.0;
    bool has_continuous_part_ = true;
    std::string kind_;
    std::string describe_;
};

} // namespace aloha
