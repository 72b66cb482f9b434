#include "core/analytic.hpp"

#include <cmath>

namespace aloha {

namespace {
const double kPi = std::acos(-1.0);
}

std::complex<double> kappa(double r, double c_like, double y0) {
    if (!(c_like > 0.0))
        throw DomainError("kappa: c must be positive");
    using C = std::complex<double>;
    const double sc = std::sqrt(c_like);
    const double r2 = r * r, y2 = y0 * y0;
    const C num(r2 - y2, -sc);
    const C base(sc, r2 + y2);
    const C den = std::sqrt(base * base + 4.0 * r2 * y2);
    if (den == C(0.0, 0.0))
        throw DomainError("kappa: zero denominator");
    return num / den;
}

double angle_term(double r, double c_like, double y0) {
    if (!(c_like > 0.0))
        throw DomainError("angle_term: c must be positive");
    // Algebraic reduction of arg((1+jk)/(1-jk)). With A = r^2-y0^2,
    // S = r^2+y0^2 and sqrt(z) = p + jq for z = (c-A^2) + 2j sqrt(c) S:
    //   1-|k|^2 = D/Q >= 0,  2 Re k = (D/Q) (A^2-c)/(A p + sqrt(c) q),
    // where Q = |z| and D = 16 c r^2 y0^2/(Q+A^2+c). The shared positive
    // factor D/Q cancels, leaving a single arctan that is free of the
    // catastrophic cancellation the complex form suffers when |k| -> 1
    // (large r, or y0 -> 0 where k == -j identically).
    if (r == 0.0)
        return -0.5 * kPi;
    const double sc = std::sqrt(c_like);
    const double A = (r - y0) * (r + y0);
    const double A2 = A * A;
    const double S = r * r + y0 * y0;
    const double x = c_like - A2;
    const double y = 2.0 * sc * S; // > 0 since r > 0
    const double Q = std::hypot(x, y);
    // sqrt(x + jy) = p + jq without cancellation in the dominant component.
    double p, q;
    if (x >= 0.0) {
        p = std::sqrt(0.5 * (Q + x));
        q = y / (2.0 * p);
    } else {
        q = std::sqrt(0.5 * (Q - x));
        p = y / (2.0 * q);
    }
    if (A >= 0.0) {
        // tan(theta) = (A^2 - c)/(A p + sc q); both denominator terms >= 0.
        return std::atan((A2 - c_like) / (A * p + sc * q));
    }
    // Equivalent form tan(theta) = 2 (A p - sc q) / E with
    // E = Q - A^2 - c = 16 c r^2 y0^2 / (Q + A^2 + c) > 0; for A < 0 both
    // terms of A p - sc q are <= 0, so this form is cancellation-free.
    const double E = 16.0 * c_like * r * r * y0 * y0 / (Q + A2 + c_like);
    return std::atan(2.0 * (A * p - sc * q) / E);
}

DrivingResult a2(const ShapeFunction& shape, double y0, double c_like,
                 const QuadratureSpec& spec) {
    if (!(c_like > 0.0))
        throw DomainError("a2: c must be positive");
    if (!(y0 >= 0.0))
        throw DomainError("a2: y0 must be non-negative");
    if (!(shape.tail_nu() > 0.0))
        throw TailConditionError(
            "a2: mean interference diverges for alpha=2 when F has no "
            "polynomial tail decay (nu>0 required)");

    const double sc = std::sqrt(c_like);
    const double f0 = shape.eval(0.0);
    DrivingResult out;
    if (y0 < 1e-3 * sc) {
        // Direct y0 -> 0 limit; avoids arcsinh cancellation at +-inf arguments.
        const double lead = -f0 * std::log(c_like);
        QuadResult q = shape.stieltjes(
            [c_like](double r) { return std::log(r * r + c_like); }, spec);
        out.value = kPi * (lead - q.value);
        out.quadrature_error = kPi * q.error;
        out.boundary_term = kPi * lead;
        return out;
    }
    auto arg = [y0, c_like, sc](double r) {
        return std::asinh((y0 * y0 - r * r - c_like) / (2.0 * y0 * sc));
    };
    const double lead = f0 * std::asinh((y0 * y0 - c_like) / (2.0 * y0 * sc));
    QuadResult q = shape.stieltjes(arg, spec);
    out.value = kPi * (lead + q.value);
    out.quadrature_error = kPi * q.error;
    out.boundary_term = kPi * lead;
    return out;
}

DrivingResult a4(const ShapeFunction& shape, double y0, double c_like,
                 const QuadratureSpec& spec) {
    if (!(c_like > 0.0))
        throw DomainError("a4: c must be positive");
    if (!(y0 >= 0.0))
        throw DomainError("a4: y0 must be non-negative");

    const double sc = std::sqrt(c_like);
    // theta(inf) = pi/2 and theta(0) = -pi/2 exactly; the boundary evaluation
    // [F theta]_0^inf needs only F(0) and F(inf).
    const double boundary =
        0.5 * kPi * (shape.value_at_infinity() + shape.eval(0.0));
    DrivingResult out;
    QuadResult q = shape.stieltjes(
        [y0, c_like](double r) { return angle_term(r, c_like, y0); }, spec);
    out.value = (kPi / (2.0 * sc)) * (boundary - q.value);
    out.quadrature_error = (kPi / (2.0 * sc)) * q.error;
    out.boundary_term = (kPi / (2.0 * sc)) * boundary;
    return out;
}

DrivingResult driving_function(const ShapeFunction& shape, int alpha, double y0,
                               double c_like, const QuadratureSpec& spec) {
    if (alpha == 2)
        return a2(shape, y0, c_like, spec);
    if (alpha == 4)
        return a4(shape, y0, c_like, spec);
    throw DomainError("driving_function: alpha must be 2 or 4");
}

double mean_interference(const NetworkScenario& s, double y0) {
    if (s.lambda == 0.0)
        return 0.0;
    return s.lambda *
           driving_function(s.shape, s.channel.alpha, y0, s.channel.c).value;
}

double laplace_interference(const NetworkScenario& s, double y0, double s_arg) {
    if (!(s_arg >= 0.0))
        throw DomainError("laplace_interference: s must be non-negative");
    if (s_arg == 0.0 || s.lambda == 0.0)
        return 1.0;
    const DrivingResult a =
        driving_function(s.shape, s.channel.alpha, y0, s_arg + s.channel.c);
    // A_alpha > 0 in exact arithmetic, but for huge s the quadrature result
    // is a cancellation residual that can round slightly negative; clamp to
    // the true bound L <= 1 instead of exponentiating the noise.
    return std::exp(-std::max(0.0, s.lambda * s_arg * a.value));
}

double outage_probability(const NetworkScenario& s, double y0) {
    const ChannelParams& ch = s.channel;
    const double s_arg = ch.beta / path_loss(ch.d, ch);
    const double succ =
        laplace_interference(s, y0, s_arg) * std::exp(-ch.beta * ch.eta);
    return 1.0 - succ;
}

double approx_outage(const NetworkScenario& s, double y0) {
    const ChannelParams& ch = s.channel;
    if (ch.alpha != 4)
        throw DomainError(
            "approx_outage: csc(2 pi/alpha) is singular at alpha=2; the "
            "locally-homogeneous approximation applies only for alpha=4");
    const double a = double(ch.alpha);
    const double expo = s.shape.eval(y0) * s.lambda * kPi * kPi * ch.d * ch.d *
                        std::pow(ch.beta, 2.0 / a) * (2.0 / a) /
                        std::sin(2.0 * kPi / a);
    return 1.0 - std::exp(-expo);
}

double gamma_ratio(const NetworkScenario& s, double y0) {
    const ChannelParams& ch = s.channel;
    if (ch.alpha != 4)
        throw DomainError("gamma_ratio: defined for alpha=4 only");
    if (s.lambda == 0.0)
        return 0.0;
    const double d2 = ch.d * ch.d;
    const double sb = std::sqrt(ch.beta);
    const double a4v = a4(s.shape, y0, ch.beta * d2 * d2).value;
    return s.lambda * d2 * sb *
           (0.5 * kPi * kPi * s.shape.eval(y0) - d2 * sb * a4v);
}

} // namespace aloha
