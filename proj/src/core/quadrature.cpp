#include "core/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

namespace aloha {

namespace {

// Gauss-Kronrod 7-15 nodes/weights on [-1,1] (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const Integrand& g, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = g(mid);
    double k15 = kWgk[7] * f0;
    double g7 = kWg[3] * f0;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const double fs = g(mid - dx) + g(mid + dx);
        k15 += kWgk[i] * fs;
        if (i % 2 == 1)
            g7 += kWg[i / 2] * fs;
    }
    k15 *= half;
    g7 *= half;
    return {a, b, k15, std::abs(k15 - g7)};
}

} // namespace

QuadResult integrate(const Integrand& g, double a, double b,
                     const QuadratureSpec& spec) {
    if (!(b >= a))
        throw DomainError("integrate: b < a");
    if (a == b)
        return {0.0, 0.0};

    std::priority_queue<Segment> heap;
    heap.push(gk15(g, a, b));
    double total = heap.top().value;
    double err = heap.top().error;
    int splits = 0;
    int stalls = 0; // splits that failed to shrink the local estimate
    while (err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
        // Roundoff stall: the per-segment estimates have hit the noise floor
        // of the integrand, so further subdivision cannot help. Accept the
        // achieved accuracy provided at least six digits are in hand (keeps
        // genuinely divergent integrands on the throwing path).
        if (stalls >= 100 && err <= 1e-6 * std::abs(total))
            break;
        if (splits >= spec.max_subdivisions) {
            std::ostringstream os;
            os << "integrate: error estimate " << err << " above tolerance after "
               << splits << " subdivisions";
            throw NonConvergence(os.str());
        }
        Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Segment lhs = gk15(g, worst.a, mid);
        Segment rhs = gk15(g, mid, worst.b);
        total += lhs.value + rhs.value - worst.value;
        err += lhs.error + rhs.error - worst.error;
        if (lhs.error + rhs.error > 0.99 * worst.error)
            ++stalls;
        heap.push(lhs);
        heap.push(rhs);
        ++splits;
    }
    return {total, err};
}

QuadResult integrate(const Integrand& g, double a, double b,
                     const std::vector<double>& breakpoints,
                     const QuadratureSpec& spec) {
    std::vector<double> pts{a};
    for (double p : breakpoints)
        if (p > a && p < b)
            pts.push_back(p);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());

    QuadResult out;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        QuadResult piece = integrate(g, pts[i], pts[i + 1], spec);
        out.value += piece.value;
        out.error += piece.error;
    }
    return out;
}

QuadResult integrate_semi_infinite(const Integrand& g,
                                   const QuadratureSpec& spec, double lo,
                                   const std::vector<double>& breakpoints) {
    auto mapped = [&g, lo](double t) {
        const double u = 1.0 - t;
        const double r = lo + t / u;
        const double v = g(r);
        return v == 0.0 ? 0.0 : v / (u * u);
    };
    std::vector<double> tpts;
    for (double r : breakpoints)
        if (r > lo) {
            const double x = r - lo;
            tpts.push_back(x / (1.0 + x));
        }
    return integrate(mapped, 0.0, 1.0, tpts, spec);
}

double legendre_p(int n, double x) {
    if (n < 0)
        throw DomainError("legendre_p: negative order");
    double pm1 = 1.0, p = x;
    if (n == 0)
        return 1.0;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0) * x * p - k * pm1) / (k + 1.0);
        pm1 = p;
        p = next;
    }
    return p;
}

std::complex<double> legendre_p(int n, std::complex<double> x) {
    if (n < 0)
        throw DomainError("legendre_p: negative order");
    std::complex<double> pm1 = 1.0, p = x;
    if (n == 0)
        return 1.0;
    for (int k = 1; k < n; ++k) {
        const std::complex<double> next =
            ((2.0 * k + 1.0) * x * p - double(k) * pm1) / double(k + 1);
        pm1 = p;
        p = next;
    }
    return p;
}

double identity1(double a, double b, int n) {
    if (!(a > std::abs(b)))
        throw DomainError("identity1: requires a > |b|");
    const double disc = a * a - b * b;
    const double root = std::sqrt(disc);
    const double pi = std::acos(-1.0);
    return pi * legendre_p(n, a / root) / std::pow(disc, 0.5 * (n + 1));
}

std::complex<double> identity1(std::complex<double> a, std::complex<double> b,
                               int n) {
    const std::complex<double> disc = a * a - b * b;
    if (disc == 0.0)
        throw DomainError("identity1: a^2 == b^2");
    const std::complex<double> root = std::sqrt(disc);
    const double pi = std::acos(-1.0);
    return pi * legendre_p(n, a / root) / std::pow(disc, 0.5 * (n + 1));
}

double identity2_antiderivative(double t, double a1, double a2, double a3) {
    if (!(a3 > 0.0))
        throw DomainError("identity2: requires a3 > 0");
    const double t2 = t * t;
    const double R = a1 + a2 * t2 + a3 * t2 * t2;
    if (!(R > 0.0))
        throw DomainError("identity2: R(t) <= 0");
    const double delta = 4.0 * a1 * a3 - a2 * a2;
    const double scale = 4.0 * std::abs(a1 * a3) + a2 * a2;
    const double u = 2.0 * a3 * t2 + a2;
    if (std::abs(delta) < 1e-12 * scale)
        return std::log(u);
    if (delta > 0.0)
        return std::asinh(u / std::sqrt(delta));
    return std::log((2.0 * std::sqrt(a3 * R) + u) / std::sqrt(-delta));
}

std::complex<double> identity2_antiderivative(std::complex<double> t,
                                              std::complex<double> a1,
                                              std::complex<double> a2,
                                              std::complex<double> a3) {
    if (a3 == 0.0)
        throw DomainError("identity2: requires a3 != 0");
    const std::complex<double> t2 = t * t;
    const std::complex<double> R = a1 + a2 * t2 + a3 * t2 * t2;
    const std::complex<double> delta = 4.0 * a1 * a3 - a2 * a2;
    const std::complex<double> u = 2.0 * a3 * t2 + a2;
    const double scale = 4.0 * std::abs(a1 * a3) + std::norm(a2);
    if (std::abs(delta) < 1e-12 * scale)
        return std::log(u);
    // arcsinh(z) = log(z + sqrt(z^2 + 1)), principal branch.
    const std::complex<double> z = u / std::sqrt(delta);
    return std::log(z + std::sqrt(z * z + 1.0));
}

double brute_force_field(const std::function<double(double, double)>& h,
                         double r_max, const QuadratureSpec& spec) {
    if (!(r_max > 0.0))
        throw DomainError("brute_force_field: r_max must be positive");
    const double pi = std::acos(-1.0);
    QuadratureSpec inner = spec;
    inner.abs_tol = 0.1 * spec.abs_tol / std::max(1.0, r_max);
    inner.rel_tol = 0.1 * spec.rel_tol;
    auto radial = [&](double r) {
        auto ang = [&](double phi) { return h(r * std::cos(phi), r * std::sin(phi)); };
        return 2.0 * r * integrate(ang, 0.0, pi, inner).value;
    };
    return integrate(radial, 0.0, r_max, spec).value;
}

double brute_force_field(const Integrand& radial_weight, const Integrand& kernel,
                         double y0_norm, double r_max,
                         const QuadratureSpec& spec) {
    auto h = [&](double x1, double x2) {
        const double r = std::hypot(x1, x2);
        const double dist = std::hypot(x1 - y0_norm, x2);
        const double w = radial_weight(r);
        return w == 0.0 ? 0.0 : w * kernel(dist);
    };
    return brute_force_field(h, r_max, spec);
}

} // namespace aloha
