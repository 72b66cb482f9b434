#include "core/shape.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

#include "core/errors.hpp"

namespace aloha {

ShapeFunction ShapeFunction::exp_power(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw DomainError("exp_power shape: a and b must be positive");
    ShapeFunction s;
    s.eval_ = [a, b](double r) { return std::exp(-std::pow(r / a, b)); };
    s.deriv_ = [a, b](double r) {
        if (r <= 0.0)
            return b > 1.0 ? 0.0 : (b == 1.0 ? -1.0 / a : -std::numeric_limits<double>::infinity());
        const double u = std::pow(r / a, b);
        return -(b / r) * u * std::exp(-u);
    };
    s.breakpoints_ = {a};
    s.tail_nu_ = kNuInfinity;
    s.tail_onset_ = 4.0 * a;
    s.kind_ = "exp_power";
    std::ostringstream os;
    os << "exp_power(a=" << a << ",b=" << b << ")";
    s.describe_ = os.str();
    return s;
}

ShapeFunction ShapeFunction::exponential(double a) {
    if (!(a > 0.0))
        throw DomainError("exponential shape: a must be positive");
    ShapeFunction s;
    s.eval_ = [a](double r) { return std::exp(-r / a); };
    s.deriv_ = [a](double r) { return -std::exp(-r / a) / a; };
    s.tail_nu_ = kNuInfinity;
    s.tail_onset_ = 10.0 * a;
    s.kind_ = "exponential";
    std::ostringstream os;
    os << "exponential(a=" << a << ")";
    s.describe_ = os.str();
    return s;
}

ShapeFunction ShapeFunction::disk(double radius) {
    if (!(radius > 0.0))
        throw DomainError("disk shape: radius must be positive");
    ShapeFunction s;
    s.eval_ = [radius](double r) { return r <= radius ? 1.0 : 0.0; };
    s.deriv_ = [](double) { return 0.0; };
    s.jumps_ = {{radius, 1.0}};
    s.breakpoints_ = {radius};
    s.tail_nu_ = kNuInfinity;
    s.tail_onset_ = radius;
    s.has_continuous_part_ = false;
    s.kind_ = "disk";
    std::ostringstream os;
    os << "disk(R=" << radius << ")";
    s.describe_ = os.str();
    return s;
}

ShapeFunction ShapeFunction::constant() {
    ShapeFunction s;
    s.eval_ = [](double) { return 1.0; };
    s.deriv_ = [](double) { return 0.0; };
    s.tail_nu_ = 0.0;
    s.tail_limit_ = 1.0;
    s.has_continuous_part_ = false;
    s.kind_ = "constant";
    s.describe_ = "constant";
    return s;
}

ShapeFunction ShapeFunction::power_law(double nu) {
    if (!(nu > 0.0))
        throw DomainError("power_law shape: nu must be positive");
    ShapeFunction s;
    s.eval_ = [nu](double r) { return std::pow(1.0 + r, -nu); };
    s.deriv_ = [nu](double r) { return -nu * std::pow(1.0 + r, -nu - 1.0); };
    s.tail_nu_ = nu;
    s.tail_onset_ = std::max(100.0, 20.0 * nu);
    s.tail_limit_ = 1.0;
    s.kind_ = "power_law";
    std::ostringstream os;
    os << "power_law(nu=" << nu << ")";
    s.describe_ = os.str();
    return s;
}

ShapeFunction ShapeFunction::hotspot(double r0, double r1) {
    if (!(r0 >= 0.0) || !(r1 > r0))
        throw DomainError("hotspot shape: requires 0 <= r0 < r1");
    const double pi = std::acos(-1.0);
    const double w = r1 - r0;
    ShapeFunction s;
    s.eval_ = [r0, r1, w, pi](double r) {
        if (r <= r0)
            return 1.0;
        if (r >= r1)
            return 0.0;
        return 0.5 * (1.0 + std::cos(pi * (r - r0) / w));
    };
    s.deriv_ = [r0, r1, w, pi](double r) {
        if (r <= r0 || r >= r1)
            return 0.0;
        return -0.5 * (pi / w) * std::sin(pi * (r - r0) / w);
    };
    s.breakpoints_ = {r0, r1};
    s.tail_nu_ = kNuInfinity;
    s.tail_onset_ = r1;
    s.kind_ = "hotspot";
    std::ostringstream os;
    os << "hotspot(r0=" << r0 << ",r1=" << r1 << ")";
    s.describe_ = os.str();
    return s;
}

namespace {

// Fritsch-Carlson monotone cubic Hermite interpolation.
struct MonotoneCubic {
    std::vector<double> x, y, m;

    MonotoneCubic(std::vector<double> xs, std::vector<double> ys)
        : x(std::move(xs)), y(std::move(ys)) {
        const size_t n = x.size();
        std::vector<double> d(n - 1);
        for (size_t i = 0; i + 1 < n; ++i) {
            const double h = x[i + 1] - x[i];
            if (!(h > 0.0))
                throw DomainError("tabulated shape: radii must be strictly increasing");
            d[i] = (y[i + 1] - y[i]) / h;
        }
        m.resize(n);
        m[0] = d[0];
        m[n - 1] = d[n - 2];
        for (size_t i = 1; i + 1 < n; ++i)
            m[i] = (d[i - 1] * d[i] <= 0.0) ? 0.0 : 0.5 * (d[i - 1] + d[i]);
        for (size_t i = 0; i + 1 < n; ++i) {
            if (d[i] == 0.0) {
                m[i] = m[i + 1] = 0.0;
                continue;
            }
            const double a = m[i] / d[i];
            const double b = m[i + 1] / d[i];
            const double s2 = a * a + b * b;
            if (s2 > 9.0) {
                const double tau = 3.0 / std::sqrt(s2);
                m[i] = tau * a * d[i];
                m[i + 1] = tau * b * d[i];
            }
        }
    }

    size_t segment(double r) const {
        auto it = std::upper_bound(x.begin(), x.end(), r);
        size_t i = size_t(it - x.begin());
        if (i == 0)
            return 0;
        if (i >= x.size())
            return x.size() - 2;
        return i - 1;
    }

    double eval(double r) const {
        if (r <= x.front())
            return y.front();
        if (r >= x.back())
            return y.back();
        const size_t i = segment(r);
        const double h = x[i + 1] - x[i];
        const double t = (r - x[i]) / h;
        const double t2 = t * t, t3 = t2 * t;
        return (2 * t3 - 3 * t2 + 1) * y[i] + (t3 - 2 * t2 + t) * h * m[i] +
               (-2 * t3 + 3 * t2) * y[i + 1] + (t3 - t2) * h * m[i + 1];
    }

    double deriv(double r) const {
        if (r < x.front() || r > x.back())
            return 0.0;
        const size_t i = segment(r);
        const double h = x[i + 1] - x[i];
        const double t = (r - x[i]) / h;
        const double t2 = t * t;
        return ((6 * t2 - 6 * t) * (y[i] - y[i + 1]) / h +
                (3 * t2 - 4 * t + 1) * m[i] + (3 * t2 - 2 * t) * m[i + 1]);
    }
};

} // namespace

ShapeFunction ShapeFunction::tabulated(std::vector<double> radii,
                                       std::vector<double> values,
                                       double tail_nu, double tail_onset,
                                       double tail_limit) {
    if (radii.size() < 2 || radii.size() != values.size())
        throw DomainError("tabulated shape: need >= 2 matching samples");
    for (double v : values)
        if (!(v >= 0.0))
            throw DomainError("tabulated shape: negative sample");
    auto spline = std::make_shared<MonotoneCubic>(std::move(radii), std::move(values));
    ShapeFunction s;
    s.eval_ = [spline](double r) { return spline->eval(r); };
    s.deriv_ = [spline](double r) { return spline->deriv(r); };
    s.breakpoints_ = spline->x;
    s.tail_nu_ = tail_nu;
    s.tail_onset_ = tail_onset;
    s.tail_limit_ = tail_limit;
    double best = spline->y[0];
    double arg = spline->x[0];
    for (size_t i = 1; i < spline->x.size(); ++i)
        if (spline->y[i] > best) {
            best = spline->y[i];
            arg = spline->x[i];
        }
    s.maximizer_ = arg;
    s.kind_ = "tabulated";
    std::ostringstream os;
    os << "tabulated(n=" << spline->x.size() << ")";
    s.describe_ = os.str();
    return s;
}

QuadResult ShapeFunction::stieltjes(const Integrand& g,
                                    const QuadratureSpec& spec) const {
    QuadResult out;
    if (has_continuous_part_) {
        auto integrand = [this, &g](double r) {
            const double fr = deriv_(r);
            return fr == 0.0 ? 0.0 : fr * g(r);
        };
        out = integrate_semi_infinite(integrand, spec, 0.0, breakpoints_);
    }
    for (const Jump& j : jumps_)
        out.value -= j.drop * g(j.r);
    return out;
}

} // namespace aloha
