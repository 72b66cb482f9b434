#include "core/sim.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "core/analytic.hpp"
#include "core/quadrature.hpp"

namespace aloha {

namespace {

const double kPi = std::acos(-1.0);

void parallel_for(long long n, const std::function<void(long long)>& body) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0)
        hw = 4;
    const unsigned workers = std::min<unsigned>(hw, 16);
    if (n < 256 || workers <= 1) {
        for (long long i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::vector<std::thread> pool;
    const long long chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const long long lo = w * chunk;
        const long long hi = std::min<long long>(n, lo + chunk);
        if (lo >= hi)
            break;
        pool.emplace_back([lo, hi, &body] {
            for (long long i = lo; i < hi; ++i)
                body(i);
        });
    }
    for (auto& t : pool)
        t.join();
}

} // namespace

uint64_t trial_seed(uint64_t master, uint64_t trial) {
    // splitmix64 finalizer over master-offset stream index.
    uint64_t z = master + (trial + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double pairwise_sum(const double* v, size_t n) {
    if (n == 0)
        return 0.0;
    if (n <= 8) {
        double s = 0.0;
        for (size_t i = 0; i < n; ++i)
            s += v[i];
        return s;
    }
    const size_t half = n / 2;
    return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

double tail_interference_bound(const NetworkScenario& s, double y0,
                               double r_max) {
    const ChannelParams& ch = s.channel;
    auto g = [&](double r) {
        const double F = s.shape.eval(r);
        if (F == 0.0)
            return 0.0;
        const double gap = std::max(0.0, r - y0);
        const double pa = ch.alpha == 2 ? gap * gap : gap * gap * gap * gap;
        return 2.0 * kPi * r * F / (ch.c + pa);
    };
    QuadratureSpec spec;
    spec.abs_tol = 1e-12;
    spec.rel_tol = 1e-6;
    return s.lambda * integrate_semi_infinite(g, spec, r_max).value;
}

double choose_r_max(const NetworkScenario& s, double y0, double tail_tol) {
    const auto& bp = s.shape.breakpoints();
    double r = std::max({10.0, y0 + 10.0, bp.empty() ? 0.0 : bp.back(),
                         s.shape.tail_onset() / 2.0});
    for (int i = 0; i < 40; ++i) {
        if (tail_interference_bound(s, y0, r) < tail_tol)
            return r;
        r *= 2.0;
    }
    throw NonConvergence(
        "choose_r_max: truncation bound does not fall below tail_tol; "
        "tail too dense for window simulation");
}

std::vector<Point> sample_ppp(const ShapeFunction& shape, double lambda,
                              double r_max, uint64_t seed) {
    std::vector<Point> pts;
    if (lambda <= 0.0)
        return pts;
    std::mt19937_64 rng(seed);
    std::poisson_distribution<long long> pois(lambda * kPi * r_max * r_max);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const long long n = pois(rng);
    pts.reserve(size_t(n / 4 + 4));
    for (long long i = 0; i < n; ++i) {
        const double r = r_max * std::sqrt(uni(rng));
        const double phi = 2.0 * kPi * uni(rng);
        const double keep = uni(rng);
        if (keep < shape.eval(r))
            pts.push_back({r * std::cos(phi), r * std::sin(phi)});
    }
    return pts;
}

LinkSamples simulate_link(const NetworkScenario& s, double rx_x, double rx_y,
                          const SimConfig& cfg) {
    if (cfg.trials < 1)
        throw DomainError("simulate_link: trials must be >= 1");
    const double y0 = std::hypot(rx_x, rx_y);
    const double r_max =
        cfg.r_max > 0.0 ? cfg.r_max : choose_r_max(s, y0, cfg.tail_tol);
    LinkSamples ls;
    ls.r_max = r_max;
    ls.interference.resize(size_t(cfg.trials));
    ls.sinr.resize(size_t(cfg.trials));
    ls.outage.resize(size_t(cfg.trials));
    const ChannelParams& ch = s.channel;

    parallel_for(cfg.trials, [&](long long t) {
        std::mt19937_64 rng(trial_seed(cfg.master_seed, uint64_t(t)));
        std::exponential_distribution<double> expo(1.0);
        std::poisson_distribution<long long> pois(s.lambda * kPi * r_max * r_max);
        std::uniform_real_distribution<double> uni(0.0, 1.0);

        double interference = 0.0;
        const long long n = s.lambda > 0.0 ? pois(rng) : 0;
        for (long long i = 0; i < n; ++i) {
            const double r = r_max * std::sqrt(uni(rng));
            const double phi = 2.0 * kPi * uni(rng);
            if (uni(rng) >= s.shape.eval(r))
                continue;
            const double dist =
                std::hypot(r * std::cos(phi) - rx_x, r * std::sin(phi) - rx_y);
            const double gain = cfg.unit_gain ? 1.0 : expo(rng);
            interference += gain * path_loss(dist, ch);
        }
        const double g0 = cfg.unit_gain ? 1.0 : expo(rng);
        const double snr = sinr(g0, interference, ch);
        ls.interference[size_t(t)] = interference;
        ls.sinr[size_t(t)] = snr;
        ls.outage[size_t(t)] = snr < ch.beta ? 1 : 0;
    });
    return ls;
}

void dump_link_samples(const LinkSamples& ls, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw Error("dump_link_samples: cannot open '" + path + "'");
    out << "trial_index,interference,sinr,outage_flag\n";
    char buf[128];
    for (size_t t = 0; t < ls.interference.size(); ++t) {
        std::snprintf(buf, sizeof buf, "%zu,%.12g,%.12g,%d\n", t,
                      ls.interference[t], ls.sinr[t], int(ls.outage[t]));
        out << buf;
    }
}

namespace {

SimEstimate reduce_mean(const std::vector<double>& v, const SimConfig& cfg) {
    const size_t n = v.size();
    SimEstimate e;
    e.trials = (long long)n;
    e.master_seed = cfg.master_seed;
    e.mean = pairwise_sum(v.data(), n) / double(n);
    if (n > 1) {
        std::vector<double> sq(n);
        for (size_t i = 0; i < n; ++i) {
            const double d = v[i] - e.mean;
            sq[i] = d * d;
        }
        const double var = pairwise_sum(sq.data(), n) / double(n - 1);
        e.std_error = std::sqrt(var / double(n));
    }
    e.ci95_low = e.mean - 1.96 * e.std_error;
    e.ci95_high = e.mean + 1.96 * e.std_error;
    return e;
}

} // namespace

SimEstimate estimate_mean_interference(const NetworkScenario& s, double y0,
                                       const SimConfig& cfg,
                                       const LinkSamples* pre) {
    LinkSamples local;
    if (!pre) {
        local = simulate_link(s, y0, 0.0, cfg);
        pre = &local;
    }
    return reduce_mean(pre->interference, cfg);
}

SimEstimate estimate_outage(const NetworkScenario& s, double y0,
                            const SimConfig& cfg, const LinkSamples* pre) {
    LinkSamples local;
    if (!pre) {
        local = simulate_link(s, y0, 0.0, cfg);
        pre = &local;
    }
    const size_t n = pre->outage.size();
    long long k = 0;
    for (uint8_t f : pre->outage)
        k += f;
    SimEstimate e;
    e.trials = (long long)n;
    e.master_seed = cfg.master_seed;
    e.mean = double(k) / double(n);
    e.std_error = std::sqrt(e.mean * (1.0 - e.mean) / double(n));
    e.ci95_low = e.mean - 1.96 * e.std_error;
    e.ci95_high = e.mean + 1.96 * e.std_error;
    return e;
}

SimEstimate estimate_laplace(const NetworkScenario& s, double y0, double s_arg,
                             const SimConfig& cfg, const LinkSamples* pre) {
    if (!(s_arg >= 0.0))
        throw DomainError("estimate_laplace: s must be non-negative");
    LinkSamples local;
    if (!pre) {
        local = simulate_link(s, y0, 0.0, cfg);
        pre = &local;
    }
    std::vector<double> v(pre->interference.size());
    for (size_t i = 0; i < v.size(); ++i)
        v[i] = std::exp(-s_arg * pre->interference[i]);
    return reduce_mean(v, cfg);
}

SimEstimate estimate_ast(const NetworkScenario& s, const SimConfig& cfg,
                         std::optional<double> lambda_r,
                         std::optional<double> beta_override) {
    if (cfg.trials < 1)
        throw DomainError("estimate_ast: trials must be >= 1");
    if (!(s.shape.tail_nu() > 2.0))
        throw TailConditionError("estimate_ast: requires tail_nu > 2");
    ChannelParams ch = s.channel;
    if (beta_override)
        ch.beta = *beta_override;

    // Population radius: all but tail_tol of the mass int r F(r) dr inside.
    QuadratureSpec spec;
    spec.abs_tol = 1e-12;
    spec.rel_tol = 1e-8;
    auto rF = [&](double r) { return r * s.shape.eval(r); };
    const double total_mass =
        integrate_semi_infinite(rF, spec, 0.0, s.shape.breakpoints()).value;
    double r_pop = std::max(10.0, s.shape.breakpoints().empty()
                                      ? 10.0
                                      : s.shape.breakpoints().back());
    while (integrate_semi_infinite(rF, spec, r_pop).value >
           cfg.tail_tol * total_mass)
        r_pop *= 2.0;
    // Sampling window covers every counted receiver plus interference margin.
    const double reach = r_pop + ch.d;
    const double r_samp =
        cfg.r_max > 0.0 ? cfg.r_max : choose_r_max(s, reach, cfg.tail_tol);

    std::vector<double> succ(size_t(cfg.trials)), tot(size_t(cfg.trials));
    parallel_for(cfg.trials, [&](long long t) {
        std::mt19937_64 rng(trial_seed(cfg.master_seed ^ 0xA57ull, uint64_t(t)));
        std::exponential_distribution<double> expo(1.0);
        std::uniform_real_distribution<double> uni(0.0, 1.0);

        const std::vector<Point> tx =
            sample_ppp(s.shape, s.lambda, r_samp, trial_seed(cfg.master_seed, uint64_t(t)));
        std::vector<Point> rx;
        if (lambda_r)
            rx = sample_ppp(s.shape, *lambda_r, r_samp,
                            trial_seed(cfg.master_seed ^ 0x5CEEDull, uint64_t(t)));

        double ns = 0.0, nt = 0.0;
        for (size_t i = 0; i < tx.size(); ++i) {
            if (std::hypot(tx[i].x, tx[i].y) > r_pop)
                continue;
            nt += 1.0;
            double link_d = ch.d;
            double rx_x = 0.0, rx_y = 0.0;
            if (lambda_r) {
                // nearest-neighbor receiver
                double best = std::numeric_limits<double>::infinity();
                size_t bi = rx.size();
                for (size_t k = 0; k < rx.size(); ++k) {
                    const double dd = std::hypot(rx[k].x - tx[i].x, rx[k].y - tx[i].y);
                    if (dd < best) {
                        best = dd;
                        bi = k;
                    }
                }
                if (bi == rx.size())
                    continue; // no receiver at all: never successful
                link_d = best;
                rx_x = rx[bi].x;
                rx_y = rx[bi].y;
            } else {
                const double phi = 2.0 * kPi * uni(rng);
                rx_x = tx[i].x + ch.d * std::cos(phi);
                rx_y = tx[i].y + ch.d * std::sin(phi);
            }
            double interference = 0.0;
            for (size_t k = 0; k < tx.size(); ++k) {
                if (k == i)
                    continue;
                const double dist = std::hypot(tx[k].x - rx_x, tx[k].y - rx_y);
                interference += expo(rng) * path_loss(dist, ch);
            }
            ChannelParams link = ch;
            link.d = link_d;
            link.eta = lambda_r ? eta_at_distance(ch, link_d) : ch.eta;
            const double snr = sinr(expo(rng), interference, link);
            if (snr >= link.beta)
                ns += 1.0;
        }
        succ[size_t(t)] = ns;
        tot[size_t(t)] = nt;
    });

    const double n = double(cfg.trials);
    const double sbar = pairwise_sum(succ.data(), succ.size()) / n;
    const double tbar = pairwise_sum(tot.data(), tot.size()) / n;
    SimEstimate e;
    e.trials = cfg.trials;
    e.master_seed = cfg.master_seed;
    if (tbar == 0.0) {
        e.mean = 0.0;
        e.ci95_low = e.ci95_high = 0.0;
        return e;
    }
    e.mean = sbar / tbar;
    if (cfg.trials > 1) {
        std::vector<double> res(size_t(cfg.trials));
        for (size_t i = 0; i < res.size(); ++i) {
            const double d = succ[i] - e.mean * tot[i];
            res[i] = d * d;
        }
        const double var = pairwise_sum(res.data(), res.size()) / (n - 1.0);
        e.std_error = std::sqrt(var / n) / tbar;
    }
    e.ci95_low = e.mean - 1.96 * e.std_error;
    e.ci95_high = e.mean + 1.96 * e.std_error;
    return e;
}

} // namespace aloha
