#pragma once

#include <cmath>
#include <limits>

#include "core/errors.hpp"

namespace aloha {

// Link parameters: path loss (c + dist^alpha)^-1, link distance d,
// noise-to-signal ratio eta, SINR threshold beta.
struct ChannelParams {
    int alpha = 4; // 2 or 4
    double c = 1.0;
    double d = 10.0;
    double eta = 0.0;
    double beta = 1.0;

    void check() const {
        if (alpha != 2 && alpha != 4)
            throw DomainError("channel: alpha must be 2 or 4");
        if (!(c > 0.0))
            throw DomainError("channel: c must be positive");
        if (!(d > 0.0))
            throw DomainError("channel: d must be positive");
        if (!(eta >= 0.0))
            throw DomainError("channel: eta must be non-negative");
        if (!(beta > 0.0))
            throw DomainError("channel: beta must be positive");
    }
};

inline double path_loss(double dist, const ChannelParams& ch) {
    if (!(dist >= 0.0))
        throw DomainError("path_loss: negative distance");
    const double da = ch.alpha == 2 ? dist * dist : dist * dist * dist * dist;
    return 1.0 / (ch.c + da);
}

// SINR = g / (eta + (c + d^alpha) * I). Noiseless interference-free links
// return +inf (never in outage for finite beta).
inline double sinr(double fading_gain, double interference,
                   const ChannelParams& ch) {
    if (!(fading_gain >= 0.0) || !(interference >= 0.0))
        throw DomainError("sinr: gain and interference must be non-negative");
    const double denom = ch.eta + interference / path_loss(ch.d, ch);
    if (denom == 0.0)
        return std::numeric_limits<double>::infinity();
    return fading_gain / denom;
}

} // namespace aloha
