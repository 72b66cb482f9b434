#pragma once

#include <string>
#include <vector>

#include "core/channel.hpp"
#include "core/shape.hpp"

namespace aloha {

// One fully specified analysis case: shape, base intensity, link parameters.
struct NetworkScenario {
    ShapeFunction shape = ShapeFunction::constant();
    double lambda = 0.0; // nodes per unit area, thinned by F(r)
    ChannelParams channel;
};

struct Violation {
    enum class Severity { Error, Warning };
    Severity severity;
    std::string message;
};

// Checks the model restrictions: F >= 0, normalization max F = 1, channel
// parameter ranges, lambda > 0, shape/derivative consistency, and the
// alpha-dependent tail condition (alpha = 2 requires nu > 0). AST needing
// nu > 2 is reported as a warning, not an error. Pure; violations are data.
std::vector<Violation> validate_scenario(const NetworkScenario& s);

inline bool has_errors(const std::vector<Violation>& v) {
    for (const auto& x : v)
        if (x.severity == Violation::Severity::Error)
            return true;
    return false;
}

// Scenario files are JSON:
//   { "shape":   { "kind": "...", "params": { ... } },
//     "lambda":  0.001,
//     "channel": { "alpha": 2, "c": 1, "d": 10, "eta": 0.1, "beta": 0.5 } }
// eta and beta also accept dB strings ("-8dB"). Parse errors name the
// offending key (ParseError).
NetworkScenario load_scenario(const std::string& path);
NetworkScenario parse_scenario(const std::string& json_text);

// Stable FNV-1a digest of the canonicalized scenario, for output provenance.
std::string scenario_digest(const NetworkScenario& s);

// Reference distance for the eta(d) convention: eta given in a scenario is
// understood at d_ref; random-distance metrics rescale it as
// eta(d) = eta_ref * (c + d^alpha) / (c + d_ref^alpha).
constexpr double kEtaReferenceDistance = 10.0;

double eta_at_distance(const ChannelParams& ch, double dist);

} // namespace aloha
