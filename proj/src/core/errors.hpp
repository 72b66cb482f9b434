#pragma once

#include <stdexcept>
#include <string>

namespace aloha {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Shape tail decays too slowly for the requested quantity.
struct TailConditionError : Error {
    using Error::Error;
};

// Adaptive quadrature exhausted its subdivision budget above tolerance.
struct NonConvergence : Error {
    using Error::Error;
};

// Noise alone exceeds the outage budget; no positive density exists.
struct InfeasibleError : Error {
    using Error::Error;
};

// Objective varies below resolution over the search range.
struct FlatObjectiveError : Error {
    using Error::Error;
};

// Malformed scenario file or JSON text.
struct ParseError : Error {
    using Error::Error;
};

} // namespace aloha
