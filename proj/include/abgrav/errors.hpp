#pragma once

#include <stdexcept>
#include <string>

namespace abgrav {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad numeric input (non-positive radius, horizon violation, t outside a
// program's support, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Packet cannot be represented on the grid (width vs spacing, momentum vs
// Nyquist).
class ResolutionError : public Error {
public:
    using Error::Error;
};

// Too much of the packet's norm lies outside the allowed region (grid
// boundary at construction, interaction region during a run).
class ContainmentError : public Error {
public:
    using Error::Error;
};

// Scenario-level inconsistency (unequal arm durations, mismatched
// trajectory spans, missing metric parameters).
class ScenarioError : public Error {
public:
    using Error::Error;
};

// Time step violates a solver stability precondition.
class StepSizeError : public Error {
public:
    using Error::Error;
};

// Recorded phase samples are too far apart to unwrap reliably.
class SamplingError : public Error {
public:
    using Error::Error;
};

// Overlap between states too small for a meaningful relative phase.
class DecoherenceError : public Error {
public:
    using Error::Error;
};

// Configuration text could not be parsed (unknown key, bad literal).
class ParseError : public Error {
public:
    using Error::Error;
};

// Parsed configuration violates a scenario invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Bad CLI usage or an impossible output request (e.g. unresolvable fringe
// kick).
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace abgrav
