#pragma once

#include <stdexcept>
#include <string>

namespace hjs {

/// Base class for failures of the numerical machinery (as opposed to bad input).
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An iteration ran out of budget; the message carries the last residual.
struct NoConvergence : SolverError {
    using SolverError::SolverError;
};

/// An iterate left the a-priori ball that minimizers are known to live in.
struct BlowUp : SolverError {
    using SolverError::SolverError;
};

/// 1-D conjugate maximization found no decreasing tail (input not superlinear).
struct Unbounded : SolverError {
    using SolverError::SolverError;
};

/// Multi-start consensus failed where a unique extremizer was required.
struct UniquenessViolation : SolverError {
    using SolverError::SolverError;
};

/// Arc tracing was asked to start from a point that is not singular.
struct NotSingularSeed : SolverError {
    using SolverError::SolverError;
};

/// No trial time made the convexity probe pass.
struct ProbeFailure : SolverError {
    using SolverError::SolverError;
};

/// Difference quotients diverged while sampling gradients.
struct DegenerateSamples : SolverError {
    using SolverError::SolverError;
};

/// Scenario configuration rejected; message carries the offending field path.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownFixture : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridLoadError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hjs
