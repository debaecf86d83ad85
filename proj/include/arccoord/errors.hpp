#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace arccoord {

// Base class for everything this library throws. Subclasses map 1:1 onto
// the failure modes of the individual operations, so callers can catch as
// narrowly or as broadly as they like.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// -- combinatorics ----------------------------------------------------------

struct InvalidPermutation : Error {
    using Error::Error;
};

struct CircleMismatch : Error {
    using Error::Error;
};

struct ImproperSystem : Error {
    using Error::Error;
};

struct NotTrivalent : Error {
    using Error::Error;
};

// -- trigonometry / geometry ------------------------------------------------

struct NonPositiveLength : Error {
    using Error::Error;
};

struct DegenerateHexagon : Error {
    using Error::Error;
};

struct NumericalClosureFailure : Error {
    using Error::Error;
};

struct ConventionMismatch : Error {
    using Error::Error;
};

struct DifferentCircles : Error {
    using Error::Error;
};

struct BoundaryTooLong : Error {
    using Error::Error;
};

// -- solvers ----------------------------------------------------------------

struct NonFlippable : Error {
    using Error::Error;
};

struct FlipLimitExceeded : Error {
    using Error::Error;
};

struct InvalidTarget : Error {
    using Error::Error;
};

struct SingularJacobian : Error {
    using Error::Error;
};

// Newton failed to reach tolerance. Carries the best iterate found so far
// and its sup-norm residual; callers may inspect or retry.
struct NoConvergence : Error {
    std::vector<double> best;
    double residual;

    NoConvergence(const std::string& what, std::vector<double> best_iterate, double res)
        : Error(what), best(std::move(best_iterate)), residual(res) {}
};

} // namespace arccoord
