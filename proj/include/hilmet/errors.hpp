#pragma once

#include <stdexcept>
#include <string>

namespace hilmet {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inputs collapse below the degeneracy tolerance (coincident points, zero-length chords).
struct DegenerateInput : Error {
    using Error::Error;
};

// The two carrier lines of a requested intersection are parallel.
struct ParallelLines : Error {
    using Error::Error;
};

// Three points that must span a circle are collinear.
struct CollinearPoints : Error {
    using Error::Error;
};

// A point lies outside the model domain of a map or metric (unit ball, half plane).
struct OutOfDomain : Error {
    using Error::Error;
};

// A point lies outside the convex domain a metric is evaluated on.
struct OutsideDomain : Error {
    using Error::Error;
};

// A point is inside the domain but closer to the boundary than the evaluation margin.
struct NearBoundary : Error {
    using Error::Error;
};

// A point required to sit on the unit circle does not.
struct NotOnCircle : Error {
    using Error::Error;
};

// A polygon fails validation (orientation, strict convexity, vertex count).
struct DomainNotNormalized : Error {
    using Error::Error;
};

// An iterative solve exhausted its iteration cap without meeting its tolerance.
struct ConvergenceFailure : Error {
    using Error::Error;
};

}  // namespace hilmet
