#pragma once

#include <stdexcept>
#include <string>

namespace toughham {

// Base class for all library errors. The CLI maps these to exit codes;
// nothing below main() should terminate on malformed input.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedGraph6Error : Error {
    using Error::Error;
};

struct MalformedEdgeListError : Error {
    using Error::Error;
};

// n > 64, or a construction whose total size would exceed 64 vertices.
struct TooLargeError : Error {
    using Error::Error;
};

struct InvalidSizeError : Error {
    using Error::Error;
};

struct EmptyGraphError : Error {
    using Error::Error;
};

// A solver was asked to run beyond its configured cap.
struct CapExceededError : Error {
    using Error::Error;
};

struct NotOnCycleError : Error {
    using Error::Error;
};

struct TooSmallError : Error {
    using Error::Error;
};

struct NoExteriorVertexError : Error {
    using Error::Error;
};

struct ArcTooShortError : Error {
    using Error::Error;
};

struct SNotCutError : Error {
    using Error::Error;
};

// A certificate or witness failed re-validation. This always signals an
// internal bug, never a property of the input graph.
struct ValidationError : Error {
    using Error::Error;
};

}  // namespace toughham
