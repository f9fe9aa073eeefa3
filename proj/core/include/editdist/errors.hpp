#pragma once

#include <stdexcept>
#include <string>

namespace editdist {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Weights from different spaces (or tuples of mismatched arity) were mixed.
struct SpaceMismatchError : Error {
    using Error::Error;
};

// Two segments cannot be concatenated.
struct CompositionError : Error {
    using Error::Error;
};

// A vertex, edge or segment does not belong to the graph it was used with.
struct NotInGraphError : Error {
    using Error::Error;
};

// An edit was applied where its preconditions fail (ghost outside O(G),
// shrink to zero, delete of a missing edge, ...).
struct InvalidEditError : Error {
    using Error::Error;
};

struct CycleError : Error {
    using Error::Error;
};

struct NotATreeError : Error {
    using Error::Error;
};

struct InvalidMappingError : Error {
    using Error::Error;
};

// Brute-force enumeration refused an instance above its size cap.
struct SizeLimitError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace editdist
