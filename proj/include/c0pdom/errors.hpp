#ifndef C0PDOM_ERRORS_HPP
#define C0PDOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace c0pdom {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct SelfLoop : Error {
    using Error::Error;
};

struct EmptyGraph : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

// The classified partition broke a C0P structural invariant; indicates an
// internal bug or a certificate that was not produced by the recognizer.
struct StructureViolation : Error {
    using Error::Error;
};

struct NotC0PError : Error {
    using Error::Error;
};

// A witness failed its final domination check. Never returned silently.
struct ConstructionFailure : Error {
    using Error::Error;
};

struct CapExceeded : Error {
    using Error::Error;
};

struct SpecViolation : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    ParseError(int line_no, const std::string& what)
        : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

}  // namespace c0pdom

#endif
