#pragma once

#include <stdexcept>
#include <string>

namespace polynet {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input document (bad JSON, bad rational string, missing field).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// Structurally invalid network (self-edge, duplicate edge, bad mass, ...).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

/// Operation requires a polynomial of higher degree (constant second
/// derivative has no adjusted representation).
class DegreeTooLow : public Error {
public:
    explicit DegreeTooLow(const std::string& what) : Error(what) {}
};

/// Vandermonde selector input values repeat or contain zero.
class DegenerateInput : public Error {
public:
    explicit DegenerateInput(const std::string& what) : Error(what) {}
};

class UnknownVertex : public Error {
public:
    explicit UnknownVertex(const std::string& what) : Error(what) {}
};

class NoSuchEdge : public Error {
public:
    explicit NoSuchEdge(const std::string& what) : Error(what) {}
};

/// Operation not defined for the network's mode (e.g. the refinement
/// algorithm on a harmonic network).
class ModeError : public Error {
public:
    explicit ModeError(const std::string& what) : Error(what) {}
};

class UnknownController : public Error {
public:
    explicit UnknownController(const std::string& what) : Error(what) {}
};

/// Hard safety cap exceeded (set-family blow-up on pathological input).
class CapacityError : public Error {
public:
    explicit CapacityError(const std::string& what) : Error(what) {}
};

} // namespace polynet
