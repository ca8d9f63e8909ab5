#pragma once

#include <stdexcept>
#include <string>

namespace ringinv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands belong to different rings.
class RingMismatch : public Error {
public:
    using Error::Error;
};

class NotAUnit : public Error {
public:
    using Error::Error;
};

/// Enumeration or exhaustive verification requested on an infinite ring.
class NotFinite : public Error {
public:
    using Error::Error;
};

class NotRegular : public Error {
public:
    using Error::Error;
};

/// inverse_apply on a scaling map whose element is not a unit.
class NotBijective : public Error {
public:
    using Error::Error;
};

/// A centralizer-based criterion was handed a map that is not a bijective
/// centralizer; the criterion is unsound there.
class NotBijectiveCentralizer : public Error {
public:
    using Error::Error;
};

class PreconditionFailed : public Error {
public:
    using Error::Error;
};

/// A closed-form candidate failed its defining equations. Never expected to
/// fire; raised instead of returning a wrong value.
class InternalFormulaMismatch : public Error {
public:
    using Error::Error;
};

/// Malformed ring spec or element literal.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace ringinv
