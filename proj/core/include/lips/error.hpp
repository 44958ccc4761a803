#pragma once

#include <stdexcept>
#include <string>

namespace lips {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad dimensions, bad literals, bad documents).
class InputError : public Error {
public:
    using Error::Error;
};

/// A documented enumeration cap (vertices, orthants, oracle size) was exceeded.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// An operation was called on a system outside its structural class.
class PreconditionError : public Error {
public:
    using Error::Error;
};

}  // namespace lips
