#pragma once

#include <stdexcept>
#include <string>

namespace iotviz {

// Base of every error raised by the library. Callers that only care about
// "the input was bad" can catch this one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed document text (not parseable as JSON at all).
class SyntaxError : public Error {
public:
    using Error::Error;
};

// Parseable, but a required field is missing, has the wrong type, an enum
// value is unknown, or a value violates a range constraint.
class SchemaError : public Error {
public:
    using Error::Error;
};

// A record names a floor/room/device that is not declared.
class ReferenceError : public Error {
public:
    using Error::Error;
};

class DuplicateIdError : public Error {
public:
    using Error::Error;
};

class UnknownMaterialError : public Error {
public:
    using Error::Error;
};

class ArgumentError : public Error {
public:
    using Error::Error;
};

// A coordinate went NaN/Inf during integration; almost always a force
// constant that is orders of magnitude too large for the time step.
class NonFiniteStateError : public Error {
public:
    using Error::Error;
};

class EmptyRoomError : public Error {
public:
    using Error::Error;
};

class EmptyBuildingError : public Error {
public:
    using Error::Error;
};

}  // namespace iotviz
