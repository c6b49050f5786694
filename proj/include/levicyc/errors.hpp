#pragma once

#include <stdexcept>
#include <string>

namespace levicyc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Parameter outside the documented range of a builder or query.
class BadParam : public Error {
   public:
    using Error::Error;
};

class ExponentOutOfRange : public BadParam {
   public:
    using BadParam::BadParam;
};

class DuplicateExponent : public BadParam {
   public:
    using BadParam::BadParam;
};

// Incidence data that fails validation (raised on construction and on read).
class InvalidArrangement : public Error {
   public:
    using Error::Error;
};

class ParseError : public Error {
   public:
    using Error::Error;
};

class DivisionByZero : public Error {
   public:
    using Error::Error;
};

class ConductorMismatch : public Error {
   public:
    using Error::Error;
};

class IdenticalLines : public Error {
   public:
    using Error::Error;
};

class IdenticalPoints : public Error {
   public:
    using Error::Error;
};

class DuplicateLine : public Error {
   public:
    using Error::Error;
};

// Cycle length below 3 (a length-4 cycle would need two lines meeting twice).
class BadLength : public Error {
   public:
    using Error::Error;
};

class TooLarge : public Error {
   public:
    using Error::Error;
};

class TheoremOutOfScope : public Error {
   public:
    using Error::Error;
};

}  // namespace levicyc
