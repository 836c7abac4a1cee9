#pragma once

#include <stdexcept>
#include <string>

namespace obdim {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidRank : public Error {
public:
    using Error::Error;
};

class NotSimpleRoot : public Error {
public:
    using Error::Error;
};

class NoWitness : public Error {
public:
    using Error::Error;
};

class LemmaFailure : public Error {
public:
    using Error::Error;
};

class BadVertex : public Error {
public:
    using Error::Error;
};

class BadSimplex : public Error {
public:
    using Error::Error;
};

class Singular : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class MissingAnisotropicDimension : public Error {
public:
    using Error::Error;
};

class InvalidGroupSpec : public Error {
public:
    using Error::Error;
};

}  // namespace obdim
