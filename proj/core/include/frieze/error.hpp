#pragma once

#include <stdexcept>
#include <string>

namespace frieze {

// Base of every domain error thrown by the library. The CLI maps these to
// exit code 1; anything else is a bug.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class NotAFrieze : public Error {
public:
    NotAFrieze() : Error("not a frieze: no translation generated") {}
};

class InconsistentFlags : public Error {
public:
    explicit InconsistentFlags(const std::string& detail)
        : Error("inconsistent symmetry flags: " + detail) {}
};

class MalformedMotif : public Error {
public:
    explicit MalformedMotif(const std::string& detail) : Error("malformed motif: " + detail) {}
};

class OutOfCell : public Error {
public:
    explicit OutOfCell(const std::string& detail) : Error("point outside motif cell: " + detail) {}
};

class PeriodMismatch : public Error {
public:
    explicit PeriodMismatch(const std::string& detail) : Error("period mismatch: " + detail) {}
};

class NonIntegralRaster : public Error {
public:
    explicit NonIntegralRaster(const std::string& detail)
        : Error("non-integral raster: " + detail) {}
};

class MalformedPgm : public Error {
public:
    explicit MalformedPgm(const std::string& detail) : Error("malformed pgm: " + detail) {}
};

class NoPeriod : public Error {
public:
    NoPeriod() : Error("no period: image does not repeat horizontally") {}
};

class OddPeriodGlide : public Error {
public:
    explicit OddPeriodGlide(int period)
        : Error("glide probe needs an even period, got " + std::to_string(period)) {}
};

}  // namespace frieze
