#pragma once

#include <stdexcept>
#include <string>

namespace graphfit {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// The dataset has zero total variance about its mean, so ratio measures
// (FVU) and principal directions are undefined.
class DegenerateDataError : public Error {
public:
  DegenerateDataError() : Error("degenerate dataset") {}
};

class IoError : public Error {
public:
  explicit IoError(const std::string& what) : Error(what) {}
};

// A valid request outside what this build supports (e.g. plotting data of
// dimension other than 2).
class UnsupportedError : public Error {
public:
  explicit UnsupportedError(const std::string& what) : Error(what) {}
};

}  // namespace graphfit
