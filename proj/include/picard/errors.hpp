#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace picard {

// Base class for everything the library throws on bad input. `kind()` is a
// stable identifier used in machine-parsable CLI diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string_view kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  std::string_view kind() const noexcept { return kind_; }

 private:
  std::string_view kind_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error("UsageError", what) {}
};

class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(const std::string& what) : Error("DivisionByZero", what) {}
};

class InvalidField : public Error {
 public:
  explicit InvalidField(const std::string& what) : Error("InvalidField", what) {}
};

class DegenerateCurve : public Error {
 public:
  explicit DegenerateCurve(const std::string& what) : Error("DegenerateCurve", what) {}
};

class SingularCurve : public Error {
 public:
  explicit SingularCurve(const std::string& what) : Error("SingularCurve", what) {}
};

class OracleBoundExceeded : public Error {
 public:
  explicit OracleBoundExceeded(const std::string& what)
      : Error("OracleBoundExceeded", what) {}
};

class GenerationFailed : public Error {
 public:
  explicit GenerationFailed(const std::string& what) : Error("GenerationFailed", what) {}
};

}  // namespace picard
