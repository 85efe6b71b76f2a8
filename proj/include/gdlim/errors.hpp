#pragma once

#include <stdexcept>
#include <string>

namespace gdlim {

// Exit codes form a stable scripting contract; see README.
enum class ExitCode : int {
  Ok = 0,
  Other = 1,
  ParseError = 2,
  Inconclusive = 3,
  Mismatch = 4,
  BudgetExceeded = 5,
  NotNormalLimit = 6,
  ZeroCrosscap = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ExitCode code() const { return code_; }

 private:
  ExitCode code_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(ExitCode::ParseError, what) {}
};

struct ColumnSumMismatch : Error {
  explicit ColumnSumMismatch(const std::string& what) : Error(ExitCode::Inconclusive, what) {}
};

struct NegativeEntry : Error {
  explicit NegativeEntry(const std::string& what) : Error(ExitCode::ParseError, what) {}
};

struct NegativeCoefficient : Error {
  explicit NegativeCoefficient(const std::string& what) : Error(ExitCode::Other, what) {}
};

struct ZeroTotal : Error {
  explicit ZeroTotal(const std::string& what) : Error(ExitCode::Other, what) {}
};

struct NotARoot : Error {
  explicit NotARoot(const std::string& what) : Error(ExitCode::Inconclusive, what) {}
};

struct SingularPoint : Error {
  explicit SingularPoint(const std::string& what) : Error(ExitCode::Inconclusive, what) {}
};

struct Disconnected : Error {
  explicit Disconnected(const std::string& what) : Error(ExitCode::ParseError, what) {}
};

struct BudgetExceeded : Error {
  BudgetExceeded(const std::string& what, std::string required)
      : Error(ExitCode::BudgetExceeded, what), required_count(std::move(required)) {}
  std::string required_count;  // decimal string; may exceed 2^64
};

struct NonpositiveSigma : Error {
  explicit NonpositiveSigma(const std::string& what) : Error(ExitCode::Other, what) {}
};

struct ZeroCrosscap : Error {
  explicit ZeroCrosscap(const std::string& what) : Error(ExitCode::ZeroCrosscap, what) {}
};

struct NotConstantCoefficients : Error {
  explicit NotConstantCoefficients(const std::string& what) : Error(ExitCode::Other, what) {}
};

struct NotNormalLimit : Error {
  explicit NotNormalLimit(const std::string& what) : Error(ExitCode::NotNormalLimit, what) {}
};

struct MismatchError : Error {
  explicit MismatchError(const std::string& what) : Error(ExitCode::Mismatch, what) {}
};

}  // namespace gdlim
