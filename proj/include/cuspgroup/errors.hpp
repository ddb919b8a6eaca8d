#pragma once

#include <stdexcept>
#include <string>

namespace cusp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParameter : Error {
  using Error::Error;
};

// tietze_eliminate was asked to remove a generator without a matching relator.
struct NoDefiningRelator : Error {
  using Error::Error;
};

struct NotGenerating : Error {
  using Error::Error;
};

struct NotInKernel : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  using Error::Error;
};

struct VerificationFailure : Error {
  using Error::Error;
};

struct NotSingular : Error {
  using Error::Error;
};

struct SplittingFailure : Error {
  using Error::Error;
};

struct RankDeficiencySuspect : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

} // namespace cusp
