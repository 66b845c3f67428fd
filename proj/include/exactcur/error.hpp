// exactcur - exact CUR decompositions by column and row selection
// SPDX-License-Identifier: Apache-2.0

#ifndef EXACTCUR_ERROR_HPP
#define EXACTCUR_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace exactcur {

enum class ErrorCode {
  ZeroMatrix = 1,
  IndexOutOfRange,
  RankDeficient,
  DomainError,
  ZeroProbabilityDraw,
  NoiseDominates,
  DivisionByZeroWeight,
  SingularInterpolation,
  TooManyClusters,
  InvalidArgument,
  IoError,
  ParseError,
  ConfigError,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. The code is stable and maps 1:1 onto
/// the status values of the C interface.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when a noise row/column is at least as large as the clean one, so
/// its stability floor would be nonpositive.
class NoiseDominatesError : public Error {
 public:
  NoiseDominatesError(std::size_t index, bool is_row, const std::string& what)
      : Error(ErrorCode::NoiseDominates, what), index_(index), is_row_(is_row) {}

  std::size_t index() const noexcept { return index_; }
  bool is_row() const noexcept { return is_row_; }

 private:
  std::size_t index_;
  bool is_row_;
};

/// Configuration problems; `line` is 0 when not tied to a text line.
class ConfigError : public Error {
 public:
  ConfigError(std::size_t line, const std::string& field, const std::string& what)
      : Error(ErrorCode::ConfigError, what), line_(line), field_(field) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

}  // namespace exactcur

#endif
