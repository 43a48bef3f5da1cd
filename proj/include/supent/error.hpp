// Copyright 2026 The supent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace supent {

enum class ErrorKind {
  NotHermitian,
  NoConvergence,
  NotNormalized,
  DomainError,
  DimMismatch,
  DimError,
  ZeroState,
  NotOneSided,
  NotOrthogonal,
  DegenerateSubspace,
  NonFiniteObjective,
  NoSignChange,
  ParseError,
  IndexError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so that
/// callers (and the CLI exit-code mapping) can branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

  /// True for failures caused by bad input rather than a numerical breakdown.
  bool is_input_error() const noexcept;

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace supent
