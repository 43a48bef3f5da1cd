// Copyright 2026 The supent Authors
// SPDX-License-Identifier: Apache-2.0

#include "supent/error.hpp"

namespace supent {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::DimError: return "DimError";
    case ErrorKind::ZeroState: return "ZeroState";
    case ErrorKind::NotOneSided: return "NotOneSided";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::DegenerateSubspace: return "DegenerateSubspace";
    case ErrorKind::NonFiniteObjective: return "NonFiniteObjective";
    case ErrorKind::NoSignChange: return "NoSignChange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IndexError: return "IndexError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

bool Error::is_input_error() const noexcept {
  switch (kind_) {
    case ErrorKind::NotHermitian:
    case ErrorKind::NoConvergence:
    case ErrorKind::NonFiniteObjective:
    case ErrorKind::NoSignChange:
      return false;
    default:
      return true;
  }
}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace supent
