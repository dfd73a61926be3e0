// SPDX-FileCopyrightText: (c) 2026 The monoseq authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace monoseq {

enum class ErrorCode {
  InvalidArgument = 2,
  BudgetExceeded = 3,
  Internal = 70,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorCode::InvalidArgument, what) {}
};

/// Raised when an enumeration would exceed its configured cap. `partial`
/// carries whatever the caller can report (JSON text, may be empty).
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::string partial = {})
      : Error(ErrorCode::BudgetExceeded, what), partial_(std::move(partial)) {}
  const std::string& partial() const noexcept { return partial_; }

 private:
  std::string partial_;
};

/// Violated internal invariant (a defect, never an input problem).
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error(ErrorCode::Internal, what) {}
};

#define MONOSEQ_ENSURE(cond, msg)                                    \
  do {                                                               \
    if (!(cond)) {                                                   \
      throw ::monoseq::InternalError(std::string("invariant: ") + (msg)); \
    }                                                                \
  } while (0)

} // namespace monoseq
