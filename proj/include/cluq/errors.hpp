/*
 * Copyright 2026 The cluq authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace cluq {

/// Base of every library error. `code()` is stable and machine readable;
/// the CLI maps it into the JSON error object on stderr.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

struct DimensionError : Error {
  explicit DimensionError(const std::string& m) : Error("dimension-mismatch", m) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& m) : Error("domain", m) {}
};

struct DivisionByZeroError : Error {
  explicit DivisionByZeroError(const std::string& m) : Error("division-by-zero", m) {}
};

struct ContextMismatchError : Error {
  explicit ContextMismatchError(const std::string& m) : Error("context-mismatch", m) {}
};

struct TwistMismatchError : Error {
  explicit TwistMismatchError(const std::string& m) : Error("twist-mismatch", m) {}
};

struct NoExactQuotientError : Error {
  explicit NoExactQuotientError(const std::string& m) : Error("no-exact-quotient", m) {}
};

struct NotCompatibleError : Error {
  /// reason is one of "off-diagonal", "frozen-block-nonzero", "nonpositive-d".
  NotCompatibleError(std::string reason_, const std::string& m)
      : Error("not-compatible", m), reason(std::move(reason_)) {}
  std::string reason;
};

struct NotEllCompatibleError : Error {
  explicit NotEllCompatibleError(const std::string& m) : Error("not-ell-compatible", m) {}
};

struct NotPerfectSquareError : Error {
  explicit NotPerfectSquareError(const std::string& m) : Error("not-perfect-square", m) {}
};

struct HypothesisViolatedError : Error {
  explicit HypothesisViolatedError(const std::string& m) : Error("hypothesis-violated", m) {}
};

struct NotAcyclicError : Error {
  explicit NotAcyclicError(const std::string& m) : Error("not-acyclic", m) {}
};

struct HasFrozenError : Error {
  explicit HasFrozenError(const std::string& m) : Error("has-frozen", m) {}
};

struct VerificationFailedError : Error {
  explicit VerificationFailedError(const std::string& m) : Error("verification-failed", m) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error("parse", m) {}
};

/// A broken internal invariant (e.g. a mutation that stops being compatible,
/// or a Laurent-phenomenon violation). Never expected on valid inputs.
struct InternalError : Error {
  explicit InternalError(const std::string& m) : Error("internal", m) {}
};

}  // namespace cluq
