// Copyright 2026 The hv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hv {

/// Error classes are disjoint; each maps to its own process exit code.
enum class ErrorClass { Parse, Validation, Cap, Internal };

int exit_code(ErrorClass cls) noexcept;
const char* to_string(ErrorClass cls) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, std::string code, const std::string& what)
      : std::runtime_error(what), cls_(cls), code_(std::move(code)) {}

  ErrorClass error_class() const noexcept { return cls_; }
  /// Short machine-readable name, e.g. "NonStochastic".
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorClass cls_;
  std::string code_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what)
      : Error(ErrorClass::Parse, "ParseError", what) {}
};

class ValidationError : public Error {
 public:
  ValidationError(std::string code, const std::string& what)
      : Error(ErrorClass::Validation, std::move(code), what) {}
};

class NonStochastic : public ValidationError {
 public:
  explicit NonStochastic(const std::string& what)
      : ValidationError("NonStochastic", what) {}
};

class NegativeLikelihood : public ValidationError {
 public:
  explicit NegativeLikelihood(const std::string& what)
      : ValidationError("NegativeLikelihood", what) {}
};

class EmptyAlphabet : public ValidationError {
 public:
  EmptyAlphabet() : ValidationError("EmptyAlphabet", "structure has no signals") {}
};

class ZeroProbabilitySignal : public ValidationError {
 public:
  explicit ZeroProbabilitySignal(const std::string& what)
      : ValidationError("ZeroProbabilitySignal", what) {}
};

class ContradictoryConclusiveBeliefs : public ValidationError {
 public:
  ContradictoryConclusiveBeliefs()
      : ValidationError("ContradictoryConclusiveBeliefs",
                        "cannot compose beliefs 0 and 1") {}
};

class InvalidParameter : public ValidationError {
 public:
  explicit InvalidParameter(const std::string& what)
      : ValidationError("InvalidParameter", what) {}
};

class InvalidTieBreakTable : public ValidationError {
 public:
  explicit InvalidTieBreakTable(const std::string& what)
      : ValidationError("InvalidTieBreakTable", what) {}
};

class NonFiniteEvaluation : public ValidationError {
 public:
  explicit NonFiniteEvaluation(double at)
      : ValidationError("NonFiniteEvaluation",
                        "objective is not finite at x=" + std::to_string(at)) {}
};

class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& what, std::string code = "CapExceeded")
      : Error(ErrorClass::Cap, std::move(code), what) {}
};

class HorizonCapExceeded : public CapExceeded {
 public:
  explicit HorizonCapExceeded(const std::string& what)
      : CapExceeded(what, "HorizonCapExceeded") {}
};

class TooManyIndifferenceNodes : public CapExceeded {
 public:
  TooManyIndifferenceNodes(std::size_t count, const std::string& what)
      : CapExceeded(what, "TooManyIndifferenceNodes"), count_(count) {}
  std::size_t count() const noexcept { return count_; }

 private:
  std::size_t count_;
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error(ErrorClass::Internal, "InternalError", what) {}
};

}  // namespace hv
