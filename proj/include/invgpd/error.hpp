/* Copyright 2026 The invgpd Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Error kinds and the enumeration budget shared by every search.

#ifndef INVGPD_ERROR_HPP_
#define INVGPD_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace invgpd {

enum class ErrorKind {
  kMalformedGroupoid,
  kMalformedFunctor,
  kCodomainMismatch,
  kBudgetExceeded,
  kShapeMismatch,
  kInvalidAttachment,
  kNonCommutingSquare,
  kNotTrivialCofibration,
  kIterationCapExceeded,
  kNotAFibration,
  kMalformedSliceMorphism,
  kNotSmall,
  kBaseTooSmall,
  kParseError,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedGroupoid: return "MalformedGroupoid";
    case ErrorKind::kMalformedFunctor: return "MalformedFunctor";
    case ErrorKind::kCodomainMismatch: return "CodomainMismatch";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
    case ErrorKind::kShapeMismatch: return "ShapeMismatch";
    case ErrorKind::kInvalidAttachment: return "InvalidAttachment";
    case ErrorKind::kNonCommutingSquare: return "NonCommutingSquare";
    case ErrorKind::kNotTrivialCofibration: return "NotTrivialCofibration";
    case ErrorKind::kIterationCapExceeded: return "IterationCapExceeded";
    case ErrorKind::kNotAFibration: return "NotAFibration";
    case ErrorKind::kMalformedSliceMorphism: return "MalformedSliceMorphism";
    case ErrorKind::kNotSmall: return "NotSmall";
    case ErrorKind::kBaseTooSmall: return "BaseTooSmall";
    case ErrorKind::kParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Counts candidate assignments made by the searches. Exceeding the limit
// throws kBudgetExceeded.
class Budget {
 public:
  static constexpr std::uint64_t kDefaultLimit = 10'000'000;

  explicit Budget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}

  void spend(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > limit_) {
      throw Error(ErrorKind::kBudgetExceeded,
                  "enumeration budget of " + std::to_string(limit_) +
                      " exhausted");
    }
  }

  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace invgpd

#endif  // INVGPD_ERROR_HPP_
