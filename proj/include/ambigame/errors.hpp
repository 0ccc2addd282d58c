// Copyright 2026 The Ambigame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ambigame {

enum class ErrorCode {
  MissingUtility,
  OverlappingPartitionCells,
  UncoveredState,
  UnknownAction,
  UnknownPlayer,
  UnknownState,
  UnknownTypeCell,
  IncompleteOpponentStrategy,
  StateSetMismatch,
  UnknownAxiom,
  UnknownComparator,
  BudgetExceeded,
  DomainError,
  PeakMismatch,
  NotSinglePeaked,
  InvalidSpec,
  SchemaError,
};

const char* error_code_name(ErrorCode code);

// Diagnostics name the offending entity in the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class BudgetExceededError : public Error {
 public:
  BudgetExceededError(std::uint64_t count, std::uint64_t budget)
      : Error(ErrorCode::BudgetExceeded,
              std::to_string(count) + " profiles exceed budget " + std::to_string(budget)),
        count_(count) {}

  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t count_;
};

}  // namespace ambigame
