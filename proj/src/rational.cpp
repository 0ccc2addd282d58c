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

#include "ambigame/rational.hpp"

#include <cctype>

#include "ambigame/errors.hpp"

namespace ambigame {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingUtility: return "MissingUtility";
    case ErrorCode::OverlappingPartitionCells: return "OverlappingPartitionCells";
    case ErrorCode::UncoveredState: return "UncoveredState";
    case ErrorCode::UnknownAction: return "UnknownAction";
    case ErrorCode::UnknownPlayer: return "UnknownPlayer";
    case ErrorCode::UnknownState: return "UnknownState";
    case ErrorCode::UnknownTypeCell: return "UnknownTypeCell";
    case ErrorCode::IncompleteOpponentStrategy: return "IncompleteOpponentStrategy";
    case ErrorCode::StateSetMismatch: return "StateSetMismatch";
    case ErrorCode::UnknownAxiom: return "UnknownAxiom";
    case ErrorCode::UnknownComparator: return "UnknownComparator";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::PeakMismatch: return "PeakMismatch";
    case ErrorCode::NotSinglePeaked: return "NotSinglePeaked";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "UnknownError";
}

namespace {

bool parse_integer(const std::string& text, Integer* out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  *out = Integer(text);
  return true;
}

}  // namespace

std::optional<Rational> try_parse_rational(const std::string& text) {
  std::size_t slash = text.find('/');
  Integer num, den;
  if (slash == std::string::npos) {
    if (!parse_integer(text, &num)) return std::nullopt;
    return Rational(num);
  }
  if (!parse_integer(text.substr(0, slash), &num)) return std::nullopt;
  if (!parse_integer(text.substr(slash + 1), &den)) return std::nullopt;
  if (den == 0) return std::nullopt;
  return Rational(num, den);
}

Rational parse_rational(const std::string& text) {
  auto value = try_parse_rational(text);
  if (!value) throw Error(ErrorCode::SchemaError, "malformed rational \"" + text + "\"");
  return *value;
}

std::string rational_to_string(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += "/";
    out += denominator(value).str();
  }
  return out;
}

Rational round_to_denominator(const Rational& value, const Integer& denom) {
  if (denom <= 0) throw Error(ErrorCode::DomainError, "denominator must be positive");
  // floor(value * denom + 1/2) computed exactly.
  Rational scaled = value * Rational(denom);
  Integer twice_num = 2 * numerator(scaled) + denominator(scaled);
  Integer twice_den = 2 * denominator(scaled);
  Integer k = twice_num / twice_den;
  if (twice_num < 0 && twice_num % twice_den != 0) k -= 1;  // floor for negatives
  return Rational(k, denom);
}

Rational rational_pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational factor = base;
  for (unsigned e = exponent; e != 0; e >>= 1) {
    if (e & 1) result *= factor;
    if (e > 1) factor *= factor;
  }
  return result;
}

}  // namespace ambigame
