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

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ambigame {

namespace mp = boost::multiprecision;

// All engine arithmetic is exact. There are no tolerances anywhere;
// equilibrium verification involves knife-edge ties that floating point
// would corrupt.
using Integer = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rational = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

/// Parses "p/q", "p", "-p/q". Whitespace is not accepted.
std::optional<Rational> try_parse_rational(const std::string& text);

/// As try_parse_rational but throws Error(SchemaError) on malformed input.
Rational parse_rational(const std::string& text);

/// "p/q" for non-integers, "p" when the denominator is one.
std::string rational_to_string(const Rational& value);

/// Nearest fraction with the given denominator; halves round up.
Rational round_to_denominator(const Rational& value, const Integer& denominator);

/// Integer power helper for exact fraction formulas.
Rational rational_pow(const Rational& base, unsigned exponent);

}  // namespace ambigame
