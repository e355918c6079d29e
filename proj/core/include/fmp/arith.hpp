// Copyright 2026 The fmpartners Authors.
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

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace fmp {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& value);
// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& value);

// Parses an optionally signed decimal integer. Throws Error(kInvalidInput).
Integer parse_integer(std::string_view text);
// Accepts "p", "p/q" or "-p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

Integer gcd(const Integer& a, const Integer& b);
// Least non-negative residue of a modulo |m|; m must be nonzero.
Integer floor_mod(const Integer& a, const Integer& m);
Integer floor_div(const Integer& a, const Integer& b);
bool divides(const Integer& d, const Integer& n);

// Representative of x modulo m·ℤ in [0, m) for a positive rational or
// integral modulus.
Rational reduce_mod(const Rational& x, const Integer& m);

std::optional<std::int64_t> to_int64(const Integer& value);

struct ExtendedGcd {
  Integer gcd;  // always >= 0
  Integer x;
  Integer y;    // x·a + y·b = gcd
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

}  // namespace fmp
