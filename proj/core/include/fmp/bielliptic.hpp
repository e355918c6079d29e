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

#include <array>
#include <cstdint>
#include <vector>

#include "fmp/arith.hpp"

namespace fmp {

// n: order of the canonical bundle (of G); k: order of the translation
// subgroup H.
struct BiellipticType {
  int n = 2;
  int k = 1;

  friend bool operator==(const BiellipticType&, const BiellipticType&) = default;
};

inline constexpr std::array<BiellipticType, 7> kBiellipticTypes{
    {{2, 1}, {3, 1}, {4, 1}, {6, 1}, {2, 2}, {3, 3}, {4, 2}}};

bool validate_type(int n, int k);

// a·A' + b·B' in Num(X) = ℤA' ⊕ ℤB', where A'² = B'² = 0 and A'·B' = 1.
struct NumClass {
  Integer a;
  Integer b;

  friend bool operator==(const NumClass&, const NumClass&) = default;
};

Integer num_pairing(const NumClass& x, const NumClass& y);

enum class Axis { kA, kB };

// d·A' lies in the pushforward image iff n | d; d·B' iff k | d. Mixed
// classes are deliberately not decided.
bool delta_member_pure(const Integer& d, Axis axis, const BiellipticType& type);

// Numerical class (r, c1, s) of a sheaf; s = ch_2.
struct SheafClass {
  Integer r;
  NumClass c1;
  Integer s;

  friend bool operator==(const SheafClass&, const SheafClass&) = default;
};

// r >= 0, rs = ab, n | r, gcd(r, a, b, s) = 1 and, when k > 1, k | a,
// k | b and k ∤ s.
bool is_admissible(const SheafClass& v, const BiellipticType& type);

// χ(v, w) = r1·s2 + r2·s1 - c1(v)·c1(w)  (K ≡ 0, χ(O) = 0).
Integer euler_bielliptic(const SheafClass& v, const SheafClass& w);

struct RankReduction {
  // [[ka/h, -r/h], [x, y]] with x·r + y·ka = h and k | x.
  Integer m00, m01, m10, m11;
  Integer h;
};

// Throws Error(kNoValidShift) when no Bezout pair has k | x, which happens
// exactly when k divides t' = ka/h.
RankReduction rank_reduction(const Integer& r, const Integer& k, const Integer& a);

// Largest e with k^e | x; x must be nonzero, k >= 2.
std::int64_t k_adic_valuation(const Integer& x, const Integer& k);

struct DivisibilityReport {
  BiellipticType type;
  std::int64_t bound = 0;
  std::uint64_t checked = 0;                 // admissible classes examined
  std::vector<SheafClass> counterexamples;   // v_k(ka) > v_k(r)
  std::vector<SheafClass> shift_failures;    // rank_reduction threw
};

// Enumerates every admissible class with 0 < r <= bound and |a|, |b|, |s| <=
// bound and checks that the highest power of k dividing k·a divides r.
DivisibilityReport verify_divisibility_claim(const BiellipticType& type, std::int64_t bound);

}  // namespace fmp
