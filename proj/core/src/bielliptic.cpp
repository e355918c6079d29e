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

#include "fmp/bielliptic.hpp"

#include <algorithm>
#include <string>

#include "fmp/error.hpp"

namespace fmp {

bool validate_type(int n, int k) {
  return std::find(kBiellipticTypes.begin(), kBiellipticTypes.end(), BiellipticType{n, k}) != kBiellipticTypes.end();
}

namespace {

void require_type(const BiellipticType& type) {
  if (!validate_type(type.n, type.k)) {
    throw Error(ErrorCode::kInvalidInput,
                "(n, k) = (" + std::to_string(type.n) + ", " + std::to_string(type.k) + ") is not a bielliptic type");
  }
}

}  // namespace

Integer num_pairing(const NumClass& x, const NumClass& y) { return x.a * y.b + y.a * x.b; }

bool delta_member_pure(const Integer& d, Axis axis, const BiellipticType& type) {
  require_type(type);
  return divides(Integer(axis == Axis::kA ? type.n : type.k), d);
}

bool is_admissible(const SheafClass& v, const BiellipticType& type) {
  require_type(type);
  const Integer& a = v.c1.a;
  const Integer& b = v.c1.b;
  if (v.r < 0) return false;
  if (v.r * v.s != a * b) return false;
  if (!divides(Integer(type.n), v.r)) return false;
  if (gcd(gcd(v.r, a), gcd(b, v.s)) != 1) return false;
  if (type.k > 1) {
    const Integer k = type.k;
    if (!divides(k, a) || !divides(k, b) || divides(k, v.s)) return false;
  }
  return true;
}

Integer euler_bielliptic(const SheafClass& v, const SheafClass& w) {
  return v.r * w.s + w.r * v.s - num_pairing(v.c1, w.c1);
}

RankReduction rank_reduction(const Integer& r, const Integer& k, const Integer& a) {
  if (r <= 0) throw Error(ErrorCode::kInvalidInput, "rank_reduction needs r > 0");
  if (k < 1) throw Error(ErrorCode::kInvalidInput, "k must be positive");
  const Integer degree = k * a;
  const ExtendedGcd eg = extended_gcd(r, degree);
  const Integer& h = eg.gcd;
  const Integer r_red = r / h;
  const Integer t_red = degree / h;

  // (x + j·t', y - j·r') is again a Bezout pair; k | x is reachable within
  // k shifts whenever it is reachable at all.
  for (Integer j = 0; j < k; ++j) {
    const Integer x = eg.x + j * t_red;
    if (!divides(k, x)) continue;
    const Integer y = eg.y - j * r_red;
    return RankReduction{t_red, -r_red, x, y, h};
  }
  throw Error(ErrorCode::kNoValidShift, "k = " + to_string(k) + " divides t' = " + to_string(t_red) +
                                            " and no Bezout coefficient x is divisible by k");
}

std::int64_t k_adic_valuation(const Integer& x, const Integer& k) {
  if (x == 0) throw Error(ErrorCode::kInvalidInput, "valuation of zero is infinite");
  if (k < 2) throw Error(ErrorCode::kInvalidInput, "valuation base must be >= 2");
  Integer rest = abs(x);
  std::int64_t e = 0;
  while (divides(k, rest)) {
    rest /= k;
    ++e;
  }
  return e;
}

DivisibilityReport verify_divisibility_claim(const BiellipticType& type, std::int64_t bound) {
  require_type(type);
  if (bound < 1) throw Error(ErrorCode::kInvalidInput, "bound must be >= 1");
  DivisibilityReport report{type, bound, 0, {}, {}};
  const Integer k = type.k;
  // rs = ab with r > 0 pins s = ab / r, so the box is swept over (r, a, b).
  for (std::int64_t r = 1; r <= bound; ++r) {
    const Integer rr = static_cast<long>(r);
    for (std::int64_t a = -bound; a <= bound; ++a) {
      for (std::int64_t b = -bound; b <= bound; ++b) {
        const Integer product = Integer(static_cast<long>(a)) * static_cast<long>(b);
        if (!divides(rr, product)) continue;
        const Integer s = product / rr;
        if (abs(s) > bound) continue;
        const SheafClass v{rr, NumClass{static_cast<long>(a), static_cast<long>(b)}, s};
        if (!is_admissible(v, type)) continue;
        ++report.checked;
        if (type.k > 1) {
          const Integer degree = k * v.c1.a;
          if (degree == 0 || k_adic_valuation(degree, k) > k_adic_valuation(v.r, k)) {
            report.counterexamples.push_back(v);
          }
        }
        try {
          (void)rank_reduction(v.r, k, v.c1.a);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kNoValidShift) throw;
          report.shift_failures.push_back(v);
        }
      }
    }
  }
  return report;
}

}  // namespace fmp
