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

#include <cstdint>
#include <vector>

#include "fmp/arith.hpp"

namespace fmp {

// Invariants of a relatively minimal elliptic fibration X -> C: lambda is
// the gcd of fibre degrees (the minimal degree of a multisection).
struct EllipticSurfaceData {
  std::int64_t lambda = 1;
  bool kodaira_nonzero = true;
};

// (rank, fibre degree) of an object.
struct RankDegree {
  Integer rank;
  Integer degree;

  friend bool operator==(const RankDegree&, const RankDegree&) = default;
};

// [[c, a], [d, b]] acting on (rank, degree) column vectors.
struct TransformMatrix {
  Integer c, a, d, b;

  Integer det() const { return c * b - a * d; }
  friend bool operator==(const TransformMatrix&, const TransformMatrix&) = default;
};

TransformMatrix operator*(const TransformMatrix& x, const TransformMatrix& y);
// Inverse of an SL_2(ℤ) element; throws Error(kNotSL2) otherwise.
TransformMatrix inverse(const TransformMatrix& m);

// A transform exists for m when lambda | d and a > 0. Throws Error(kNotSL2)
// when det m != 1.
bool validate_transform(const TransformMatrix& m, const EllipticSurfaceData& surface);

RankDegree fm_action(const TransformMatrix& m, const RankDegree& v);

// Canonical residue of J(a, b) ≅ J(b) ≅ J(b + lambda) ≅ J(-b): the smaller
// of b mod lambda and lambda - (b mod lambda), in [1, lambda].
// Requires a > 0 and gcd(b, a·lambda) = 1 (Error(kCoprimalityViolated)).
std::int64_t normalize_jacobian(const Integer& a, const Integer& b, const EllipticSurfaceData& surface);

struct JacobianCandidates {
  std::vector<std::int64_t> residues;  // ascending
  std::size_t count = 0;
  // Membership is exact; distinct residues are not known to give
  // non-isomorphic surfaces, so the count is only an upper bound.
  bool count_is_upper_bound = true;
};

// Partner candidates J(b), b coprime to lambda, modulo the identifications
// above. Throws Error(kHypothesisViolated) for Kodaira dimension zero.
JacobianCandidates enumerate_partners(const EllipticSurfaceData& surface);

}  // namespace fmp
