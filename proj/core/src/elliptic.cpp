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

#include "fmp/elliptic.hpp"

#include <numeric>
#include <set>
#include <string>

#include "fmp/error.hpp"

namespace fmp {

namespace {

void require_lambda(const EllipticSurfaceData& surface) {
  if (surface.lambda < 1) throw Error(ErrorCode::kInvalidInput, "lambda must be a positive integer");
}

void require_sl2(const TransformMatrix& m) {
  if (m.det() != 1) throw Error(ErrorCode::kNotSL2, "determinant is " + to_string(m.det()) + ", expected 1");
}

}  // namespace

TransformMatrix operator*(const TransformMatrix& x, const TransformMatrix& y) {
  return TransformMatrix{x.c * y.c + x.a * y.d, x.c * y.a + x.a * y.b, x.d * y.c + x.b * y.d, x.d * y.a + x.b * y.b};
}

TransformMatrix inverse(const TransformMatrix& m) {
  require_sl2(m);
  return TransformMatrix{m.b, -m.a, -m.d, m.c};
}

bool validate_transform(const TransformMatrix& m, const EllipticSurfaceData& surface) {
  require_sl2(m);
  require_lambda(surface);
  return divides(Integer(static_cast<long>(surface.lambda)), m.d) && m.a > 0;
}

RankDegree fm_action(const TransformMatrix& m, const RankDegree& v) {
  return RankDegree{m.c * v.rank + m.a * v.degree, m.d * v.rank + m.b * v.degree};
}

std::int64_t normalize_jacobian(const Integer& a, const Integer& b, const EllipticSurfaceData& surface) {
  require_lambda(surface);
  if (a <= 0) throw Error(ErrorCode::kInvalidInput, "a must be positive");
  const Integer lambda = static_cast<long>(surface.lambda);
  if (gcd(b, a * lambda) != 1) {
    throw Error(ErrorCode::kCoprimalityViolated,
                "b = " + to_string(b) + " is not coprime to a*lambda = " + to_string(Integer(a * lambda)));
  }
  if (surface.lambda == 1) return 1;
  const std::int64_t r = floor_mod(b, lambda).get_si();
  return std::min(r, surface.lambda - r);
}

JacobianCandidates enumerate_partners(const EllipticSurfaceData& surface) {
  require_lambda(surface);
  if (!surface.kodaira_nonzero) {
    throw Error(ErrorCode::kHypothesisViolated,
                "classification not provided for elliptic surfaces of Kodaira dimension zero");
  }
  std::set<std::int64_t> residues;
  for (std::int64_t b = 1; b <= surface.lambda; ++b) {
    if (std::gcd(b, surface.lambda) != 1) continue;
    residues.insert(normalize_jacobian(Integer(1), Integer(static_cast<long>(b)), surface));
  }
  JacobianCandidates out;
  out.residues.assign(residues.begin(), residues.end());
  out.count = out.residues.size();
  return out;
}

}  // namespace fmp
