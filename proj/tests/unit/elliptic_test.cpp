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

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "fmp/elliptic.hpp"
#include "fmp/error.hpp"
#include "oracles.hpp"

namespace fmp {
namespace {

TransformMatrix from(const IntMatrix& m) { return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)}; }

TEST(ValidateTransform, Examples) {
  const TransformMatrix s{0, 1, -1, 0};
  EXPECT_TRUE(validate_transform(s, {1, true}));
  EXPECT_FALSE(validate_transform(s, {2, true}));
  EXPECT_FALSE(validate_transform({1, 0, 0, 1}, {3, true}));
}

TEST(ValidateTransform, RequiresDeterminantOne) {
  try {
    (void)validate_transform({2, 0, 0, 1}, {1, true});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotSL2);
  }
  EXPECT_THROW(validate_transform({0, 1, 1, 0}, {1, true}), Error);
}

TEST(ValidateTransform, ExactCondition) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 1000; ++trial) {
    const TransformMatrix m = from(oracle::random_sl2(rng, 5));
    for (std::int64_t lambda = 1; lambda <= 6; ++lambda) {
      const bool expected = divides(lambda, m.d) && m.a > 0;
      EXPECT_EQ(validate_transform(m, {lambda, true}), expected);
    }
  }
}

TEST(FmAction, Examples) {
  EXPECT_EQ(fm_action({1, 0, 0, 1}, {5, -3}), (RankDegree{5, -3}));
  EXPECT_EQ(fm_action({0, 1, -1, 0}, {1, 0}), (RankDegree{0, -1}));
  EXPECT_EQ(fm_action({2, 3, 1, 2}, {0, 0}), (RankDegree{0, 0}));
}

TEST(FmAction, CompositionAndInverse) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> d(-50, 50);
  for (int trial = 0; trial < 1000; ++trial) {
    const TransformMatrix m1 = from(oracle::random_sl2(rng, 6));
    const TransformMatrix m2 = from(oracle::random_sl2(rng, 6));
    const RankDegree v{d(rng), d(rng)};
    EXPECT_EQ(fm_action(m1 * m2, v), fm_action(m1, fm_action(m2, v)));
    EXPECT_EQ(fm_action(inverse(m1), fm_action(m1, v)), v);
    EXPECT_EQ(m1 * inverse(m1), (TransformMatrix{1, 0, 0, 1}));
  }
  EXPECT_THROW(inverse({2, 0, 0, 1}), Error);
}

TEST(NormalizeJacobian, Examples) {
  for (std::int64_t lambda : {1, 2, 7, 12}) EXPECT_EQ(normalize_jacobian(1, 1, {lambda, true}), 1);
  EXPECT_EQ(normalize_jacobian(3, 7, {5, true}), 2);
  try {
    (void)normalize_jacobian(2, 2, {1, true});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCoprimalityViolated);
  }
  EXPECT_THROW(normalize_jacobian(0, 1, {5, true}), Error);
}

TEST(NormalizeJacobian, ConstantOnClassesAndIdempotent) {
  for (std::int64_t lambda = 1; lambda <= 30; ++lambda) {
    for (std::int64_t b = -3 * lambda; b <= 3 * lambda; ++b) {
      if (std::gcd(b, lambda) != 1) continue;
      const std::int64_t r = normalize_jacobian(1, b, {lambda, true});
      EXPECT_GE(r, 1);
      EXPECT_LE(r, lambda);
      EXPECT_EQ(normalize_jacobian(1, -b, {lambda, true}), r);
      EXPECT_EQ(normalize_jacobian(1, b + lambda, {lambda, true}), r);
      EXPECT_EQ(normalize_jacobian(1, r, {lambda, true}), r);
    }
  }
}

TEST(EnumeratePartners, Examples) {
  const auto check = [](std::int64_t lambda, std::vector<std::int64_t> residues) {
    const JacobianCandidates c = enumerate_partners({lambda, true});
    EXPECT_EQ(c.residues, residues) << lambda;
    EXPECT_EQ(c.count, residues.size());
    EXPECT_TRUE(c.count_is_upper_bound);
  };
  check(1, {1});
  check(6, {1});
  check(5, {1, 2});
  check(12, {1, 5});
}

TEST(EnumeratePartners, MatchesOrbitCount) {
  for (std::int64_t lambda = 1; lambda <= 30; ++lambda) {
    const JacobianCandidates c = enumerate_partners({lambda, true});
    EXPECT_EQ(static_cast<std::int64_t>(c.count), oracle::negation_orbits(lambda));
    EXPECT_EQ(static_cast<std::int64_t>(c.count), lambda <= 2 ? 1 : oracle::euler_phi(lambda) / 2);
    for (std::int64_t b : c.residues) EXPECT_EQ(std::gcd(b, lambda), 1);
    EXPECT_TRUE(std::is_sorted(c.residues.begin(), c.residues.end()));
  }
  for (std::int64_t lambda : {1, 2, 3, 4, 6}) EXPECT_EQ(enumerate_partners({lambda, true}).count, 1u);
}

TEST(EnumeratePartners, KodairaZeroRejected) {
  try {
    (void)enumerate_partners({5, false});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kHypothesisViolated);
  }
}

}  // namespace
}  // namespace fmp
