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

#include <random>

#include "fmp/error.hpp"
#include "fmp/genus.hpp"
#include "fmp/isometry.hpp"
#include "fmp/normal_form.hpp"
#include "oracles.hpp"

namespace fmp {
namespace {

void expect_witness(const Lattice& a, const Lattice& b, const IsometryVerdict& v) {
  ASSERT_EQ(v.outcome, IsometryOutcome::kIsometric) << v.reason;
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->transpose() * a.gram() * *v.witness, b.gram());
  EXPECT_EQ(abs(determinant(*v.witness)), 1);
}

TEST(ShortVectors, CountsSmallNorms) {
  // ℤ² with the standard form: norm <= 2 gives ±e1, ±e2, ±e1±e2.
  EXPECT_EQ(short_vectors(Lattice(IntMatrix::identity(2)), 2).size(), 8u);
  // A2 root system: six roots of norm 2.
  EXPECT_EQ(short_vectors(Lattice(IntMatrix{{2, -1}, {-1, 2}}), 2).size(), 6u);
  EXPECT_TRUE(short_vectors(Lattice(IntMatrix{{4}}), 3).empty());
}

TEST(ShortVectors, MatchesBoxEnumeration) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix g = oracle::random_gram(rng, 2, 4, false);
    if (signature(Lattice(g)) != Signature{2, 0}) continue;
    const Lattice l(g);
    std::size_t expected = 0;
    const int box = 40;
    for (int x = -box; x <= box; ++x)
      for (int y = -box; y <= box; ++y) {
        if (x == 0 && y == 0) continue;
        const std::vector<Integer> v{x, y};
        if (l.norm(v) <= 12) ++expected;
      }
    EXPECT_EQ(short_vectors(l, 12).size(), expected) << trial;
  }
}

TEST(ShortVectors, RejectsIndefinite) { EXPECT_THROW(short_vectors(Lattice::hyperbolic(), 4), Error); }

TEST(MinimumNorm, Examples) {
  EXPECT_EQ(minimum_norm(Lattice(IntMatrix{{2, 1}, {1, 12}})), 2);
  EXPECT_EQ(minimum_norm(Lattice(IntMatrix{{4, 1}, {1, 6}})), 4);
}

TEST(Isometric, Examples) {
  const Lattice a(IntMatrix{{2, 1}, {1, 12}});
  const Lattice b(IntMatrix{{4, 1}, {1, 6}});
  const IsometryVerdict self = isometric(a, a);
  expect_witness(a, a, self);
  EXPECT_EQ(*self.witness, IntMatrix::identity(2));

  const IsometryVerdict two_four = isometric(Lattice(IntMatrix{{2}}), Lattice(IntMatrix{{4}}));
  EXPECT_EQ(two_four.outcome, IsometryOutcome::kNotIsometric);
  EXPECT_NE(two_four.reason.find("minimum"), std::string::npos);

  const IsometryVerdict ab = isometric(a, b);
  EXPECT_EQ(ab.outcome, IsometryOutcome::kNotIsometric);
  EXPECT_FALSE(oracle::brute_isometric_rank2(a.gram(), b.gram(), 6));
}

TEST(Isometric, RankMismatch) {
  EXPECT_EQ(isometric(Lattice(IntMatrix{{2}}), Lattice::hyperbolic()).outcome, IsometryOutcome::kNotIsometric);
}

TEST(Isometric, DefiniteAgreesWithBruteForce) {
  std::mt19937_64 rng(42);
  int decided = 0;
  while (decided < 40) {
    const IntMatrix g = oracle::random_gram(rng, 2, 4, false);
    if (signature(Lattice(g)) != Signature{2, 0}) continue;
    const IntMatrix h = oracle::random_gram(rng, 2, 4, false);
    if (signature(Lattice(h)) != Signature{2, 0}) continue;
    if (oracle::cofactor_determinant(g) != oracle::cofactor_determinant(h)) continue;
    const IsometryVerdict v = isometric(Lattice(g), Lattice(h));
    // Entries of a reduced witness are tiny for forms this small.
    EXPECT_EQ(v.outcome == IsometryOutcome::kIsometric, oracle::brute_isometric_rank2(g, h, 8));
    if (v.outcome == IsometryOutcome::kIsometric) expect_witness(Lattice(g), Lattice(h), v);
    ++decided;
  }
}

TEST(Isometric, RandomBasisChangeIsFound) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 2;
    IntMatrix g = oracle::random_gram(rng, n, 4, trial % 2 == 0);
    IntMatrix u = IntMatrix::identity(n);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
    std::uniform_int_distribution<int> factor(-2, 2);
    for (int step = 0; step < 4; ++step) {
      const int i = pick(rng);
      const int j = pick(rng);
      if (i != j) u.add_col(static_cast<std::size_t>(i), static_cast<std::size_t>(j), factor(rng));
    }
    const Lattice a(g);
    const Lattice b(u.transpose() * g * u);
    IsometryOptions options;
    options.radius = 6;
    const IsometryVerdict v = isometric(a, b, options);
    if (signature(a).definite()) {
      expect_witness(a, b, v);
    } else {
      EXPECT_NE(v.outcome, IsometryOutcome::kNotIsometric);
      if (v.outcome == IsometryOutcome::kIsometric) expect_witness(a, b, v);
    }
  }
}

TEST(Isometric, IndefiniteFindsHyperbolicBasisChange) {
  const Lattice h = Lattice::hyperbolic();
  const Lattice h2(IntMatrix{{0, 1}, {1, 0}});
  expect_witness(h, h2, isometric(h, h2));
  const Lattice u2 = rescale(Lattice::hyperbolic(), 2);
  EXPECT_EQ(isometric(h, u2).outcome, IsometryOutcome::kNotIsometric);
}

TEST(Isometric, IndefiniteSearchCanGiveUp) {
  // Same genus, isometric by a matrix with entries beyond the radius.
  const Lattice a(IntMatrix{{2, 1}, {1, -4}});
  IntMatrix u{{7, 5}, {4, 3}};
  const Lattice b(u.transpose() * a.gram() * u);
  IsometryOptions tight;
  tight.radius = 1;
  const IsometryVerdict v = isometric(a, b, tight);
  EXPECT_NE(v.outcome, IsometryOutcome::kNotIsometric);
  if (v.outcome == IsometryOutcome::kIsometric) expect_witness(a, b, v);
  IsometryOptions wide;
  wide.radius = 10;
  expect_witness(a, b, isometric(a, b, wide));
}

TEST(Isometric, IsometricImpliesInvariantsAgree) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const IntMatrix g = oracle::random_gram(rng, 2, 3, true);
    const IntMatrix h = oracle::random_gram(rng, 2, 3, true);
    const Lattice a(g);
    const Lattice b(h);
    if (isometric(a, b).outcome != IsometryOutcome::kIsometric) continue;
    EXPECT_EQ(same_genus(a, b).verdict, GenusVerdict::kSame);
    EXPECT_EQ(a.det(), b.det());
    EXPECT_EQ(signature(a), signature(b));
    EXPECT_EQ(discriminant_group(a), discriminant_group(b));
  }
}

}  // namespace
}  // namespace fmp
