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
#include "fmp/mukai.hpp"
#include "oracles.hpp"

namespace fmp {
namespace {

const Lattice kU(IntMatrix{{0, 1}, {1, 0}});

MukaiVector mv(Integer r, std::vector<Integer> d, Integer s, int eps = 1) { return {r, std::move(d), s, eps}; }

SurfaceChernData chern(Integer r, std::vector<Integer> c1, Rational ch2) { return {r, std::move(c1), ch2}; }

// c1² / 2 - c2 with a random c2, so ch2 has the right denominator.
SurfaceChernData random_chern(std::mt19937_64& rng, const Lattice& ns) {
  std::uniform_int_distribution<int> d(-6, 6);
  std::vector<Integer> c1{d(rng), d(rng)};
  Rational ch2(ns.norm(c1), 2);
  ch2.canonicalize();
  ch2 -= d(rng);
  return chern(d(rng), c1, ch2);
}

TEST(MukaiPairing, Examples) {
  EXPECT_EQ(mukai_pairing(mv(0, {0, 0}, 1), mv(0, {0, 0}, 1), kU), 0);
  EXPECT_EQ(mukai_pairing(mv(1, {0, 0}, 0), mv(0, {0, 0}, 1), kU), -1);
  const std::vector<Integer> d{3, -2};
  EXPECT_EQ(mukai_pairing(mv(1, d, 5), mv(1, d, 5), kU), kU.norm(d) - 10);
}

TEST(MukaiPairing, DimensionMismatch) {
  EXPECT_THROW(mukai_pairing(mv(1, {0}, 0), mv(1, {0, 0}, 0), kU), Error);
}

TEST(MukaiPairing, SymmetricBilinearAndEven) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> d(-9, 9);
  const Lattice ns(IntMatrix{{2, 1}, {1, -4}});
  const auto random = [&] { return mv(d(rng), {d(rng), d(rng)}, d(rng)); };
  for (int trial = 0; trial < 200; ++trial) {
    const MukaiVector x = random(), y = random(), z = random();
    EXPECT_EQ(mukai_pairing(x, y, ns), mukai_pairing(y, x, ns));
    MukaiVector sum = mv(x.r + y.r, {x.d[0] + y.d[0], x.d[1] + y.d[1]}, x.s + y.s);
    EXPECT_EQ(mukai_pairing(sum, z, ns), mukai_pairing(x, z, ns) + mukai_pairing(y, z, ns));
    EXPECT_TRUE(divides(2, mukai_pairing(x, x, ns)));
  }
}

TEST(MukaiVector, Examples) {
  EXPECT_EQ(mukai_vector(chern(0, {0, 0}, 1), 1), mv(0, {0, 0}, 1));
  EXPECT_EQ(mukai_vector(chern(1, {0, 0}, 0), 1), mv(1, {0, 0}, 1));
  EXPECT_EQ(mukai_vector(chern(3, {1, 2}, 5), 0), mv(3, {1, 2}, 5, 0));
  EXPECT_EQ(mukai_vector(chern(1, {0, 0}, 0), 1, SignConvention::kPrinted), mv(1, {0, 0}, -1));
}

TEST(MukaiVector, NonIntegral) {
  try {
    (void)mukai_vector(chern(1, {1, 0}, Rational(1, 2)), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonIntegralResult);
  }
  EXPECT_THROW(validate(chern(1, {0, 0}, Rational(1, 3))), Error);
}

TEST(EulerPairing, Examples) {
  const IntersectionData k3 = k3_abelian_ambient(kU, 1);
  EXPECT_EQ(euler_pairing_surface(chern(0, {1, 2}, 0), chern(0, {3, 1}, 0), k3), -(1 * 1 + 2 * 3));
  EXPECT_EQ(euler_pairing_surface(chern(1, {0, 0}, 0), chern(1, {0, 0}, 0), k3), 2);
  EXPECT_EQ(euler_pairing_surface(chern(0, {0, 0}, 0), chern(4, {1, 1}, 3), k3), 0);
}

TEST(EulerPairing, HalfIntegerTermsMustCancel) {
  const IntersectionData amb{kU, {1, 0}, 1};
  try {
    (void)euler_pairing_surface(chern(0, {0, 1}, 0), chern(1, {0, 0}, 0), amb);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonIntegralResult);
  }
}

TEST(EulerPairing, SymmetryDependsOnCanonicalClass) {
  const SurfaceChernData e = chern(1, {1, 0}, 0);
  const SurfaceChernData f = chern(2, {0, 2}, 1);
  const IntersectionData flat = k3_abelian_ambient(kU, 1);
  EXPECT_EQ(euler_pairing_surface(e, f, flat), euler_pairing_surface(f, e, flat));
  const IntersectionData twisted{kU, {2, 0}, 1};
  EXPECT_NE(euler_pairing_surface(e, f, twisted), euler_pairing_surface(f, e, twisted));
  // Independent evaluation of the Riemann-Roch expression.
  Rational expected = Rational(1) * f.ch2 - Rational(kU.product(e.c1, f.c1)) + Rational(2) * e.ch2 +
                            Rational(kU.product(std::vector<Integer>{2, -2}, twisted.canonical), 2) + 2;
  expected.canonicalize();
  EXPECT_EQ(Rational(euler_pairing_surface(e, f, twisted)), expected);
}

TEST(RrConsistency, Examples) {
  const SurfaceChernData o = chern(1, {0, 0}, 0);
  const SurfaceChernData point = chern(0, {0, 0}, 1);
  EXPECT_TRUE(rr_consistency(o, point, 1, kU));
  EXPECT_EQ(euler_pairing_surface(o, point, k3_abelian_ambient(kU, 1)), 1);
  EXPECT_TRUE(rr_consistency(point, point, 1, kU));
}

TEST(RrConsistency, PrintedSignFailsOnStructureSheaf) {
  const SurfaceChernData o = chern(1, {0, 0}, 0);
  EXPECT_EQ(euler_pairing_surface(o, o, k3_abelian_ambient(kU, 1)), 2);
  const MukaiVector printed = mukai_vector(o, 1, SignConvention::kPrinted);
  EXPECT_EQ(-mukai_pairing(printed, printed, kU), -2);
  EXPECT_FALSE(rr_consistency(o, o, 1, kU, SignConvention::kPrinted));
  EXPECT_TRUE(rr_consistency(o, o, 1, kU));
}

TEST(RrConsistency, RandomClassesBothEpsilon) {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 200; ++trial) {
    const Lattice ns(oracle::random_gram(rng, 2, 5, true));
    const SurfaceChernData e = random_chern(rng, ns);
    const SurfaceChernData f = random_chern(rng, ns);
    for (int eps : {0, 1}) EXPECT_TRUE(rr_consistency(e, f, eps, ns)) << trial;
  }
}

}  // namespace
}  // namespace fmp
