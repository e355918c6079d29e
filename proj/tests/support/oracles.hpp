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

// Slow, independent reference computations used only by the tests. None of
// these call into the algorithms they check.

#include <cstdint>
#include <random>
#include <vector>

#include "fmp/lattice.hpp"

namespace fmp::oracle {

// Laplace expansion along the first row.
Integer cofactor_determinant(const IntMatrix& m);

// Signature from the characteristic polynomial (Faddeev-LeVerrier) and
// Descartes' rule of signs, exact for a real-rooted polynomial.
Signature descartes_signature(const IntMatrix& symmetric);

// Invariant factors d_k / d_{k-1} from determinantal divisors d_k (gcd of
// all k x k minors). Includes the unit factors and trailing zeros.
std::vector<Integer> determinantal_invariant_factors(const IntMatrix& m);

// |A_L| and its nontrivial invariant factors, from determinantal divisors.
std::vector<Integer> discriminant_factors(const IntMatrix& gram);

std::int64_t euler_phi(std::int64_t n);

// Orbits of x -> -x on (ℤ/λ)^×, counted by marking.
std::int64_t negation_orbits(std::int64_t lambda);

// Subgroups of a finite abelian group ⊕ ℤ/d_i with at most two cyclic
// factors, found as the distinct closures of all pairs of elements.
std::int64_t subgroup_count(const std::vector<std::int64_t>& factors);

// Any U with entries in [-bound, bound] and Uᵀ·A·U = B (rank 2 only).
bool brute_isometric_rank2(const IntMatrix& a, const IntMatrix& b, int bound);

// x·G·y for rational coordinate vectors.
Rational rational_product(const IntMatrix& gram, const std::vector<Rational>& x, const std::vector<Rational>& y);

// Random symmetric nondegenerate matrix with entries in [-range, range]
// (even diagonal when `even`).
IntMatrix random_gram(std::mt19937_64& rng, std::size_t rank, int range, bool even);

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range);

// Random SL_2(ℤ) element as a product of elementary matrices.
IntMatrix random_sl2(std::mt19937_64& rng, int steps);

}  // namespace fmp::oracle
