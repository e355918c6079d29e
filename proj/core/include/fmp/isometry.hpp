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
#include <optional>
#include <string>
#include <vector>

#include "fmp/discriminant.hpp"

namespace fmp {

enum class IsometryOutcome { kIsometric, kNotIsometric, kInconclusive };

std::string_view to_string(IsometryOutcome outcome);

struct IsometryVerdict {
  IsometryOutcome outcome = IsometryOutcome::kInconclusive;
  // When isometric: U with Uᵀ·G_a·U = G_b and |det U| = 1. Column j holds
  // the image of the j-th basis vector of b in the coordinates of a.
  std::optional<IntMatrix> witness;
  // Separating invariant, or why the search gave up.
  std::string reason;
};

struct IsometryOptions {
  // Coefficient radius for the indefinite search.
  std::int64_t radius = 10;
  std::int64_t group_cap = kDefaultGroupCap;
  // Budget on box size (2R+1)^n and on backtracking nodes in the
  // indefinite case; exceeding it yields kInconclusive.
  std::uint64_t search_budget = 20'000'000;
};

// Every nonzero x (coordinates in the lattice basis) with x·x <= bound, for
// a positive definite lattice. Exact Fincke-Pohst enumeration over ℚ.
std::vector<std::vector<Integer>> short_vectors(const Lattice& lattice, const Integer& bound);

// Smallest norm of a nonzero vector of a positive definite lattice.
Integer minimum_norm(const Lattice& lattice);

// Definite lattices are decided exactly; indefinite ones are searched within
// the coefficient box and report kInconclusive when nothing is found.
IsometryVerdict isometric(const Lattice& a, const Lattice& b, const IsometryOptions& options = {});

}  // namespace fmp
