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

#include "fmp/discriminant.hpp"

namespace fmp {

enum class SubgroupFilter {
  kAll,       // every subgroup of A_L
  kIntegral,  // b vanishes on the subgroup
  kEven,      // q vanishes on the subgroup (even overlattices)
};

struct SubgroupLimits {
  std::int64_t group_cap = kDefaultGroupCap;
  std::size_t max_subgroups = 100000;
};

struct Subgroup {
  std::vector<DiscriminantForm::Element> generators;
  std::vector<std::int64_t> members;  // sorted element indices

  std::int64_t order() const { return static_cast<std::int64_t>(members.size()); }
};

// Subgroups of A_L satisfying the filter, ordered by (order, members).
// Throws Error(kGroupTooLarge) beyond either limit.
std::vector<Subgroup> enumerate_subgroups(const DiscriminantForm& form, SubgroupFilter filter,
                                          const SubgroupLimits& limits = {});

struct Overlattice {
  Lattice lattice;   // Gram matrix in the HNF basis below
  RatMatrix basis;   // rows: basis vectors in the coordinates of L
  Integer index;     // [M : L]
};

// The lattice L + lifts(H) for an integral subgroup H ⊆ A_L.
Overlattice overlattice_from_subgroup(const Lattice& lattice, const DiscriminantForm& form, const Subgroup& subgroup);

// Integral overlattices of finite index (even ones with even_only), sorted by
// (index, Gram). An odd lattice has no even overlattice.
std::vector<Overlattice> overlattices(const Lattice& lattice, bool even_only, const SubgroupLimits& limits = {});

}  // namespace fmp
