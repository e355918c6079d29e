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

#include <optional>
#include <string>
#include <vector>

#include "fmp/discriminant.hpp"

namespace fmp {

enum class GenusVerdict { kSame, kDifferent, kInconclusive };

std::string_view to_string(GenusVerdict verdict);

struct GenusComparison {
  GenusVerdict verdict = GenusVerdict::kInconclusive;
  // Separating invariant when different, cap message when inconclusive.
  std::string reason;
};

// Images of the generators of `from` in `to` defining an isomorphism of
// finite quadratic forms, if one exists. Both forms must be even and have
// order <= cap.
std::optional<std::vector<DiscriminantForm::Element>> find_form_isomorphism(
    const DiscriminantForm& from, const DiscriminantForm& to, std::int64_t cap = kDefaultGroupCap);

// Even lattices are in the same genus iff their signatures agree and their
// discriminant quadratic forms are isomorphic. Odd input throws
// Error(kOddLatticeUnsupported); a group beyond cap yields kInconclusive.
GenusComparison same_genus(const Lattice& a, const Lattice& b, std::int64_t cap = kDefaultGroupCap);

}  // namespace fmp
