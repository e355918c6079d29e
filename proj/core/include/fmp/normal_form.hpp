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

#include "fmp/matrix.hpp"

namespace fmp {

// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

struct SmithForm {
  IntMatrix d;  // diagonal, d(i,i) | d(i+1,i+1), entries >= 0
  IntMatrix u;  // rows x rows, unimodular
  IntMatrix v;  // cols x cols, unimodular; u · m · v == d
};

SmithForm smith_normal_form(const IntMatrix& m);

// Row-style Hermite normal form of the row lattice spanned by `generators`:
// echelon rows with positive pivots, entries above each pivot reduced into
// [0, pivot). Zero rows are dropped, so the result is a basis.
IntMatrix hermite_normal_form(const IntMatrix& generators);

}  // namespace fmp
