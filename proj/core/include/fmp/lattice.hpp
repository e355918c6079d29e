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

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "fmp/matrix.hpp"

namespace fmp {

// Free ℤ-module of finite rank with a nondegenerate symmetric integral
// bilinear form, held as its Gram matrix in a fixed basis.
class Lattice {
 public:
  // Throws Error(kInvalidInput) unless gram is square, nonempty, symmetric
  // and nondegenerate.
  explicit Lattice(IntMatrix gram);

  // The hyperbolic plane in the Mukai-pairing convention: [[0,-1],[-1,0]].
  static Lattice hyperbolic();

  const IntMatrix& gram() const noexcept { return gram_; }
  std::size_t rank() const noexcept { return gram_.rows(); }
  const Integer& det() const noexcept { return det_; }
  // Every vector has even norm (all diagonal Gram entries even).
  bool is_even() const;

  Integer product(std::span<const Integer> x, std::span<const Integer> y) const;
  Integer norm(std::span<const Integer> x) const { return product(x, x); }

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.gram_ == b.gram_; }

 private:
  IntMatrix gram_;
  Integer det_;
};

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;

  bool definite() const noexcept { return positive == 0 || negative == 0; }
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

Integer determinant(const Lattice& lattice);

// Congruence diagonalization over ℚ; no floating point involved.
Signature signature(const Lattice& lattice);

Lattice direct_sum(const Lattice& a, const Lattice& b);

// Scales the form by a nonzero integer; m == 0 throws Error(kInvalidInput).
Lattice rescale(const Lattice& lattice, const Integer& m);

}  // namespace fmp
