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

#include "fmp/lattice.hpp"

namespace fmp {

// Default bound on |A_L| for every operation that enumerates group elements.
inline constexpr std::int64_t kDefaultGroupCap = 10000;

// The finite abelian group A_L = L*/L of a lattice together with its
// bilinear form into ℚ/ℤ and, for even L, its quadratic form into ℚ/2ℤ.
//
// A_L is presented as ⊕ ℤ/d_i with d_1 | d_2 | ... (all d_i > 1). Elements
// are coordinate vectors (c_i) with 0 <= c_i < d_i. All form values have
// denominator dividing the exponent e = d_last, so the element-level API
// works with numerators over e; these numerators require e to fit a
// machine word and throw Error(kGroupTooLarge) otherwise.
class DiscriminantForm {
 public:
  using Element = std::vector<std::int64_t>;

  const std::vector<Integer>& factors() const noexcept { return factors_; }
  std::size_t generator_count() const noexcept { return factors_.size(); }
  Integer order() const;
  bool trivial() const noexcept { return factors_.empty(); }
  bool even() const noexcept { return even_; }

  // Row i is a representative in L ⊗ ℚ (basis of L) of generator i.
  const RatMatrix& generator_lifts() const noexcept { return lifts_; }
  // b(g_i, g_j) in [0,1) and q(g_i) in [0,2).
  const RatMatrix& generator_bilinear() const noexcept { return bilinear_; }
  const std::vector<Rational>& generator_quadratic() const;

  // Element-level API.
  std::int64_t exponent() const;
  Element zero() const { return Element(factors_.size(), 0); }
  bool is_zero(const Element& x) const;
  Element add(const Element& x, const Element& y) const;
  Element scale(const Element& x, std::int64_t m) const;
  std::int64_t order_of(const Element& x) const;
  std::vector<Rational> lift(const Element& x) const;

  // b(x,y)·e as an integer in [0, e).
  std::int64_t bilinear_numerator(const Element& x, const Element& y) const;
  // q(x)·e as an integer in [0, 2e); even lattices only.
  std::int64_t quadratic_numerator(const Element& x) const;
  Rational bilinear(const Element& x, const Element& y) const;
  Rational quadratic(const Element& x) const;

  // Mixed-radix indexing of the elements; |A_L| must be <= cap.
  std::int64_t size(std::int64_t cap = kDefaultGroupCap) const;
  std::int64_t index_of(const Element& x) const;
  Element element_at(std::int64_t index) const;
  std::vector<Element> elements(std::int64_t cap = kDefaultGroupCap) const;

 private:
  friend DiscriminantForm discriminant_form(const Lattice& lattice);

  void require_machine_exponent() const;

  std::vector<Integer> factors_;
  std::vector<std::int64_t> small_factors_;  // empty if any factor overflows
  std::int64_t exponent_ = 1;                // 0 when not representable
  bool even_ = false;
  RatMatrix lifts_;
  RatMatrix bilinear_;
  std::vector<Rational> quadratic_;
  std::vector<std::int64_t> bilinear_num_;   // flattened, scaled by e, mod e
  std::vector<std::int64_t> quadratic_num_;  // scaled by e, mod 2e
};

// Nontrivial invariant factors of coker(gram): the structure of L*/L.
std::vector<Integer> discriminant_group(const Lattice& lattice);

DiscriminantForm discriminant_form(const Lattice& lattice);

// Every invariant factor of A_L equals 2 (the trivial group qualifies).
bool is_two_elementary(const Lattice& lattice);

}  // namespace fmp
