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

#include "fmp/lattice.hpp"

#include <utility>

#include "fmp/normal_form.hpp"

namespace fmp {

Lattice::Lattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() == 0) throw Error(ErrorCode::kInvalidInput, "lattice must have rank >= 1");
  if (!gram_.square()) throw Error(ErrorCode::kInvalidInput, "Gram matrix must be square");
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = i + 1; j < gram_.cols(); ++j)
      if (gram_(i, j) != gram_(j, i)) throw Error(ErrorCode::kInvalidInput, "Gram matrix must be symmetric");
  det_ = fmp::determinant(gram_);
  if (det_ == 0) throw Error(ErrorCode::kInvalidInput, "Gram matrix is degenerate (determinant 0)");
}

Lattice Lattice::hyperbolic() { return Lattice(IntMatrix{{0, -1}, {-1, 0}}); }

bool Lattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (!divides(Integer(2), gram_(i, i))) return false;
  return true;
}

Integer Lattice::product(std::span<const Integer> x, std::span<const Integer> y) const {
  if (x.size() != rank() || y.size() != rank()) {
    throw Error(ErrorCode::kDimensionMismatch, "vector length does not match lattice rank");
  }
  Integer total = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < rank(); ++j) row += gram_(i, j) * y[j];
    total += x[i] * row;
  }
  return total;
}

Integer determinant(const Lattice& lattice) { return lattice.det(); }

Signature signature(const Lattice& lattice) {
  RatMatrix a = to_rational(lattice.gram());
  const std::size_t n = a.rows();
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      // Zero pivot: bring in a later nonzero diagonal entry, or fold in a
      // row with a nonzero off-diagonal entry (a_kk becomes 2·a_kj).
      std::size_t diag = k;
      for (std::size_t j = k + 1; j < n && diag == k; ++j)
        if (a(j, j) != 0) diag = j;
      if (diag != k) {
        a.swap_rows(k, diag);
        a.swap_cols(k, diag);
      } else {
        for (std::size_t j = k + 1; j < n; ++j) {
          if (a(k, j) != 0) {
            a.add_row(k, j, Rational(1));
            a.add_col(k, j, Rational(1));
            break;
          }
        }
      }
    }
    // Nondegeneracy guarantees a nonzero pivot here.
    const Rational pivot = a(k, k);
    if (pivot > 0) ++sig.positive; else ++sig.negative;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / pivot;
      a.add_row(i, k, -f);
      a.add_col(i, k, -f);
    }
  }
  return sig;
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  const std::size_t n = a.rank() + b.rank();
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) g(i, j) = a.gram()(i, j);
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) g(a.rank() + i, a.rank() + j) = b.gram()(i, j);
  return Lattice(std::move(g));
}

Lattice rescale(const Lattice& lattice, const Integer& m) {
  if (m == 0) throw Error(ErrorCode::kInvalidInput, "rescale factor must be nonzero");
  IntMatrix g = lattice.gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= m;
  return Lattice(std::move(g));
}

}  // namespace fmp
