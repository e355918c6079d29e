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

#include "fmp/normal_form.hpp"

#include <optional>
#include <utility>

namespace fmp {

Integer determinant(const IntMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::kDimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Integer(1);
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = k;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a(i, k) != 0) {
          swap_with = i;
          break;
        }
      }
      if (swap_with == k) return Integer(0);
      a.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(t);
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Nonzero entry of smallest absolute value in the trailing block d[t:, t:].
std::optional<Position> smallest_entry(const IntMatrix& d, std::size_t t) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer a = abs(d(i, j));
      if (!best || a < best_abs) {
        best = Position{i, j};
        best_abs = std::move(a);
      }
    }
  return best;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm out{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& d = out.d;
  const std::size_t steps = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      const auto pivot = smallest_entry(d, t);
      if (!pivot) return out;  // trailing block is zero
      d.swap_rows(t, pivot->row);
      out.u.swap_rows(t, pivot->row);
      d.swap_cols(t, pivot->col);
      out.v.swap_cols(t, pivot->col);

      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = floor_div(d(i, t), d(t, t));
        d.add_row(i, t, -q);
        out.u.add_row(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = floor_div(d(t, j), d(t, t));
        d.add_col(j, t, -q);
        out.v.add_col(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block; otherwise fold an
      // offending row in and reduce again.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < d.rows() && !offending; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (!divides(d(t, t), d(i, j))) {
            offending = i;
            break;
          }
      if (!offending) break;
      d.add_row(t, *offending, Integer(1));
      out.u.add_row(t, *offending, Integer(1));
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      out.u.negate_row(t);
    }
  }
  return out;
}

IntMatrix hermite_normal_form(const IntMatrix& generators) {
  IntMatrix a = generators;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = pivot_row; i < a.rows(); ++i) {
        if (a(i, col) == 0) continue;
        if (!best || abs(a(i, col)) < abs(a(*best, col))) best = i;
      }
      if (!best) break;
      a.swap_rows(pivot_row, *best);
      bool others_zero = true;
      for (std::size_t i = pivot_row + 1; i < a.rows(); ++i) {
        if (a(i, col) == 0) continue;
        a.add_row(i, pivot_row, -floor_div(a(i, col), a(pivot_row, col)));
        if (a(i, col) != 0) others_zero = false;
      }
      if (others_zero) break;
    }
    if (a(pivot_row, col) == 0) continue;
    if (a(pivot_row, col) < 0) a.negate_row(pivot_row);
    for (std::size_t i = 0; i < pivot_row; ++i) {
      a.add_row(i, pivot_row, -floor_div(a(i, col), a(pivot_row, col)));
    }
    ++pivot_row;
  }
  IntMatrix basis(pivot_row, a.cols());
  for (std::size_t i = 0; i < pivot_row; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) basis(i, j) = a(i, j);
  return basis;
}

}  // namespace fmp
