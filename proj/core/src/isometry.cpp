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

#include "fmp/isometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <utility>

#include "fmp/genus.hpp"
#include "fmp/normal_form.hpp"

namespace fmp {

__extension__ typedef __int128 Wide;

std::string_view to_string(IsometryOutcome outcome) {
  switch (outcome) {
    case IsometryOutcome::kIsometric: return "isometric";
    case IsometryOutcome::kNotIsometric: return "not isometric";
    case IsometryOutcome::kInconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

using Vector = std::vector<Integer>;

Integer rational_floor(const Rational& x) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

// Q(x) = Σ_i q_ii (x_i + Σ_{j>i} q_ij x_j)^2 for a positive definite Gram.
RatMatrix quadratic_decomposition(const IntMatrix& gram) {
  const std::size_t n = gram.rows();
  RatMatrix q = to_rational(gram);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      q(j, i) = q(i, j);
      q(i, j) = q(i, j) / q(i, i);
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q(k, l) -= q(k, i) * q(i, l);
  }
  return q;
}

class ShortVectorEnumerator {
 public:
  ShortVectorEnumerator(const IntMatrix& gram, const Integer& bound)
      : n_(gram.rows()), q_(quadratic_decomposition(gram)), x_(n_, Integer(0)), bound_(bound) {}

  std::vector<Vector> run() {
    if (bound_ > 0) descend(n_ - 1, Rational(bound_));
    return std::move(found_);
  }

 private:
  bool fits(std::size_t i, const Integer& m, const Rational& center, const Rational& remaining, Rational& used) const {
    const Rational diff = Rational(m) - center;
    used = q_(i, i) * diff * diff;
    return used <= remaining;
  }

  void visit(std::size_t i, const Integer& m, const Rational& remaining, const Rational& used) {
    x_[i] = m;
    if (i == 0) {
      if (std::any_of(x_.begin(), x_.end(), [](const Integer& v) { return v != 0; })) found_.push_back(x_);
    } else {
      descend(i - 1, remaining - used);
    }
  }

  // Integers m with q_ii (m - c)^2 <= remaining form an interval around c;
  // walk outward from floor(c) and floor(c)+1 until the bound fails.
  void descend(std::size_t i, const Rational& remaining) {
    Rational center = 0;
    for (std::size_t j = i + 1; j < n_; ++j) center -= q_(i, j) * x_[j];
    const Integer start = rational_floor(center);
    Rational used;
    for (Integer m = start; fits(i, m, center, remaining, used); --m) visit(i, m, remaining, used);
    for (Integer m = start + 1; fits(i, m, center, remaining, used); ++m) visit(i, m, remaining, used);
    x_[i] = 0;
  }

  std::size_t n_;
  RatMatrix q_;
  Vector x_;
  Integer bound_;
  std::vector<Vector> found_;
};

Lattice negated(const Lattice& lattice) { return rescale(lattice, Integer(-1)); }

// Backtracking assignment of basis images: column j must have norm G_b(j,j)
// and inner product G_b(i,j) with every earlier column.
class BasisAssignment {
 public:
  BasisAssignment(const Lattice& a, const Lattice& b, std::map<Integer, std::vector<Vector>> by_norm,
                  std::uint64_t node_budget)
      : a_(a), b_(b), by_norm_(std::move(by_norm)), node_budget_(node_budget) {}

  // nullopt with exhausted() == false means a complete negative answer.
  std::optional<IntMatrix> run() {
    chosen_.clear();
    images_.clear();
    if (!extend(0)) return std::nullopt;
    IntMatrix u(a_.rank(), b_.rank());
    for (std::size_t j = 0; j < chosen_.size(); ++j)
      for (std::size_t i = 0; i < a_.rank(); ++i) u(i, j) = chosen_[j][i];
    return u;
  }

  bool exhausted() const noexcept { return exhausted_; }

 private:
  bool extend(std::size_t j) {
    const std::size_t n = b_.rank();
    if (j == n) {
      IntMatrix u(n, n);
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) u(r, c) = chosen_[c][r];
      const Integer det = determinant(u);
      return det == 1 || det == -1;
    }
    const auto it = by_norm_.find(b_.gram()(j, j));
    if (it == by_norm_.end()) return false;
    for (const Vector& v : it->second) {
      if (++nodes_ > node_budget_) {
        exhausted_ = true;
        return false;
      }
      bool ok = true;
      for (std::size_t i = 0; i < j && ok; ++i) {
        Integer dot = 0;
        for (std::size_t k = 0; k < v.size(); ++k) dot += v[k] * images_[i][k];
        ok = dot == b_.gram()(i, j);
      }
      if (!ok) continue;
      chosen_.push_back(v);
      images_.push_back(gram_times(v));
      if (extend(j + 1)) return true;
      if (exhausted_) return false;
      chosen_.pop_back();
      images_.pop_back();
    }
    return false;
  }

  Vector gram_times(const Vector& v) const {
    Vector out(v.size(), Integer(0));
    for (std::size_t r = 0; r < v.size(); ++r)
      for (std::size_t c = 0; c < v.size(); ++c) out[r] += a_.gram()(r, c) * v[c];
    return out;
  }

  const Lattice& a_;
  const Lattice& b_;
  std::map<Integer, std::vector<Vector>> by_norm_;
  std::uint64_t node_budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<Vector> chosen_;
  std::vector<Vector> images_;  // G_a · chosen
};

bool verify_witness(const Lattice& a, const Lattice& b, const IntMatrix& u) {
  const Integer det = determinant(u);
  return (det == 1 || det == -1) && u.transpose() * a.gram() * u == b.gram();
}

IsometryVerdict definite_search(const Lattice& a, const Lattice& b) {
  Integer bound = b.gram()(0, 0);
  for (std::size_t j = 1; j < b.rank(); ++j) bound = std::max(bound, Integer(b.gram()(j, j)));
  std::map<Integer, std::vector<Vector>> by_norm;
  for (Vector& v : short_vectors(a, bound)) {
    Integer norm = a.norm(v);
    by_norm[norm].push_back(std::move(v));
  }
  BasisAssignment search(a, b, std::move(by_norm), std::numeric_limits<std::uint64_t>::max());
  if (auto u = search.run()) return {IsometryOutcome::kIsometric, std::move(u), ""};
  return {IsometryOutcome::kNotIsometric, std::nullopt, "exhaustive search"};
}

std::optional<IntMatrix> box_search(const Lattice& a, const Lattice& b, const IsometryOptions& options,
                                    bool& exhausted) {
  const std::size_t n = a.rank();
  std::vector<std::int64_t> gram(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram[i * n + j] = *to_int64(a.gram()(i, j));
  std::map<Wide, Integer> wanted;
  for (std::size_t j = 0; j < n; ++j) wanted.emplace(static_cast<Wide>(*to_int64(b.gram()(j, j))), b.gram()(j, j));

  std::map<Integer, std::vector<Vector>> by_norm;
  std::vector<std::int64_t> v(n, -options.radius);
  while (true) {
    Wide norm = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] == 0) continue;
      Wide row = 0;
      for (std::size_t j = 0; j < n; ++j) row += static_cast<Wide>(gram[i * n + j]) * v[j];
      norm += row * v[i];
    }
    const auto hit = wanted.find(norm);
    if (hit != wanted.end() && std::any_of(v.begin(), v.end(), [](std::int64_t c) { return c != 0; })) {
      Vector big(n);
      for (std::size_t i = 0; i < n; ++i) big[i] = Integer(static_cast<long>(v[i]));
      by_norm[hit->second].push_back(std::move(big));
    }
    std::size_t k = 0;
    while (k < n && v[k] == options.radius) {
      v[k] = -options.radius;
      ++k;
    }
    if (k == n) break;
    ++v[k];
  }
  BasisAssignment search(a, b, std::move(by_norm), options.search_budget);
  auto u = search.run();
  exhausted = search.exhausted();
  return u;
}

bool fits_box_arithmetic(const Lattice& lattice) {
  constexpr long kLimit = 1L << 40;
  for (std::size_t i = 0; i < lattice.rank(); ++i)
    for (std::size_t j = 0; j < lattice.rank(); ++j)
      if (abs(lattice.gram()(i, j)) > kLimit) return false;
  return true;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  const std::size_t n = u.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = Rational(u(i, j));
    aug(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (aug(p, c) == 0) ++p;
    aug.swap_rows(p, c);
    const Rational pivot = aug(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) aug(c, j) /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug(i, c) == 0) continue;
      const Rational f = aug(i, c);
      aug.add_row(i, c, -f);
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j).get_num();
  return inv;
}

IsometryVerdict indefinite_search(const Lattice& a, const Lattice& b, const IsometryOptions& options) {
  const double box = std::pow(static_cast<double>(2 * options.radius + 1), static_cast<double>(a.rank()));
  if (box > static_cast<double>(options.search_budget)) {
    return {IsometryOutcome::kInconclusive, std::nullopt,
            "coefficient box of radius " + std::to_string(options.radius) + " exceeds search budget"};
  }
  if (options.radius < 0 || options.radius > 1000) {
    throw Error(ErrorCode::kInvalidInput, "search radius must lie in [0, 1000]");
  }
  if (!fits_box_arithmetic(a) || !fits_box_arithmetic(b)) {
    return {IsometryOutcome::kInconclusive, std::nullopt, "Gram entries too large for the coefficient search"};
  }
  bool exhausted = false;
  if (auto u = box_search(a, b, options, exhausted)) return {IsometryOutcome::kIsometric, std::move(u), ""};
  // The inverse of a witness may fit the box when the witness does not.
  bool exhausted_back = false;
  if (auto back = box_search(b, a, options, exhausted_back)) {
    return {IsometryOutcome::kIsometric, unimodular_inverse(*back), ""};
  }
  return {IsometryOutcome::kInconclusive, std::nullopt,
          exhausted || exhausted_back
              ? "search budget exhausted"
              : "no isometry with coefficients in radius " + std::to_string(options.radius)};
}

}  // namespace

std::vector<std::vector<Integer>> short_vectors(const Lattice& lattice, const Integer& bound) {
  const Signature sig = signature(lattice);
  if (sig.negative != 0) throw Error(ErrorCode::kInvalidInput, "short vector enumeration needs a positive definite lattice");
  return ShortVectorEnumerator(lattice.gram(), bound).run();
}

Integer minimum_norm(const Lattice& lattice) {
  Integer bound = lattice.gram()(0, 0);
  for (std::size_t i = 1; i < lattice.rank(); ++i) bound = std::min(bound, Integer(lattice.gram()(i, i)));
  Integer best = bound;
  for (const auto& v : short_vectors(lattice, bound)) best = std::min(best, lattice.norm(v));
  return best;
}

IsometryVerdict isometric(const Lattice& a, const Lattice& b, const IsometryOptions& options) {
  if (a.rank() != b.rank()) return {IsometryOutcome::kNotIsometric, std::nullopt, "rank"};
  if (a == b) return {IsometryOutcome::kIsometric, IntMatrix::identity(a.rank()), ""};
  const Signature sa = signature(a);
  if (sa != signature(b)) return {IsometryOutcome::kNotIsometric, std::nullopt, "signature"};

  const bool definite = sa.definite();
  const bool negative = sa.positive == 0;
  const Lattice pa = negative ? negated(a) : a;
  const Lattice pb = negative ? negated(b) : b;
  if (definite && minimum_norm(pa) != minimum_norm(pb)) {
    return {IsometryOutcome::kNotIsometric, std::nullopt, "minimum norm"};
  }
  if (a.det() != b.det()) return {IsometryOutcome::kNotIsometric, std::nullopt, "determinant"};
  if (discriminant_group(a) != discriminant_group(b)) {
    return {IsometryOutcome::kNotIsometric, std::nullopt, "discriminant group"};
  }
  if (a.is_even() != b.is_even()) return {IsometryOutcome::kNotIsometric, std::nullopt, "parity"};
  if (a.is_even()) {
    const GenusComparison genus = same_genus(a, b, options.group_cap);
    if (genus.verdict == GenusVerdict::kDifferent) {
      return {IsometryOutcome::kNotIsometric, std::nullopt, "genus (" + genus.reason + ")"};
    }
  }

  IsometryVerdict verdict = definite ? definite_search(pa, pb) : indefinite_search(a, b, options);
  if (verdict.witness && !verify_witness(a, b, *verdict.witness)) {
    throw Error(ErrorCode::kInvalidInput, "internal error: isometry witness failed verification");
  }
  return verdict;
}

}  // namespace fmp
