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

#include "fmp/discriminant.hpp"

#include <limits>
#include <string>
#include <utility>

#include "fmp/normal_form.hpp"

namespace fmp {

__extension__ typedef __int128 Wide;

namespace {

constexpr std::int64_t kMaxMachineExponent = std::int64_t{1} << 61;

std::int64_t mod_positive(Wide value, std::int64_t m) {
  Wide r = value % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

// Exact rational x·scale, which must be integral, reduced into [0, m).
std::int64_t scaled_residue(const Rational& x, std::int64_t scale, std::int64_t m) {
  const Rational scaled = x * Rational(scale);
  if (scaled.get_den() != 1) throw Error(ErrorCode::kInvalidInput, "discriminant value off the expected denominator");
  const Integer r = floor_mod(scaled.get_num(), Integer(static_cast<long>(m)));
  return static_cast<std::int64_t>(r.get_si());
}

}  // namespace

std::vector<Integer> discriminant_group(const Lattice& lattice) {
  const SmithForm snf = smith_normal_form(lattice.gram());
  std::vector<Integer> out;
  for (std::size_t i = 0; i < lattice.rank(); ++i)
    if (snf.d(i, i) > 1) out.push_back(snf.d(i, i));
  return out;
}

DiscriminantForm discriminant_form(const Lattice& lattice) {
  const std::size_t n = lattice.rank();
  const SmithForm snf = smith_normal_form(lattice.gram());
  DiscriminantForm form;
  form.even_ = lattice.is_even();

  std::vector<std::size_t> columns;
  for (std::size_t i = 0; i < n; ++i) {
    if (snf.d(i, i) > 1) {
      columns.push_back(i);
      form.factors_.push_back(snf.d(i, i));
    }
  }
  const std::size_t m = columns.size();

  // Since U·G·V = D, the columns of V scaled by 1/d_i generate L*/L.
  form.lifts_ = RatMatrix(m, n);
  for (std::size_t g = 0; g < m; ++g) {
    const std::size_t c = columns[g];
    for (std::size_t k = 0; k < n; ++k) {
      Rational coord(snf.v(k, c), snf.d(c, c));
      coord.canonicalize();
      form.lifts_(g, k) = reduce_mod(coord, Integer(1));
    }
  }

  const RatMatrix gram = to_rational(lattice.gram());
  const RatMatrix products = form.lifts_ * gram * form.lifts_.transpose();
  form.bilinear_ = RatMatrix(m, m);
  form.quadratic_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) form.bilinear_(i, j) = reduce_mod(products(i, j), Integer(1));
    form.quadratic_[i] = reduce_mod(products(i, i), Integer(2));
  }

  form.exponent_ = 1;
  if (m > 0) {
    const Integer& e = form.factors_.back();
    form.exponent_ = e <= kMaxMachineExponent ? static_cast<std::int64_t>(e.get_si()) : 0;
  }
  if (form.exponent_ != 0) {
    for (const Integer& d : form.factors_) form.small_factors_.push_back(static_cast<std::int64_t>(d.get_si()));
    const std::int64_t e = form.exponent_;
    form.bilinear_num_.resize(m * m);
    form.quadratic_num_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) form.bilinear_num_[i * m + j] = scaled_residue(form.bilinear_(i, j), e, e);
      if (form.even_) form.quadratic_num_[i] = scaled_residue(form.quadratic_[i], e, 2 * e);
    }
  }
  return form;
}

bool is_two_elementary(const Lattice& lattice) {
  for (const Integer& d : discriminant_group(lattice))
    if (d != 2) return false;
  return true;
}

Integer DiscriminantForm::order() const {
  Integer total = 1;
  for (const Integer& d : factors_) total *= d;
  return total;
}

const std::vector<Rational>& DiscriminantForm::generator_quadratic() const {
  if (!even_) throw Error(ErrorCode::kOddLatticeUnsupported, "quadratic form requires an even lattice");
  return quadratic_;
}

void DiscriminantForm::require_machine_exponent() const {
  if (exponent_ == 0) throw Error(ErrorCode::kGroupTooLarge, "discriminant exponent exceeds machine range");
}

std::int64_t DiscriminantForm::exponent() const {
  require_machine_exponent();
  return exponent_;
}

bool DiscriminantForm::is_zero(const Element& x) const {
  for (auto c : x)
    if (c != 0) return false;
  return true;
}

DiscriminantForm::Element DiscriminantForm::add(const Element& x, const Element& y) const {
  require_machine_exponent();
  Element out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = mod_positive(static_cast<Wide>(x[i]) + y[i], small_factors_[i]);
  return out;
}

DiscriminantForm::Element DiscriminantForm::scale(const Element& x, std::int64_t m) const {
  require_machine_exponent();
  Element out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = mod_positive(static_cast<Wide>(x[i]) * m, small_factors_[i]);
  return out;
}

std::int64_t DiscriminantForm::order_of(const Element& x) const {
  require_machine_exponent();
  Integer ord = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    const Integer d = small_factors_[i];
    const Integer ci = gcd(Integer(static_cast<long>(x[i])), d);
    const Integer oi = d / ci;
    ord = ord / gcd(ord, oi) * oi;
  }
  return static_cast<std::int64_t>(ord.get_si());
}

std::vector<Rational> DiscriminantForm::lift(const Element& x) const {
  std::vector<Rational> out(lifts_.cols(), Rational(0));
  for (std::size_t g = 0; g < x.size(); ++g) {
    if (x[g] == 0) continue;
    const Rational c(static_cast<long>(x[g]));
    for (std::size_t k = 0; k < lifts_.cols(); ++k) out[k] += c * lifts_(g, k);
  }
  return out;
}

std::int64_t DiscriminantForm::bilinear_numerator(const Element& x, const Element& y) const {
  require_machine_exponent();
  const std::size_t m = factors_.size();
  const std::int64_t e = exponent_;
  Wide total = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (y[j] == 0) continue;
      const std::int64_t coeff = mod_positive(static_cast<Wide>(x[i]) * y[j], e);
      total = (total + static_cast<Wide>(coeff) * bilinear_num_[i * m + j]) % e;
    }
  }
  return mod_positive(total, e);
}

std::int64_t DiscriminantForm::quadratic_numerator(const Element& x) const {
  if (!even_) throw Error(ErrorCode::kOddLatticeUnsupported, "quadratic form requires an even lattice");
  require_machine_exponent();
  const std::size_t m = factors_.size();
  const std::int64_t two_e = 2 * exponent_;
  Wide total = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (x[i] == 0) continue;
    const std::int64_t sq = mod_positive(static_cast<Wide>(x[i]) * x[i], two_e);
    total = (total + static_cast<Wide>(sq) * quadratic_num_[i]) % two_e;
    for (std::size_t j = i + 1; j < m; ++j) {
      if (x[j] == 0) continue;
      const std::int64_t coeff = mod_positive(static_cast<Wide>(x[i]) * x[j], two_e);
      total = (total + static_cast<Wide>(2 * coeff % two_e) * bilinear_num_[i * m + j]) % two_e;
    }
  }
  return mod_positive(total, two_e);
}

Rational DiscriminantForm::bilinear(const Element& x, const Element& y) const {
  Rational out(static_cast<long>(bilinear_numerator(x, y)), static_cast<long>(exponent_));
  out.canonicalize();
  return out;
}

Rational DiscriminantForm::quadratic(const Element& x) const {
  Rational out(static_cast<long>(quadratic_numerator(x)), static_cast<long>(exponent_));
  out.canonicalize();
  return out;
}

std::int64_t DiscriminantForm::size(std::int64_t cap) const {
  const Integer total = order();
  if (total > cap) {
    throw Error(ErrorCode::kGroupTooLarge,
                "|A_L| = " + to_string(total) + " exceeds cap " + std::to_string(cap));
  }
  return static_cast<std::int64_t>(total.get_si());
}

std::int64_t DiscriminantForm::index_of(const Element& x) const {
  require_machine_exponent();
  std::int64_t index = 0;
  for (std::size_t i = 0; i < x.size(); ++i) index = index * small_factors_[i] + x[i];
  return index;
}

DiscriminantForm::Element DiscriminantForm::element_at(std::int64_t index) const {
  require_machine_exponent();
  Element x(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    x[i] = index % small_factors_[i];
    index /= small_factors_[i];
  }
  return x;
}

std::vector<DiscriminantForm::Element> DiscriminantForm::elements(std::int64_t cap) const {
  const std::int64_t total = size(cap);
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(total));
  for (std::int64_t i = 0; i < total; ++i) out.push_back(element_at(i));
  return out;
}

}  // namespace fmp
