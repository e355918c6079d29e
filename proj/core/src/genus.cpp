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

#include "fmp/genus.hpp"

#include <map>
#include <utility>

namespace fmp {

std::string_view to_string(GenusVerdict verdict) {
  switch (verdict) {
    case GenusVerdict::kSame: return "same";
    case GenusVerdict::kDifferent: return "different";
    case GenusVerdict::kInconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

using Element = DiscriminantForm::Element;

class IsomorphismSearch {
 public:
  IsomorphismSearch(const DiscriminantForm& from, const DiscriminantForm& to, std::int64_t cap)
      : from_(from), to_(to) {
    const auto& factors = from.factors();
    const auto target = to.elements(cap);
    generators_.resize(factors.size());
    candidates_.resize(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      Element g = from.zero();
      g[i] = 1;
      generators_[i] = g;
      const std::int64_t order = static_cast<std::int64_t>(factors[i].get_si());
      const std::int64_t q = from.quadratic_numerator(g);
      for (const Element& h : target) {
        if (to.quadratic_numerator(h) != q) continue;
        if (!to.is_zero(to.scale(h, order))) continue;
        candidates_[i].push_back(h);
      }
    }
  }

  std::optional<std::vector<Element>> run() {
    images_.clear();
    if (extend(0)) return images_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t i) {
    if (i == generators_.size()) return true;
    for (const Element& h : candidates_[i]) {
      bool compatible = true;
      for (std::size_t j = 0; j < i && compatible; ++j) {
        compatible = to_.bilinear_numerator(h, images_[j]) == from_.bilinear_numerator(generators_[i], generators_[j]);
      }
      if (!compatible) continue;
      images_.push_back(h);
      if (extend(i + 1)) return true;
      images_.pop_back();
    }
    return false;
  }

  const DiscriminantForm& from_;
  const DiscriminantForm& to_;
  std::vector<Element> generators_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<Element> images_;
};

std::map<std::int64_t, std::int64_t> quadratic_histogram(const DiscriminantForm& form, std::int64_t cap) {
  std::map<std::int64_t, std::int64_t> counts;
  for (const Element& x : form.elements(cap)) ++counts[form.quadratic_numerator(x)];
  return counts;
}

}  // namespace

std::optional<std::vector<DiscriminantForm::Element>> find_form_isomorphism(const DiscriminantForm& from,
                                                                            const DiscriminantForm& to,
                                                                            std::int64_t cap) {
  if (!from.even() || !to.even()) {
    throw Error(ErrorCode::kOddLatticeUnsupported, "quadratic form isomorphism needs even lattices");
  }
  if (from.factors() != to.factors()) return std::nullopt;
  if (from.trivial()) return std::vector<Element>{};
  // A q-preserving homomorphism also preserves b, and b is nondegenerate,
  // so it is injective; equal orders make it bijective.
  return IsomorphismSearch(from, to, cap).run();
}

GenusComparison same_genus(const Lattice& a, const Lattice& b, std::int64_t cap) {
  if (!a.is_even() || !b.is_even()) {
    throw Error(ErrorCode::kOddLatticeUnsupported, "genus test is implemented for even lattices only");
  }
  if (a.rank() != b.rank()) return {GenusVerdict::kDifferent, "rank"};
  if (signature(a) != signature(b)) return {GenusVerdict::kDifferent, "signature"};
  const DiscriminantForm fa = discriminant_form(a);
  const DiscriminantForm fb = discriminant_form(b);
  if (fa.factors() != fb.factors()) return {GenusVerdict::kDifferent, "discriminant group"};
  if (fa.order() > cap) {
    return {GenusVerdict::kInconclusive, "|A_L| = " + to_string(fa.order()) + " exceeds cap " + std::to_string(cap)};
  }
  if (quadratic_histogram(fa, cap) != quadratic_histogram(fb, cap)) {
    return {GenusVerdict::kDifferent, "discriminant quadratic form"};
  }
  if (!find_form_isomorphism(fa, fb, cap)) return {GenusVerdict::kDifferent, "discriminant quadratic form"};
  return {GenusVerdict::kSame, ""};
}

}  // namespace fmp
