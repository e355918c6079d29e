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

#include "fmp/overlattice.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "fmp/normal_form.hpp"

namespace fmp {

namespace {

using Element = DiscriminantForm::Element;

bool admissible_element(const DiscriminantForm& form, const Element& x, SubgroupFilter filter) {
  switch (filter) {
    case SubgroupFilter::kAll: return true;
    case SubgroupFilter::kIntegral: return form.bilinear_numerator(x, x) == 0;
    case SubgroupFilter::kEven: return form.quadratic_numerator(x) == 0;
  }
  return false;
}

}  // namespace

std::vector<Subgroup> enumerate_subgroups(const DiscriminantForm& form, SubgroupFilter filter,
                                          const SubgroupLimits& limits) {
  if (filter == SubgroupFilter::kEven && !form.even()) {
    throw Error(ErrorCode::kOddLatticeUnsupported, "even subgroups need an even lattice");
  }
  const std::int64_t total = form.size(limits.group_cap);
  const std::vector<Element> elements = form.elements(limits.group_cap);
  std::vector<std::int64_t> candidates;
  for (std::int64_t i = 1; i < total; ++i)
    if (admissible_element(form, elements[static_cast<std::size_t>(i)], filter)) candidates.push_back(i);

  std::set<std::vector<std::int64_t>> seen;
  std::vector<Subgroup> found;
  std::deque<std::size_t> queue;

  Subgroup trivial;
  trivial.members = {0};
  seen.insert(trivial.members);
  found.push_back(trivial);
  queue.push_back(0);

  // covered[c]: c is in the current subgroup H, or generates an extension
  // of H already produced from this H.
  std::vector<char> covered(static_cast<std::size_t>(total), 0);
  while (!queue.empty()) {
    const Subgroup current = found[queue.front()];
    queue.pop_front();
    std::fill(covered.begin(), covered.end(), 0);
    for (auto m : current.members) covered[static_cast<std::size_t>(m)] = 1;

    for (const std::int64_t c : candidates) {
      if (covered[static_cast<std::size_t>(c)]) continue;
      const Element& x = elements[static_cast<std::size_t>(c)];
      if (filter != SubgroupFilter::kAll) {
        const bool orthogonal = std::all_of(current.generators.begin(), current.generators.end(),
                                            [&](const Element& g) { return form.bilinear_numerator(x, g) == 0; });
        if (!orthogonal) continue;
      }
      // Cosets jx + H for j = 0 .. m-1, m the order of x mod H. Any element
      // of jx + H with gcd(j, m) = 1 yields the same extension.
      std::vector<std::int64_t> members;
      std::int64_t m = 0;
      Element multiple = form.zero();
      do {
        for (auto h : current.members) members.push_back(form.index_of(form.add(elements[static_cast<std::size_t>(h)], multiple)));
        multiple = form.add(multiple, x);
        ++m;
      } while (!std::binary_search(current.members.begin(), current.members.end(), form.index_of(multiple)));
      for (std::int64_t j = 1; j < m; ++j) {
        if (std::gcd(j, m) != 1) continue;
        const std::size_t begin = static_cast<std::size_t>(j) * current.members.size();
        for (std::size_t i = 0; i < current.members.size(); ++i) covered[static_cast<std::size_t>(members[begin + i])] = 1;
      }
      std::sort(members.begin(), members.end());
      if (!seen.insert(members).second) continue;
      if (found.size() >= limits.max_subgroups) {
        throw Error(ErrorCode::kGroupTooLarge,
                    "more than " + std::to_string(limits.max_subgroups) + " subgroups");
      }
      Subgroup next{current.generators, std::move(members)};
      next.generators.push_back(x);
      found.push_back(std::move(next));
      queue.push_back(found.size() - 1);
    }
  }

  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return found;
}

Overlattice overlattice_from_subgroup(const Lattice& lattice, const DiscriminantForm& form, const Subgroup& subgroup) {
  const std::size_t n = lattice.rank();
  const Integer scale = form.trivial() ? Integer(1) : Integer(static_cast<long>(form.exponent()));

  // Generators of the overlattice, scaled by the exponent to be integral.
  IntMatrix stacked(n + subgroup.generators.size(), n);
  for (std::size_t i = 0; i < n; ++i) stacked(i, i) = scale;
  for (std::size_t g = 0; g < subgroup.generators.size(); ++g) {
    const std::vector<Rational> lift = form.lift(subgroup.generators[g]);
    for (std::size_t k = 0; k < n; ++k) {
      const Rational v = lift[k] * Rational(scale);
      stacked(n + g, k) = v.get_num();
    }
  }
  const IntMatrix hnf = hermite_normal_form(stacked);

  RatMatrix basis(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational entry(hnf(i, j), scale);
      entry.canonicalize();
      basis(i, j) = entry;
    }
  const RatMatrix gram = basis * to_rational(lattice.gram()) * basis.transpose();
  IntMatrix integral(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (gram(i, j).get_den() != 1) {
        throw Error(ErrorCode::kNonIntegralResult, "subgroup does not define an integral overlattice");
      }
      integral(i, j) = gram(i, j).get_num();
    }
  return Overlattice{Lattice(std::move(integral)), std::move(basis), Integer(static_cast<long>(subgroup.order()))};
}

std::vector<Overlattice> overlattices(const Lattice& lattice, bool even_only, const SubgroupLimits& limits) {
  if (even_only && !lattice.is_even()) return {};
  const DiscriminantForm form = discriminant_form(lattice);
  const auto subgroups =
      enumerate_subgroups(form, even_only ? SubgroupFilter::kEven : SubgroupFilter::kIntegral, limits);
  std::vector<Overlattice> out;
  out.reserve(subgroups.size());
  for (const Subgroup& h : subgroups) out.push_back(overlattice_from_subgroup(lattice, form, h));
  std::sort(out.begin(), out.end(), [](const Overlattice& a, const Overlattice& b) {
    if (a.index != b.index) return a.index < b.index;
    return a.lattice.gram() < b.lattice.gram();
  });
  return out;
}

}  // namespace fmp
