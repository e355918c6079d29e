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

#include "fmp/mukai.hpp"

namespace fmp {

namespace {

void require_epsilon(int epsilon) {
  if (epsilon != 0 && epsilon != 1) throw Error(ErrorCode::kInvalidInput, "epsilon must be 0 or 1");
}

void require_length(std::size_t got, const Lattice& ns, const char* what) {
  if (got != ns.rank()) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + " has " + std::to_string(got) + " coordinates, NS has rank " +
                    std::to_string(ns.rank()));
  }
}

}  // namespace

void validate(const SurfaceChernData& data) {
  if (data.ch2.get_den() != 1 && data.ch2.get_den() != 2) {
    throw Error(ErrorCode::kInvalidInput, "ch2 must have denominator 1 or 2, got " + to_string(data.ch2));
  }
}

Integer mukai_pairing(const MukaiVector& v1, const MukaiVector& v2, const Lattice& ns) {
  require_length(v1.d.size(), ns, "first Mukai vector");
  require_length(v2.d.size(), ns, "second Mukai vector");
  return ns.product(v1.d, v2.d) - v1.r * v2.s - v2.r * v1.s;
}

MukaiVector mukai_vector(const SurfaceChernData& data, int epsilon, SignConvention convention) {
  require_epsilon(epsilon);
  validate(data);
  const Integer shift = convention == SignConvention::kAdopted ? Integer(epsilon * data.rank) : Integer(-epsilon * data.rank);
  const Rational s = data.ch2 + Rational(shift);
  if (s.get_den() != 1) {
    throw Error(ErrorCode::kNonIntegralResult, "Mukai vector component s = " + to_string(s) + " is not integral");
  }
  return MukaiVector{data.rank, data.c1, s.get_num(), epsilon};
}

Integer euler_pairing_surface(const SurfaceChernData& e, const SurfaceChernData& f, const IntersectionData& ambient) {
  validate(e);
  validate(f);
  const Lattice& ns = ambient.ns;
  require_length(e.c1.size(), ns, "c1(E)");
  require_length(f.c1.size(), ns, "c1(F)");
  require_length(ambient.canonical.size(), ns, "K");

  std::vector<Integer> twisted(ns.rank());
  for (std::size_t i = 0; i < ns.rank(); ++i) twisted[i] = f.rank * e.c1[i] - e.rank * f.c1[i];

  Rational chi = Rational(e.rank) * f.ch2 + Rational(f.rank) * e.ch2;
  chi -= Rational(ns.product(e.c1, f.c1));
  Rational canonical_term(ns.product(twisted, ambient.canonical), Integer(2));
  canonical_term.canonicalize();
  chi += canonical_term;
  chi += Rational(e.rank * f.rank * ambient.chi_structure_sheaf);
  chi.canonicalize();
  if (chi.get_den() != 1) {
    throw Error(ErrorCode::kNonIntegralResult, "Euler pairing " + to_string(chi) + " is not integral");
  }
  return chi.get_num();
}

IntersectionData k3_abelian_ambient(const Lattice& ns, int epsilon) {
  require_epsilon(epsilon);
  return IntersectionData{ns, std::vector<Integer>(ns.rank(), Integer(0)), Integer(2 * epsilon)};
}

bool rr_consistency(const SurfaceChernData& e, const SurfaceChernData& f, int epsilon, const Lattice& ns,
                    SignConvention convention) {
  const Integer chi = euler_pairing_surface(e, f, k3_abelian_ambient(ns, epsilon));
  const Integer pairing = mukai_pairing(mukai_vector(e, epsilon, convention), mukai_vector(f, epsilon, convention), ns);
  return chi == -pairing;
}

}  // namespace fmp
