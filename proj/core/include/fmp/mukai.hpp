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

#include <vector>

#include "fmp/lattice.hpp"

namespace fmp {

// Rank, first Chern class (NS coordinates) and ch_2 = c_1²/2 - c_2 of an
// object on a surface. ch2 carries denominator 1 or 2.
struct SurfaceChernData {
  Integer rank;
  std::vector<Integer> c1;
  Rational ch2;
};

// Intersection form on NS, canonical class K and χ(O).
struct IntersectionData {
  Lattice ns;
  std::vector<Integer> canonical;
  Integer chi_structure_sheaf;
};

struct MukaiVector {
  Integer r;
  std::vector<Integer> d;
  Integer s;
  int epsilon = 1;  // 0 abelian, 1 K3

  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
};

// kAdopted: s = ch_2 + ε·r, which makes χ(E,F) = -<v(E),v(F)> hold.
// kPrinted: s = ch_2 - ε·r, kept for comparison; it breaks that identity.
enum class SignConvention { kAdopted, kPrinted };

// Throws Error(kInvalidInput) unless ch2 has denominator 1 or 2.
void validate(const SurfaceChernData& data);

// D1·D2 - r1·s2 - r2·s1.
Integer mukai_pairing(const MukaiVector& v1, const MukaiVector& v2, const Lattice& ns);

// Throws Error(kNonIntegralResult) when s is not an integer.
MukaiVector mukai_vector(const SurfaceChernData& data, int epsilon,
                         SignConvention convention = SignConvention::kAdopted);

// Riemann-Roch for χ(E,F) on a surface:
//   r(E)ch2(F) - c1(E)·c1(F) + r(F)ch2(E)
//   + ½(r(F)c1(E) - r(E)c1(F))·K + r(E)r(F)χ(O).
// Throws Error(kNonIntegralResult) if the total is not an integer.
Integer euler_pairing_surface(const SurfaceChernData& e, const SurfaceChernData& f, const IntersectionData& ambient);

// K = 0 and χ(O) = 2ε: the ambient of a K3 (ε = 1) or abelian (ε = 0) surface.
IntersectionData k3_abelian_ambient(const Lattice& ns, int epsilon);

// χ(E,F) == -<v(E), v(F)> on the K3/abelian ambient for ε.
bool rr_consistency(const SurfaceChernData& e, const SurfaceChernData& f, int epsilon, const Lattice& ns,
                    SignConvention convention = SignConvention::kAdopted);

}  // namespace fmp
