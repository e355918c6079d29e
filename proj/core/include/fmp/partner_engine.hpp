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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fmp/bielliptic.hpp"
#include "fmp/elliptic.hpp"
#include "fmp/genus.hpp"
#include "fmp/isometry.hpp"
#include "fmp/overlattice.hpp"

namespace fmp {

enum class SurfaceClass {
  kGeneralType,
  kRuledNonElliptic,
  kEnriques,
  kBielliptic,
  kEllipticNonzeroKodaira,
  kK3,
  kAbelian,
};

inline constexpr std::array<SurfaceClass, 7> kSurfaceClasses{
    SurfaceClass::kGeneralType, SurfaceClass::kRuledNonElliptic,       SurfaceClass::kEnriques,
    SurfaceClass::kBielliptic,  SurfaceClass::kEllipticNonzeroKodaira, SurfaceClass::kK3,
    SurfaceClass::kAbelian};

std::string_view to_string(SurfaceClass surface_class);
std::optional<SurfaceClass> parse_surface_class(std::string_view text);

// A smooth minimal projective surface, described by its class and the
// invariants the engine consumes. Unset invariants are unknown.
struct SurfaceDescriptor {
  SurfaceClass surface_class = SurfaceClass::kGeneralType;
  std::optional<std::int64_t> omega_order;
  std::optional<std::int64_t> picard_number;
  std::optional<std::int64_t> euler_number;
  std::optional<std::int64_t> lambda;
  std::optional<BiellipticType> bielliptic_type;
  std::optional<Lattice> ns;
  std::optional<Lattice> t;
  bool minimal = true;
};

// Fills invariants fixed by the class (ω order, Euler number, Picard number)
// and rejects contradictions with Error(kInvalidInput).
SurfaceDescriptor complete(SurfaceDescriptor descriptor);

// Anchors naming the classification result each report line rests on.
enum class Citation {
  kClassification,
  kCanonicalOrder,
  kPicardEuler,
  kGeneralTypeSelfOnly,
  kRuledSelfOnly,
  kEllipticJacobians,
  kJacobianIdentifications,
  kHodgeIsometry,
  kNeronSeveriGenus,
  kOverlatticeFiniteness,
  kAbelianDuality,
  kEnriquesSelfOnly,
  kBiellipticSelfOnly,
};

std::string_view to_string(Citation citation);
const std::vector<Citation>& citation_catalog();

enum class CheckStatus { kPass, kFail, kInconclusive, kInfo };
std::string_view to_string(CheckStatus status);

struct ReportLine {
  std::string name;
  CheckStatus status = CheckStatus::kInfo;
  std::string detail;
  Citation citation = Citation::kClassification;
};

enum class VerdictKind { kSelfOnly, kEllipticCandidates, kLatticeObstruction, kHypothesisOutOfScope };
std::string_view to_string(VerdictKind kind);

// Lattice-level outcome; a partner is never confirmed because the Hodge
// (period) condition is not modeled.
enum class LatticeConclusion { kRuledOut, kPossiblePartner, kInconclusive };
std::string_view to_string(LatticeConclusion conclusion);

struct PartnerReport {
  SurfaceClass surface_class = SurfaceClass::kGeneralType;
  VerdictKind verdict = VerdictKind::kSelfOnly;
  std::optional<JacobianCandidates> candidates;
  std::optional<LatticeConclusion> conclusion;
  std::string summary;
  std::vector<ReportLine> lines;
  std::vector<std::string> notes;

  // Distinct citations in order of first appearance.
  std::vector<Citation> citations() const;
  bool has_inconclusive() const;
};

struct EngineOptions {
  IsometryOptions isometry;
  SubgroupLimits subgroups;
};

// Equal ω order, Picard number and Euler number are necessary for partners.
std::vector<ReportLine> necessary_invariants(const SurfaceDescriptor& x, const SurfaceDescriptor& y);

PartnerReport fm_partner_report(const SurfaceDescriptor& x, const EngineOptions& options = {});

// Lattice-level necessary conditions for a K3/abelian pair. Throws
// Error(kMissingField) when NS or T is absent.
PartnerReport k3_abelian_obstruction(const SurfaceDescriptor& x, const SurfaceDescriptor& y,
                                     const EngineOptions& options = {});

struct FinitenessBudget {
  Integer group_order;  // |A_W| for W = NS ⊕ T
  std::size_t even_overlattices = 0;
  std::size_t subgroups = 0;  // all subgroups of A_W
  std::vector<Integer> group_factors;
};

// Throws Error(kGroupTooLarge) beyond the limits.
FinitenessBudget finiteness_budget(const SurfaceDescriptor& x, const SubgroupLimits& limits = {});

}  // namespace fmp
