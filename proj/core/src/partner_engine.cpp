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

#include "fmp/partner_engine.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace fmp {

std::string_view to_string(SurfaceClass surface_class) {
  switch (surface_class) {
    case SurfaceClass::kGeneralType: return "general_type";
    case SurfaceClass::kRuledNonElliptic: return "ruled_non_elliptic";
    case SurfaceClass::kEnriques: return "enriques";
    case SurfaceClass::kBielliptic: return "bielliptic";
    case SurfaceClass::kEllipticNonzeroKodaira: return "elliptic_nonzero_kodaira";
    case SurfaceClass::kK3: return "k3";
    case SurfaceClass::kAbelian: return "abelian";
  }
  return "general_type";
}

std::optional<SurfaceClass> parse_surface_class(std::string_view text) {
  for (SurfaceClass c : kSurfaceClasses)
    if (to_string(c) == text) return c;
  return std::nullopt;
}

std::string_view to_string(Citation citation) {
  switch (citation) {
    case Citation::kClassification: return "minimal-surface-classification";
    case Citation::kCanonicalOrder: return "canonical-bundle-order";
    case Citation::kPicardEuler: return "picard-and-euler-number";
    case Citation::kGeneralTypeSelfOnly: return "general-type-self-only";
    case Citation::kRuledSelfOnly: return "ruled-without-elliptic-fibration-self-only";
    case Citation::kEllipticJacobians: return "elliptic-relative-jacobian-partners";
    case Citation::kJacobianIdentifications: return "relative-jacobian-identifications";
    case Citation::kHodgeIsometry: return "transcendental-hodge-isometry";
    case Citation::kNeronSeveriGenus: return "neron-severi-genus";
    case Citation::kOverlatticeFiniteness: return "overlattice-finiteness";
    case Citation::kAbelianDuality: return "abelian-dual-partner";
    case Citation::kEnriquesSelfOnly: return "enriques-self-only";
    case Citation::kBiellipticSelfOnly: return "bielliptic-self-only";
  }
  return "minimal-surface-classification";
}

const std::vector<Citation>& citation_catalog() {
  static const std::vector<Citation> catalog{
      Citation::kClassification,      Citation::kCanonicalOrder,       Citation::kPicardEuler,
      Citation::kGeneralTypeSelfOnly, Citation::kRuledSelfOnly,        Citation::kEllipticJacobians,
      Citation::kJacobianIdentifications, Citation::kHodgeIsometry,    Citation::kNeronSeveriGenus,
      Citation::kOverlatticeFiniteness, Citation::kAbelianDuality,     Citation::kEnriquesSelfOnly,
      Citation::kBiellipticSelfOnly};
  return catalog;
}

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kInconclusive: return "inconclusive";
    case CheckStatus::kInfo: return "info";
  }
  return "info";
}

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::kSelfOnly: return "self_only";
    case VerdictKind::kEllipticCandidates: return "elliptic_candidates";
    case VerdictKind::kLatticeObstruction: return "lattice_obstruction";
    case VerdictKind::kHypothesisOutOfScope: return "hypothesis_out_of_scope";
  }
  return "self_only";
}

std::string_view to_string(LatticeConclusion conclusion) {
  switch (conclusion) {
    case LatticeConclusion::kRuledOut: return "ruled out";
    case LatticeConclusion::kPossiblePartner: return "possible partner (lattice-level)";
    case LatticeConclusion::kInconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::vector<Citation> PartnerReport::citations() const {
  std::vector<Citation> out;
  for (const ReportLine& line : lines)
    if (std::find(out.begin(), out.end(), line.citation) == out.end()) out.push_back(line.citation);
  return out;
}

bool PartnerReport::has_inconclusive() const {
  if (conclusion == LatticeConclusion::kInconclusive) return true;
  return std::any_of(lines.begin(), lines.end(),
                     [](const ReportLine& l) { return l.status == CheckStatus::kInconclusive; });
}

namespace {

void fill(std::optional<std::int64_t>& field, std::int64_t value, std::string_view name, SurfaceClass c) {
  if (field && *field != value) {
    throw Error(ErrorCode::kInvalidInput, std::string(name) + " = " + std::to_string(*field) + " contradicts class " +
                                              std::string(to_string(c)) + " (expected " + std::to_string(value) + ")");
  }
  field = value;
}

bool is_k3_or_abelian(SurfaceClass c) { return c == SurfaceClass::kK3 || c == SurfaceClass::kAbelian; }

const Lattice& require_lattice(const std::optional<Lattice>& lattice, std::string_view name, const SurfaceDescriptor& x) {
  if (!lattice) {
    throw Error(ErrorCode::kMissingField,
                std::string(name) + " lattice is required for class " + std::string(to_string(x.surface_class)));
  }
  return *lattice;
}

std::string describe(const Lattice& lattice) {
  const Signature sig = signature(lattice);
  std::string out = "rank " + std::to_string(lattice.rank()) + ", signature (" + std::to_string(sig.positive) + "," +
                    std::to_string(sig.negative) + "), det " + to_string(lattice.det()) + ", A_L = ";
  const auto factors = discriminant_group(lattice);
  if (factors.empty()) return out + "0";
  for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? " + Z/" : "Z/") + to_string(factors[i]);
  return out;
}

ReportLine compare_field(std::string name, const std::optional<std::int64_t>& x, const std::optional<std::int64_t>& y,
                         Citation citation) {
  if (!x || !y) return {std::move(name), CheckStatus::kInconclusive, "value unknown for at least one surface", citation};
  const bool equal = *x == *y;
  return {std::move(name), equal ? CheckStatus::kPass : CheckStatus::kFail,
          std::to_string(*x) + (equal ? " = " : " != ") + std::to_string(*y), citation};
}

PartnerReport self_only(SurfaceClass c, Citation citation, std::string detail) {
  PartnerReport report;
  report.surface_class = c;
  report.verdict = VerdictKind::kSelfOnly;
  report.summary = "the only FM partner of X is X itself";
  report.lines.push_back({"classification", CheckStatus::kInfo, std::move(detail), citation});
  return report;
}

}  // namespace

SurfaceDescriptor complete(SurfaceDescriptor d) {
  const SurfaceClass c = d.surface_class;
  if (d.omega_order && *d.omega_order < 1) throw Error(ErrorCode::kInvalidInput, "omega_order must be positive");
  if (d.picard_number && *d.picard_number < 1) throw Error(ErrorCode::kInvalidInput, "picard_number must be positive");
  if (d.lambda && *d.lambda < 1) throw Error(ErrorCode::kInvalidInput, "lambda must be positive");
  switch (c) {
    case SurfaceClass::kK3:
      fill(d.omega_order, 1, "omega_order", c);
      fill(d.euler_number, 24, "euler_number", c);
      break;
    case SurfaceClass::kAbelian:
      fill(d.omega_order, 1, "omega_order", c);
      fill(d.euler_number, 0, "euler_number", c);
      break;
    case SurfaceClass::kEnriques:
      fill(d.omega_order, 2, "omega_order", c);
      fill(d.euler_number, 12, "euler_number", c);
      fill(d.picard_number, 10, "picard_number", c);
      break;
    case SurfaceClass::kBielliptic:
      if (d.bielliptic_type) {
        if (!validate_type(d.bielliptic_type->n, d.bielliptic_type->k)) {
          throw Error(ErrorCode::kInvalidInput, "bielliptic_type is not one of the seven admissible (n, k)");
        }
        fill(d.omega_order, d.bielliptic_type->n, "omega_order", c);
      }
      fill(d.euler_number, 0, "euler_number", c);
      fill(d.picard_number, 2, "picard_number", c);
      break;
    default:
      break;
  }
  if (is_k3_or_abelian(c)) {
    if (d.ns) {
      if (!d.ns->is_even()) throw Error(ErrorCode::kInvalidInput, "NS lattice of a K3/abelian surface must be even");
      fill(d.picard_number, static_cast<std::int64_t>(d.ns->rank()), "picard_number", c);
    }
    if (d.t && !d.t->is_even()) {
      throw Error(ErrorCode::kInvalidInput, "transcendental lattice of a K3/abelian surface must be even");
    }
  }
  return d;
}

std::vector<ReportLine> necessary_invariants(const SurfaceDescriptor& x_in, const SurfaceDescriptor& y_in) {
  const SurfaceDescriptor x = complete(x_in);
  const SurfaceDescriptor y = complete(y_in);
  return {
      compare_field("omega order", x.omega_order, y.omega_order, Citation::kCanonicalOrder),
      compare_field("picard number", x.picard_number, y.picard_number, Citation::kPicardEuler),
      compare_field("euler number", x.euler_number, y.euler_number, Citation::kPicardEuler),
  };
}

PartnerReport k3_abelian_obstruction(const SurfaceDescriptor& x_in, const SurfaceDescriptor& y_in,
                                     const EngineOptions& options) {
  const SurfaceDescriptor x = complete(x_in);
  const SurfaceDescriptor y = complete(y_in);
  if (!is_k3_or_abelian(x.surface_class) || !is_k3_or_abelian(y.surface_class)) {
    throw Error(ErrorCode::kInvalidInput, "lattice obstruction applies to K3 and abelian surfaces only");
  }
  const Lattice& tx = require_lattice(x.t, "t", x);
  const Lattice& ty = require_lattice(y.t, "t", y);
  const Lattice& nsx = require_lattice(x.ns, "ns", x);
  const Lattice& nsy = require_lattice(y.ns, "ns", y);

  PartnerReport report;
  report.surface_class = x.surface_class;
  report.verdict = VerdictKind::kLatticeObstruction;
  report.lines = necessary_invariants(x, y);

  const Signature sx = signature(tx);
  const Signature sy = signature(ty);
  const bool same_shape = tx.rank() == ty.rank() && sx == sy && tx.det() == ty.det();
  report.lines.push_back({"transcendental rank/signature/determinant",
                          same_shape ? CheckStatus::kPass : CheckStatus::kFail,
                          describe(tx) + " vs " + describe(ty), Citation::kHodgeIsometry});

  const IsometryVerdict iso = isometric(tx, ty, options.isometry);
  CheckStatus iso_status = CheckStatus::kInconclusive;
  if (iso.outcome == IsometryOutcome::kIsometric) iso_status = CheckStatus::kPass;
  if (iso.outcome == IsometryOutcome::kNotIsometric) iso_status = CheckStatus::kFail;
  report.lines.push_back({"transcendental lattices isometric", iso_status,
                          std::string(to_string(iso.outcome)) + (iso.reason.empty() ? "" : " (" + iso.reason + ")"),
                          Citation::kHodgeIsometry});

  const GenusComparison genus = same_genus(nsx, nsy, options.subgroups.group_cap);
  CheckStatus genus_status = CheckStatus::kInconclusive;
  if (genus.verdict == GenusVerdict::kSame) genus_status = CheckStatus::kPass;
  if (genus.verdict == GenusVerdict::kDifferent) genus_status = CheckStatus::kFail;
  report.lines.push_back({"Neron-Severi lattices in the same genus (derived necessary condition)", genus_status,
                          std::string(to_string(genus.verdict)) + (genus.reason.empty() ? "" : " (" + genus.reason + ")"),
                          Citation::kNeronSeveriGenus});

  // Informational: partners may have non-isometric NS lattices.
  if (nsx.rank() == nsy.rank()) {
    const IsometryVerdict ns_iso = isometric(nsx, nsy, options.isometry);
    report.lines.push_back({"Neron-Severi lattices isometric (not required)", CheckStatus::kInfo,
                            std::string(to_string(ns_iso.outcome)) +
                                (ns_iso.reason.empty() ? "" : " (" + ns_iso.reason + ")"),
                            Citation::kNeronSeveriGenus});
  }

  const bool failed = std::any_of(report.lines.begin(), report.lines.end(),
                                   [](const ReportLine& l) { return l.status == CheckStatus::kFail; });
  const bool open = std::any_of(report.lines.begin(), report.lines.end(),
                                [](const ReportLine& l) { return l.status == CheckStatus::kInconclusive; });
  if (failed) {
    report.conclusion = LatticeConclusion::kRuledOut;
    report.summary = "not FM partners: a necessary condition fails";
  } else if (open) {
    report.conclusion = LatticeConclusion::kInconclusive;
    report.summary = "inconclusive: a lattice check could not be decided within the search limits";
  } else {
    report.conclusion = LatticeConclusion::kPossiblePartner;
    report.summary = "possible partner (lattice-level); deciding requires a Hodge isometry, which is not modeled";
  }
  report.notes.push_back("FM partnership needs a Hodge isometry of transcendental lattices; period data is not modeled");
  if (x.surface_class == SurfaceClass::kAbelian || y.surface_class == SurfaceClass::kAbelian) {
    report.notes.push_back("an abelian partner is determined only up to passing to the dual abelian surface");
    report.lines.push_back({"duality", CheckStatus::kInfo, "dual abelian surfaces are always FM partners",
                            Citation::kAbelianDuality});
  }
  return report;
}

FinitenessBudget finiteness_budget(const SurfaceDescriptor& x_in, const SubgroupLimits& limits) {
  const SurfaceDescriptor x = complete(x_in);
  if (!is_k3_or_abelian(x.surface_class)) {
    throw Error(ErrorCode::kInvalidInput, "finiteness budget applies to K3 and abelian surfaces only");
  }
  const Lattice w = direct_sum(require_lattice(x.ns, "ns", x), require_lattice(x.t, "t", x));
  const DiscriminantForm form = discriminant_form(w);
  FinitenessBudget budget;
  budget.group_order = form.order();
  budget.group_factors = form.factors();
  budget.even_overlattices = overlattices(w, true, limits).size();
  budget.subgroups = enumerate_subgroups(form, SubgroupFilter::kAll, limits).size();
  return budget;
}

PartnerReport fm_partner_report(const SurfaceDescriptor& x_in, const EngineOptions& options) {
  const SurfaceDescriptor x = complete(x_in);
  if (!x.minimal) {
    PartnerReport report;
    report.surface_class = x.surface_class;
    report.verdict = VerdictKind::kHypothesisOutOfScope;
    report.summary = "classification covers smooth minimal projective surfaces only";
    report.lines.push_back({"hypothesis", CheckStatus::kInconclusive, "surface is not minimal", Citation::kClassification});
    return report;
  }

  switch (x.surface_class) {
    case SurfaceClass::kGeneralType:
      return self_only(x.surface_class, Citation::kGeneralTypeSelfOnly, "minimal surface of general type");
    case SurfaceClass::kRuledNonElliptic:
      return self_only(x.surface_class, Citation::kRuledSelfOnly,
                       "Kodaira dimension -infinity without an elliptic fibration");
    case SurfaceClass::kEnriques:
      return self_only(x.surface_class, Citation::kEnriquesSelfOnly, "Enriques surface");
    case SurfaceClass::kBielliptic: {
      std::string detail = "bielliptic surface";
      if (x.bielliptic_type) {
        detail += " of type (n,k) = (" + std::to_string(x.bielliptic_type->n) + "," +
                  std::to_string(x.bielliptic_type->k) + ")";
      }
      return self_only(x.surface_class, Citation::kBiellipticSelfOnly, detail);
    }
    case SurfaceClass::kEllipticNonzeroKodaira: {
      if (!x.lambda) throw Error(ErrorCode::kMissingField, "lambda is required for elliptic surfaces");
      const JacobianCandidates candidates = enumerate_partners(EllipticSurfaceData{*x.lambda, true});
      PartnerReport report;
      report.surface_class = x.surface_class;
      report.verdict = VerdictKind::kEllipticCandidates;
      std::string residues;
      for (std::size_t i = 0; i < candidates.residues.size(); ++i) {
        residues += (i ? ", " : "") + std::to_string(candidates.residues[i]);
      }
      report.summary = "every partner is a relative Jacobian J(b) with b in {" + residues + "}; at most " +
                       std::to_string(candidates.count) + " partners";
      report.lines.push_back({"partners are relative Jacobians", CheckStatus::kInfo,
                              "Y = J(b) for some b coprime to lambda = " + std::to_string(*x.lambda),
                              Citation::kEllipticJacobians});
      report.lines.push_back({"identifications", CheckStatus::kInfo,
                              "J(b) = J(b + lambda) = J(-b), J(1) = X; count is an upper bound",
                              Citation::kJacobianIdentifications});
      report.candidates = candidates;
      return report;
    }
    case SurfaceClass::kK3:
    case SurfaceClass::kAbelian: {
      PartnerReport report = k3_abelian_obstruction(x, x, options);
      report.summary = "partners are the surfaces of the same type whose transcendental lattice is Hodge-isometric to "
                       "T(X); lattice-level checks below";
      report.lines.insert(report.lines.begin(),
                          {"transcendental lattice", CheckStatus::kInfo, describe(*x.t), Citation::kClassification});
      try {
        const FinitenessBudget budget = finiteness_budget(x, options.subgroups);
        report.lines.push_back({"even overlattices of NS + T", CheckStatus::kInfo,
                                std::to_string(budget.even_overlattices) + " of " + std::to_string(budget.subgroups) +
                                    " subgroups of A_W, |A_W| = " + to_string(budget.group_order),
                                Citation::kOverlatticeFiniteness});
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kGroupTooLarge) throw;
        report.lines.push_back({"even overlattices of NS + T", CheckStatus::kInfo,
                                std::string("not enumerated: ") + e.what(), Citation::kOverlatticeFiniteness});
      }
      return report;
    }
  }
  throw Error(ErrorCode::kInvalidInput, "unknown surface class");
}

}  // namespace fmp
