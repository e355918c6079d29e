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

#include "fmp/json_io.hpp"

#include <string>

namespace fmp::json_io {
namespace {

[[noreturn]] void invalid(const std::string& message) { throw Error(ErrorCode::kInvalidInput, message); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) invalid(std::string("expected an object with field \"") + name + "\"");
  auto it = j.find(name);
  if (it == j.end()) throw Error(ErrorCode::kMissingField, std::string("missing field \"") + name + "\"");
  return *it;
}

const Json* optional_field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end() || it->is_null()) return nullptr;
  return &*it;
}

std::int64_t int64_from(const Json& j, const char* what) {
  auto value = to_int64(integer_from(j));
  if (!value) invalid(std::string(what) + " does not fit in 64 bits");
  return *value;
}

Json line_array(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const Integer& x : v) out.push_back(to_json(x));
  return out;
}

}  // namespace

Integer integer_from(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return parse_integer(std::to_string(j.get<std::uint64_t>()));
    return parse_integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) return parse_integer(j.get<std::string>());
  invalid("expected an integer, got " + j.dump());
}

Rational rational_from(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  return Rational(integer_from(j));
}

std::vector<Integer> integer_vector_from(const Json& j) {
  if (!j.is_array()) invalid("expected an array of integers, got " + j.dump());
  std::vector<Integer> out;
  out.reserve(j.size());
  for (const Json& x : j) out.push_back(integer_from(x));
  return out;
}

IntMatrix matrix_from(const Json& j) {
  if (!j.is_array() || j.empty()) invalid("expected a nonempty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  IntMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::vector<Integer> row = integer_vector_from(j[i]);
    if (row.size() != cols) throw Error(ErrorCode::kDimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = row[c];
  }
  return m;
}

Json to_json(const Integer& x) { return to_string(x); }
Json to_json(const Rational& x) { return to_string(x); }
Json to_json(const std::vector<Integer>& v) { return line_array(v); }

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(i, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(i, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Lattice lattice_from(const Json& j) {
  if (j.is_object()) return Lattice(matrix_from(field(j, "gram")));
  return Lattice(matrix_from(j));
}

Json to_json(const Lattice& lattice) { return Json{{"gram", to_json(lattice.gram())}}; }

Json to_json(const Signature& sig) { return Json::array({sig.positive, sig.negative}); }

Json to_json(const DiscriminantForm& form) {
  Json out;
  out["factors"] = line_array(form.factors());
  out["order"] = to_json(form.order());
  out["even"] = form.even();
  out["bilinear"] = to_json(form.generator_bilinear());
  if (form.even()) {
    Json q = Json::array();
    for (const Rational& x : form.generator_quadratic()) q.push_back(to_json(x));
    out["quadratic"] = std::move(q);
  }
  return out;
}

Json to_json(const IsometryVerdict& verdict) {
  Json out;
  out["outcome"] = std::string(to_string(verdict.outcome));
  if (verdict.witness) out["witness"] = to_json(*verdict.witness);
  out["reason"] = verdict.reason;
  return out;
}

Json to_json(const GenusComparison& comparison) {
  return Json{{"verdict", std::string(to_string(comparison.verdict))}, {"reason", comparison.reason}};
}

Json to_json(const Overlattice& overlattice) {
  return Json{{"index", to_json(overlattice.index)},
              {"gram", to_json(overlattice.lattice.gram())},
              {"basis", to_json(overlattice.basis)}};
}

SurfaceChernData chern_from(const Json& j) {
  SurfaceChernData data{integer_from(field(j, "r")), integer_vector_from(field(j, "c1")), rational_from(field(j, "ch2"))};
  validate(data);
  return data;
}

Json to_json(const SurfaceChernData& data) {
  return Json{{"r", to_json(data.rank)}, {"c1", line_array(data.c1)}, {"ch2", to_json(data.ch2)}};
}

IntersectionData ambient_from(const Json& j) {
  IntersectionData data{Lattice(matrix_from(field(j, "ns_gram"))), integer_vector_from(field(j, "K")),
                        integer_from(field(j, "chiO"))};
  if (data.canonical.size() != data.ns.rank()) {
    throw Error(ErrorCode::kDimensionMismatch, "K must have one coordinate per NS basis vector");
  }
  return data;
}

Json to_json(const MukaiVector& v) {
  return Json{{"r", to_json(v.r)}, {"d", line_array(v.d)}, {"s", to_json(v.s)}, {"epsilon", v.epsilon}};
}

EllipticSurfaceData elliptic_from(const Json& j) {
  EllipticSurfaceData data;
  data.lambda = int64_from(field(j, "lambda"), "lambda");
  if (data.lambda < 1) invalid("lambda must be positive");
  if (const Json* k = optional_field(j, "kodaira_nonzero")) {
    if (!k->is_boolean()) invalid("kodaira_nonzero must be a boolean");
    data.kodaira_nonzero = k->get<bool>();
  }
  return data;
}

Json to_json(const JacobianCandidates& candidates) {
  return Json{{"residues", candidates.residues},
              {"count", candidates.count},
              {"count_is_upper_bound", candidates.count_is_upper_bound}};
}

Json to_json(const TransformMatrix& m) {
  return Json::array({Json::array({to_json(m.c), to_json(m.a)}), Json::array({to_json(m.d), to_json(m.b)})});
}

Json to_json(const RankDegree& v) { return Json{{"rank", to_json(v.rank)}, {"degree", to_json(v.degree)}}; }

BiellipticType bielliptic_type_from(const Json& j) {
  std::int64_t n = 0;
  std::int64_t k = 0;
  if (j.is_array() && j.size() == 2) {
    n = int64_from(j[0], "n");
    k = int64_from(j[1], "k");
  } else if (j.is_object()) {
    n = int64_from(field(j, "n"), "n");
    k = int64_from(field(j, "k"), "k");
  } else {
    invalid("bielliptic_type must be [n, k] or {\"n\", \"k\"}");
  }
  if (n > 6 || k > 6 || !validate_type(static_cast<int>(n), static_cast<int>(k))) {
    invalid("(" + std::to_string(n) + "," + std::to_string(k) + ") is not a bielliptic type");
  }
  return BiellipticType{static_cast<int>(n), static_cast<int>(k)};
}

Json to_json(const BiellipticType& type) { return Json::array({type.n, type.k}); }

Json to_json(const SheafClass& v) {
  return Json{{"r", to_json(v.r)}, {"a", to_json(v.c1.a)}, {"b", to_json(v.c1.b)}, {"s", to_json(v.s)}};
}

Json to_json(const RankReduction& m) {
  return Json{{"matrix", Json::array({Json::array({to_json(m.m00), to_json(m.m01)}),
                                      Json::array({to_json(m.m10), to_json(m.m11)})})},
              {"h", to_json(m.h)}};
}

Json to_json(const DivisibilityReport& report) {
  Json counterexamples = Json::array();
  for (const SheafClass& v : report.counterexamples) counterexamples.push_back(to_json(v));
  Json failures = Json::array();
  for (const SheafClass& v : report.shift_failures) failures.push_back(to_json(v));
  return Json{{"type", to_json(report.type)},
              {"bound", report.bound},
              {"checked", report.checked},
              {"counterexamples", std::move(counterexamples)},
              {"shift_failures", std::move(failures)}};
}

SurfaceDescriptor descriptor_from(const Json& j) {
  const Json& cls = field(j, "class");
  if (!cls.is_string()) invalid("class must be a string");
  const auto parsed = parse_surface_class(cls.get<std::string>());
  if (!parsed) invalid("unknown surface class \"" + cls.get<std::string>() + "\"");
  SurfaceDescriptor d;
  d.surface_class = *parsed;
  if (const Json* x = optional_field(j, "omega_order")) d.omega_order = int64_from(*x, "omega_order");
  if (const Json* x = optional_field(j, "picard_number")) d.picard_number = int64_from(*x, "picard_number");
  if (const Json* x = optional_field(j, "euler_number")) d.euler_number = int64_from(*x, "euler_number");
  if (const Json* x = optional_field(j, "lambda")) d.lambda = int64_from(*x, "lambda");
  if (const Json* x = optional_field(j, "bielliptic_type")) d.bielliptic_type = bielliptic_type_from(*x);
  if (const Json* x = optional_field(j, "ns")) d.ns = lattice_from(*x);
  if (const Json* x = optional_field(j, "t")) d.t = lattice_from(*x);
  if (const Json* x = optional_field(j, "minimal")) {
    if (!x->is_boolean()) invalid("minimal must be a boolean");
    d.minimal = x->get<bool>();
  }
  return complete(d);
}

Json to_json(const SurfaceDescriptor& d) {
  Json out;
  out["class"] = std::string(to_string(d.surface_class));
  if (d.omega_order) out["omega_order"] = *d.omega_order;
  if (d.picard_number) out["picard_number"] = *d.picard_number;
  if (d.euler_number) out["euler_number"] = *d.euler_number;
  if (d.lambda) out["lambda"] = *d.lambda;
  if (d.bielliptic_type) out["bielliptic_type"] = to_json(*d.bielliptic_type);
  if (d.ns) out["ns"] = to_json(*d.ns);
  if (d.t) out["t"] = to_json(*d.t);
  out["minimal"] = d.minimal;
  return out;
}

Json to_json(const ReportLine& line) {
  return Json{{"name", line.name},
              {"status", std::string(to_string(line.status))},
              {"detail", line.detail},
              {"citation", std::string(to_string(line.citation))}};
}

Json to_json(const PartnerReport& report) {
  Json out;
  out["class"] = std::string(to_string(report.surface_class));
  out["verdict"] = std::string(to_string(report.verdict));
  if (report.candidates) out["candidates"] = to_json(*report.candidates);
  if (report.conclusion) out["conclusion"] = std::string(to_string(*report.conclusion));
  out["summary"] = report.summary;
  Json lines = Json::array();
  for (const ReportLine& line : report.lines) lines.push_back(to_json(line));
  out["lines"] = std::move(lines);
  Json citations = Json::array();
  for (Citation c : report.citations()) citations.push_back(std::string(to_string(c)));
  out["citations"] = std::move(citations);
  out["notes"] = report.notes;
  return out;
}

Json to_json(const FinitenessBudget& budget) {
  return Json{{"group_order", to_json(budget.group_order)},
              {"group_factors", line_array(budget.group_factors)},
              {"even_overlattices", budget.even_overlattices},
              {"subgroups", budget.subgroups}};
}

}  // namespace fmp::json_io
