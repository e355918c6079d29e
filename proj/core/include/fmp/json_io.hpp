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

#include <nlohmann/json.hpp>

#include "fmp/bielliptic.hpp"
#include "fmp/discriminant.hpp"
#include "fmp/elliptic.hpp"
#include "fmp/genus.hpp"
#include "fmp/isometry.hpp"
#include "fmp/mukai.hpp"
#include "fmp/overlattice.hpp"
#include "fmp/partner_engine.hpp"

// JSON boundary. Integers are written as decimal strings, rationals as
// "p/q"; counts, ranks and residues stay JSON numbers. Readers accept either
// a JSON integer or a decimal string wherever an Integer is expected.
// Malformed input throws Error(kInvalidInput) or Error(kMissingField).
namespace fmp::json_io {

using Json = nlohmann::ordered_json;

Integer integer_from(const Json& j);
Rational rational_from(const Json& j);
std::vector<Integer> integer_vector_from(const Json& j);
IntMatrix matrix_from(const Json& j);

Json to_json(const Integer& x);
Json to_json(const Rational& x);
Json to_json(const std::vector<Integer>& v);
Json to_json(const IntMatrix& m);
Json to_json(const RatMatrix& m);

// {"gram": [[...]]} or a bare Gram array.
Lattice lattice_from(const Json& j);
Json to_json(const Lattice& lattice);
Json to_json(const Signature& sig);

// Group structure, generator values and parity.
Json to_json(const DiscriminantForm& form);
Json to_json(const IsometryVerdict& verdict);
Json to_json(const GenusComparison& comparison);
Json to_json(const Overlattice& overlattice);

// {"r", "c1", "ch2"}.
SurfaceChernData chern_from(const Json& j);
Json to_json(const SurfaceChernData& data);
// {"ns_gram", "K", "chiO"}.
IntersectionData ambient_from(const Json& j);
Json to_json(const MukaiVector& v);

// {"lambda", "kodaira_nonzero"}.
EllipticSurfaceData elliptic_from(const Json& j);
Json to_json(const JacobianCandidates& candidates);
Json to_json(const TransformMatrix& m);
Json to_json(const RankDegree& v);

BiellipticType bielliptic_type_from(const Json& j);
Json to_json(const BiellipticType& type);
Json to_json(const SheafClass& v);
Json to_json(const RankReduction& m);
Json to_json(const DivisibilityReport& report);

// {"class", "omega_order"?, "picard_number"?, "euler_number"?, "lambda"?,
//  "bielliptic_type"?, "ns"?, "t"?, "minimal"?}.
SurfaceDescriptor descriptor_from(const Json& j);
Json to_json(const SurfaceDescriptor& descriptor);
Json to_json(const ReportLine& line);
Json to_json(const PartnerReport& report);
Json to_json(const FinitenessBudget& budget);

}  // namespace fmp::json_io
