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

#include "fmp/cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fmp/json_io.hpp"

namespace fmp::cli {
namespace {

using json_io::Json;
using json_io::to_json;

struct GlobalFlags {
  bool json = false;
  bool strict = false;
  std::int64_t cap = kDefaultGroupCap;
  std::int64_t radius = 10;
};

// State shared by all handlers of one invocation.
struct Context {
  GlobalFlags flags;
  std::ostream& out;
  std::istream& in;

  IsometryOptions isometry() const {
    IsometryOptions options;
    options.radius = flags.radius;
    options.group_cap = flags.cap;
    return options;
  }
  SubgroupLimits limits() const {
    SubgroupLimits limits;
    limits.group_cap = flags.cap;
    return limits;
  }
  EngineOptions engine() const { return EngineOptions{isometry(), limits()}; }

  // Exit code for a result that may be inconclusive.
  int finish(bool inconclusive) const { return inconclusive && flags.strict ? kInconclusive : kOk; }
};

[[noreturn]] void invalid(const std::string& message) { throw Error(ErrorCode::kInvalidInput, message); }

Json parse_document(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    invalid("cannot parse JSON from " + origin + ": " + e.what());
  }
}

// Inline JSON if given, else the file (or stdin for "" and "-").
Json load(const std::string& inline_json, const std::string& path, std::istream& in) {
  if (!inline_json.empty()) return parse_document(inline_json, "command line");
  if (path.empty() || path == "-") {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_document(text, "standard input");
  }
  std::ifstream file(path);
  if (!file) invalid("cannot open " + path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse_document(buffer.str(), path);
}

std::vector<Integer> parse_list(const std::string& text, const char* what) {
  std::vector<Integer> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) out.push_back(parse_integer(item));
  if (out.empty()) invalid(std::string(what) + " is empty");
  return out;
}

std::vector<Integer> parse_list(const std::string& text, const char* what, std::size_t size) {
  std::vector<Integer> out = parse_list(text, what);
  if (out.size() != size) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + " needs " + std::to_string(size) + " comma-separated integers");
  }
  return out;
}

// "r,d_1,...,d_n,s"; "r,0,s" is accepted as the zero class for any n.
MukaiVector parse_mukai(const std::string& text, const Lattice& ns, int epsilon) {
  std::vector<Integer> v = parse_list(text, "Mukai vector");
  const std::size_t n = ns.rank();
  MukaiVector out;
  out.epsilon = epsilon;
  if (v.size() == n + 2) {
    out.d.assign(v.begin() + 1, v.end() - 1);
  } else if (v.size() == 3 && v[1] == 0) {
    out.d.assign(n, Integer(0));
  } else {
    throw Error(ErrorCode::kDimensionMismatch,
                "Mukai vector must be r,d_1,...,d_" + std::to_string(n) + ",s for a rank " + std::to_string(n) +
                    " NS lattice");
  }
  out.r = v.front();
  out.s = v.back();
  return out;
}

std::string join(const std::vector<Integer>& v, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + to_string(v[i]);
  return out;
}

std::string group_text(const std::vector<Integer>& factors) {
  if (factors.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? " + Z/" : "Z/") + to_string(factors[i]);
  return out;
}

std::string matrix_text(const IntMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? ", " : "") + to_string(m(i, c));
    out += "]";
  }
  return out + "]";
}

std::string rational_matrix_text(const RatMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? ", " : "") + to_string(m(i, c));
    out += "]";
  }
  return out + "]";
}

std::string signature_text(const Signature& s) {
  return "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + ")";
}

void emit(const Context& ctx, const Json& j) { ctx.out << j.dump(2) << '\n'; }

void print_report(const Context& ctx, const PartnerReport& report) {
  if (ctx.flags.json) {
    emit(ctx, to_json(report));
    return;
  }
  ctx.out << "class: " << to_string(report.surface_class) << '\n';
  ctx.out << "verdict: " << to_string(report.verdict) << '\n';
  if (report.conclusion) ctx.out << "conclusion: " << to_string(*report.conclusion) << '\n';
  if (report.candidates) {
    ctx.out << "residues:";
    for (std::int64_t r : report.candidates->residues) ctx.out << ' ' << r;
    ctx.out << "\ncount: " << report.candidates->count << (report.candidates->count_is_upper_bound ? " (upper bound)" : "")
            << '\n';
  }
  ctx.out << "summary: " << report.summary << '\n';
  for (const ReportLine& line : report.lines) {
    ctx.out << "  [" << to_string(line.status) << "] " << line.name << ": " << line.detail << "  {"
            << to_string(line.citation) << "}\n";
  }
  for (const std::string& note : report.notes) ctx.out << "note: " << note << '\n';
}

// Lattice from --gram or from the input document (a lattice or {"gram"}).
Lattice lattice_input(const Context& ctx, const std::string& gram, const std::string& path) {
  return json_io::lattice_from(load(gram, path, ctx.in));
}

std::pair<Lattice, Lattice> lattice_pair(const Context& ctx, const std::string& a, const std::string& b,
                                         const std::string& path) {
  if (!a.empty() || !b.empty()) {
    if (a.empty() || b.empty()) invalid("--a and --b must be given together");
    return {json_io::lattice_from(parse_document(a, "--a")), json_io::lattice_from(parse_document(b, "--b"))};
  }
  const Json doc = load("", path, ctx.in);
  if (!doc.is_object() || !doc.contains("a") || !doc.contains("b")) {
    throw Error(ErrorCode::kMissingField, "expected {\"a\": lattice, \"b\": lattice}");
  }
  return {json_io::lattice_from(doc["a"]), json_io::lattice_from(doc["b"])};
}

SignConvention parse_convention(const std::string& text) {
  return text == "printed" ? SignConvention::kPrinted : SignConvention::kAdopted;
}

// lattice

int lattice_info(const Context& ctx, const Lattice& l) {
  const Signature sig = signature(l);
  const DiscriminantForm form = discriminant_form(l);
  const bool two_elementary = is_two_elementary(l);
  if (ctx.flags.json) {
    Json j;
    j["gram"] = to_json(l.gram());
    j["rank"] = l.rank();
    j["det"] = to_json(l.det());
    j["signature"] = to_json(sig);
    j["even"] = l.is_even();
    j["discriminant"] = to_json(form);
    j["two_elementary"] = two_elementary;
    emit(ctx, j);
    return kOk;
  }
  ctx.out << "rank: " << l.rank() << '\n';
  ctx.out << "det: " << to_string(l.det()) << '\n';
  ctx.out << "signature: " << signature_text(sig) << '\n';
  ctx.out << "parity: " << (l.is_even() ? "even" : "odd") << '\n';
  ctx.out << "A_L: " << group_text(form.factors()) << '\n';
  if (!form.trivial()) {
    ctx.out << "b(g_i,g_j): " << rational_matrix_text(form.generator_bilinear()) << '\n';
    if (form.even()) {
      ctx.out << "q(g_i):";
      for (const Rational& q : form.generator_quadratic()) ctx.out << ' ' << to_string(q);
      ctx.out << '\n';
    }
  }
  ctx.out << "two-elementary: " << (two_elementary ? "yes" : "no") << '\n';
  return kOk;
}

int lattice_genus(const Context& ctx, const Lattice& a, const Lattice& b) {
  const GenusComparison result = same_genus(a, b, ctx.flags.cap);
  if (ctx.flags.json) {
    emit(ctx, to_json(result));
  } else {
    ctx.out << "same genus: " << to_string(result.verdict) << '\n';
    if (!result.reason.empty()) ctx.out << "reason: " << result.reason << '\n';
  }
  return ctx.finish(result.verdict == GenusVerdict::kInconclusive);
}

int lattice_isometric(const Context& ctx, const Lattice& a, const Lattice& b) {
  const IsometryVerdict result = isometric(a, b, ctx.isometry());
  if (ctx.flags.json) {
    emit(ctx, to_json(result));
  } else {
    ctx.out << "isometric: " << to_string(result.outcome) << '\n';
    if (result.witness) ctx.out << "witness: " << matrix_text(*result.witness) << '\n';
    if (!result.reason.empty()) ctx.out << "reason: " << result.reason << '\n';
  }
  return ctx.finish(result.outcome == IsometryOutcome::kInconclusive);
}

int lattice_overlattices(const Context& ctx, const Lattice& l, bool even_only) {
  const std::vector<Overlattice> found = overlattices(l, even_only, ctx.limits());
  if (ctx.flags.json) {
    Json list = Json::array();
    for (const Overlattice& o : found) list.push_back(to_json(o));
    emit(ctx, Json{{"even_only", even_only}, {"count", found.size()}, {"overlattices", std::move(list)}});
    return kOk;
  }
  ctx.out << "count: " << found.size() << '\n';
  for (const Overlattice& o : found) {
    ctx.out << "index " << to_string(o.index) << ": gram " << matrix_text(o.lattice.gram()) << "  basis "
            << rational_matrix_text(o.basis) << '\n';
  }
  return kOk;
}

int lattice_two_elementary(const Context& ctx, const Lattice& l) {
  const bool result = is_two_elementary(l);
  const std::vector<Integer> factors = discriminant_group(l);
  if (ctx.flags.json) {
    emit(ctx, Json{{"two_elementary", result}, {"factors", to_json(factors)}});
  } else {
    ctx.out << "two-elementary: " << (result ? "yes" : "no") << '\n' << "A_L: " << group_text(factors) << '\n';
  }
  return kOk;
}

// mukai

void print_integer(const Context& ctx, const char* key, const Integer& value) {
  if (ctx.flags.json) {
    emit(ctx, Json{{key, to_json(value)}});
  } else {
    ctx.out << key << ": " << to_string(value) << '\n';
  }
}

SurfaceChernData chern_input(const std::string& inline_json, const char* name) {
  if (inline_json.empty()) throw Error(ErrorCode::kMissingField, std::string("--") + name + " is required");
  return json_io::chern_from(parse_document(inline_json, std::string("--") + name));
}

// surface

int surface_compare(const Context& ctx, const Json& doc) {
  if (!doc.is_object() || !doc.contains("x") || !doc.contains("y")) {
    throw Error(ErrorCode::kMissingField, "expected {\"x\": descriptor, \"y\": descriptor}");
  }
  const SurfaceDescriptor x = json_io::descriptor_from(doc["x"]);
  const SurfaceDescriptor y = json_io::descriptor_from(doc["y"]);
  const auto lattice_type = [](const SurfaceDescriptor& d) {
    return (d.surface_class == SurfaceClass::kK3 || d.surface_class == SurfaceClass::kAbelian) && d.ns && d.t;
  };
  if (lattice_type(x) && lattice_type(y)) {
    const PartnerReport report = k3_abelian_obstruction(x, y, ctx.engine());
    print_report(ctx, report);
    return ctx.finish(report.has_inconclusive());
  }
  const std::vector<ReportLine> lines = necessary_invariants(x, y);
  bool failed = false;
  bool open = false;
  for (const ReportLine& line : lines) {
    failed = failed || line.status == CheckStatus::kFail;
    open = open || line.status == CheckStatus::kInconclusive;
  }
  const char* conclusion = failed ? "ruled out" : "not ruled out by numerical invariants";
  if (ctx.flags.json) {
    Json checks = Json::array();
    for (const ReportLine& line : lines) checks.push_back(to_json(line));
    emit(ctx, Json{{"conclusion", conclusion}, {"lines", std::move(checks)}});
  } else {
    ctx.out << "conclusion: " << conclusion << '\n';
    for (const ReportLine& line : lines) {
      ctx.out << "  [" << to_string(line.status) << "] " << line.name << ": " << line.detail << "  {"
              << to_string(line.citation) << "}\n";
    }
  }
  return ctx.finish(open && !failed);
}

int surface_budget(const Context& ctx, const SurfaceDescriptor& x) {
  const FinitenessBudget budget = finiteness_budget(x, ctx.limits());
  if (ctx.flags.json) {
    emit(ctx, to_json(budget));
  } else {
    ctx.out << "A_W: " << group_text(budget.group_factors) << " (order " << to_string(budget.group_order) << ")\n";
    ctx.out << "subgroups: " << budget.subgroups << '\n';
    ctx.out << "even overlattices: " << budget.even_overlattices << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  Context ctx{GlobalFlags{}, out, in};
  std::function<int()> action;

  CLI::App app{"Fourier-Mukai partner invariants and lattice obstructions", "fmp"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", ctx.flags.json, "Emit JSON");
  app.add_flag("--strict", ctx.flags.strict, "Exit 3 when a result is inconclusive");
  app.add_option("--cap", ctx.flags.cap, "Bound on discriminant group order")->check(CLI::PositiveNumber);
  app.add_option("--radius", ctx.flags.radius, "Coefficient radius of the indefinite isometry search")
      ->check(CLI::Range(0, 1000));

  // Shared option storage; each invocation selects exactly one leaf.
  std::string file, gram, a, b, ns, v1, v2, e, f, ambient, descriptor, convention = "adopted";
  std::string matrix, vec, x, y;
  int epsilon = 1;
  std::int64_t lambda = 0, n = 0, k = 0, bound = 24;
  std::string r_text, k_text, a_text;
  bool even_only = false, kodaira_zero = false;

  const auto group = [&](const char* name, const char* help) {
    CLI::App* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };
  const auto leaf = [&](CLI::App* parent, const char* name, const char* help, std::function<int()> body) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&action, body = std::move(body)] { action = body; });
    return sub;
  };
  const auto lattice_source = [&](CLI::App* sub) {
    sub->add_option("file", file, "Lattice JSON file ({\"gram\": ...}); stdin when absent or -");
    sub->add_option("--gram", gram, "Inline Gram matrix, e.g. [[2,1],[1,2]]");
  };
  const auto pair_source = [&](CLI::App* sub) {
    sub->add_option("file", file, "JSON file {\"a\": lattice, \"b\": lattice}; stdin when absent or -");
    sub->add_option("--a", a, "Inline Gram matrix of the first lattice");
    sub->add_option("--b", b, "Inline Gram matrix of the second lattice");
  };

  CLI::App* lattice = group("lattice", "Integral lattices");
  lattice_source(leaf(lattice, "info", "Determinant, signature and discriminant form",
                      [&] { return lattice_info(ctx, lattice_input(ctx, gram, file)); }));
  pair_source(leaf(lattice, "genus-eq", "Genus comparison of two even lattices", [&] {
    auto [la, lb] = lattice_pair(ctx, a, b, file);
    return lattice_genus(ctx, la, lb);
  }));
  pair_source(leaf(lattice, "isometric", "Isometry test", [&] {
    auto [la, lb] = lattice_pair(ctx, a, b, file);
    return lattice_isometric(ctx, la, lb);
  }));
  CLI::App* over = leaf(lattice, "overlattices", "Integral overlattices of finite index",
                        [&] { return lattice_overlattices(ctx, lattice_input(ctx, gram, file), even_only); });
  lattice_source(over);
  over->add_flag("--even", even_only, "Only even overlattices");
  lattice_source(leaf(lattice, "two-elementary", "Is A_L 2-elementary",
                      [&] { return lattice_two_elementary(ctx, lattice_input(ctx, gram, file)); }));

  CLI::App* mukai = group("mukai", "Mukai vectors and Riemann-Roch");
  const auto epsilon_option = [&](CLI::App* sub) {
    sub->add_option("--epsilon", epsilon, "1 for K3, 0 for abelian")->check(CLI::IsMember({0, 1}));
  };
  const auto convention_option = [&](CLI::App* sub) {
    sub->add_option("--sign-convention", convention, "s = ch2 + eps r (adopted) or ch2 - eps r (printed)")
        ->check(CLI::IsMember({"adopted", "printed"}));
  };
  CLI::App* pair = leaf(mukai, "pair", "Mukai pairing <v1, v2>", [&] {
    const Lattice l = json_io::lattice_from(parse_document(ns, "--ns"));
    const Integer value = mukai_pairing(parse_mukai(v1, l, epsilon), parse_mukai(v2, l, epsilon), l);
    print_integer(ctx, "pairing", value);
    return kOk;
  });
  pair->add_option("--v1", v1, "r,d_1,...,d_n,s")->required();
  pair->add_option("--v2", v2, "r,d_1,...,d_n,s")->required();
  pair->add_option("--ns", ns, "NS Gram matrix")->required();
  epsilon_option(pair);

  CLI::App* vector = leaf(mukai, "vector", "Mukai vector of Chern data", [&] {
    const MukaiVector v = mukai_vector(json_io::chern_from(load(e, file, ctx.in)), epsilon, parse_convention(convention));
    if (ctx.flags.json) {
      emit(ctx, to_json(v));
    } else {
      ctx.out << "v: (" << to_string(v.r) << "; " << join(v.d) << "; " << to_string(v.s) << ")\n";
    }
    return kOk;
  });
  vector->add_option("file", file, "Chern data JSON {\"r\", \"c1\", \"ch2\"}; stdin when absent or -");
  vector->add_option("--chern", e, "Inline Chern data JSON");
  epsilon_option(vector);
  convention_option(vector);

  CLI::App* chi = leaf(mukai, "chi", "Euler pairing chi(E,F) by Riemann-Roch", [&] {
    Json doc;
    if (!e.empty() || !f.empty() || !ambient.empty()) {
      doc["e"] = parse_document(e.empty() ? "null" : e, "--e");
      doc["f"] = parse_document(f.empty() ? "null" : f, "--f");
      doc["ambient"] = parse_document(ambient.empty() ? "null" : ambient, "--ambient");
    } else {
      doc = load("", file, ctx.in);
    }
    if (!doc.is_object()) invalid("expected {\"e\", \"f\", \"ambient\"}");
    for (const char* key : {"e", "f", "ambient"}) {
      if (!doc.contains(key) || doc[key].is_null()) throw Error(ErrorCode::kMissingField, std::string("missing ") + key);
    }
    const Integer value = euler_pairing_surface(json_io::chern_from(doc["e"]), json_io::chern_from(doc["f"]),
                                                json_io::ambient_from(doc["ambient"]));
    print_integer(ctx, "chi", value);
    return kOk;
  });
  chi->add_option("file", file, "JSON {\"e\", \"f\", \"ambient\"}; stdin when absent or -");
  chi->add_option("--e", e, "Inline Chern data of E");
  chi->add_option("--f", f, "Inline Chern data of F");
  chi->add_option("--ambient", ambient, "Inline {\"ns_gram\", \"K\", \"chiO\"}");

  CLI::App* consistency = leaf(mukai, "consistency", "Check chi(E,F) = -<v(E), v(F)>", [&] {
    const Lattice l = json_io::lattice_from(parse_document(ns, "--ns"));
    const SurfaceChernData ce = chern_input(e, "e");
    const SurfaceChernData cf = chern_input(f, "f");
    const IntersectionData amb = k3_abelian_ambient(l, epsilon);
    const Integer chi_value = euler_pairing_surface(ce, cf, amb);
    const SignConvention conv = parse_convention(convention);
    const Integer pairing = mukai_pairing(mukai_vector(ce, epsilon, conv), mukai_vector(cf, epsilon, conv), l);
    const bool consistent = chi_value == -pairing;
    if (ctx.flags.json) {
      emit(ctx, Json{{"chi", to_json(chi_value)}, {"pairing", to_json(pairing)}, {"consistent", consistent}});
    } else {
      ctx.out << "chi: " << to_string(chi_value) << "\npairing: " << to_string(pairing)
              << "\nconsistent: " << (consistent ? "yes" : "no") << '\n';
    }
    return kOk;
  });
  consistency->add_option("--e", e, "Chern data of E")->required();
  consistency->add_option("--f", f, "Chern data of F")->required();
  consistency->add_option("--ns", ns, "NS Gram matrix")->required();
  epsilon_option(consistency);
  convention_option(consistency);

  CLI::App* elliptic = group("elliptic", "Elliptic fibrations");
  const auto transform = [&] {
    const std::vector<Integer> m = parse_list(matrix, "--matrix", 4);
    return TransformMatrix{m[0], m[1], m[2], m[3]};
  };
  CLI::App* act = leaf(elliptic, "act", "Action on (rank, fibre degree)", [&] {
    const std::vector<Integer> v = parse_list(vec, "--v", 2);
    const TransformMatrix m = transform();
    if (m.det() != 1) throw Error(ErrorCode::kNotSL2, "matrix determinant is " + to_string(m.det()));
    const RankDegree result = fm_action(m, RankDegree{v[0], v[1]});
    if (ctx.flags.json) {
      emit(ctx, to_json(result));
    } else {
      ctx.out << "rank: " << to_string(result.rank) << "\ndegree: " << to_string(result.degree) << '\n';
    }
    return kOk;
  });
  act->add_option("--matrix", matrix, "c,a,d,b for [[c,a],[d,b]]")->required();
  act->add_option("--v", vec, "rank,degree")->required();

  CLI::App* validate_cmd = leaf(elliptic, "validate", "Does a transform exist for this matrix", [&] {
    const bool ok = validate_transform(transform(), EllipticSurfaceData{lambda, true});
    if (ctx.flags.json) {
      emit(ctx, Json{{"valid", ok}});
    } else {
      ctx.out << "valid: " << (ok ? "yes" : "no") << '\n';
    }
    return kOk;
  });
  validate_cmd->add_option("--matrix", matrix, "c,a,d,b for [[c,a],[d,b]]")->required();
  validate_cmd->add_option("--lambda", lambda, "Minimal multisection degree")->required()->check(CLI::PositiveNumber);

  CLI::App* partners = leaf(elliptic, "partners", "Relative Jacobian partner candidates", [&] {
    EllipticSurfaceData data{lambda, !kodaira_zero};
    if (lambda == 0) data = json_io::elliptic_from(load("", file, ctx.in));
    const JacobianCandidates result = enumerate_partners(data);
    if (ctx.flags.json) {
      emit(ctx, to_json(result));
    } else {
      ctx.out << "residues:";
      for (std::int64_t r : result.residues) ctx.out << ' ' << r;
      ctx.out << "\ncount: " << result.count << " (upper bound)\n";
    }
    return kOk;
  });
  partners->add_option("file", file, "JSON {\"lambda\", \"kodaira_nonzero\"} when --lambda is absent");
  partners->add_option("--lambda", lambda, "Minimal multisection degree")->check(CLI::PositiveNumber);
  partners->add_flag("--kodaira-zero", kodaira_zero, "The surface has Kodaira dimension zero");

  CLI::App* bielliptic = group("bielliptic", "Bielliptic surfaces");
  CLI::App* pairing = leaf(bielliptic, "pairing", "Intersection of aA'+bB' classes", [&] {
    const std::vector<Integer> p = parse_list(x, "--x", 2);
    const std::vector<Integer> q = parse_list(y, "--y", 2);
    print_integer(ctx, "pairing", num_pairing(NumClass{p[0], p[1]}, NumClass{q[0], q[1]}));
    return kOk;
  });
  pairing->add_option("--x", x, "a,b")->required();
  pairing->add_option("--y", y, "a,b")->required();

  CLI::App* reduce = leaf(bielliptic, "reduce", "SL2 matrix clearing the rank", [&] {
    const RankReduction m = rank_reduction(parse_integer(r_text), parse_integer(k_text), parse_integer(a_text));
    if (ctx.flags.json) {
      emit(ctx, to_json(m));
    } else {
      ctx.out << "matrix: [[" << to_string(m.m00) << ", " << to_string(m.m01) << "], [" << to_string(m.m10) << ", "
              << to_string(m.m11) << "]]\nh: " << to_string(m.h) << '\n';
    }
    return kOk;
  });
  reduce->add_option("--r", r_text, "Rank r > 0")->required();
  reduce->add_option("--k", k_text, "Translation order k")->required();
  reduce->add_option("--a", a_text, "Coefficient a")->required();

  CLI::App* verify = leaf(bielliptic, "verify", "Check k-divisibility over a box of classes", [&] {
    if (!validate_type(static_cast<int>(n), static_cast<int>(k))) {
      invalid("(" + std::to_string(n) + "," + std::to_string(k) + ") is not a bielliptic type");
    }
    const DivisibilityReport report =
        verify_divisibility_claim(BiellipticType{static_cast<int>(n), static_cast<int>(k)}, bound);
    if (ctx.flags.json) {
      emit(ctx, to_json(report));
    } else {
      ctx.out << "checked: " << report.checked << "\ncounterexamples: " << report.counterexamples.size()
              << "\nshift failures: " << report.shift_failures.size() << '\n';
      for (const SheafClass& v : report.counterexamples) {
        ctx.out << "  (" << to_string(v.r) << ", " << to_string(v.c1.a) << ", " << to_string(v.c1.b) << ", "
                << to_string(v.s) << ")\n";
      }
    }
    return report.counterexamples.empty() && report.shift_failures.empty() ? kOk : kInvalidInput;
  });
  verify->add_option("--n", n, "Order of the canonical bundle")->required()->check(CLI::Range(1, 6));
  verify->add_option("--k", k, "Order of the translation subgroup")->required()->check(CLI::Range(1, 6));
  verify->add_option("--bound", bound, "Box bound on r, |a|, |b|, |s|")->check(CLI::Range(1, 1000));

  CLI::App* type = leaf(bielliptic, "type", "Check (n, k) or list the seven types", [&] {
    if (n == 0 && k == 0) {
      Json list = Json::array();
      for (const BiellipticType& t : kBiellipticTypes) list.push_back(to_json(t));
      if (ctx.flags.json) {
        emit(ctx, Json{{"types", std::move(list)}});
      } else {
        for (const BiellipticType& t : kBiellipticTypes) ctx.out << "(" << t.n << ", " << t.k << ")\n";
      }
      return kOk;
    }
    const bool ok = validate_type(static_cast<int>(n), static_cast<int>(k));
    if (ctx.flags.json) {
      emit(ctx, Json{{"n", n}, {"k", k}, {"valid", ok}});
    } else {
      ctx.out << "valid: " << (ok ? "yes" : "no") << '\n';
    }
    return ok ? kOk : kInvalidInput;
  });
  type->add_option("--n", n, "Order of the canonical bundle")->check(CLI::Range(1, 6));
  type->add_option("--k", k, "Order of the translation subgroup")->check(CLI::Range(1, 6));

  CLI::App* surface = group("surface", "Partner analysis of minimal surfaces");
  CLI::App* surface_partners = leaf(surface, "partners", "Partner report for one descriptor", [&] {
    const PartnerReport report = fm_partner_report(json_io::descriptor_from(load(descriptor, file, ctx.in)), ctx.engine());
    print_report(ctx, report);
    return ctx.finish(report.has_inconclusive());
  });
  surface_partners->add_option("file", file, "Descriptor JSON; stdin when absent or -");
  surface_partners->add_option("--descriptor", descriptor, "Inline descriptor JSON");

  CLI::App* compare = leaf(surface, "compare", "Necessary conditions for two surfaces",
                           [&] { return surface_compare(ctx, load(descriptor, file, ctx.in)); });
  compare->add_option("file", file, "JSON {\"x\": descriptor, \"y\": descriptor}; stdin when absent or -");
  compare->add_option("--pair", descriptor, "Inline {\"x\", \"y\"} JSON");

  CLI::App* budget = leaf(surface, "budget", "Overlattice count of NS + T",
                          [&] { return surface_budget(ctx, json_io::descriptor_from(load(descriptor, file, ctx.in))); });
  budget->add_option("file", file, "Descriptor JSON; stdin when absent or -");
  budget->add_option("--descriptor", descriptor, "Inline descriptor JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }
  if (!action) {
    err << "error: no command given\n";
    return kUsage;
  }
  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const Json::exception& e) {
    err << "error: InvalidInput: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace fmp::cli
