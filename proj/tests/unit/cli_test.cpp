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

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fmp/cli/cli.hpp"
#include "fmp/json_io.hpp"

namespace fmp::cli {
namespace {

using json_io::Json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  const int code = run(args, out, err, in);
  return {code, out.str(), err.str()};
}

Json invoke_json(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "--json");
  const Result r = invoke(args, input);
  EXPECT_EQ(r.code, 0) << r.err;
  return Json::parse(r.out);
}

TEST(Cli, EllipticPartners) {
  const Json j = invoke_json({"elliptic", "partners", "--lambda", "6"});
  EXPECT_EQ(j["residues"], Json::array({1}));
  EXPECT_EQ(j["count"], 1);
  EXPECT_EQ(invoke_json({"elliptic", "partners"}, R"({"lambda": 12})")["residues"], Json::array({1, 5}));
  const Result text = invoke({"elliptic", "partners", "--lambda", "5"});
  EXPECT_NE(text.out.find("residues: 1 2"), std::string::npos);
  const Result zero = invoke({"elliptic", "partners", "--lambda", "5", "--kodaira-zero"});
  EXPECT_EQ(zero.code, kInvalidInput);
}

TEST(Cli, LatticeInfoFromStdin) {
  const Json j = invoke_json({"lattice", "info"}, R"({"gram": [[2]]})");
  EXPECT_EQ(j["det"], "2");
  EXPECT_EQ(j["signature"], Json::array({1, 0}));
  EXPECT_EQ(j["discriminant"]["factors"], Json::array({"2"}));
  EXPECT_EQ(j["discriminant"]["quadratic"], Json::array({"1/2"}));
  const Result text = invoke({"lattice", "info", "--gram", "[[2]]"});
  EXPECT_NE(text.out.find("A_L: Z/2"), std::string::npos);
  EXPECT_NE(text.out.find("q(g_i): 1/2"), std::string::npos);
}

TEST(Cli, LatticeInfoFromFile) {
  const std::string path = ::testing::TempDir() + "fmp_cli_lattice.json";
  {
    std::ofstream f(path);
    f << R"({"gram": [[0,2],[2,0]]})";
  }
  const Json j = invoke_json({"lattice", "info", path});
  EXPECT_EQ(j["two_elementary"], true);
  std::remove(path.c_str());
  EXPECT_EQ(invoke({"lattice", "info", "/nonexistent/file.json"}).code, kInvalidInput);
}

TEST(Cli, MukaiPair) {
  const Result r = invoke({"mukai", "pair", "--v1", "0,0,1", "--v2", "0,0,1", "--ns", "[[0,1],[1,0]]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "pairing: 0\n");
  EXPECT_EQ(invoke_json({"mukai", "pair", "--v1", "1,0,0,0", "--v2", "0,0,0,1", "--ns", "[[0,1],[1,0]]"})["pairing"],
            "-1");
  EXPECT_EQ(invoke({"mukai", "pair", "--v1", "1,2,0", "--v2", "0,0,1", "--ns", "[[0,1],[1,0]]"}).code, kInvalidInput);
}

TEST(Cli, MukaiConventions) {
  const std::vector<std::string> base{"mukai", "consistency", "--e", R"({"r":1,"c1":[0,0],"ch2":"0"})", "--f",
                                      R"({"r":1,"c1":[0,0],"ch2":"0"})", "--ns", "[[0,1],[1,0]]"};
  EXPECT_EQ(invoke_json(base)["consistent"], true);
  auto printed = base;
  printed.insert(printed.end(), {"--sign-convention", "printed"});
  const Json j = invoke_json(printed);
  EXPECT_EQ(j["consistent"], false);
  EXPECT_EQ(j["chi"], "2");
  EXPECT_EQ(j["pairing"], "2");
  const Json v = invoke_json({"mukai", "vector", "--chern", R"({"r":1,"c1":[0,0],"ch2":"0"})"});
  EXPECT_EQ(v["s"], "1");
  const Json chi = invoke_json(
      {"mukai", "chi"},
      R"({"e":{"r":1,"c1":[0,0],"ch2":"0"},"f":{"r":0,"c1":[0,0],"ch2":"1"},"ambient":{"ns_gram":[[0,1],[1,0]],"K":[0,0],"chiO":2}})");
  EXPECT_EQ(chi["chi"], "1");
}

TEST(Cli, GenusAndIsometry) {
  const std::vector<std::string> pair{"--a", "[[2,1],[1,12]]", "--b", "[[4,1],[1,6]]"};
  auto genus = std::vector<std::string>{"lattice", "genus-eq"};
  genus.insert(genus.end(), pair.begin(), pair.end());
  EXPECT_EQ(invoke_json(genus)["verdict"], "same");
  auto iso = std::vector<std::string>{"lattice", "isometric"};
  iso.insert(iso.end(), pair.begin(), pair.end());
  EXPECT_EQ(invoke_json(iso)["outcome"], "not isometric");
  const Json j = invoke_json({"lattice", "isometric"}, R"({"a": [[0,1],[1,0]], "b": {"gram": [[0,-1],[-1,0]]}})");
  EXPECT_EQ(j["outcome"], "isometric");
  EXPECT_TRUE(j.contains("witness"));
}

TEST(Cli, StrictInconclusive) {
  const std::vector<std::string> args{"--cap", "10", "lattice", "genus-eq", "--a", "[[2,1],[1,12]]", "--b",
                                      "[[4,1],[1,6]]"};
  EXPECT_EQ(invoke(args).code, kOk);
  auto strict = args;
  strict.insert(strict.begin(), "--strict");
  EXPECT_EQ(invoke(strict).code, kInconclusive);
  // Options after the subcommand reach the root parser as well.
  EXPECT_EQ(invoke({"lattice", "genus-eq", "--a", "[[2,1],[1,12]]", "--b", "[[4,1],[1,6]]", "--cap", "10",
                    "--strict"})
                .code,
            kInconclusive);
}

TEST(Cli, Overlattices) {
  const Json j = invoke_json({"lattice", "overlattices", "--even", "--gram", "[[0,2],[2,0]]"});
  EXPECT_EQ(j["count"], 3);
  EXPECT_EQ(j["overlattices"][1]["index"], "2");
  EXPECT_EQ(invoke_json({"lattice", "overlattices", "--even", "--gram", "[[4]]"})["count"], 1);
  EXPECT_EQ(invoke_json({"lattice", "two-elementary", "--gram", "[[4]]"})["two_elementary"], false);
}

TEST(Cli, EllipticActAndValidate) {
  const Json a = invoke_json({"elliptic", "act", "--matrix", "0,1,-1,0", "--v", "1,0"});
  EXPECT_EQ(a["rank"], "0");
  EXPECT_EQ(a["degree"], "-1");
  EXPECT_EQ(invoke_json({"elliptic", "validate", "--matrix", "0,1,-1,0", "--lambda", "2"})["valid"], false);
  EXPECT_EQ(invoke({"elliptic", "validate", "--matrix", "2,0,0,1", "--lambda", "1"}).code, kInvalidInput);
}

TEST(Cli, Bielliptic) {
  const Result v = invoke({"bielliptic", "verify", "--n", "4", "--k", "2", "--bound", "24"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("counterexamples: 0"), std::string::npos);
  const Json r = invoke_json({"bielliptic", "reduce", "--r", "4", "--k", "2", "--a", "3"});
  EXPECT_EQ(r["matrix"], Json::parse(R"([["3","-2"],["2","-1"]])"));
  EXPECT_EQ(r["h"], "2");
  EXPECT_EQ(invoke({"bielliptic", "reduce", "--r", "2", "--k", "2", "--a", "2"}).code, kInvalidInput);
  EXPECT_EQ(invoke_json({"bielliptic", "pairing", "--x", "4,0", "--y", "0,2"})["pairing"], "8");
  EXPECT_EQ(invoke_json({"bielliptic", "type"})["types"].size(), 7u);
  EXPECT_EQ(invoke({"bielliptic", "type", "--n", "5", "--k", "1"}).code, kInvalidInput);
  EXPECT_EQ(invoke({"bielliptic", "verify", "--n", "5", "--k", "1"}).code, kInvalidInput);
}

TEST(Cli, SurfaceCommands) {
  const Json g = invoke_json({"surface", "partners"}, R"({"class": "general_type"})");
  EXPECT_EQ(g["verdict"], "self_only");
  const Json e = invoke_json({"surface", "partners", "--descriptor", R"({"class":"elliptic_nonzero_kodaira","lambda":5})"});
  EXPECT_EQ(e["candidates"]["residues"], Json::array({1, 2}));
  const std::string pair =
      R"({"x":{"class":"k3","ns":[[2,1],[1,12]],"t":[[-2,1],[1,-12]]},"y":{"class":"abelian","ns":[[2,1],[1,12]],"t":[[-2,1],[1,-12]]}})";
  EXPECT_EQ(invoke_json({"surface", "compare"}, pair)["conclusion"], "ruled out");
  const Json n = invoke_json({"surface", "compare"}, R"({"x":{"class":"enriques"},"y":{"class":"bielliptic"}})");
  EXPECT_EQ(n["conclusion"], "ruled out");
  const Json b = invoke_json({"surface", "budget"}, R"({"class":"k3","ns":[[0,-2],[-2,0]],"t":[[0,1],[1,0]]})");
  EXPECT_EQ(b["even_overlattices"], 3);
  EXPECT_EQ(invoke({"surface", "partners"}, R"({"class": "k3"})").code, kInvalidInput);
  EXPECT_EQ(invoke({"surface", "partners"}, "{not json").code, kInvalidInput);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"lattice"}).code, kUsage);
  EXPECT_EQ(invoke({"lattice", "frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({"elliptic", "partners", "--lambda", "x"}).code, kUsage);
  EXPECT_EQ(invoke({"mukai", "pair", "--v1", "0,0,1"}).code, kUsage);
  const Result help = invoke({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("lattice"), std::string::npos);
}

TEST(Cli, DeterministicAndReparseable) {
  const std::vector<std::vector<std::string>> commands{
      {"--json", "lattice", "info", "--gram", "[[2,1],[1,12]]"},
      {"--json", "lattice", "overlattices", "--gram", "[[0,4],[4,0]]"},
      {"--json", "surface", "partners", "--descriptor", R"({"class":"k3","ns":[[4,1],[1,6]],"t":[[-2,1],[1,-12]]})"},
      {"--json", "bielliptic", "verify", "--n", "2", "--k", "2", "--bound", "10"},
  };
  for (const auto& c : commands) {
    const Result first = invoke(c);
    const Result second = invoke(c);
    EXPECT_EQ(first.code, 0) << first.err;
    EXPECT_EQ(first.out, second.out);
    EXPECT_TRUE(Json::accept(first.out));
  }
}

}  // namespace
}  // namespace fmp::cli
