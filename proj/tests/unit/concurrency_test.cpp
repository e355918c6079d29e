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

#include <thread>
#include <vector>

#include "fmp/json_io.hpp"

namespace fmp {
namespace {

// Pure functions called from several threads must agree with a serial run.
std::string workload() {
  json_io::Json j = json_io::Json::array();
  const Lattice a(IntMatrix{{2, 1}, {1, 12}});
  const Lattice b(IntMatrix{{4, 1}, {1, 6}});
  j.push_back(json_io::to_json(same_genus(a, b)));
  j.push_back(json_io::to_json(isometric(a, b)));
  for (const Overlattice& o : overlattices(Lattice(IntMatrix{{0, 4}, {4, 0}}), false)) j.push_back(json_io::to_json(o));
  j.push_back(json_io::to_json(verify_divisibility_claim({4, 2}, 10)));
  j.push_back(json_io::to_json(enumerate_partners({30, true})));
  return j.dump();
}

TEST(Concurrency, ParallelCallsMatchSerial) {
  const std::string expected = workload();
  std::vector<std::string> results(4);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < results.size(); ++i) threads.emplace_back([&results, i] { results[i] = workload(); });
  for (std::thread& t : threads) t.join();
  for (const std::string& r : results) EXPECT_EQ(r, expected);
}

}  // namespace
}  // namespace fmp
