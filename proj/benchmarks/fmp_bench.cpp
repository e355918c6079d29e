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

#include <benchmark/benchmark.h>

#include <cstdint>

#include "fmp/bielliptic.hpp"
#include "fmp/discriminant.hpp"
#include "fmp/elliptic.hpp"
#include "fmp/genus.hpp"
#include "fmp/isometry.hpp"
#include "fmp/normal_form.hpp"
#include "fmp/overlattice.hpp"
#include "fmp/partner_engine.hpp"

namespace {

using fmp::IntMatrix;
using fmp::Lattice;

// Tridiagonal n x n matrix with a dense last row, so the SNF is nontrivial.
IntMatrix banded(std::int64_t n) {
  IntMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    m(i, i) = static_cast<long>(2 + i % 5);
    if (i + 1 < m.rows()) m(i, i + 1) = m(i + 1, i) = static_cast<long>(1 + i % 3);
    m(m.rows() - 1, i) += static_cast<long>(i);
  }
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const IntMatrix m = banded(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fmp::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16)->Arg(22);

void BM_DiscriminantForm(benchmark::State& state) {
  const Lattice l(IntMatrix{{2, 1, 0, 0}, {1, 12, 0, 0}, {0, 0, -2, 1}, {0, 0, 1, -12}});
  for (auto _ : state) benchmark::DoNotOptimize(fmp::discriminant_form(l));
}
BENCHMARK(BM_DiscriminantForm);

// A_n root lattice scaled by 2.
void BM_ShortVectors(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = 4;
    if (i + 1 < n) g(i, i + 1) = g(i + 1, i) = -2;
  }
  const Lattice l(g);
  for (auto _ : state) benchmark::DoNotOptimize(fmp::short_vectors(l, 8));
}
BENCHMARK(BM_ShortVectors)->Arg(4)->Arg(6)->Arg(8);

void BM_SameGenus(benchmark::State& state) {
  const Lattice a(IntMatrix{{2, 1}, {1, 12}});
  const Lattice b(IntMatrix{{4, 1}, {1, 6}});
  for (auto _ : state) benchmark::DoNotOptimize(fmp::same_genus(a, b));
}
BENCHMARK(BM_SameGenus);

void BM_EvenOverlattices(benchmark::State& state) {
  const auto s = static_cast<long>(state.range(0));
  const Lattice l(IntMatrix{{0, s, 0, 0}, {s, 0, 0, 0}, {0, 0, 0, s}, {0, 0, s, 0}});
  for (auto _ : state) benchmark::DoNotOptimize(fmp::overlattices(l, true));
}
BENCHMARK(BM_EvenOverlattices)->Arg(2)->Arg(3)->Arg(4);

void BM_SubgroupsOfSquareGroup(benchmark::State& state) {
  const Lattice w(IntMatrix{{2, 1, 0, 0}, {1, 12, 0, 0}, {0, 0, -2, 1}, {0, 0, 1, -12}});
  const fmp::DiscriminantForm form = fmp::discriminant_form(w);
  for (auto _ : state) benchmark::DoNotOptimize(fmp::enumerate_subgroups(form, fmp::SubgroupFilter::kAll));
}
BENCHMARK(BM_SubgroupsOfSquareGroup);

void BM_EllipticPartners(benchmark::State& state) {
  const fmp::EllipticSurfaceData surface{state.range(0), true};
  for (auto _ : state) benchmark::DoNotOptimize(fmp::enumerate_partners(surface));
}
BENCHMARK(BM_EllipticPartners)->Arg(6)->Arg(360)->Arg(5040);

void BM_BiellipticVerify(benchmark::State& state) {
  const fmp::BiellipticType type{4, 2};
  for (auto _ : state) benchmark::DoNotOptimize(fmp::verify_divisibility_claim(type, state.range(0)));
}
BENCHMARK(BM_BiellipticVerify)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_PartnerReportK3(benchmark::State& state) {
  fmp::SurfaceDescriptor d;
  d.surface_class = fmp::SurfaceClass::kK3;
  d.ns = Lattice(IntMatrix{{2, 1}, {1, 12}});
  d.t = Lattice(IntMatrix{{-2, 1}, {1, -12}});
  d = fmp::complete(d);
  for (auto _ : state) benchmark::DoNotOptimize(fmp::fm_partner_report(d));
}
BENCHMARK(BM_PartnerReportK3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
