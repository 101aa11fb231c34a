/*
 * Copyright 2026 The superrec authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "superrec/airy.hpp"
#include "superrec/gaiotto.hpp"
#include "superrec/operator_expr.hpp"
#include "superrec/str.hpp"

namespace {

using namespace superrec;

ContextPtr ctx() {
  static ContextPtr c = std::make_shared<const Context>();
  return c;
}

Poly dense_poly(int terms) {
  Poly p = Poly::zero(ctx());
  for (int t = 0; t < terms; ++t) {
    ExpVec e(ctx()->size(), 0);
    e[Context::kTau0] = t % 4;
    e[Context::kQ0] = (t / 4) % 3;
    e[Context::kT] = (t / 12) % 3;
    e[Context::kHHalf] = t % 5 - 2;
    p += Poly::monomial(ctx(), e, frac(2 * t + 1, t + 2));
  }
  return p;
}

void bm_poly_mul(benchmark::State& state) {
  Poly a = dense_poly(static_cast<int>(state.range(0)));
  Poly b = dense_poly(static_cast<int>(state.range(0)) + 3);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_poly_mul)->Arg(8)->Arg(32);

void bm_airy_solve_gaiotto(benchmark::State& state) {
  SuperCurve c = build_gaiotto_curve(GaiottoSpec::make(ctx(), Sector::ns));
  const int chi = static_cast<int>(state.range(0));
  SolveOptions opt;
  opt.chi_max = chi;
  opt.index_bound = std::max(1, (chi - 1) / 2);
  for (auto _ : state) benchmark::DoNotOptimize(airy_solve(c, opt));
}
BENCHMARK(bm_airy_solve_gaiotto)->Arg(7)->Arg(9);

void bm_str_recurse_gaiotto(benchmark::State& state) {
  SuperCurve c = build_gaiotto_curve(GaiottoSpec::make(ctx(), Sector::r));
  const int chi = static_cast<int>(state.range(0));
  StrOptions opt;
  opt.chi_max = chi;
  opt.index_bound = std::max(1, (chi - 1) / 2);
  for (auto _ : state) benchmark::DoNotOptimize(str_recurse(c, opt));
}
BENCHMARK(bm_str_recurse_gaiotto)->Arg(6)->Arg(7);

void bm_virasoro_commutator(benchmark::State& state) {
  OperatorExpr l2 = build_generator(ctx(), Sector::r, GenKind::l, 4, 24);
  OperatorExpr lm2 = build_generator(ctx(), Sector::r, GenKind::l, -4, 24);
  for (auto _ : state)
    benchmark::DoNotOptimize(OperatorExpr::super_commutator(l2, lm2));
}
BENCHMARK(bm_virasoro_commutator);

void bm_norm_series(benchmark::State& state) {
  PartitionFunction pf =
      partition_function(GaiottoSpec::make(ctx(), Sector::ns), 9);
  for (auto _ : state) benchmark::DoNotOptimize(nekrasov_series(pf, 8));
}
BENCHMARK(bm_norm_series);

}  // namespace

BENCHMARK_MAIN();
