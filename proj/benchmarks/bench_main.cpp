// Copyright 2026 The ultra authors
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

#include "ultra/bounds.hpp"
#include "ultra/cyclotomic.hpp"
#include "ultra/torsion.hpp"

namespace {

using namespace ultra;

Laurent<Rat> dense_q(long p, int terms) {
  Laurent<Rat> f(FieldSpec::char0(Int(p)));
  for (int n = 0; n < terms; ++n) {
    Rat c(Int(2 * n + 1), Int(n + 2));
    c.canonicalize();
    f.set(Int(n), c);
  }
  return f;
}

Laurent<RatFun> curved_f2() {
  Laurent<RatFun> f(FieldSpec::charp(2));
  f.set(Int(1), RatFun::parse(2, "t+1"));
  f.set(Int(2), RatFun::parse(2, "t"));
  return f;
}

void BM_LaurentMulQ(benchmark::State& state) {
  Laurent<Rat> a = dense_q(2, static_cast<int>(state.range(0)));
  Laurent<Rat> b = dense_q(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_LaurentMulQ)->Arg(8)->Arg(32)->Arg(128);

void BM_LaurentPowCharp(benchmark::State& state) {
  Laurent<RatFun> f = curved_f2();
  Int e(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(frobenius_pow(f, e));
}
BENCHMARK(BM_LaurentPowCharp)->Arg(4)->Arg(16)->Arg(256);

void BM_NewtonAt(benchmark::State& state) {
  Laurent<Rat> f = dense_q(3, static_cast<int>(state.range(0)));
  Rat slope(1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(newton_at(f, slope));
}
BENCHMARK(BM_NewtonAt)->Arg(16)->Arg(256);

void BM_CycEval(benchmark::State& state) {
  auto ring = CycRing::make(static_cast<unsigned long>(state.range(0)));
  Int e(7);
  for (auto _ : state) {
    CycElem z = ring->root_power(e).scaled(Rat(3, 2)) + ring->one();
    benchmark::DoNotOptimize(z.pow(Int(12)));
  }
}
BENCHMARK(BM_CycEval)->Arg(12)->Arg(60)->Arg(210);

void BM_EnumerateCharp(benchmark::State& state) {
  Laurent<RatFun> f = curved_f2();
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_charp(f, static_cast<unsigned long>(state.range(0))));
}
BENCHMARK(BM_EnumerateCharp)->Arg(8)->Arg(12);

void BM_Decompose(benchmark::State& state) {
  unsigned long n = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(decompose_pair(5, 7, n));
}
BENCHMARK(BM_Decompose)->Arg(360)->Arg(3600)->Arg(46080);

void BM_BoundChar0Shortcut(benchmark::State& state) {
  Laurent<Rat> f(FieldSpec::char0(Int(2)));
  f.set(Int(0), Rat(-1, 2));
  f.set(Int(1), Rat(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(bound_char0(f));
}
BENCHMARK(BM_BoundChar0Shortcut);

}  // namespace

BENCHMARK_MAIN();
