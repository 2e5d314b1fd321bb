//  Copyright 2026 The ifckit Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include <benchmark/benchmark.h>

#include <string>

#include "ifckit/facets.hpp"
#include "ifckit/harness.hpp"
#include "ifckit/interp.hpp"
#include "ifckit/lio.hpp"
#include "ifckit/rng.hpp"
#include "ifckit/termgen.hpp"
#include "ifckit/universe.hpp"

namespace {

using namespace ifc;

void BM_LatticeParse(benchmark::State& state) {
  const std::string text = LatticeSpec::powerset(static_cast<unsigned>(state.range(0)))->to_text();
  for (auto _ : state) benchmark::DoNotOptimize(LatticeSpec::parse(text));
}
BENCHMARK(BM_LatticeParse)->Arg(2)->Arg(3)->Arg(4);

// A complete tree of the given height over the diamond.
FacTree full_tree(const LatticeSpec& d, int height, Nat& next) {
  if (height == 0) return FacTree::leaf(Value::nat(next++));
  const Label g = d.label(static_cast<std::uint32_t>(height % d.size()));
  FacTree p = full_tree(d, height - 1, next);
  return FacTree::node(g, std::move(p), full_tree(d, height - 1, next));
}

void BM_FacBind(benchmark::State& state) {
  const LatticePtr d = LatticeSpec::diamond();
  Nat next = 0;
  const FacTree f = full_tree(*d, static_cast<int>(state.range(0)), next);
  const facets::Continuation k = [&](const Value& v) {
    return FacTree::node(d->at("Bob"), FacTree::leaf(v), FacTree::leaf(Value::nat(0)));
  };
  for (auto _ : state) benchmark::DoNotOptimize(facets::fac_bind(f, k));
}
BENCHMARK(BM_FacBind)->DenseRange(2, 10, 4);

void BM_Project(benchmark::State& state) {
  const LatticePtr d = LatticeSpec::diamond();
  Nat next = 0;
  const FacTree f = full_tree(*d, 12, next);
  const Label obs = d->at("Alice");
  for (auto _ : state) benchmark::DoNotOptimize(facets::project(obs, f));
}
BENCHMARK(BM_Project);

void BM_LioRun(benchmark::State& state) {
  const LatticePtr d = LatticeSpec::diamond();
  LioComp m = lio::lio_return(Value::nat(0));
  for (int i = 0; i < state.range(0); ++i) {
    const Label l = d->label(static_cast<std::uint32_t>(i % d->size()));
    m = lio::lio_bind(m, [l](const Value& v) {
      return lio::to_labeled(l, lio::unlabel(lio::label(l, v)));
    });
  }
  for (auto _ : state) benchmark::DoNotOptimize(lio::run(m, d->bottom()));
}
BENCHMARK(BM_LioRun)->Arg(8)->Arg(64);

void BM_GenTerm(benchmark::State& state) {
  const LatticePtr d = LatticeSpec::diamond();
  const TypeEnv in{{"x", Univ::labeled(Univ::nat())}, {"y", Univ::boolean()}};
  const Univ out = Univ::lio(Univ::labeled(Univ::nat()));
  Rng rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gen_term(rng, *d, in, out, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_GenTerm)->Arg(8)->Arg(12)->Arg(24);

void BM_EquivLio(benchmark::State& state) {
  const LatticePtr d = LatticeSpec::diamond();
  const Label obs = d->at("Alice");
  const Value a = Value::lio(lio::unlabel(lio::label(d->at("Bob"), Value::nat(1))));
  const Value b = Value::lio(lio::unlabel(lio::label(d->at("Bob"), Value::nat(2))));
  for (auto _ : state) benchmark::DoNotOptimize(equiv(*d, obs, Univ::lio(Univ::nat()), a, b));
}
BENCHMARK(BM_EquivLio);

void BM_EnumClasses(benchmark::State& state) {
  const LatticePtr two = LatticeSpec::two_point();
  const TypeEnv in{{"x", Univ::fac(Univ::boolean())}};
  const std::vector<std::vector<Value>> domains = {enum_values(*two, in[0].second)};
  EnumLimits limits;
  limits.implicit_nat = false;
  const TermEvaluator eval = [](const Term& t, const ValueEnv& env) {
    return eval_facets(MultefBackend::secure(), t, env);
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(enum_classes(*two, in, domains, in[0].second,
                                          static_cast<std::size_t>(state.range(0)), eval, limits));
  }
}
BENCHMARK(BM_EnumClasses)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Campaign(benchmark::State& state) {
  CheckConfig c;
  c.system = static_cast<System>(state.range(0));
  c.lattice = LatticeSpec::diamond();
  c.cases = 1000;
  for (auto _ : state) benchmark::DoNotOptimize(check(c));
  state.SetLabel(system_name(c.system));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.cases));
}
BENCHMARK(BM_Campaign)
    ->Arg(static_cast<int>(System::Facets))
    ->Arg(static_cast<int>(System::Lio))
    ->Arg(static_cast<int>(System::Transparency))
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
