#include <benchmark/benchmark.h>

#include "dbgen/corpus.hpp"
#include "dbgen/emit.hpp"
#include "dbgen/laws.hpp"
#include "dbgen/parser.hpp"

using namespace dbgen;

namespace {

ValidGrammar load(std::string_view src) {
  return validate_or_throw(parse_source(src));
}

void bench_parse_system_f(benchmark::State& state) {
  for (auto _ : state) {
    SourceGrammar g = parse_source(corpus::kSystemF);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(bench_parse_system_f);

void bench_plan_system_f(benchmark::State& state) {
  ValidGrammar g = load(corpus::kSystemF);
  for (auto _ : state) {
    FunctionPlan plan = plan_functions(g);
    benchmark::DoNotOptimize(plan);
  }
}
BENCHMARK(bench_plan_system_f);

void bench_emit_system_f(benchmark::State& state) {
  ValidGrammar g = load(corpus::kSystemF);
  FunctionPlan plan = plan_functions(g);
  for (auto _ : state) {
    EmittedFile file = emit_module(g, plan, {"0.0.0"});
    benchmark::DoNotOptimize(file.rendered);
  }
}
BENCHMARK(bench_emit_system_f);

void bench_enumerate_terms(benchmark::State& state) {
  ValidGrammar g = load(corpus::kSystemF);
  Engine engine(g);
  SortId term = *g.sort_id("term");
  for (auto _ : state) {
    auto terms = engine.enumerate(term, static_cast<std::size_t>(state.range(0)), 2);
    benchmark::DoNotOptimize(terms);
  }
}
BENCHMARK(bench_enumerate_terms)->Arg(3)->Arg(4);

void bench_lift(benchmark::State& state) {
  ValidGrammar g = load(corpus::kSystemF);
  Engine engine(g);
  SortId term = *g.sort_id("term");
  SortId type = *g.sort_id("type");
  auto terms = engine.enumerate(term, 4, 2);
  for (auto _ : state) {
    for (const TermPtr& t : terms) {
      benchmark::DoNotOptimize(engine.lift(type, 2, 1, t));
    }
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(terms.size()));
}
BENCHMARK(bench_lift);

void bench_subst(benchmark::State& state) {
  ValidGrammar g = load(corpus::kSystemF);
  Engine engine(g);
  SortId term = *g.sort_id("term");
  auto terms = engine.enumerate(term, 4, 2);
  auto payloads = engine.enumerate(term, 2, 1);
  for (auto _ : state) {
    for (const TermPtr& t : terms) {
      benchmark::DoNotOptimize(engine.subst(term, payloads.front(), 0, t));
    }
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(terms.size()));
}
BENCHMARK(bench_subst);

void bench_law_lift_zero(benchmark::State& state) {
  ValidGrammar g = load(corpus::kLambdaTerms);
  Engine engine(g);
  LawBounds bounds;
  bounds.max_size = 4;
  for (auto _ : state) {
    auto cex = check_law(engine, LawId::LiftZero, bounds);
    benchmark::DoNotOptimize(cex);
  }
}
BENCHMARK(bench_law_lift_zero);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
