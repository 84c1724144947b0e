#include <benchmark/benchmark.h>

#include "conductor/catalog.hpp"
#include "conductor/group.hpp"
#include "conductor/iwasawa.hpp"
#include "conductor/kernels.hpp"

using namespace conductor;

namespace {

// quotients of C19 x| Z3 above the minimal level
template <bool Parallel>
void BM_ClassCoefficients(benchmark::State& state) {
  const auto sd = catalog_semidirect("C19:Z3");
  const auto q = finite_quotient(sd, sd.n() + static_cast<unsigned>(state.range(0)));
  const auto cc = conjugacy_classes(*q.group);
  for (auto _ : state) {
    auto c = Parallel ? class_coefficients(*q.group, cc) : class_coefficients_serial(*q.group, cc);
    benchmark::DoNotOptimize(c.data());
  }
  state.SetLabel("order " + std::to_string(q.group->order()));
}

const char* kSemidirect[] = {"C7:Z3", "C3xC3:Z3", "C11:Z5", "C19:Z3"};

template <bool Parallel>
void BM_RegularTrace(benchmark::State& state) {
  const auto sd = catalog_semidirect(kSemidirect[state.range(0)]);
  const auto law = truncated_law(sd, sd.n() + 2);
  for (auto _ : state) {
    auto t = Parallel ? regular_trace(law) : regular_trace_serial(law);
    benchmark::DoNotOptimize(t.data());
  }
  state.SetLabel(std::string(kSemidirect[state.range(0)]) + " basis " + std::to_string(law.size));
}

}  // namespace

BENCHMARK(BM_ClassCoefficients<false>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassCoefficients<true>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RegularTrace<false>)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RegularTrace<true>)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
