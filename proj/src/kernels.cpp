#include "conductor/kernels.hpp"

#include <omp.h>

namespace conductor {

namespace {

void class_row(const FiniteGroup& g, const ConjugacyClasses& cc, const std::vector<Elem>& reps, std::size_t j,
               std::uint32_t* out) {
  const std::size_t r = cc.count();
  for (std::size_t k = 0; k < r; ++k)
    for (Elem y : cc.classes[j]) {
      const std::size_t i = cc.class_of[g.mul(g.inv(y), reps[k])];
      ++out[i * r + k];
    }
}

void trace_row(const TwistedLaw& law, std::size_t x, std::vector<long long>& out) {
  // right multiplication b_y -> b_y b_x contributes to the diagonal when prod(y,x) = y
  for (std::size_t y = 0; y < law.size; ++y) {
    const std::size_t idx = y * law.size + x;
    if (law.prod[idx] == y) ++out[law.shift[idx]];
  }
}

}  // namespace

std::vector<std::uint32_t> class_coefficients_serial(const FiniteGroup& g, const ConjugacyClasses& cc) {
  const std::size_t r = cc.count();
  const auto reps = cc.reps();
  std::vector<std::uint32_t> c(r * r * r, 0);
  for (std::size_t j = 0; j < r; ++j) class_row(g, cc, reps, j, c.data() + j * r * r);
  return c;
}

std::vector<std::uint32_t> class_coefficients(const FiniteGroup& g, const ConjugacyClasses& cc) {
  const std::size_t r = cc.count();
  const auto reps = cc.reps();
  std::vector<std::uint32_t> c(r * r * r, 0);
  const long long rr = static_cast<long long>(r);
#pragma omp parallel for schedule(dynamic)
  for (long long j = 0; j < rr; ++j) class_row(g, cc, reps, static_cast<std::size_t>(j), c.data() + j * r * r);
  return c;
}

std::vector<std::vector<long long>> regular_trace_serial(const TwistedLaw& law) {
  std::vector<std::vector<long long>> out(law.size, std::vector<long long>(law.trunc, 0));
  for (std::size_t x = 0; x < law.size; ++x) trace_row(law, x, out[x]);
  return out;
}

std::vector<std::vector<long long>> regular_trace(const TwistedLaw& law) {
  std::vector<std::vector<long long>> out(law.size, std::vector<long long>(law.trunc, 0));
  const long long n = static_cast<long long>(law.size);
#pragma omp parallel for schedule(static)
  for (long long x = 0; x < n; ++x) trace_row(law, static_cast<std::size_t>(x), out[static_cast<std::size_t>(x)]);
  return out;
}

}  // namespace conductor
