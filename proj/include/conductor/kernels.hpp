#pragma once

#include <cstdint>
#include <vector>

#include "conductor/group.hpp"

namespace conductor {

/// Class multiplication coefficients c[(j*r + i)*r + k] = #{y in C_j : y^-1 g_k in C_i},
/// g_k the representative of class k. The OpenMP version parallelizes over j
/// and returns the same array as the serial reference.
std::vector<std::uint32_t> class_coefficients_serial(const FiniteGroup& g, const ConjugacyClasses& cc);
std::vector<std::uint32_t> class_coefficients(const FiniteGroup& g, const ConjugacyClasses& cc);

/// Structure constants of a twisted group ring: basis b_0..b_{N-1} with
/// b_x * b_y = t^{shift(x,y)} b_{prod(x,y)} over Z[t]/(t^trunc - 1), shifts
/// already reduced mod trunc. regular_trace returns, for every basis element x, the trace
/// of right multiplication by x on the free module with basis b, as a
/// coefficient vector in t (length trunc).
struct TwistedLaw {
  std::size_t size = 0;
  std::size_t trunc = 1;
  std::vector<std::uint32_t> prod;   // size*size
  std::vector<std::uint32_t> shift;  // size*size
};

std::vector<std::vector<long long>> regular_trace_serial(const TwistedLaw& law);
std::vector<std::vector<long long>> regular_trace(const TwistedLaw& law);

}  // namespace conductor
