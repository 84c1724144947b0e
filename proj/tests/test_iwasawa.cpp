#include <doctest.h>

#include <algorithm>

#include "conductor/catalog.hpp"
#include "conductor/chartab.hpp"
#include "conductor/conductor_finite.hpp"
#include "conductor/error.hpp"
#include "conductor/iwasawa.hpp"
#include "conductor/kernels.hpp"

using namespace conductor;

namespace {

// Trace of right multiplication by b_x on Lambda_m over R_m, read off the
// finite quotient group: b' b_x = t^q b' contributes to the coefficient of t^q.
std::vector<std::vector<long long>> trace_by_group(const SemidirectData& sd, unsigned m) {
  const FiniteQuotient q = finite_quotient(sd, m);
  const std::size_t hn = sd.h().order(), pn = sd.p_pow_n();
  const std::size_t trunc = q.gamma_order / pn, size = pn * hn;
  std::vector<std::vector<long long>> out(size, std::vector<long long>(trunc, 0));
  for (std::size_t x = 0; x < size; ++x) {
    const Elem gx = q.element(x / hn, static_cast<Elem>(x % hn));
    for (std::size_t y = 0; y < size; ++y) {
      const Elem gy = q.element(y / hn, static_cast<Elem>(y % hn));
      const Elem z = q.group->mul(gy, gx);
      const std::size_t i = q.gamma_exponent(z);
      if (i % pn == y / hn && q.h_part(z) == y % hn) ++out[x][i / pn];
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("conductor-iwasawa") {
  TEST_CASE("C7:Z3 over Q3") {
    const auto q3 = AbelianLocalField::rational(3);
    const auto d = central_conductor(catalog_semidirect("C7:Z3"), q3);
    REQUIRE(d.components.size() == 2);
    CHECK(d.components[0].w == 1);
    CHECK(d.components[0].field == q3);
    CHECK(d.components[1].w == 3);
    CHECK(d.components[1].chi_degree == 3);
    CHECK(d.components[1].field == AbelianLocalField::unramified(3, 2));
    for (const auto& c : d.components) CHECK(c.total_valuation == 0);
    CHECK(d.commutator_prime_to_p);
  }

  TEST_CASE("C3xZ3 over Q3 and over Q3(zeta3)") {
    const auto q3 = AbelianLocalField::rational(3);
    const auto k3 = AbelianLocalField::cyclotomic(3, 3);
    const auto sd = catalog_semidirect("C3xZ3");
    const auto d = central_conductor(sd, q3);
    REQUIRE(d.components.size() == 2);
    CHECK(d.components[1].field == k3);
    CHECK(d.components[1].invdiff.v == -1);
    for (const auto& c : d.components) CHECK(c.total_valuation == 1);
    // over the splitting field every class is a single character
    const auto split = splitting_field_bound(sd, q3);
    CHECK(split.field == k3);
    CHECK(split.contains_all_fields);
    CHECK(split.classes_split);
    const auto dk = central_conductor(sd, k3);
    CHECK(dk.components.size() == 3);
    for (const auto& c : dk.components) CHECK(c.total_valuation == 2);
  }

  TEST_CASE("n = 0 reduces to the finite conductor of H") {
    const auto q3 = AbelianLocalField::rational(3);
    for (const std::string name : {"S3xZ3", "C3xZ3"}) {
      const auto sd = catalog_semidirect(name);
      if (sd.n() != 0) continue;
      const auto d = central_conductor(sd, q3);
      const auto f = jacobinski_conductor(character_table(sd.h_ptr()), q3);
      REQUIRE(d.components.size() == f.components.size());
      std::vector<long> a, b;
      for (const auto& c : d.components) a.push_back(c.total_valuation);
      for (const auto& c : f.components) b.push_back(c.valuation);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
    }
  }

  TEST_CASE("classes cover the alpha orbits once") {
    for (const auto& name : catalog_semidirect_names()) {
      const auto sd = catalog_semidirect(name);
      const auto ht = character_table(sd.h_ptr());
      const auto orbits = alpha_orbits(ht, sd.alpha());
      const auto qp = AbelianLocalField::rational(sd.p());
      std::size_t covered = 0;
      for (const auto& c : chi_classes(sd, qp)) {
        covered += c.orbits.size();
        CHECK(c.chi_degree == static_cast<long>(c.w) * c.eta_degree);
        CHECK(c.embedding_exponent * c.w == sd.p_pow_n());
        CHECK(c.total_valuation == c.field.e() * c.multiplier_vp + c.invdiff.v);
        if (c.s_chi) {
          CHECK(*c.s_chi == 1);
          CHECK(c.n_chi.has_value());
        }
      }
      CHECK(covered == orbits.size());
    }
  }

  TEST_CASE("R-intersection exponent") {
    for (const auto& name : catalog_semidirect_names()) {
      const auto sd = catalog_semidirect(name);
      const auto d = central_conductor(sd, AbelianLocalField::rational(sd.p()));
      CAPTURE(name);
      CHECK(r_cap_conductor(d) == d.r_cap_exponent);
      CHECK(d.r_cap_exponent >= 0);
      CHECK(filtered_annihilator(d, {}) == d.r_cap_exponent);
      // dropping components can only enlarge the intersection
      std::vector<std::size_t> vanish;
      long prev = d.r_cap_exponent;
      for (std::size_t i = 0; i + 1 < d.components.size(); ++i) {
        vanish.push_back(i);
        const long a = filtered_annihilator(d, vanish);
        CHECK(a <= prev);
        prev = a;
      }
    }
  }

  TEST_CASE("regular traces match the finite quotient group") {
    for (const auto& name : catalog_semidirect_names()) {
      const auto sd = catalog_semidirect(name);
      if (sd.n() > 1 || sd.h().order() > 20) continue;
      for (unsigned m = sd.n(); m <= sd.n() + 1; ++m) {
        const auto law = truncated_law(sd, m);
        CAPTURE(name);
        CAPTURE(m);
        const auto serial = regular_trace_serial(law);
        CHECK(serial == trace_by_group(sd, m));
        CHECK(regular_trace(law) == serial);
        CHECK(dual_basis_check(sd, m));
      }
    }
  }

  TEST_CASE("idempotents") {
    for (const std::string name : {"C3xZ3", "S3xZ3", "C7:Z3", "C9:Z3"}) {
      const auto sd = catalog_semidirect(name);
      const auto qp = AbelianLocalField::rational(sd.p());
      CAPTURE(name);
      CHECK(verify_idempotents(sd, qp, sd.n()).ok());
      CHECK(verify_idempotents(sd, splitting_field_bound(sd, qp).field, sd.n() + 1).ok());
    }
  }

  TEST_CASE("different of Lambda over R_m") {
    CHECK(lambda_gamma_different_check(AbelianLocalField::rational(5), 1, 2));
    CHECK(lambda_gamma_different_check(AbelianLocalField::cyclotomic(5, 5), 0, 1));
    CHECK(lambda_gamma_different_check(AbelianLocalField::cyclotomic(3, 9), 1, 1));
    CHECK(lambda_gamma_different_check(AbelianLocalField::unramified(5, 2), 1, 1));
    CHECK_THROWS_AS(lambda_gamma_different_check(AbelianLocalField::cyclotomic(3, 21), 0, 0), Unsupported);
  }
}
