#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "conductor/catalog.hpp"
#include "conductor/error.hpp"
#include "conductor/group.hpp"

using namespace conductor;

namespace {

bool is_group_law(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (Elem a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a) return false;
    if (g.mul(a, g.inv(a)) != 0) return false;
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
  return true;
}

}  // namespace

TEST_SUITE("group-core") {
  TEST_CASE("catalog groups have the expected orders and class counts") {
    const std::map<std::string, std::pair<std::size_t, std::size_t>> expect{
        {"C7", {7, 7}},   {"C3xC3", {9, 9}}, {"S3", {6, 3}},   {"D4", {8, 5}},   {"Q8", {8, 5}},
        {"A4", {12, 4}},  {"D5", {10, 4}},   {"F20", {20, 5}}, {"S4", {24, 5}},  {"A5", {60, 5}},
        {"SL23", {24, 7}}, {"C7:C3", {21, 5}}, {"C3xS3", {18, 9}}};
    for (const auto& [name, oc] : expect) {
      CAPTURE(name);
      const auto g = catalog_group(name);
      CHECK(g->order() == oc.first);
      CHECK(conjugacy_classes(*g).count() == oc.second);
    }
  }

  TEST_CASE("small catalog groups satisfy the group axioms") {
    for (const auto& name : catalog_group_names()) {
      const auto g = catalog_group(name);
      if (g->order() > 40) continue;
      CAPTURE(name);
      CHECK(is_group_law(*g));
    }
  }

  TEST_CASE("class equation and class function") {
    for (const auto& name : catalog_group_names()) {
      const auto g = catalog_group(name);
      const auto cc = conjugacy_classes(*g);
      const auto sizes = cc.sizes();
      CHECK(std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}) == g->order());
      for (std::size_t c = 0; c < cc.count(); ++c) {
        CHECK(g->order() % sizes[c] == 0);
        for (Elem x : cc.classes[c])
          for (Elem s : g->generators()) CHECK(cc.class_of[g->conj(s, x)] == c);
      }
    }
  }

  TEST_CASE("from_table moves the identity to index 0") {
    // Z/3 with identity labelled 2
    const std::vector<std::vector<Elem>> t{{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
    const auto g = FiniteGroup::from_table(t);
    CHECK(g.order() == 3);
    CHECK(is_group_law(g));
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), InvalidInput);
  }

  TEST_CASE("commutator subgroups") {
    CHECK(commutator_subgroup(*catalog_group("S3")).size() == 3);
    CHECK(commutator_subgroup(*catalog_group("A4")).size() == 4);
    CHECK(commutator_subgroup(*catalog_group("A5")).size() == 60);
    CHECK(commutator_subgroup(*catalog_group("C9")).size() == 1);
  }

  TEST_CASE("semidirect data derive n from alpha") {
    const std::map<std::string, unsigned> n{{"Gamma", 0}, {"C3xZ3", 0}, {"S3xZ3", 0}, {"C7:Z3", 1},
                                            {"C9:Z3", 1}, {"C3xC3:Z3", 1}, {"C19:Z3", 2}, {"C11:Z5", 1}};
    for (const auto& name : catalog_semidirect_names()) {
      CAPTURE(name);
      const auto sd = catalog_semidirect(name);
      CHECK(sd.n() == n.at(name));
      CHECK(sd.alpha().power(static_cast<long long>(sd.p_pow_n())).is_identity());
    }
  }

  TEST_CASE("finite quotients: H at the bottom, gamma acts by alpha") {
    for (const auto& name : catalog_semidirect_names()) {
      const auto sd = catalog_semidirect(name);
      for (unsigned m = sd.n(); m <= sd.n() + 1; ++m) {
        CAPTURE(name);
        CAPTURE(m);
        const FiniteQuotient q = finite_quotient(sd, m);
        const FiniteGroup& g = *q.group;
        CHECK(g.order() == sd.h().order() * ipow(sd.p(), m));
        for (Elem a = 0; a < sd.h().order(); ++a)
          for (Elem b = 0; b < sd.h().order(); ++b) CHECK(g.mul(a, b) == sd.h().mul(a, b));
        const Elem gamma = q.gamma();
        for (Elem h = 0; h < sd.h().order(); ++h)
          CHECK(g.conj(gamma, h) == (q.gamma_order > 1 ? sd.alpha()(h) : h));
        CHECK(g.elem_order(gamma) == std::max<std::size_t>(q.gamma_order, 1));
        if (g.order() <= 60) CHECK(is_group_law(g));
      }
    }
    CHECK_THROWS_AS(finite_quotient(catalog_semidirect("C19:Z3"), 1), InvalidInput);
  }

  TEST_CASE("automorphism algebra") {
    const auto sd = catalog_semidirect("C19:Z3");
    const auto& a = sd.alpha();
    CHECK(a.order() == 9);
    CHECK(a.compose(a.inverse()).is_identity());
    CHECK(a.power(-1).images() == a.inverse().images());
  }
}
