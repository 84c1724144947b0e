#include <doctest.h>

#include <random>

#include "conductor/conductor_finite.hpp"
#include "conductor/fitting.hpp"

using namespace conductor;

namespace {

GroupRingMatrix random_matrix(const FiniteGroup& g, std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<long> d(-2, 2);
  GroupRingMatrix m(r, std::vector<GroupRingElement>(c, GroupRingElement(g.order(), 0)));
  for (auto& row : m)
    for (auto& e : row)
      for (auto& x : e) x = d(rng);
  return m;
}

}  // namespace

TEST_SUITE("fitting-ann") {
  TEST_CASE("reduced norm of the identity and of group elements") {
    for (const std::string name : {"C3", "S3", "D4", "A4"}) {
      const auto sg = split_group(name);
      const auto& g = *sg.group;
      for (const auto& v : reduced_norm(sg, {{gr_basis(g, 0)}})) CHECK(v == CycloNumber(1));
      for (Elem x = 0; x < g.order(); ++x) {
        const auto nr = reduced_norm(sg, {{gr_basis(g, x)}});
        for (std::size_t r = 0; r < sg.table.size(); ++r) CHECK(nr[r] == matrix_det(sg.images[r][x]));
      }
    }
  }

  TEST_CASE("reduced norm is multiplicative") {
    std::mt19937_64 rng(11);
    for (const std::string name : {"C4", "S3", "D4"}) {
      const auto sg = split_group(name);
      for (std::size_t n : {1u, 2u}) {
        const auto a = random_matrix(*sg.group, rng, n, n);
        const auto b = random_matrix(*sg.group, rng, n, n);
        const auto ab = gr_matmul(*sg.group, a, b);
        const auto na = reduced_norm(sg, a), nb = reduced_norm(sg, b), nab = reduced_norm(sg, ab);
        for (std::size_t r = 0; r < na.size(); ++r) CHECK(nab[r] == na[r] * nb[r]);
      }
    }
  }

  TEST_CASE("cyclic examples") {
    const auto sg = split_group("C3");
    const auto& g = *sg.group;
    const auto f3 = fitting_generators(sg, {1, 1, {{gr_basis(g, 0, 3)}}});
    REQUIRE(f3.generators.size() == 1);
    for (const auto& v : f3.generators[0]) CHECK(v == CycloNumber(3));
    GroupRingElement d = gr_basis(g, 0);
    d[g.generators()[0]] -= 1;
    const auto fd = fitting_generators(sg, {1, 1, {{d}}});
    REQUIRE(fd.generators.size() == 1);
    std::size_t zeros = 0;
    for (std::size_t r = 0; r < sg.table.size(); ++r) {
      const auto& v = fd.generators[0][r];
      CHECK(v == CycloNumber(1) - sg.table.value(r, g.generators()[0]));
      zeros += v == CycloNumber(0);
    }
    CHECK(zeros == 1);
  }

  TEST_CASE("more generators than relations gives zero") {
    const auto sg = split_group("S3");
    std::mt19937_64 rng(2);
    const auto f = fitting_generators(sg, {1, 2, random_matrix(*sg.group, rng, 1, 2)});
    CHECK(f.zero);
    CHECK(f.generators.empty());
  }

  TEST_CASE("row subsets are the b-subsets in lexicographic order") {
    const auto sg = split_group("C2");
    std::mt19937_64 rng(4);
    const auto f = fitting_generators(sg, {4, 2, random_matrix(*sg.group, rng, 4, 2)});
    const std::vector<std::vector<std::size_t>> expect{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    CHECK(f.row_sets == expect);
    CHECK(f.generators.size() == 6);
  }

  TEST_CASE("commutative case: determinants of minors") {
    std::mt19937_64 rng(8);
    for (const std::string name : {"C3", "C6", "C3xC3"}) {
      const auto sg = split_group(name);
      for (auto [a, b] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 2}, {3, 2}}) {
        CHECK(commutative_degeneration_check(sg, {a, b, random_matrix(*sg.group, rng, a, b)}));
      }
    }
    // the group ring determinant itself
    const auto sg = split_group("C3");
    const auto& g = *sg.group;
    const GroupRingMatrix m{{gr_basis(g, 0, 2), gr_basis(g, 1)}, {gr_basis(g, 2), gr_basis(g, 0)}};
    GroupRingElement expect = gr_basis(g, 0, 2);
    expect[g.mul(1, 2)] -= 1;
    CHECK(group_ring_det(g, m) == expect);
  }

  TEST_CASE("conductor times Fitting generators annihilates the cokernel") {
    std::mt19937_64 rng(21);
    for (const std::string name : {"C3", "S3", "D4"}) {
      const auto sg = split_group(name);
      for (unsigned p : {3u, 5u}) {
        const auto ctx = PadicContext::for_group_order(p, sg.group->order());
        const auto report = jacobinski_conductor(sg.table, AbelianLocalField::rational(p));
        for (auto [a, b] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {2, 2}}) {
          auto h = random_matrix(*sg.group, rng, a, b);
          for (std::size_t i = 0; i < b; ++i) h[i][i][0] += p;
          CAPTURE(name);
          CAPTURE(p);
          CAPTURE(a);
          CAPTURE(b);
          CHECK(fitting_annihilation_check(sg, report, {a, b, h}, ctx));
        }
      }
    }
  }
}
