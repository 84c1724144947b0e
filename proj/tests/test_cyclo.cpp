#include <doctest.h>

#include <numeric>
#include <random>

#include "conductor/cyclo.hpp"
#include "conductor/error.hpp"

using namespace conductor;

namespace {

long mobius(std::uint64_t n) {
  long mu = 1;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    n /= q;
    if (n % q == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

CycloNumber random_element(std::mt19937_64& rng, std::uint64_t m) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<mpq_class> c(m);
  for (auto& x : c) x = mpq_class(d(rng), 1 + std::abs(d(rng)));
  return CycloNumber::from_exponents(m, c);
}

}  // namespace

TEST_SUITE("cyclo-arith") {
  TEST_CASE("canonical forms of small identities") {
    CHECK(CycloNumber::root_of_unity(6, 1) == CycloNumber(1) + CycloNumber::root_of_unity(3, 1));
    const auto z8 = CycloNumber::root_of_unity(8, 1);
    const auto sqrt2 = z8 - z8 * z8 * z8;
    CHECK(sqrt2 * sqrt2 == CycloNumber(2));
    CHECK(CycloNumber::root_of_unity(4, 2) == CycloNumber(-1));
    CHECK(CycloNumber::root_of_unity(10, 5).conductor() == 1);
    CHECK(CycloNumber::root_of_unity(10, 2).conductor() == 5);
  }

  TEST_CASE("primitive root sums give the Mobius function") {
    for (std::uint64_t n = 1; n <= 40; ++n) {
      CycloNumber s;
      for (std::uint64_t k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) s += CycloNumber::root_of_unity(n, static_cast<long long>(k));
      CAPTURE(n);
      CHECK(s == CycloNumber(mobius(n)));
    }
  }

  TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(7);
    for (std::uint64_t m : {3u, 5u, 7u, 9u, 12u, 15u, 21u}) {
      for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_element(rng, m), b = random_element(rng, m), c = random_element(rng, m);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a - a == CycloNumber(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == CycloNumber(1));
      }
    }
  }

  TEST_CASE("norms are rational and Galois action is a ring map") {
    std::mt19937_64 rng(11);
    for (std::uint64_t m : {5u, 7u, 9u, 20u}) {
      const auto a = random_element(rng, m), b = random_element(rng, m);
      CycloNumber norm(1);
      for (std::uint64_t k = 1; k < m; ++k) {
        if (std::gcd(k, m) != 1) continue;
        const long long kk = static_cast<long long>(k);
        CHECK(galois_apply(a * b, kk, m) == galois_apply(a, kk, m) * galois_apply(b, kk, m));
        norm *= galois_apply(a, kk, m);
      }
      CHECK(norm.is_rational());
    }
    CHECK(complex_conjugate(CycloNumber::root_of_unity(7, 2)) == CycloNumber::root_of_unity(7, 5));
  }

  TEST_CASE("ordering is total and deterministic") {
    const auto a = CycloNumber::root_of_unity(3, 1), b = CycloNumber(2);
    CHECK((a < b) != (b < a));
    CHECK(b < a);  // smaller conductor first
  }

  TEST_CASE("division by zero") { CHECK_THROWS_AS(CycloNumber(0).inverse(), InvalidInput); }
}
