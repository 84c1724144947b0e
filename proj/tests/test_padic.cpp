#include <doctest.h>

#include <numeric>
#include <random>

#include "conductor/error.hpp"
#include "conductor/padic.hpp"

using namespace conductor;

namespace {

using Mat = std::vector<std::vector<long>>;

PadicMatrix to_padic(const PadicContext& ctx, const Mat& a) {
  PadicMatrix m(ctx, a.size(), a[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) m.set(i, j, a[i][j]);
  return m;
}

Mat random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  Mat a(r, std::vector<long>(c));
  for (auto& row : a)
    for (auto& x : row) x = d(rng);
  return a;
}

mpz_class det(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  mpq_class d = 1;
  std::vector<std::vector<mpq_class>> q(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i][j] = a[i][j];
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && q[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(q[piv], q[c]);
      d = -d;
    }
    d *= q[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const mpq_class f = q[r][c] / q[c][c];
      for (std::size_t j = c; j < n; ++j) q[r][j] -= f * q[c][j];
    }
  }
  return d.get_num();
}

// Valuation of the gcd of all k x k minors (the k-th determinantal divisor).
int determinantal_divisor(const Mat& a, std::size_t k, unsigned p) {
  const std::size_t r = a.size(), c = a[0].size();
  int best = kInfiniteValuation;
  std::vector<bool> rm(r, false), cm(c, false);
  std::fill(rm.begin(), rm.begin() + static_cast<long>(k), true);
  do {
    std::fill(cm.begin(), cm.end(), false);
    std::fill(cm.begin(), cm.begin() + static_cast<long>(k), true);
    do {
      std::vector<std::vector<mpz_class>> sub;
      for (std::size_t i = 0; i < r; ++i) {
        if (!rm[i]) continue;
        std::vector<mpz_class> row;
        for (std::size_t j = 0; j < c; ++j)
          if (cm[j]) row.push_back(a[i][j]);
        sub.push_back(row);
      }
      best = std::min(best, padic_valuation(det(sub), p));
    } while (std::prev_permutation(cm.begin(), cm.end()));
  } while (std::prev_permutation(rm.begin(), rm.end()));
  return best;
}

}  // namespace

TEST_SUITE("padic-linalg") {
  TEST_CASE("valuations and approximations") {
    CHECK(padic_valuation(mpz_class(54), 3) == 3);
    CHECK(padic_valuation(mpq_class(2, 27), 3) == -3);
    CHECK(padic_valuation(mpz_class(0), 3) == kInfiniteValuation);
    const PadicContext ctx(5, 10);
    const auto x = PadicApprox::of(ctx, 75);
    CHECK(x.valuation() == 2);
    CHECK(x.divide_by_p_power(2).value == 3);
    CHECK(x.divide_by_p_power(2).precision == 8);
    CHECK_THROWS_AS(x.divide_by_p_power(3), InvalidInput);
    CHECK(ctx.from_rational(mpq_class(1, 2)) * 2 % ctx.modulus == 1);
  }

  TEST_CASE("small Smith forms") {
    const PadicContext ctx(3, 30);
    CHECK(smith(to_padic(ctx, {{3, 6}, {1, 5}})) == std::vector<int>{0, 2});
    CHECK(smith(to_padic(ctx, {{9, 0}, {0, 3}})) == std::vector<int>{1, 2});
    CHECK(smith(to_padic(ctx, {{3, 3}, {3, 3}})) == std::vector<int>{1, kInfiniteValuation});
  }

  TEST_CASE("Smith divisors match determinantal divisors") {
    std::mt19937_64 rng(3);
    for (unsigned p : {3u, 5u}) {
      const PadicContext ctx(p, 40);
      for (int trial = 0; trial < 30; ++trial) {
        const std::size_t r = 2 + trial % 3, c = 2 + (trial / 3) % 3;
        Mat a = random_matrix(rng, r, c, 30);
        for (auto& x : a[0]) x *= static_cast<long>(p);
        const auto s = smith(to_padic(ctx, a));
        int acc = 0;
        for (std::size_t k = 1; k <= std::min(r, c); ++k) {
          const int dk = determinantal_divisor(a, k, p);
          if (dk == kInfiniteValuation) {
            CHECK(s[k - 1] == kInfiniteValuation);
            break;
          }
          CHECK(s[k - 1] == dk - acc);
          acc = dk;
        }
      }
    }
  }

  TEST_CASE("HNF is canonical under unimodular column operations") {
    std::mt19937_64 rng(5);
    const PadicContext ctx(3, 30);
    for (int trial = 0; trial < 20; ++trial) {
      const Mat a = random_matrix(rng, 4, 4, 20);
      PadicMatrix m = to_padic(ctx, a);
      const PadicLattice l1 = hnf(m);
      std::uniform_int_distribution<long> d(-5, 5);
      for (int step = 0; step < 10; ++step) {
        const std::size_t i = static_cast<std::size_t>(trial + step) % 4, j = static_cast<std::size_t>(step * 3 + 1) % 4;
        if (i != j) m.add_column_multiple(i, j, d(rng));
        m.swap_columns(0, static_cast<std::size_t>(step) % 4);
        m.scale_column(1, 2);  // a 3-adic unit
      }
      CHECK(hnf(m) == l1);
      // index of the lattice = v_3(det)
      std::vector<std::vector<mpz_class>> z(4, std::vector<mpz_class>(4));
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) z[r][c] = a[r][c];
      const mpz_class dt = det(z);
      if (dt != 0) CHECK(l1.index_valuation() == padic_valuation(dt, 3));
    }
  }

  TEST_CASE("membership, containment and quotient exponent") {
    const PadicContext ctx(3, 30);
    const auto l = hnf(to_padic(ctx, {{3, 0}, {1, 9}}));
    CHECK(lattice_membership(std::vector<mpz_class>{3, 1}, l));
    CHECK(lattice_membership(std::vector<mpz_class>{0, 9}, l));
    CHECK(!lattice_membership(std::vector<mpz_class>{1, 0}, l));
    CHECK(!lattice_membership(std::vector<mpz_class>{0, 3}, l));
    const auto full = hnf(PadicMatrix::identity(ctx, 2));
    CHECK(lattice_contains(full, l));
    CHECK(!lattice_contains(l, full));
    CHECK(quotient_annihilator(full, l) == 3);
    const auto coords = lattice_coordinates(std::vector<mpz_class>{6, 11}, l);
    REQUIRE(coords);
  }

  TEST_CASE("preimage satisfies its defining property and is maximal") {
    std::mt19937_64 rng(9);
    const PadicContext ctx(3, 30);
    for (int trial = 0; trial < 20; ++trial) {
      const Mat a = random_matrix(rng, 3, 3, 12);
      const PadicMatrix m = to_padic(ctx, a);
      for (int s : {1, 2}) {
        const PadicLattice pre = preimage(m, s);
        const mpz_class ps = ctx.power(s);
        for (std::size_t col = 0; col < pre.rank(); ++col)
          for (std::size_t r = 0; r < 3; ++r) {
            mpz_class acc = 0;
            for (std::size_t c = 0; c < 3; ++c) acc += m.at(r, c) * pre.basis().at(c, col);
            CHECK(ctx.reduce(acc) % ps == 0);
          }
        // brute force over residues mod 3^s: count solutions
        long count = 0;
        const long q = s == 1 ? 3 : 9;
        for (long x = 0; x < q; ++x)
          for (long y = 0; y < q; ++y)
            for (long z = 0; z < q; ++z) {
              bool ok = true;
              for (std::size_t r = 0; r < 3 && ok; ++r) ok = ((a[r][0] * x + a[r][1] * y + a[r][2] * z) % q + q) % q == 0;
              count += ok;
            }
        // |pre / q Z^3| equals the number of solutions mod q
        long idx = 0;
        for (int v : pre.pivot_valuations()) idx += std::min(v, s);
        long expect = 1;
        for (long k = 0; k < 3 * s - idx; ++k) expect *= 3;
        CHECK(count == expect);
      }
    }
  }

  TEST_CASE("precision exhaustion is reported") {
    const PadicContext ctx(3, 10);
    CHECK_THROWS_AS(hnf(to_padic(ctx, {{19683, 0}, {0, 1}})), PrecisionExhausted);
  }
}
