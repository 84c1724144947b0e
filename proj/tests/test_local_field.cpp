#include <doctest.h>

#include <numeric>
#include <set>

#include "conductor/error.hpp"
#include "conductor/group.hpp"
#include "conductor/local_field.hpp"

using namespace conductor;

namespace {

using u64 = std::uint64_t;

// Different exponent of the fixed field of S in Q_p(zeta_m) from Hilbert's
// formula on lower ramification groups, which restrict to subgroups:
// d(L) = sum_i (|G_i| - 1), d(L/K) = sum_i (|G_i ∩ S| - 1), d(L) = e(L/K) d(K) + d(L/K).
long counting_different(unsigned p, u64 m, const std::vector<u64>& stab) {
  u64 pk = 1, mp = m;
  unsigned k = 0;
  while (mp % p == 0) {
    mp /= p;
    pk *= p;
    ++k;
  }
  std::vector<u64> d;
  for (u64 a = 1; a <= m; ++a) {
    if (std::gcd(a, m) != 1) continue;
    u64 x = 1;
    bool in = false;
    for (u64 t = 0; t < mp + 1 && !in; ++t) {
      in = (a % mp) == (x % mp);
      x = x * p % mp;
    }
    if (mp == 1) in = true;
    if (in) d.push_back(a % m);
  }
  const std::set<u64> s(stab.begin(), stab.end());
  auto ram_group = [&](u64 i) {
    // G_i = {a in D : a = 1 mod m', a = 1 mod p^j} with p^{j-1} <= i < p^j, G_0 = inertia
    u64 mod = mp;
    if (i >= 1) {
      u64 pj = 1;
      while (pj <= i) pj *= p;
      if (pj > pk) return std::vector<u64>{1 % m};
      mod = mp * pj;
    }
    std::vector<u64> out;
    for (u64 a : d)
      if (a % mod == 1 % mod) out.push_back(a);
    return out;
  };
  long dl = 0, dlk = 0;
  std::size_t e_lk = 0;
  for (u64 i = 0;; ++i) {
    const auto gi = ram_group(i);
    if (gi.size() == 1) break;
    std::size_t inter = 0;
    for (u64 a : gi) inter += s.count(a);
    if (i == 0) e_lk = inter;
    dl += static_cast<long>(gi.size()) - 1;
    dlk += static_cast<long>(inter) - 1;
  }
  if (e_lk == 0) e_lk = 1;
  return (dl - dlk) / static_cast<long>(e_lk);
}

}  // namespace

TEST_SUITE("local-fields") {
  TEST_CASE("differents of small cyclotomic fields") {
    CHECK(AbelianLocalField::cyclotomic(3, 3).d_abs() == 1);
    CHECK(AbelianLocalField::cyclotomic(3, 9).d_abs() == 9);
    CHECK(AbelianLocalField::cyclotomic(5, 5).d_abs() == 3);
    CHECK(AbelianLocalField::cyclotomic(5, 25).d_abs() == 35);
    CHECK(AbelianLocalField::unramified(3, 2).d_abs() == 0);
    for (unsigned p : {3u, 5u, 7u})
      for (unsigned k : {1u, 2u, 3u}) {
        const auto f = AbelianLocalField::cyclotomic(p, ipow(p, k));
        CHECK(f.d_abs() == static_cast<long>(ipow(p, k - 1)) * (static_cast<long>(k) * (p - 1) - 1));
        CHECK(f.e() == static_cast<int>(ipow(p, k - 1) * (p - 1)));
      }
  }

  TEST_CASE("conductor-discriminant agrees with the ramification counting oracle") {
    std::size_t fields = 0;
    for (unsigned p : {3u, 5u, 7u}) {
      for (u64 m : {3u, 5u, 7u, 9u, 12u, 13u, 15u, 21u, 25u, 27u, 35u, 45u, 49u, 63u}) {
        if (m % 4 == 2) continue;
        const auto dgroup = local_galois_group(p, m);
        // every cyclic subgroup and every subgroup generated by two elements
        for (std::size_t i = 0; i < dgroup.size(); ++i) {
          for (std::size_t j = i; j < dgroup.size(); j += 3) {
            const AbelianLocalField k(p, m, {dgroup[i], dgroup[j]});
            const auto lifted = k.lift(m);
            CAPTURE(p);
            CAPTURE(m);
            CAPTURE(k.describe());
            CHECK(k.d_abs() == counting_different(p, m, lifted.stab()));
            CHECK(static_cast<std::size_t>(k.degree()) * lifted.stab().size() == dgroup.size());
            ++fields;
          }
        }
      }
    }
    CHECK(fields > 100);
  }

  TEST_CASE("field identity is presentation independent") {
    // Q_3(zeta_7 + zeta_7^2 + zeta_7^4) is the unramified quadratic extension
    const auto z7 = CycloNumber::root_of_unity(7, 1);
    const CycloNumber eta = z7 + z7 * z7 + z7 * z7 * z7 * z7;
    const std::vector<CycloNumber> vals{eta};
    const auto q3 = AbelianLocalField::rational(3);
    CHECK(field_of_values(vals, q3) == AbelianLocalField::unramified(3, 2));
    CHECK(AbelianLocalField::cyclotomic(3, 6) == AbelianLocalField::cyclotomic(3, 3));
    CHECK(AbelianLocalField::cyclotomic(3, 8) == AbelianLocalField::unramified(3, 2));
    CHECK(!(AbelianLocalField::cyclotomic(3, 3) == q3));
    // Q_5(zeta_11) has f = 5 and contains nothing ramified
    const auto f = AbelianLocalField::cyclotomic(5, 11);
    CHECK(f.e() == 1);
    CHECK(f.f() == 5);
  }

  TEST_CASE("containment, adjunction and relative differents") {
    const auto q3 = AbelianLocalField::rational(3);
    const auto k3 = AbelianLocalField::cyclotomic(3, 3);
    const auto k9 = AbelianLocalField::cyclotomic(3, 9);
    CHECK(contains(k9, k3));
    CHECK(!contains(k3, k9));
    CHECK(adjoin_roots_of_unity(k3, 9) == k9);
    CHECK(adjoin_roots_of_unity(q3, 4) == AbelianLocalField::unramified(3, 2));
    const auto rel = relative_inverse_different(k9, k3);
    CHECK(rel.field == k9);
    CHECK(rel.v == -(9 - 3 * 1));
    CHECK(relative_inverse_different(k3, q3).v == -1);
    CHECK_THROWS_AS(relative_inverse_different(k3, k9), InvalidInput);
  }

  TEST_CASE("Galois residues over a base") {
    CHECK(galois_residues(AbelianLocalField::rational(3), 7) == std::vector<u64>{1, 2, 3, 4, 5, 6});
    CHECK(galois_residues(AbelianLocalField::unramified(3, 2), 7).size() == 3);
    CHECK(galois_residues(AbelianLocalField::cyclotomic(3, 3), 3) == std::vector<u64>{1});
  }

  TEST_CASE("bad input") {
    CHECK_THROWS_AS(AbelianLocalField(2, 4, {}), InvalidInput);
    CHECK_THROWS_AS(AbelianLocalField(9, 3, {}), InvalidInput);
    CHECK_THROWS_AS(AbelianLocalField(5, 11, {2}), InvalidInput);  // 2 is not a power of 5 mod 11
  }
}
