#include <doctest.h>

#include <map>

#include "conductor/catalog.hpp"
#include "conductor/chartab.hpp"
#include "conductor/group_module.hpp"

using namespace conductor;

namespace {

// |H^1(G, A)| for A = Hom(M, N/p) with p = 3 by enumerating crossed
// homomorphisms through their values on the generators.
long h1_order_by_enumeration(const GroupModule& m, const GroupModule& n) {
  const FiniteGroup& g = *m.group;
  const std::size_t r = m.rank, s = n.rank, dim = r * s;
  auto act = [&](Elem x, const std::vector<int>& phi) {
    // (x.phi) = N_x phi M_{x^-1}, mod 3
    std::vector<int> out(dim, 0);
    const auto& mi = m.mats[g.inv(x)];
    const auto& nx = n.mats[x];
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        mpz_class acc = 0;
        for (std::size_t k = 0; k < s; ++k)
          for (std::size_t l = 0; l < r; ++l) acc += nx[i][k] * phi[k * r + l] * mi[l][j];
        out[i * r + j] = static_cast<int>(mpz_class(((acc % 3) + 3) % 3).get_si());
      }
    return out;
  };
  auto add = [&](std::vector<int> a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < dim; ++i) a[i] = (a[i] + b[i]) % 3;
    return a;
  };
  const auto& gens = g.generators();
  long total = 1;
  for (std::size_t i = 0; i < dim * gens.size(); ++i) total *= 3;
  long cocycles = 0;
  for (long code = 0; code < total; ++code) {
    std::vector<std::vector<int>> gv(gens.size(), std::vector<int>(dim));
    long c = code;
    for (auto& v : gv)
      for (auto& x : v) {
        x = static_cast<int>(c % 3);
        c /= 3;
      }
    // extend by f(x s) = f(x) + x.f(s) along a breadth-first search, then verify
    std::vector<std::vector<int>> f(g.order());
    std::vector<bool> seen(g.order(), false);
    f[0] = std::vector<int>(dim, 0);
    seen[0] = true;
    std::vector<Elem> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const Elem x = queue[qi];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const Elem y = g.mul(x, gens[k]);
        if (seen[y]) continue;
        seen[y] = true;
        f[y] = add(f[x], act(x, gv[k]));
        queue.push_back(y);
      }
    }
    bool ok = true;
    for (Elem x = 0; x < g.order() && ok; ++x)
      for (Elem y = 0; y < g.order() && ok; ++y) ok = f[g.mul(x, y)] == add(f[x], act(x, f[y]));
    cocycles += ok;
  }
  // coboundaries x |-> x.a - a
  std::map<std::vector<std::vector<int>>, int> boundaries;
  long acount = 1;
  for (std::size_t i = 0; i < dim; ++i) acount *= 3;
  for (long code = 0; code < acount; ++code) {
    std::vector<int> a(dim);
    long c = code;
    for (auto& x : a) {
      x = static_cast<int>(c % 3);
      c /= 3;
    }
    std::vector<std::vector<int>> b;
    for (Elem x = 0; x < g.order(); ++x) {
      auto v = act(x, a);
      for (std::size_t i = 0; i < dim; ++i) v[i] = (v[i] - a[i] + 3) % 3;
      b.push_back(v);
    }
    boundaries[b] = 1;
  }
  return cocycles / static_cast<long>(boundaries.size());
}

long order_from_divisors(const std::vector<int>& d) {
  long o = 1;
  for (int v : d)
    for (int i = 0; i < v; ++i) o *= 3;
  return o;
}

}  // namespace

TEST_SUITE("group-module") {
  TEST_CASE("known Ext groups") {
    const PadicContext ctx(3, 30);
    const auto c3 = catalog_group("C3");
    const auto z = GroupModule::trivial(c3);
    CHECK(ext1(z, z.reduced(1), ctx) == std::vector<int>{1});
    CHECK(ext1(z, z.reduced(2), ctx) == std::vector<int>{1});
    CHECK(ext1(z, z, ctx).empty());
    CHECK(ext1(GroupModule::regular(c3), z.reduced(1), ctx).empty());
    const auto s3 = catalog_group("S3");
    const auto t = character_table(s3);
    const auto reps = catalog_representations("S3", t);
    const auto triv = GroupModule::trivial(s3);
    const auto sign = GroupModule::from_representation(s3, reps[1]);
    CHECK(ext1(triv, triv.reduced(1), ctx).empty());
    CHECK(ext1(triv, sign.reduced(1), ctx) == std::vector<int>{1});
  }

  TEST_CASE("Ext^1(M, N/3) against cocycle enumeration") {
    const PadicContext ctx(3, 30);
    for (const std::string name : {"C3", "S3"}) {
      const auto g = catalog_group(name);
      const auto t = character_table(g);
      const auto reps = catalog_representations(name, t);
      std::vector<GroupModule> mods{GroupModule::trivial(g)};
      for (const auto& r : reps)
        if (r.character != 0) mods.push_back(GroupModule::from_representation(g, r));
      for (std::size_t i = 0; i < mods.size(); ++i)
        for (std::size_t j = 0; j < mods.size(); ++j) {
          if (mods[i].rank * mods[j].rank > 4) continue;
          CAPTURE(name);
          CAPTURE(i);
          CAPTURE(j);
          const auto d = ext1(mods[i], mods[j].reduced(1), ctx);
          CHECK(order_from_divisors(d) == h1_order_by_enumeration(mods[i], mods[j]));
        }
    }
  }

  TEST_CASE("modules are representations") {
    for (const std::string name : {"C3", "S3", "D4", "A4"}) {
      const auto g = catalog_group(name);
      const auto t = character_table(g);
      std::vector<GroupModule> mods{GroupModule::trivial(g), GroupModule::regular(g)};
      for (const auto& r : catalog_representations(name, t)) mods.push_back(GroupModule::from_representation(g, r));
      mods.push_back(GroupModule::permutation(g, std::vector<Elem>{0}));
      for (const auto& m : mods) {
        for (Elem x = 0; x < g->order(); ++x)
          for (Elem y = 0; y < g->order(); ++y) {
            IntMatrix prod(m.rank, std::vector<mpz_class>(m.rank, 0));
            for (std::size_t i = 0; i < m.rank; ++i)
              for (std::size_t k = 0; k < m.rank; ++k)
                for (std::size_t j = 0; j < m.rank; ++j) prod[i][j] += m.mats[x][i][k] * m.mats[y][k][j];
            CHECK(prod == m.mats[g->mul(x, y)]);
          }
      }
    }
  }

  TEST_CASE("annihilation by central elements") {
    const PadicContext ctx(3, 30);
    const auto c3 = catalog_group("C3");
    const auto z = GroupModule::trivial(c3);
    CHECK(annihilates_ext1({3, 0, 0}, z, z.reduced(1), ctx));
    CHECK(!annihilates_ext1({1, 0, 0}, z, z.reduced(1), ctx));
    CHECK(annihilates_ext1({1, 1, 1}, z, z.reduced(2), ctx));
  }
}
