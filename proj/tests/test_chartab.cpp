#include <doctest.h>

#include <numeric>

#include "conductor/catalog.hpp"
#include "conductor/chartab.hpp"
#include "conductor/error.hpp"
#include "conductor/kernels.hpp"

using namespace conductor;

namespace {

// Characters of an abelian group as homomorphisms: for Z/n, eta_k(x) = zeta_n^{kx}.
std::vector<std::vector<CycloNumber>> cyclic_characters(std::size_t n) {
  std::vector<std::vector<CycloNumber>> out;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<CycloNumber> row;
    for (std::size_t x = 0; x < n; ++x) row.push_back(CycloNumber::root_of_unity(n, static_cast<long long>(k * x)));
    out.push_back(row);
  }
  return out;
}

}  // namespace

TEST_SUITE("char-table") {
  TEST_CASE("cyclic group C7: trivial row first and eta_k = zeta^k on the generator") {
    const auto g = catalog_group("C7");
    const auto t = character_table(g);
    REQUIRE(t.size() == 7);
    const Elem x = g->generators()[0];
    for (std::size_t c = 0; c < t.classes.count(); ++c) CHECK(t.chars[0][c] == CycloNumber(1));
    // every row is a homomorphism and the rows are all distinct homomorphisms
    std::vector<bool> seen(7, false);
    for (std::size_t r = 0; r < 7; ++r) {
      for (long long k = 0; k < 7; ++k)
        if (t.value(r, x) == CycloNumber::root_of_unity(7, k)) seen[static_cast<std::size_t>(k)] = true;
      for (Elem a = 0; a < 7; ++a)
        for (Elem b = 0; b < 7; ++b) CHECK(t.value(r, g->mul(a, b)) == t.value(r, a) * t.value(r, b));
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](bool s) { return s; }));
  }

  TEST_CASE("abelian tables agree with explicit homomorphisms") {
    for (std::size_t n : {2u, 5u, 8u, 9u}) {
      const auto g = catalog_group("C" + std::to_string(n));
      const auto t = character_table(g);
      // the generator has order n; compare value multisets on powers of it
      const Elem x = g->generators()[0];
      auto explicit_rows = cyclic_characters(n);
      for (std::size_t r = 0; r < t.size(); ++r) {
        std::vector<CycloNumber> row;
        for (std::size_t k = 0; k < n; ++k) row.push_back(t.value(r, g->pow(x, static_cast<long long>(k))));
        const auto it = std::find(explicit_rows.begin(), explicit_rows.end(), row);
        REQUIRE(it != explicit_rows.end());
        explicit_rows.erase(it);
      }
      CHECK(explicit_rows.empty());
    }
  }

  TEST_CASE("S3, D4 and Q8 degrees; D4 and Q8 share a table") {
    CHECK(character_table(catalog_group("S3")).degrees == std::vector<long>{1, 1, 2});
    const auto d4 = character_table(catalog_group("D4"));
    const auto q8 = character_table(catalog_group("Q8"));
    CHECK(d4.degrees == std::vector<long>{1, 1, 1, 1, 2});
    CHECK(q8.degrees == d4.degrees);
    std::vector<std::vector<CycloNumber>> a, b;
    for (std::size_t r = 0; r < 5; ++r) {
      auto ra = d4.chars[r], rb = q8.chars[r];
      std::sort(ra.begin(), ra.end());
      std::sort(rb.begin(), rb.end());
      a.push_back(ra);
      b.push_back(rb);
    }
    CHECK(a == b);
  }

  TEST_CASE("A5 has the golden ratio values") {
    const auto t = character_table(catalog_group("A5"));
    CHECK(t.degrees == std::vector<long>{1, 3, 3, 4, 5});
    const auto z5 = CycloNumber::root_of_unity(5, 1);
    const auto phi = CycloNumber(1) + z5 + galois_apply(z5, 4);  // 1 + 2cos(2pi/5)
    const auto sq5 = CycloNumber(2) * phi - CycloNumber(1);                         // sqrt(5)
    CHECK(sq5 * sq5 == CycloNumber(5));
    bool found = false;
    for (const auto& v : t.chars[1]) found = found || v == phi || v == CycloNumber(1) - phi;
    CHECK(found);
  }

  TEST_CASE("regular character and Galois rows") {
    for (const auto& name : catalog_group_names()) {
      const auto g = catalog_group(name);
      const auto t = character_table(g);
      CAPTURE(name);
      for (std::size_t c = 1; c < t.classes.count(); ++c) {
        CycloNumber s;
        for (std::size_t r = 0; r < t.size(); ++r) s += CycloNumber(t.degrees[r]) * t.chars[r][c];
        CHECK(s == CycloNumber(0));
      }
      for (std::size_t r = 0; r < t.size(); ++r) {
        const std::size_t conj = galois_row(t, r, -1);
        for (std::size_t c = 0; c < t.classes.count(); ++c)
          CHECK(t.chars[conj][c] == complex_conjugate(t.chars[r][c]));
      }
    }
  }

  TEST_CASE("Dixon-Schneider scales to the order-1539 quotient") {
    const auto q = finite_quotient(catalog_semidirect("C19:Z3"), 4);
    const auto t = character_table(q.group);
    long s = 0;
    for (long d : t.degrees) s += d * d;
    CHECK(s == 1539);
    CHECK_THROWS_AS(character_table(q.group, 1000), ResourceError);
  }

  TEST_CASE("alpha orbits and Clifford restriction") {
    for (const auto& name : catalog_semidirect_names()) {
      const auto sd = catalog_semidirect(name);
      const auto ht = character_table(sd.h_ptr());
      const auto perm = alpha_permutation(ht, sd.alpha());
      const auto orbits = alpha_orbits(ht, sd.alpha());
      std::size_t total = 0;
      for (const auto& o : orbits) {
        total += o.members.size();
        CHECK(o.members.size() == o.w);
        CHECK(sd.p_pow_n() % o.w == 0);
        // the permutation cycles through the orbit
        std::size_t x = o.members[0];
        for (std::size_t i = 0; i < o.w; ++i) x = perm[x];
        CHECK(x == o.members[0]);
        for (std::size_t r : o.members) CHECK(ht.degrees[r] == o.eta_degree);
      }
      CHECK(total == ht.size());
    }
  }

  TEST_CASE("class coefficients: OpenMP kernel matches the serial reference") {
    for (const std::string name : {"S4", "A5", "SL23", "C19:C9"}) {
      const auto g = catalog_group(name);
      const auto cc = conjugacy_classes(*g);
      CHECK(class_coefficients(*g, cc) == class_coefficients_serial(*g, cc));
    }
  }
}
