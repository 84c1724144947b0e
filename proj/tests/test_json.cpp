#include <doctest.h>

#include "conductor/catalog.hpp"
#include "conductor/chartab.hpp"
#include "conductor/conductor_finite.hpp"
#include "conductor/error.hpp"
#include "conductor/iwasawa.hpp"
#include "conductor/json_io.hpp"

using namespace conductor;

TEST_SUITE("cli") {
  TEST_CASE("malformed JSON reports where it broke") {
    try {
      parse_json("{\"a\": [1, 2,, 3]}", "x.json");
      FAIL("no exception");
    } catch (const InvalidInput& e) {
      const std::string what = e.what();
      CHECK(what.find("x.json") != std::string::npos);
      CHECK(what.find("13") != std::string::npos);
    }
    CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InvalidInput);
  }

  TEST_CASE("groups from permutations and tables") {
    const auto s3 = group_from_json(parse_json(R"({"perm_gens": [[1,0,2],[1,2,0]], "degree": 3})"));
    CHECK(s3->order() == 6);
    CHECK(!s3->is_abelian());
    const auto c3 = group_from_json(parse_json(R"({"mult_table": [[1,2,0],[2,0,1],[0,1,2]]})"));
    CHECK(c3->order() == 3);
    CHECK(c3->is_abelian());
    const auto back = group_from_json(group_to_json(*s3));
    CHECK(character_table(back).degrees == character_table(s3).degrees);
    CHECK(group_from_json(json("D4"))->order() == 8);
    CHECK_THROWS_AS(group_from_json(parse_json(R"({"mult_table": [[0,1],[0,1]]})")), InvalidInput);
    CHECK_THROWS_AS(group_from_json(parse_json(R"({"perm_gens": [[0,0,1]], "degree": 3})")), InvalidInput);
  }

  TEST_CASE("semidirect data round trip") {
    for (const auto& name : catalog_semidirect_names()) {
      const auto sd = catalog_semidirect(name);
      const auto again = semidirect_from_json(semidirect_to_json(sd));
      CHECK(again.p() == sd.p());
      CHECK(again.n() == sd.n());
      CHECK(again.h().order() == sd.h().order());
      CHECK(central_conductor(again, AbelianLocalField::rational(sd.p())) ==
            central_conductor(sd, AbelianLocalField::rational(sd.p())));
    }
    const json trivial = parse_json(R"({"h": {"perm_gens": [[1,2,0]], "degree": 3}, "alpha_images": [[1,2,0]], "p": 5})");
    CHECK(semidirect_from_json(trivial).n() == 0);
    const json collapse = parse_json(R"({"h": {"perm_gens": [[1,2,0]], "degree": 3}, "alpha_images": [[0,1,2]], "p": 5})");
    CHECK_THROWS_AS(semidirect_from_json(collapse), InvalidInput);
  }

  TEST_CASE("numbers, fields and reports round trip") {
    const auto z = CycloNumber::root_of_unity(9, 2) * CycloNumber(mpq_class(7, 3)) + CycloNumber(1);
    CHECK(cyclo_from_json(cyclo_to_json(z)) == z);
    for (const auto& k : {AbelianLocalField::rational(5), AbelianLocalField::cyclotomic(3, 9),
                          AbelianLocalField::unramified(7, 3), AbelianLocalField::cyclotomic(3, 21)})
      CHECK(field_from_json(field_to_json(k)) == k);
    CHECK(parse_base_field("qp", 3) == AbelianLocalField::rational(3));
    CHECK(parse_base_field("unram:2", 5) == AbelianLocalField::unramified(5, 2));
    CHECK(parse_base_field("cyclo:9", 3) == AbelianLocalField::cyclotomic(3, 9));
    CHECK_THROWS_AS(parse_base_field("cyclo:x", 3), InvalidInput);
    for (const std::string name : {"S3", "C9", "A4"}) {
      const auto t = character_table(catalog_group(name));
      const auto r = jacobinski_conductor(t, AbelianLocalField::rational(3));
      CHECK(report_from_json(report_to_json(r)) == r);
    }
    for (const auto& name : catalog_semidirect_names()) {
      const auto sd = catalog_semidirect(name);
      const auto d = central_conductor(sd, AbelianLocalField::rational(sd.p()));
      CHECK(description_from_json(description_to_json(d)) == d);
    }
  }

  TEST_CASE("presentation matrices in dense and sparse form") {
    const auto g = catalog_group("S3");
    const auto dense = presentation_from_json(parse_json(R"({"a": 1, "b": 1, "entries": [[[3,0,0,0,0,0]]]})"), *g);
    const auto sparse = presentation_from_json(parse_json(R"({"a": 1, "b": 1, "entries": [[[[0, 3]]]]})"), *g);
    CHECK(dense.entries == sparse.entries);
    const auto again = presentation_from_json(presentation_to_json(dense), *g);
    CHECK(again.entries == dense.entries);
    CHECK_THROWS_AS(presentation_from_json(parse_json(R"({"a": 2, "b": 1, "entries": [[[1,0,0,0,0,0]]]})"), *g),
                    InvalidInput);
  }
}
