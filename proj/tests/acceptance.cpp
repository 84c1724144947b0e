#include <cstdio>
#include <cstdlib>
#include <string>

#include "conductor/error.hpp"
#include "conductor/suites.hpp"

int main(int argc, char** argv) {
  conductor::SuiteOptions opt;
  if (argc > 1) opt.seed = std::strtoull(argv[1], nullptr, 10);
  const char* titles[] = {"formula and brute-force conductors agree",
                          "conductor independent of the maximal order",
                          "Iwasawa worked cases",
                          "regular trace and dual basis",
                          "different of Lambda over R_m",
                          "character degrees of G_m",
                          "central idempotents",
                          "integrality of |H| w / chi(1)",
                          "conductor annihilates Ext^1, sharpness witness",
                          "conductor times Fitting annihilates coker",
                          "character table orthogonality",
                          "cyclotomic different exponents"};
  int failed = 0;
  const auto& names = conductor::suite_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    conductor::SuiteResult r;
    try {
      r = conductor::run_suite(names[i], opt);
    } catch (const std::exception& e) {
      r.name = names[i];
      r.pass = false;
      r.detail = std::string("error: ") + e.what();
    }
    failed += !r.pass;
    std::printf("%s %2zu %-12s %s (%s, %.2f s)\n", r.pass ? "PASS" : "FAIL", i + 1, names[i].c_str(), titles[i],
                r.detail.c_str(), r.seconds);
  }
  return failed == 0 ? 0 : 1;
}
