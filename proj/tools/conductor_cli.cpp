#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "conductor/catalog.hpp"
#include "conductor/chartab.hpp"
#include "conductor/conductor_finite.hpp"
#include "conductor/error.hpp"
#include "conductor/fitting.hpp"
#include "conductor/iwasawa.hpp"
#include "conductor/json_io.hpp"
#include "conductor/suites.hpp"

using namespace conductor;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kInputError = 2, kPrecision = 3 };

struct Config {
  unsigned p = 3;
  std::optional<int> precision;
  std::string base = "qp";
  std::string group, h, alpha, sd, matrix, suite = "all";
  std::optional<unsigned> level;
  std::string format = "json";
  std::uint64_t seed = 1;
  bool verify = false;
  bool p_given = false;
};

void check_prime(unsigned p) {
  if (p == 2 || !is_prime(p)) throw InvalidInput("--p must be an odd prime, got " + std::to_string(p));
}

std::optional<int> effective_precision(const Config& c) {
  std::optional<int> prec = c.precision;
  if (!prec) {
    if (const char* env = std::getenv("CONDUCTOR_PRECISION")) {
      try {
        prec = std::stoi(env);
      } catch (const std::exception&) {
        throw InvalidInput(std::string("CONDUCTOR_PRECISION is not an integer: ") + env);
      }
    }
  }
  if (prec && *prec <= kDefaultGuard)
    throw InvalidInput("precision must exceed the guard of " + std::to_string(kDefaultGuard) + " digits");
  return prec;
}

PadicContext context_for(const Config& c, std::size_t order) {
  if (auto prec = effective_precision(c)) return PadicContext(c.p, *prec);
  return PadicContext::for_group_order(c.p, order);
}

// A catalog name or a group JSON file; the name is kept for the representation catalog.
std::pair<std::string, std::shared_ptr<const FiniteGroup>> load_group(const std::string& arg) {
  if (std::filesystem::exists(arg)) return {"", group_from_json(read_json_file(arg))};
  return {arg, catalog_group(arg)};
}

std::string cell(const json& v) {
  if (v.is_object() && v.contains("name")) return v["name"].get<std::string>();
  if (v.is_object() && v.contains("num")) return v["num"].get<std::string>() + "/" + v["den"].get<std::string>();
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Human view derived from the JSON report: scalars as key/value lines, arrays
// of objects as aligned tables of their scalar fields.
void print_table(const json& j, std::ostream& out, const std::string& indent = "") {
  if (j.is_array()) {
    if (j.empty() || !j[0].is_object()) {
      out << indent << j.dump() << "\n";
      return;
    }
    std::vector<std::string> cols;
    for (auto it = j[0].begin(); it != j[0].end(); ++it)
      if (!it.value().is_array() || it.value().size() <= 8) cols.push_back(it.key());
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width;
    for (const auto& c : cols) width.push_back(c.size());
    for (const auto& row : j) {
      std::vector<std::string> r;
      for (std::size_t k = 0; k < cols.size(); ++k) {
        r.push_back(row.contains(cols[k]) ? cell(row[cols[k]]) : "");
        width[k] = std::max(width[k], r.back().size());
      }
      cells.push_back(std::move(r));
    }
    auto line = [&](const std::vector<std::string>& r) {
      out << indent;
      for (std::size_t k = 0; k < r.size(); ++k) out << r[k] << std::string(width[k] - r[k].size() + 2, ' ');
      out << "\n";
    };
    line(cols);
    for (const auto& r : cells) line(r);
    return;
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    if (v.is_array() && !v.empty() && v[0].is_object()) {
      out << indent << it.key() << ":\n";
      print_table(v, out, indent + "  ");
    } else if (v.is_object() && !v.contains("name") && !v.contains("num")) {
      out << indent << it.key() << ":\n";
      print_table(v, out, indent + "  ");
    } else {
      out << indent << it.key() << ": " << cell(v) << "\n";
    }
  }
}

void emit(const Config& c, const json& j) {
  if (c.format == "table")
    print_table(j, std::cout);
  else
    std::cout << j.dump(2) << "\n";
}

int run_chartab(const Config& c) {
  const auto [name, g] = load_group(c.group);
  emit(c, table_to_json(character_table(g)));
  return kOk;
}

int run_finite(const Config& c) {
  check_prime(c.p);
  const auto [name, g] = load_group(c.group);
  const CharacterTable t = character_table(g);
  const AbelianLocalField k = parse_base_field(c.base, c.p);
  const auto report = jacobinski_conductor(t, k);
  json out = report_to_json(report);
  int code = kOk;
  if (c.verify) {
    const PadicContext ctx = context_for(c, g->order());
    const auto reps = catalog_representations(name, t);
    const auto formula = formula_conductor_lattice(t, report, ctx);
    bool ok = formula == brute_force_conductor(t, reps, ctx);
    for (std::uint64_t s = 0; s < 3 && ok; ++s) ok = formula == brute_force_conductor(t, reps, ctx, c.seed * 1000 + s);
    out["verified"] = ok;
    if (!ok) code = kVerifyFailed;
  }
  emit(c, out);
  return code;
}

int run_iwasawa(const Config& c) {
  std::optional<SemidirectData> sd;
  if (!c.sd.empty()) {
    sd = std::filesystem::exists(c.sd) ? semidirect_from_json(read_json_file(c.sd)) : catalog_semidirect(c.sd);
    if (c.p_given && c.p != sd->p()) throw InvalidInput("--p differs from the prime of the semidirect data");
  } else {
    if (c.h.empty() || c.alpha.empty()) throw InvalidInput("conductor iwasawa needs --h and --alpha, or --sd");
    check_prime(c.p);
    const json hj = std::filesystem::exists(c.h) ? read_json_file(c.h) : json(c.h);
    auto h = group_from_json(hj);
    sd.emplace(h, alpha_from_json(hj, h, read_json_file(c.alpha)), c.p);
  }
  const AbelianLocalField k = parse_base_field(c.base, sd->p());
  json out = description_to_json(central_conductor(*sd, k));
  int code = kOk;
  if (c.level) {
    const bool dual = dual_basis_check(*sd, *c.level);
    const auto idem = verify_idempotents(*sd, k, *c.level);
    out["level_checks"] = {{"level", *c.level}, {"dual_basis", dual}, {"idempotents", idem.ok()}};
    if (!dual || !idem.ok()) code = kVerifyFailed;
  }
  emit(c, out);
  return code;
}

int run_verify(const Config& c) {
  SuiteOptions opt;
  if (c.p_given) {
    check_prime(c.p);
    opt.p = c.p;
  }
  opt.seed = c.seed;
  opt.precision = effective_precision(c);
  std::vector<SuiteResult> results;
  if (c.suite == "all")
    results = run_all_suites(opt);
  else
    results.push_back(run_suite(c.suite, opt));
  json arr = json::array();
  bool ok = true;
  for (const auto& r : results) {
    arr.push_back({{"suite", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
    ok = ok && r.pass;
  }
  emit(c, {{"suites", arr}, {"pass", ok}});
  return ok ? kOk : kVerifyFailed;
}

int run_fitting(const Config& c) {
  check_prime(c.p);
  const auto [name, g] = load_group(c.group);
  SplitGroup sg;
  if (name.empty()) {
    sg.group = g;
    sg.table = character_table(g);
    const auto reps = catalog_representations("", sg.table);
    sg.images.resize(sg.table.size());
    sg.dims.resize(sg.table.size());
    for (const auto& r : reps) {
      sg.images[r.character] = representation_images(*g, r);
      sg.dims[r.character] = r.dim;
    }
  } else {
    sg = split_group(name);
  }
  const PresentationMatrix h = presentation_from_json(read_json_file(c.matrix), *sg.group);
  const auto report = jacobinski_conductor(sg.table, AbelianLocalField::rational(c.p));
  const bool ok = fitting_annihilation_check(sg, report, h, context_for(c, g->order()));
  json out = fitting_to_json(fitting_generators(sg, h));
  out["annihilates"] = ok;
  emit(c, out);
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Central conductors of p-adic group rings and Iwasawa algebras"};
  app.require_subcommand(1);
  Config c;
  app.add_option("--seed", c.seed, "seed for randomized probes");
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "table"}));

  auto add_common = [&](CLI::App* s) {
    s->add_option("--precision", c.precision, "p-adic working precision (digits)");
    s->add_option("--seed", c.seed, "seed for randomized probes");
    s->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "table"}));
  };
  auto add_p = [&](CLI::App* s, bool required) {
    auto* o = s->add_option("--p", c.p, "odd prime");
    if (required) o->required();
  };

  auto* chartab = app.add_subcommand("chartab", "character table of a group");
  chartab->add_option("--group", c.group, "catalog name or group JSON file")->required();
  add_common(chartab);

  auto* conductor = app.add_subcommand("conductor", "central conductor");
  conductor->require_subcommand(1);
  auto* finite = conductor->add_subcommand("finite", "conductor of Z_p[G] over o_K");
  finite->add_option("--group", c.group, "catalog name or group JSON file")->required();
  add_p(finite, true);
  finite->add_option("--base", c.base, "qp, unram:f, cyclo:m or field JSON");
  finite->add_flag("--verify", c.verify, "compare with the brute-force maximal-order computation");
  add_common(finite);

  auto* iwasawa = conductor->add_subcommand("iwasawa", "conductor of o[[H x| Gamma]]");
  iwasawa->set_help_flag("--help", "print this help message and exit");
  iwasawa->add_option("--h", c.h, "group JSON file or catalog name for H");
  iwasawa->add_option("--alpha", c.alpha, "alpha_images JSON file");
  iwasawa->add_option("--sd", c.sd, "semidirect JSON file or catalog name");
  add_p(iwasawa, false);
  iwasawa->add_option("--base", c.base, "qp, unram:f, cyclo:m or field JSON");
  iwasawa->add_option("--level", c.level, "also check the level-m idempotents and dual basis");
  add_common(iwasawa);

  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("--suite", c.suite, "suite name or all")
      ->check(CLI::IsMember([] {
        auto v = suite_names();
        v.push_back("all");
        return v;
      }()));
  add_p(verify, false);
  add_common(verify);

  auto* fitting = app.add_subcommand("fitting", "Fitting generators and annihilation");
  fitting->add_option("--group", c.group, "catalog name or group JSON file")->required();
  add_p(fitting, true);
  fitting->add_option("--matrix", c.matrix, "presentation matrix JSON file")->required();
  add_common(fitting);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }
  for (auto* s : {finite, iwasawa, verify, fitting})
    if (s->parsed() && s->get_option("--p")->count() > 0) c.p_given = true;

  try {
    effective_precision(c);
    if (chartab->parsed()) return run_chartab(c);
    if (finite->parsed()) return run_finite(c);
    if (iwasawa->parsed()) return run_iwasawa(c);
    if (verify->parsed()) return run_verify(c);
    if (fitting->parsed()) return run_fitting(c);
  } catch (const PrecisionExhausted& e) {
    std::cerr << "precision exhausted: " << e.what() << "\n";
    return kPrecision;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const json::exception& e) {
    std::cerr << "error: bad JSON input: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
