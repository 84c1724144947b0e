#include "conductor/suites.hpp"

#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "conductor/catalog.hpp"
#include "conductor/chartab.hpp"
#include "conductor/conductor_finite.hpp"
#include "conductor/error.hpp"
#include "conductor/fitting.hpp"
#include "conductor/group_module.hpp"
#include "conductor/iwasawa.hpp"
#include "conductor/kernels.hpp"
#include "conductor/local_field.hpp"

namespace conductor {

namespace {

const std::vector<std::string>& split_catalog() {
  static const std::vector<std::string> names{"C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9",
                                              "C3xC3", "S3", "D4", "A4"};
  return names;
}

std::vector<unsigned> primes(const SuiteOptions& opt) {
  if (opt.p) return {*opt.p};
  return {3, 5, 7, 11, 13};
}

PadicContext context_for(const SuiteOptions& opt, unsigned p, std::size_t order) {
  if (opt.precision) return PadicContext(p, *opt.precision);
  return PadicContext::for_group_order(p, order);
}

struct Tally {
  std::size_t cases = 0;
  std::vector<std::string> failures;
  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok) failures.push_back(what);
  }
  bool pass() const { return failures.empty() && cases > 0; }
  std::string detail(const std::string& extra = {}) const {
    std::ostringstream s;
    s << cases << " cases";
    if (!failures.empty()) {
      s << ", failed:";
      for (std::size_t i = 0; i < failures.size() && i < 5; ++i) s << " " << failures[i];
      if (failures.size() > 5) s << " ...";
    }
    if (!extra.empty()) s << ", " << extra;
    return s.str();
  }
};

std::string seconds_str(double s) {
  std::ostringstream o;
  o.precision(3);
  o << s << " s";
  return o.str();
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1
SuiteResult suite_conductor(const SuiteOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  Tally t;
  for (const auto& name : split_catalog()) {
    const auto g = catalog_group(name);
    const CharacterTable tab = character_table(g);
    const auto reps = catalog_representations(name, tab);
    for (unsigned p : primes(opt)) {
      const PadicContext ctx = context_for(opt, p, g->order());
      const auto report = jacobinski_conductor(tab, AbelianLocalField::rational(p));
      const auto formula = formula_conductor_lattice(tab, report, ctx);
      const auto brute = brute_force_conductor(tab, reps, ctx);
      t.check(formula == brute, name + "/p=" + std::to_string(p));
    }
  }
  const double s = since(t0);
  if (s >= 60) t.failures.push_back("runtime over 60 s");
  return {"conductor", t.pass(), t.detail(seconds_str(s)), s};
}

// 2
SuiteResult suite_twist(const SuiteOptions& opt) {
  Tally t;
  for (const auto& name : split_catalog()) {
    const auto g = catalog_group(name);
    const CharacterTable tab = character_table(g);
    const auto reps = catalog_representations(name, tab);
    for (unsigned p : primes(opt)) {
      const PadicContext ctx = context_for(opt, p, g->order());
      const auto base = brute_force_conductor(tab, reps, ctx);
      for (std::uint64_t k = 0; k < 3; ++k) {
        const auto twisted = brute_force_conductor(tab, reps, ctx, opt.seed * 1000 + k);
        t.check(twisted == base, name + "/p=" + std::to_string(p) + "/twist" + std::to_string(k));
      }
    }
  }
  return {"twist", t.pass(), t.detail(), 0};
}

// 3
SuiteResult suite_iwasawa(const SuiteOptions&) {
  Tally t;
  const auto q3 = AbelianLocalField::rational(3);
  {
    const auto d = central_conductor(catalog_semidirect("C7:Z3"), q3);
    bool ok = d.components.size() == 2;
    if (ok) {
      const auto& a = d.components[0];
      const auto& b = d.components[1];
      ok = a.w == 1 && a.field == q3 && a.total_valuation == 0 && b.w == 3 &&
           b.field == AbelianLocalField::unramified(3, 2) && b.total_valuation == 0;
    }
    t.check(ok, "C7:Z3");
  }
  {
    const auto d = central_conductor(catalog_semidirect("C3xZ3"), q3);
    bool ok = d.components.size() == 2;
    if (ok) {
      const auto& a = d.components[0];
      const auto& b = d.components[1];
      ok = a.w == 1 && a.field == q3 && a.total_valuation == 1 && b.w == 1 &&
           b.field == AbelianLocalField::cyclotomic(3, 3) && b.total_valuation == 1;
    }
    t.check(ok, "C3xZ3");
  }
  {
    // n = 0: the description is the finite one for H tensored with Lambda(Gamma)
    const auto d = central_conductor(catalog_semidirect("S3xZ3"), q3);
    const auto finite = jacobinski_conductor(character_table(catalog_group("S3")), q3);
    std::multiset<std::tuple<long, int, int, long>> lhs, rhs;
    for (const auto& c : d.components) {
      lhs.insert({c.chi_degree, c.field.e(), c.field.f(), c.total_valuation});
    }
    for (const auto& c : finite.components) rhs.insert({c.degree, c.field.e(), c.field.f(), c.valuation});
    t.check(d.n == 0 && lhs == rhs, "S3xZ3");
  }
  return {"iwasawa", t.pass(), t.detail(), 0};
}

// 4
SuiteResult suite_trace(const SuiteOptions&) {
  Tally t;
  for (const auto& name : catalog_semidirect_names()) {
    const auto sd = catalog_semidirect(name);
    if (sd.n() > 2) continue;
    for (unsigned m = sd.n(); m <= sd.n() + 2; ++m) {
      const bool ok = dual_basis_check(sd, m);
      const auto law = truncated_law(sd, m);
      t.check(ok && regular_trace(law) == regular_trace_serial(law), name + "/m=" + std::to_string(m));
    }
  }
  return {"trace", t.pass(), t.detail(), 0};
}

// 5
SuiteResult suite_different(const SuiteOptions&) {
  Tally t;
  const std::vector<std::pair<std::string, AbelianLocalField>> fields{
      {"Q3", AbelianLocalField::rational(3)},
      {"Q3(zeta3)", AbelianLocalField::cyclotomic(3, 3)},
      {"unram2", AbelianLocalField::unramified(3, 2)}};
  for (const auto& [label, k] : fields)
    for (unsigned n : {0u, 1u})
      for (unsigned m = n; m <= n + 2; ++m)
        t.check(lambda_gamma_different_check(k, n, m),
                label + "/n=" + std::to_string(n) + "/m=" + std::to_string(m));
  return {"different", t.pass(), t.detail(), 0};
}

// 6
SuiteResult suite_degree(const SuiteOptions&) {
  Tally t;
  for (const auto& name : catalog_semidirect_names()) {
    const auto sd = catalog_semidirect(name);
    const CharacterTable ht = character_table(sd.h_ptr());
    const auto orbits = alpha_orbits(ht, sd.alpha());
    std::map<std::size_t, std::size_t> orbit_of;
    for (std::size_t i = 0; i < orbits.size(); ++i)
      for (std::size_t r : orbits[i].members) orbit_of[r] = i;
    for (unsigned m = sd.n(); m <= sd.n() + 2; ++m) {
      const FiniteQuotient q = finite_quotient(sd, m);
      const CharacterTable gt = character_table(q.group);
      bool ok = true;
      std::size_t expected = 0;
      for (const auto& o : orbits) expected += q.gamma_order / o.w;
      ok = ok && gt.size() == expected;
      for (std::size_t row = 0; row < gt.size() && ok; ++row) {
        const auto cons = restrict_and_decompose(gt, row, ht);
        std::vector<std::size_t> rows;
        for (const auto& c : cons) {
          if (c.multiplicity != 1) ok = false;
          rows.push_back(c.row);
        }
        std::sort(rows.begin(), rows.end());
        if (!ok || rows.empty()) {
          ok = false;
          break;
        }
        const auto& o = orbits[orbit_of[rows[0]]];
        ok = rows == o.members && gt.degrees[row] == static_cast<long>(o.w) * o.eta_degree;
      }
      t.check(ok, name + "/m=" + std::to_string(m));
    }
  }
  return {"degree", t.pass(), t.detail(), 0};
}

// 7
SuiteResult suite_idempotent(const SuiteOptions&) {
  Tally t;
  for (const auto& name : catalog_semidirect_names()) {
    const auto sd = catalog_semidirect(name);
    const auto qp = AbelianLocalField::rational(sd.p());
    const auto e = splitting_field_bound(sd, qp).field;
    for (unsigned m = sd.n(); m <= sd.n() + 2; ++m) {
      t.check(verify_idempotents(sd, qp, m).ok(), name + "/Qp/m=" + std::to_string(m));
      t.check(verify_idempotents(sd, e, m).ok(), name + "/E/m=" + std::to_string(m));
    }
  }
  return {"idempotent", t.pass(), t.detail(), 0};
}

// 8
SuiteResult suite_integrality(const SuiteOptions&) {
  Tally t;
  for (const auto& name : catalog_semidirect_names()) {
    const auto sd = catalog_semidirect(name);
    const auto qp = AbelianLocalField::rational(sd.p());
    const auto e = splitting_field_bound(sd, qp).field;
    const long h = static_cast<long>(sd.h().order());
    for (const auto& k : {qp, e}) {
      for (const auto& c : chi_classes(sd, k)) {
        mpq_class q(h * static_cast<long>(c.w), c.chi_degree);
        q.canonicalize();
        bool ok = padic_valuation(q, sd.p()) >= 0 && q == c.multiplier;
        if (c.s_chi)
          ok = ok && padic_valuation(mpz_class(c.chi_degree), sd.p()) <=
                         padic_valuation(mpz_class(h * static_cast<long>(c.w)), sd.p());
        t.check(ok, name + "/" + k.describe());
      }
    }
  }
  return {"integrality", t.pass(), t.detail(), 0};
}

// 9
SuiteResult suite_ext(const SuiteOptions&) {
  Tally t;
  std::size_t sharp = 0;
  for (const std::string name : {"C3", "S3"}) {
    const auto g = catalog_group(name);
    const CharacterTable tab = character_table(g);
    const auto reps = catalog_representations(name, tab);
    const PadicContext ctx = PadicContext::for_group_order(3, g->order());
    const auto report = jacobinski_conductor(tab, AbelianLocalField::rational(3));
    const auto lattice = formula_conductor_lattice(tab, report, ctx);
    std::vector<GroupModule> ms{GroupModule::trivial(g), GroupModule::regular(g)};
    for (const auto& r : reps)
      if (r.character != 0) ms.push_back(GroupModule::from_representation(g, r));
    const Elem s = g->generators()[0];
    const std::vector<Elem> gen{s};
    ms.push_back(GroupModule::permutation(g, subgroup_closure(*g, gen)));
    std::vector<GroupModule> ns{GroupModule::trivial(g, 1), GroupModule::trivial(g, 2), GroupModule::trivial(g)};
    for (const auto& r : reps)
      if (r.character != 0) {
        ns.push_back(GroupModule::from_representation(g, r, 1));
        ns.push_back(GroupModule::from_representation(g, r));
      }
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = 0; j < ns.size(); ++j)
        t.check(annihilation_check(tab, lattice, ms[i], ns[j], ctx),
                name + "/M" + std::to_string(i) + "/N" + std::to_string(j));
    for (const auto& r : reps)
      if (roggenkamp_probe(tab, report, r, ns, ctx)) ++sharp;
  }
  if (sharp == 0) t.failures.push_back("no sharpness witness");
  return {"ext", t.pass(), t.detail(std::to_string(sharp) + " sharpness witnesses"), 0};
}

// 10
SuiteResult suite_fitting(const SuiteOptions& opt) {
  Tally t;
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<long> coeff(-2, 2);
  for (const auto& name : split_catalog()) {
    const SplitGroup sg = split_group(name);
    const FiniteGroup& g = *sg.group;
    for (unsigned p : primes(opt)) {
      if (p > 7 && !opt.p) continue;
      const PadicContext ctx = context_for(opt, p, g.order());
      const auto report = jacobinski_conductor(sg.table, AbelianLocalField::rational(p));
      std::vector<PresentationMatrix> hs;
      hs.push_back({1, 1, {{gr_basis(g, 0, static_cast<long>(p))}}});
      GroupRingElement d = gr_basis(g, 0);
      d[g.generators()[0]] -= 1;
      hs.push_back({1, 1, {{d}}});
      for (auto [a, b] : {std::pair<std::size_t, std::size_t>{2, 1}, {2, 2}, {3, 2}, {1, 2}}) {
        PresentationMatrix h{a, b, {}};
        for (std::size_t i = 0; i < a; ++i) {
          std::vector<GroupRingElement> row;
          for (std::size_t j = 0; j < b; ++j) {
            GroupRingElement e(g.order(), 0);
            for (auto& c : e) c = coeff(rng);
            if (i == j) e[0] += static_cast<long>(p);
            row.push_back(std::move(e));
          }
          h.entries.push_back(std::move(row));
        }
        hs.push_back(std::move(h));
      }
      for (std::size_t k = 0; k < hs.size(); ++k) {
        const std::string label = name + "/p=" + std::to_string(p) + "/h" + std::to_string(k);
        t.check(fitting_annihilation_check(sg, report, hs[k], ctx), label);
        if (g.is_abelian()) t.check(commutative_degeneration_check(sg, hs[k]), label + "/minors");
      }
    }
  }
  return {"fitting", t.pass(), t.detail(), 0};
}

// 11
SuiteResult suite_chartab(const SuiteOptions&) {
  const auto t0 = std::chrono::steady_clock::now();
  Tally t;
  for (const auto& name : catalog_group_names()) {
    const auto g = catalog_group(name);
    if (g->order() > 200) continue;
    const CharacterTable tab = character_table(g);
    const std::size_t r = tab.classes.count();
    const auto sizes = tab.classes.sizes();
    bool ok = tab.size() == r;
    long sum_sq = 0;
    for (long d : tab.degrees) sum_sq += d * d;
    ok = ok && sum_sq == static_cast<long>(g->order());
    for (std::size_t i = 0; i < tab.size() && ok; ++i)
      for (std::size_t j = 0; j < tab.size() && ok; ++j)
        ok = inner_product(tab, tab.chars[i], tab.chars[j]) == CycloNumber(i == j ? 1 : 0);
    for (std::size_t c = 0; c < r && ok; ++c)
      for (std::size_t d = 0; d < r && ok; ++d) {
        CycloNumber s;
        for (std::size_t i = 0; i < tab.size(); ++i) s += tab.chars[i][c] * tab.chars[i][tab.inverse_class[d]];
        ok = s == CycloNumber(c == d ? static_cast<long>(g->order() / sizes[c]) : 0);
      }
    t.check(ok, name);
  }
  const double s = since(t0);
  if (s >= 30) t.failures.push_back("runtime over 30 s");
  if (t.cases < 15) t.failures.push_back("fewer than 15 groups");
  return {"chartab", t.pass(), t.detail(seconds_str(s)), s};
}

// 12
SuiteResult suite_exponents(const SuiteOptions&) {
  Tally t;
  for (unsigned p : {3u, 5u})
    for (unsigned k : {1u, 2u}) {
      const long closed = static_cast<long>(ipow(p, k - 1)) * (static_cast<long>(k) * (p - 1) - 1);
      const auto f = AbelianLocalField::cyclotomic(p, ipow(p, k));
      t.check(f.d_abs() == closed && different_exponent(f) == closed,
              "p=" + std::to_string(p) + "/k=" + std::to_string(k));
    }
  return {"exponents", t.pass(), t.detail(), 0};
}

using SuiteFn = SuiteResult (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"conductor", suite_conductor}, {"twist", suite_twist},         {"iwasawa", suite_iwasawa},
      {"trace", suite_trace},         {"different", suite_different}, {"degree", suite_degree},
      {"idempotent", suite_idempotent}, {"integrality", suite_integrality}, {"ext", suite_ext},
      {"fitting", suite_fitting},     {"chartab", suite_chartab},     {"exponents", suite_exponents}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : registry()) v.push_back(n);
    return v;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  for (const auto& [n, f] : registry()) {
    if (n != name) continue;
    const auto t0 = std::chrono::steady_clock::now();
    SuiteResult r = f(opt);
    r.name = n;
    r.seconds = since(t0);
    return r;
  }
  throw InvalidInput("unknown suite " + name);
}

std::vector<SuiteResult> run_all_suites(const SuiteOptions& opt) {
  std::vector<SuiteResult> out;
  for (const auto& n : suite_names()) out.push_back(run_suite(n, opt));
  return out;
}

}  // namespace conductor
