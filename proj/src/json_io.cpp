#include "conductor/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "conductor/catalog.hpp"
#include "conductor/error.hpp"

namespace conductor {

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(origin + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

std::shared_ptr<const FiniteGroup> group_from_json(const json& j) {
  if (j.is_string()) return catalog_group(j.get<std::string>());
  if (j.contains("perm_gens")) {
    const auto gens = j.at("perm_gens").get<std::vector<std::vector<std::uint32_t>>>();
    const auto degree = j.at("degree").get<std::uint32_t>();
    return std::make_shared<FiniteGroup>(FiniteGroup::from_permutations(gens, degree));
  }
  if (j.contains("mult_table"))
    return std::make_shared<FiniteGroup>(FiniteGroup::from_table(j.at("mult_table").get<std::vector<std::vector<Elem>>>()));
  throw InvalidInput("group JSON needs perm_gens/degree or mult_table");
}

json group_to_json(const FiniteGroup& g) {
  if (!g.permutations().empty()) {
    json gens = json::array();
    for (Elem s : g.generators()) gens.push_back(g.permutations()[s]);
    return {{"perm_gens", gens}, {"degree", g.permutations()[0].size()}};
  }
  std::vector<std::vector<Elem>> table(g.order(), std::vector<Elem>(g.order()));
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) table[a][b] = g.mul(a, b);
  return {{"mult_table", table}};
}

GroupAutomorphism alpha_from_json(const json& group_json, std::shared_ptr<const FiniteGroup> h,
                                  const json& alpha_images) {
  const json& imgs = alpha_images.is_object() ? alpha_images.at("alpha_images") : alpha_images;
  if (!group_json.is_object() || group_json.contains("perm_gens")) {
    // images of the perm_gens, as permutations
    const auto& perms = h->permutations();
    if (perms.empty()) throw InvalidInput("alpha_images as permutations need a permutation group");
    auto index_of = [&](const std::vector<std::uint32_t>& s) -> Elem {
      for (Elem x = 0; x < perms.size(); ++x)
        if (perms[x] == s) return x;
      throw InvalidInput("alpha image is not an element of H");
    };
    const auto src = group_json.is_object() ? group_json.at("perm_gens").get<std::vector<std::vector<std::uint32_t>>>()
                                            : [&] {
                                                std::vector<std::vector<std::uint32_t>> v;
                                                for (Elem s : h->generators()) v.push_back(perms[s]);
                                                return v;
                                              }();
    const auto dst = imgs.get<std::vector<std::vector<std::uint32_t>>>();
    if (src.size() != dst.size()) throw InvalidInput("alpha_images length differs from perm_gens");
    std::vector<Elem> gen_images;
    for (Elem s : h->generators()) {
      std::size_t k = 0;
      while (k < src.size() && index_of(src[k]) != s) ++k;
      gen_images.push_back(index_of(dst[k]));
    }
    return GroupAutomorphism(h, extend_homomorphism(*h, *h, gen_images));
  }
  const auto table = group_json.at("mult_table").get<std::vector<std::vector<Elem>>>();
  const auto old_imgs = imgs.get<std::vector<Elem>>();
  const std::size_t n = table.size();
  if (old_imgs.size() != n) throw InvalidInput("alpha_images must list the image of every element");
  std::size_t e = 0;
  for (e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t b = 0; b < n && ok; ++b) ok = table[e][b] == b && table[b][e] == b;
    if (ok) break;
  }
  // same relabelling as FiniteGroup::from_table: swap identity and 0
  auto relabel = [e](Elem x) -> Elem { return x == e ? 0 : (x == 0 ? static_cast<Elem>(e) : x); };
  std::vector<Elem> images(n);
  for (Elem x = 0; x < n; ++x) {
    if (old_imgs[x] >= n) throw InvalidInput("alpha image out of range");
    images[relabel(x)] = relabel(old_imgs[x]);
  }
  return GroupAutomorphism(h, std::move(images));
}

SemidirectData semidirect_from_json(const json& j) {
  if (j.is_string()) return catalog_semidirect(j.get<std::string>());
  const json& hj = j.at("h");
  auto h = group_from_json(hj);
  return SemidirectData(h, alpha_from_json(hj, h, j.at("alpha_images")), j.at("p").get<unsigned>());
}

json semidirect_to_json(const SemidirectData& sd) {
  const FiniteGroup& h = sd.h();
  json out{{"h", group_to_json(h)}, {"p", sd.p()}, {"n", sd.n()}};
  if (!h.permutations().empty()) {
    json imgs = json::array();
    for (Elem s : h.generators()) imgs.push_back(h.permutations()[sd.alpha()(s)]);
    out["alpha_images"] = imgs;
  } else {
    out["alpha_images"] = sd.alpha().images();
  }
  return out;
}

json cyclo_to_json(const CycloNumber& x) {
  json c = json::array();
  for (const auto& q : x.coeffs()) c.push_back(q.get_str());
  return {{"conductor", x.conductor()}, {"coeffs", c}};
}

CycloNumber cyclo_from_json(const json& j) {
  if (j.is_number_integer()) return CycloNumber(j.get<long>());
  std::vector<mpq_class> c;
  for (const auto& s : j.at("coeffs")) {
    mpq_class q;
    if (q.set_str(s.get<std::string>(), 10) != 0) throw InvalidInput("bad rational " + s.get<std::string>());
    q.canonicalize();
    c.push_back(q);
  }
  const auto m = j.at("conductor").get<std::uint64_t>();
  if (c.size() != euler_phi(m)) throw InvalidInput("coefficient count differs from phi(conductor)");
  return CycloNumber::from_power_basis(m, c);
}

json field_to_json(const AbelianLocalField& k) {
  return {{"p", k.p()},         {"m", k.m()}, {"stab_gens", k.stab_generators()},
          {"e", k.e()},         {"f", k.f()}, {"d_abs", k.d_abs()},
          {"name", k.describe()}};
}

AbelianLocalField field_from_json(const json& j) {
  return AbelianLocalField(j.at("p").get<unsigned>(), j.at("m").get<std::uint64_t>(),
                           j.value("stab_gens", std::vector<std::uint64_t>{}));
}

AbelianLocalField parse_base_field(const std::string& spec, unsigned p) {
  if (spec == "qp") return AbelianLocalField::rational(p);
  auto number_after = [&](std::size_t pos) {
    try {
      return std::stoull(spec.substr(pos));
    } catch (const std::exception&) {
      throw InvalidInput("bad base field " + spec);
    }
  };
  if (spec.rfind("unram:", 0) == 0) return AbelianLocalField::unramified(p, static_cast<unsigned>(number_after(6)));
  if (spec.rfind("cyclo:", 0) == 0) return AbelianLocalField::cyclotomic(p, number_after(6));
  if (std::filesystem::exists(spec)) {
    AbelianLocalField k = field_from_json(read_json_file(spec));
    if (k.p() != p) throw InvalidInput("base field prime differs from --p");
    return k;
  }
  throw InvalidInput("unknown base field " + spec + " (use qp, unram:f, cyclo:m or a JSON file)");
}

json table_to_json(const CharacterTable& t) {
  json classes = json::array();
  const auto reps = t.classes.reps();
  const auto sizes = t.classes.sizes();
  for (std::size_t c = 0; c < t.classes.count(); ++c) classes.push_back({{"rep", reps[c]}, {"size", sizes[c]}});
  json rows = json::array();
  for (std::size_t r = 0; r < t.size(); ++r) {
    json vals = json::array();
    for (const auto& v : t.chars[r]) vals.push_back(cyclo_to_json(v));
    rows.push_back({{"degree", t.degrees[r]}, {"values", vals}});
  }
  return {{"order", t.group->order()}, {"exponent", t.exponent}, {"classes", classes}, {"characters", rows}};
}

namespace {

json mpq_json(const mpq_class& q, unsigned p) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}, {"vp", padic_valuation(q, p)}};
}

mpq_class mpq_from(const json& j) {
  mpq_class q(mpz_class(j.at("num").get<std::string>()), mpz_class(j.at("den").get<std::string>()));
  q.canonicalize();
  return q;
}

json opt_json(const std::optional<long>& x) { return x ? json(*x) : json(nullptr); }
std::optional<long> opt_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<long>();
}

}  // namespace

json report_to_json(const FiniteConductorReport& r) {
  json comps = json::array();
  for (const auto& c : r.components)
    comps.push_back({{"rows", c.rows},
                     {"degree", c.degree},
                     {"field", field_to_json(c.field)},
                     {"multiplier", c.multiplier.get_str()},
                     {"multiplier_vp", c.multiplier_vp},
                     {"invdiff_v", c.invdiff_v},
                     {"valuation", c.valuation}});
  return {{"p", r.p}, {"base", field_to_json(r.base)}, {"group_order", r.group_order}, {"components", comps}};
}

FiniteConductorReport report_from_json(const json& j) {
  FiniteConductorReport r;
  r.p = j.at("p").get<unsigned>();
  r.base = field_from_json(j.at("base"));
  r.group_order = j.at("group_order").get<std::size_t>();
  for (const auto& cj : j.at("components")) {
    FiniteComponent c;
    c.rows = cj.at("rows").get<std::vector<std::size_t>>();
    c.degree = cj.at("degree").get<long>();
    c.field = field_from_json(cj.at("field"));
    c.multiplier = mpz_class(cj.at("multiplier").get<std::string>());
    c.multiplier_vp = cj.at("multiplier_vp").get<int>();
    c.invdiff_v = cj.at("invdiff_v").get<long>();
    c.valuation = cj.at("valuation").get<long>();
    r.components.push_back(std::move(c));
  }
  return r;
}

json description_to_json(const ConductorDescription& d) {
  json comps = json::array();
  for (const auto& c : d.components) {
    json orbits = json::array();
    for (const auto& o : c.orbits) orbits.push_back({{"members", o.members}, {"w", o.w}, {"eta_degree", o.eta_degree}});
    comps.push_back({{"w", c.w},
                     {"eta_degree", c.eta_degree},
                     {"chi_degree", c.chi_degree},
                     {"field", field_to_json(c.field)},
                     {"multiplier", mpq_json(c.multiplier, d.p)},
                     {"invdiff_v", c.invdiff.v},
                     {"invdiff_field", field_to_json(c.invdiff.field)},
                     {"total_valuation", c.total_valuation},
                     {"embedding_exponent", c.embedding_exponent},
                     {"n_chi", opt_json(c.n_chi)},
                     {"s_chi", opt_json(c.s_chi)},
                     {"orbits", orbits}});
  }
  return {{"p", d.p},
          {"h_order", d.h_order},
          {"n", d.n},
          {"base", field_to_json(d.base)},
          {"components", comps},
          {"r_cap_exponent", d.r_cap_exponent},
          {"splitting_field",
           {{"field", field_to_json(d.splitting.field)},
            {"contains_all_fields", d.splitting.contains_all_fields},
            {"classes_split", d.splitting.classes_split}}},
          {"commutator_prime_to_p", d.commutator_prime_to_p}};
}

ConductorDescription description_from_json(const json& j) {
  ConductorDescription d;
  d.p = j.at("p").get<unsigned>();
  d.h_order = j.at("h_order").get<std::size_t>();
  d.n = j.at("n").get<unsigned>();
  d.base = field_from_json(j.at("base"));
  for (const auto& cj : j.at("components")) {
    ChiClass c;
    for (const auto& oj : cj.at("orbits"))
      c.orbits.push_back({oj.at("members").get<std::vector<std::size_t>>(), oj.at("w").get<std::size_t>(),
                          oj.at("eta_degree").get<long>()});
    c.w = cj.at("w").get<std::size_t>();
    c.eta_degree = cj.at("eta_degree").get<long>();
    c.chi_degree = cj.at("chi_degree").get<long>();
    c.field = field_from_json(cj.at("field"));
    c.multiplier = mpq_from(cj.at("multiplier"));
    c.multiplier_vp = cj.at("multiplier").at("vp").get<int>();
    c.invdiff = {field_from_json(cj.at("invdiff_field")), cj.at("invdiff_v").get<long>()};
    c.total_valuation = cj.at("total_valuation").get<long>();
    c.embedding_exponent = cj.at("embedding_exponent").get<std::size_t>();
    c.n_chi = opt_from(cj.at("n_chi"));
    c.s_chi = opt_from(cj.at("s_chi"));
    d.components.push_back(std::move(c));
  }
  d.r_cap_exponent = j.at("r_cap_exponent").get<long>();
  const json& s = j.at("splitting_field");
  d.splitting.field = field_from_json(s.at("field"));
  d.splitting.contains_all_fields = s.at("contains_all_fields").get<bool>();
  d.splitting.classes_split = s.at("classes_split").get<bool>();
  d.commutator_prime_to_p = j.at("commutator_prime_to_p").get<bool>();
  return d;
}

PresentationMatrix presentation_from_json(const json& j, const FiniteGroup& g) {
  PresentationMatrix h;
  h.a = j.at("a").get<std::size_t>();
  h.b = j.at("b").get<std::size_t>();
  const json& rows = j.at("entries");
  if (rows.size() != h.a) throw InvalidInput("presentation has " + std::to_string(rows.size()) + " rows, a = " +
                                             std::to_string(h.a));
  for (const auto& rj : rows) {
    if (rj.size() != h.b) throw InvalidInput("presentation row length differs from b");
    std::vector<GroupRingElement> row;
    for (const auto& ej : rj) {
      GroupRingElement e(g.order(), 0);
      if (!ej.empty() && ej[0].is_array()) {
        for (const auto& term : ej) {
          const auto x = term.at(0).get<std::size_t>();
          if (x >= g.order()) throw InvalidInput("group element index out of range");
          e[x] += term.at(1).get<long>();
        }
      } else {
        if (ej.size() != g.order()) throw InvalidInput("dense group ring entry must have |G| coefficients");
        for (std::size_t x = 0; x < g.order(); ++x) e[x] = ej[x].get<long>();
      }
      row.push_back(std::move(e));
    }
    h.entries.push_back(std::move(row));
  }
  return h;
}

json presentation_to_json(const PresentationMatrix& h) {
  json rows = json::array();
  for (const auto& r : h.entries) {
    json row = json::array();
    for (const auto& e : r) {
      json dense = json::array();
      for (const auto& c : e) dense.push_back(c.get_si());
      row.push_back(dense);
    }
    rows.push_back(row);
  }
  return {{"a", h.a}, {"b", h.b}, {"entries", rows}};
}

json fitting_to_json(const FittingGenerators& f) {
  json gens = json::array();
  for (std::size_t k = 0; k < f.generators.size(); ++k) {
    json vals = json::array();
    for (const auto& v : f.generators[k]) vals.push_back(cyclo_to_json(v));
    gens.push_back({{"rows", f.row_sets[k]}, {"values", vals}});
  }
  return {{"zero", f.zero}, {"generators", gens}};
}

}  // namespace conductor
