#include "conductor/conductor_finite.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "conductor/error.hpp"

namespace conductor {

namespace {

using QMatrix = std::vector<std::vector<mpq_class>>;

QMatrix q_inverse(QMatrix a) {
  const std::size_t n = a.size();
  QMatrix inv(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw Error("singular matrix");
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    const mpq_class f = 1 / a[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] *= f;
      inv[c][k] *= f;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const mpq_class g = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= g * a[c][k];
        inv[r][k] -= g * inv[c][k];
      }
    }
  }
  return inv;
}

// {a in Z_p^cols : W a in Z_p^rows} for a rational matrix W.
PadicLattice integral_preimage(const QMatrix& w, std::size_t cols, const PadicContext& ctx) {
  mpz_class den = 1;
  for (const auto& row : w)
    for (const auto& x : row) den = lcm(den, mpz_class(x.get_den()));
  const int s = padic_valuation(den, ctx.p);
  PadicMatrix m(ctx, std::max<std::size_t>(w.size(), 1), cols);
  for (std::size_t r = 0; r < w.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const mpq_class v = w[r][c] * den;
      m.set(r, c, v.get_num());
    }
  return preimage(m, s);
}

// Z-basis (columns) of the span of integer column vectors.
std::vector<std::vector<mpz_class>> integer_basis(std::vector<std::vector<mpz_class>> cols, std::size_t n) {
  std::size_t k = 0;
  for (std::size_t r = 0; r < n; ++r) {
    while (true) {
      std::size_t best = cols.size();
      for (std::size_t c = k; c < cols.size(); ++c)
        if (cols[c][r] != 0 && (best == cols.size() || abs(cols[c][r]) < abs(cols[best][r]))) best = c;
      if (best == cols.size()) break;
      std::swap(cols[k], cols[best]);
      bool done = true;
      for (std::size_t c = k + 1; c < cols.size(); ++c) {
        if (cols[c][r] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), cols[c][r].get_mpz_t(), cols[k][r].get_mpz_t());
        for (std::size_t i = 0; i < n; ++i) cols[c][i] -= q * cols[k][i];
        if (cols[c][r] != 0) done = false;
      }
      if (done) {
        ++k;
        break;
      }
    }
  }
  cols.resize(k);
  return cols;
}

CycloMatrix rational_conj(const QMatrix& binv, const CycloMatrix& a, const QMatrix& b) {
  const std::size_t n = a.size();
  CycloMatrix bm(n, std::vector<CycloNumber>(n)), bi(n, std::vector<CycloNumber>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bm[i][j] = CycloNumber(b[i][j]);
      bi[i][j] = CycloNumber(binv[i][j]);
    }
  return matrix_mul(matrix_mul(bi, a), bm);
}

const FiniteComponent& component_of(const FiniteConductorReport& report, std::size_t row) {
  for (const auto& c : report.components)
    if (std::binary_search(c.rows.begin(), c.rows.end(), row)) return c;
  throw InvalidInput("row not covered by the conductor report");
}

// Rows of W for one rational orbit: P^-1 Omega, P = multiplication by pi^v.
void append_orbit_conditions(const CharacterTable& t, const RationalOrbit& o, long v, unsigned p, QMatrix& w) {
  const std::size_t r = t.classes.count();
  const std::size_t ph = euler_phi(o.d);
  const auto sizes = t.classes.sizes();
  std::uint64_t pk = 1;
  for (std::uint64_t d = o.d; d % p == 0; d /= p) pk *= p;
  const CycloNumber pi = pk == 1 ? CycloNumber(static_cast<long>(p)) : CycloNumber(1) - CycloNumber::root_of_unity(pk, 1);
  CycloNumber piv = 1;
  for (long i = 0; i < v; ++i) piv *= pi;
  QMatrix pm(ph, std::vector<mpq_class>(ph));
  for (std::size_t j = 0; j < ph; ++j) {
    const auto c = (piv * CycloNumber::root_of_unity(o.d, static_cast<long long>(j))).coeffs_at(o.d);
    for (std::size_t i = 0; i < ph; ++i) pm[i][j] = c[i];
  }
  const QMatrix pinv = q_inverse(pm);
  const std::size_t row = o.rows[0];
  QMatrix omega(ph, std::vector<mpq_class>(r));
  for (std::size_t c = 0; c < r; ++c) {
    const CycloNumber om = t.chars[row][c] * CycloNumber(mpq_class(static_cast<long>(sizes[c]), t.degrees[row]));
    const auto co = om.coeffs_at(o.d);
    for (std::size_t i = 0; i < ph; ++i) omega[i][c] = co[i];
  }
  for (std::size_t i = 0; i < ph; ++i) {
    std::vector<mpq_class> out(r, 0);
    for (std::size_t j = 0; j < ph; ++j)
      if (pinv[i][j] != 0)
        for (std::size_t c = 0; c < r; ++c) out[c] += pinv[i][j] * omega[j][c];
    w.push_back(std::move(out));
  }
}

PadicLattice conductor_from_conditions(const CharacterTable& t, const FiniteConductorReport& report,
                                       const std::vector<std::size_t>* support, const PadicContext& ctx) {
  if (report.base.degree() != 1) throw Unsupported("conductor lattices are materialized over Q_p only");
  if (report.p != ctx.p) throw InvalidInput("prime mismatch between report and precision context");
  QMatrix w;
  for (const auto& o : rational_orbits(t)) {
    if (support) {
      bool hit = false;
      for (auto r : o.rows)
        if (std::find(support->begin(), support->end(), r) != support->end()) hit = true;
      if (!hit) continue;
    }
    const long v = component_of(report, o.rows[0]).valuation;
    for (auto r : o.rows)
      if (component_of(report, r).valuation != v) throw Error("conjugate components with different valuations");
    append_orbit_conditions(t, o, v, ctx.p, w);
  }
  return integral_preimage(w, t.classes.count(), ctx);
}

}  // namespace

FiniteConductorReport jacobinski_conductor(const CharacterTable& t, const AbelianLocalField& k) {
  FiniteConductorReport rep;
  rep.p = k.p();
  rep.base = k;
  rep.group_order = t.group->order();
  const auto residues = galois_residues(k, t.exponent);
  std::vector<bool> seen(t.size(), false);
  for (std::size_t row = 0; row < t.size(); ++row) {
    if (seen[row]) continue;
    FiniteComponent c;
    for (auto a : residues) {
      const std::size_t img = t.exponent == 1 ? row : galois_row(t, row, static_cast<long long>(a));
      if (!seen[img]) {
        seen[img] = true;
        c.rows.push_back(img);
      }
    }
    std::sort(c.rows.begin(), c.rows.end());
    c.degree = t.degrees[row];
    c.field = field_of_values(t.chars[row], k);
    c.multiplier = mpz_class(static_cast<unsigned long>(rep.group_order)) / c.degree;
    c.multiplier_vp = padic_valuation(c.multiplier, k.p());
    c.invdiff_v = relative_inverse_different(c.field, k).v;
    c.valuation = static_cast<long>(c.field.e()) * c.multiplier_vp + c.invdiff_v;
    rep.components.push_back(std::move(c));
  }
  return rep;
}

std::vector<RationalOrbit> rational_orbits(const CharacterTable& t) {
  std::vector<RationalOrbit> out;
  std::vector<bool> seen(t.size(), false);
  const std::uint64_t e = t.exponent;
  for (std::size_t row = 0; row < t.size(); ++row) {
    if (seen[row]) continue;
    RationalOrbit o;
    for (std::uint64_t a = 1; a <= e; ++a) {
      if (std::gcd(a, e) != 1) continue;
      const std::size_t img = e == 1 ? row : galois_row(t, row, static_cast<long long>(a));
      if (!seen[img]) {
        seen[img] = true;
        o.rows.push_back(img);
      }
    }
    std::sort(o.rows.begin(), o.rows.end());
    for (const auto& x : t.chars[row]) o.d = std::lcm(o.d, x.conductor());
    if (o.rows.size() != euler_phi(o.d))
      throw Unsupported("character field is a proper subfield of Q(zeta_" + std::to_string(o.d) + ")");
    out.push_back(std::move(o));
  }
  return out;
}

PadicLattice formula_conductor_lattice(const CharacterTable& t, const FiniteConductorReport& report,
                                       const PadicContext& ctx) {
  return conductor_from_conditions(t, report, nullptr, ctx);
}

PadicLattice filtered_conductor_lattice(const CharacterTable& t, const FiniteConductorReport& report,
                                        const std::vector<std::size_t>& support_rows, const PadicContext& ctx) {
  return conductor_from_conditions(t, report, &support_rows, ctx);
}

PadicLattice brute_force_conductor(const CharacterTable& t, const std::vector<Representation>& reps,
                                   const PadicContext& ctx, std::optional<std::uint64_t> twist_seed) {
  const FiniteGroup& g = *t.group;
  const std::size_t order = g.order();
  const auto orbits = rational_orbits(t);
  QMatrix phi;  // rows: block coordinates, columns: group elements
  for (std::size_t oi = 0; oi < orbits.size(); ++oi) {
    const auto& o = orbits[oi];
    auto it = std::find_if(reps.begin(), reps.end(), [&](const Representation& r) { return r.character == o.rows[0]; });
    if (it == reps.end()) throw Unsupported("no representation for character row " + std::to_string(o.rows[0]));
    auto imgs = representation_images(g, *it);
    const std::size_t n = it->dim;
    if (twist_seed && n >= 2) {
      if (o.d != 1) throw Unsupported("maximal-order twists need rational representations");
      std::mt19937_64 rng(*twist_seed * 1000003ULL + oi);
      const long bound = static_cast<long>(ctx.p * ctx.p);
      std::uniform_int_distribution<long> dist(-bound, bound);
      std::vector<mpz_class> v(n, 0);
      while (std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x == 0; }))
        for (auto& x : v) x = dist(rng);
      std::vector<std::vector<mpz_class>> span;
      for (const auto& m : imgs) {
        std::vector<mpz_class> w(n, 0);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) w[i] += m[i][j].rational_value().get_num() * v[j];
        span.push_back(std::move(w));
      }
      const auto basis = integer_basis(span, n);
      if (basis.size() != n) throw Error("orbit of the twist vector does not span");
      QMatrix b(n, std::vector<mpq_class>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b[i][j] = basis[j][i];
      const QMatrix binv = q_inverse(b);
      for (auto& m : imgs) m = rational_conj(binv, m, b);
    }
    const std::size_t ph = euler_phi(o.d);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<mpq_class>> rows(ph, std::vector<mpq_class>(order));
        for (Elem x = 0; x < order; ++x) {
          const auto c = imgs[x][i][j].coeffs_at(o.d);
          for (std::size_t b = 0; b < ph; ++b) rows[b][x] = c[b];
        }
        for (auto& rrow : rows) phi.push_back(std::move(rrow));
      }
  }
  if (phi.size() != order) throw Unsupported("representations do not give a split Wedderburn decomposition");
  const QMatrix phinv = q_inverse(phi);
  const std::size_t r = t.classes.count();
  QMatrix a;
  a.reserve(order * order);
  for (std::size_t tcol = 0; tcol < order; ++tcol) {
    std::vector<std::vector<mpq_class>> block(order, std::vector<mpq_class>(r, 0));
    for (std::size_t c = 0; c < r; ++c)
      for (Elem y : t.classes.classes[c])
        for (Elem x = 0; x < order; ++x) {
          const mpq_class& mu = phinv[x][tcol];
          if (mu != 0) block[g.mul(y, x)][c] += mu;
        }
    for (auto& row : block) a.push_back(std::move(row));
  }
  return integral_preimage(a, r, ctx);
}

std::vector<mpz_class> class_sums_to_group(const CharacterTable& t, const std::vector<mpz_class>& a) {
  std::vector<mpz_class> z(t.group->order(), 0);
  for (std::size_t c = 0; c < a.size(); ++c)
    for (Elem x : t.classes.classes[c]) z[x] = a[c];
  return z;
}

int ext1_exponent(const GroupModule& m, const GroupModule& n, const PadicContext& ctx) {
  const auto d = ext1(m, n, ctx);
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

bool annihilation_check(const CharacterTable& t, const PadicLattice& conductor, const GroupModule& m,
                        const GroupModule& n, const PadicContext& ctx) {
  for (std::size_t c = 0; c < conductor.rank(); ++c)
    if (!annihilates_ext1(class_sums_to_group(t, conductor.basis().column(c)), m, n, ctx)) return false;
  return true;
}

std::optional<std::size_t> roggenkamp_probe(const CharacterTable& t, const FiniteConductorReport& report,
                                            const Representation& rep, const std::vector<GroupModule>& targets,
                                            const PadicContext& ctx) {
  const long a = component_of(report, rep.character).valuation;
  if (a <= 0) return std::nullopt;
  const GroupModule m = GroupModule::from_representation(t.group, rep);
  std::uint64_t d = 1;
  for (const auto& mat : rep.gen_images)
    for (const auto& row : mat)
      for (const auto& x : row) d = std::lcm(d, x.conductor());
  std::uint64_t pk = 1;
  for (std::uint64_t dd = d; dd % report.p == 0; dd /= report.p) pk *= report.p;
  const CycloNumber pi =
      pk == 1 ? CycloNumber(static_cast<long>(report.p)) : CycloNumber(1) - CycloNumber::root_of_unity(pk, 1);
  CycloNumber y = 1;
  for (long i = 0; i + 1 < a; ++i) y *= pi;
  // multiplication by y on Z[zeta_d]^n, in the basis used by from_representation
  const std::size_t ph = euler_phi(d);
  IntMatrix endo(m.rank, std::vector<mpz_class>(m.rank, 0));
  for (std::size_t b = 0; b < ph; ++b) {
    const auto c = (y * CycloNumber::root_of_unity(d, static_cast<long long>(b))).coeffs_at(d);
    for (std::size_t i = 0; i < rep.dim; ++i)
      for (std::size_t r = 0; r < ph; ++r) endo[i * ph + r][i * ph + b] = c[r].get_num();
  }
  for (std::size_t i = 0; i < targets.size(); ++i)
    if (!endomorphism_annihilates_ext1(endo, m, targets[i], ctx)) return i;
  return std::nullopt;
}

}  // namespace conductor
