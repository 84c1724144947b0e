#include "conductor/iwasawa.hpp"

#include <algorithm>
#include <numeric>

#include "conductor/error.hpp"
#include "conductor/padic.hpp"

namespace conductor {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Restriction of chi to H summed over an orbit, on H classes.
std::vector<CycloNumber> orbit_values(const CharacterTable& ht, const EtaOrbit& o) {
  std::vector<CycloNumber> vals(ht.classes.count());
  for (std::size_t row : o.members)
    for (std::size_t c = 0; c < vals.size(); ++c) vals[c] += ht.chars[row][c];
  return vals;
}

}  // namespace

std::vector<ChiClass> chi_classes(const SemidirectData& sd, const AbelianLocalField& k) {
  if (k.p() != sd.p()) throw InvalidInput("base field prime differs from the group prime");
  const CharacterTable ht = character_table(sd.h_ptr());
  const std::vector<EtaOrbit> orbits = alpha_orbits(ht, sd.alpha());
  std::vector<std::size_t> orbit_of(ht.size());
  for (std::size_t i = 0; i < orbits.size(); ++i)
    for (std::size_t row : orbits[i].members) orbit_of[row] = i;

  std::vector<std::size_t> parent(orbits.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (std::uint64_t a : galois_residues(k, ht.exponent)) {
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      const std::size_t j = orbit_of[galois_row(ht, orbits[i].members[0], static_cast<long long>(a))];
      const std::size_t ri = find_root(parent, i), rj = find_root(parent, j);
      if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
    }
  }

  const std::size_t pn = sd.p_pow_n();
  const std::size_t horder = sd.h().order();
  std::vector<ChiClass> out;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (find_root(parent, i) != i) continue;
    ChiClass c;
    for (std::size_t j = i; j < orbits.size(); ++j)
      if (find_root(parent, j) == i) c.orbits.push_back(orbits[j]);
    const EtaOrbit& o = c.orbits[0];
    c.w = o.w;
    c.eta_degree = o.eta_degree;
    c.chi_degree = o.eta_degree * static_cast<long>(o.w);
    const auto vals = orbit_values(ht, o);
    c.field = field_of_values(vals, k);
    c.multiplier = mpq_class(static_cast<long>(horder), c.eta_degree);
    c.multiplier.canonicalize();
    c.multiplier_vp = padic_valuation(c.multiplier, sd.p());
    c.invdiff = relative_inverse_different(c.field, k);
    c.embedding_exponent = pn / c.w;
    c.total_valuation = static_cast<long>(c.field.e()) * c.multiplier_vp + c.invdiff.v;
    if (c.eta_degree == 1) {
      const AbelianLocalField k_eta = field_of_values(ht.chars[o.members[0]], k);
      if (k_eta == c.field) {
        c.s_chi = 1;
        c.n_chi = c.chi_degree;
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

SplittingField splitting_field_bound(const SemidirectData& sd, const AbelianLocalField& k) {
  SplittingField s;
  s.field = adjoin_roots_of_unity(k, sd.h().exponent());
  s.contains_all_fields = true;
  for (const auto& c : chi_classes(sd, k))
    if (!contains(s.field, c.field)) s.contains_all_fields = false;
  s.classes_split = true;
  for (const auto& c : chi_classes(sd, s.field))
    if (c.orbits.size() != 1 || !(c.field == s.field)) s.classes_split = false;
  return s;
}

namespace {

long r_cap_over(const ConductorDescription& desc, const std::vector<bool>& skip) {
  const long e_k = desc.base.e();
  long a = 0;
  for (std::size_t i = 0; i < desc.components.size(); ++i) {
    if (skip[i]) continue;
    const ChiClass& c = desc.components[i];
    const long e_rel = c.field.e() / e_k;
    const long d_rel = -c.invdiff.v;
    a = std::max(a, e_k * c.multiplier_vp - d_rel / e_rel);
  }
  return a;
}

}  // namespace

long r_cap_conductor(const ConductorDescription& desc) {
  return r_cap_over(desc, std::vector<bool>(desc.components.size(), false));
}

long filtered_annihilator(const ConductorDescription& desc, const std::vector<std::size_t>& vanishing) {
  std::vector<bool> skip(desc.components.size(), false);
  for (std::size_t i : vanishing) {
    if (i >= desc.components.size()) throw InvalidInput("component index out of range");
    skip[i] = true;
  }
  return r_cap_over(desc, skip);
}

ConductorDescription central_conductor(const SemidirectData& sd, const AbelianLocalField& k) {
  ConductorDescription d;
  d.p = sd.p();
  d.h_order = sd.h().order();
  d.n = sd.n();
  d.base = k;
  d.components = chi_classes(sd, k);
  d.r_cap_exponent = r_cap_conductor(d);
  d.splitting = splitting_field_bound(sd, k);
  const FiniteQuotient q = finite_quotient(sd, sd.n());
  d.commutator_prime_to_p = commutator_subgroup(*q.group).size() % sd.p() != 0;
  return d;
}

GroupAlgebraElement ga_mul(const FiniteGroup& g, const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  GroupAlgebraElement out(g.order());
  for (Elem x = 0; x < a.size(); ++x) {
    if (a[x].is_zero()) continue;
    for (Elem y = 0; y < b.size(); ++y) {
      if (b[y].is_zero()) continue;
      out[g.mul(x, y)] += a[x] * b[y];
    }
  }
  return out;
}

ClassIdempotents idempotents(const CharacterTable& h_table, const ChiClass& cls, const FiniteQuotient& q) {
  const std::size_t horder = q.h_order;
  const std::size_t gorder = q.group->order();
  auto e_of = [&](std::size_t row) {
    GroupAlgebraElement e(gorder);
    const CycloNumber scale(mpq_class(h_table.degrees[row], static_cast<long>(horder)));
    for (Elem h = 0; h < horder; ++h) e[h] = scale * h_table.value(row, h_table.group->inv(h));
    return e;
  };
  auto add = [](GroupAlgebraElement& acc, const GroupAlgebraElement& x) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += x[i];
  };
  ClassIdempotents out;
  out.e_chi.assign(gorder, CycloNumber());
  out.eps.assign(gorder, CycloNumber());
  for (std::size_t oi = 0; oi < cls.orbits.size(); ++oi) {
    for (std::size_t row : cls.orbits[oi].members) {
      GroupAlgebraElement e = e_of(row);
      add(out.eps, e);
      if (oi == 0) {
        add(out.e_chi, e);
        out.e_eta.push_back(std::move(e));
      }
    }
  }
  return out;
}

IdempotentReport verify_idempotents(const SemidirectData& sd, const AbelianLocalField& k, unsigned level) {
  const FiniteQuotient q = finite_quotient(sd, level);
  const FiniteGroup& g = *q.group;
  const CharacterTable ht = character_table(sd.h_ptr());
  const auto classes = chi_classes(sd, k);
  IdempotentReport r;
  std::vector<GroupAlgebraElement> eps;
  auto basis = [&](Elem x) {
    GroupAlgebraElement b(g.order());
    b[x] = CycloNumber(1);
    return b;
  };
  std::vector<Elem> gens(g.generators().begin(), g.generators().end());
  if (q.gamma_order > 1) gens.push_back(q.gamma());
  for (const auto& cls : classes) {
    const ClassIdempotents id = idempotents(ht, cls, q);
    for (const auto& e : id.e_eta)
      if (ga_mul(g, e, e) != e) r.eta_idempotent = false;
    if (ga_mul(g, id.e_chi, id.e_chi) != id.e_chi) r.chi_idempotent = false;
    for (Elem x : gens) {
      const auto b = basis(x);
      if (ga_mul(g, b, id.eps) != ga_mul(g, id.eps, b)) r.central = false;
    }
    eps.push_back(id.eps);
  }
  GroupAlgebraElement sum(g.order());
  for (std::size_t i = 0; i < eps.size(); ++i) {
    for (std::size_t x = 0; x < sum.size(); ++x) sum[x] += eps[i][x];
    if (ga_mul(g, eps[i], eps[i]) != eps[i]) r.chi_idempotent = false;
    for (std::size_t j = 0; j < eps.size(); ++j) {
      if (i == j) continue;
      const auto prod = ga_mul(g, eps[i], eps[j]);
      if (std::any_of(prod.begin(), prod.end(), [](const CycloNumber& c) { return !c.is_zero(); }))
        r.orthogonal = false;
    }
  }
  if (sum != basis(0)) r.sum_is_one = false;
  return r;
}

TwistedLaw truncated_law(const SemidirectData& sd, unsigned level) {
  if (level < sd.n()) throw InvalidInput("invalid level: below n");
  const FiniteGroup& h = sd.h();
  const std::size_t hn = h.order();
  const std::size_t pn = sd.p_pow_n();
  TwistedLaw law;
  law.size = pn * hn;
  law.trunc = ipow(sd.p(), level - sd.n());
  std::vector<std::vector<Elem>> inv_pows;
  const GroupAutomorphism ainv = sd.alpha().inverse();
  GroupAutomorphism cur = GroupAutomorphism::identity(sd.h_ptr());
  for (std::size_t j = 0; j < pn; ++j) {
    inv_pows.push_back(cur.images());
    cur = ainv.compose(cur);
  }
  law.prod.resize(law.size * law.size);
  law.shift.resize(law.size * law.size);
  for (std::size_t x = 0; x < law.size; ++x) {
    const std::size_t i = x / hn;
    const Elem hx = static_cast<Elem>(x % hn);
    for (std::size_t y = 0; y < law.size; ++y) {
      const std::size_t j = y / hn;
      const Elem hy = static_cast<Elem>(y % hn);
      const std::size_t s = i + j;
      law.prod[x * law.size + y] = static_cast<std::uint32_t>((s % pn) * hn + h.mul(inv_pows[j][hx], hy));
      law.shift[x * law.size + y] = static_cast<std::uint32_t>((s / pn) % law.trunc);
    }
  }
  return law;
}

std::vector<mpz_class> trace_truncated(const SemidirectData& sd, const TruncatedElement& x) {
  const TwistedLaw law = truncated_law(sd, x.level);
  if (x.coeffs.size() != law.size) throw InvalidInput("element has the wrong number of coefficients");
  const auto traces = regular_trace(law);
  std::vector<mpz_class> out(law.trunc);
  for (std::size_t b = 0; b < law.size; ++b) {
    const auto& c = x.coeffs[b];
    if (c.size() != law.trunc) throw InvalidInput("coefficient has the wrong length");
    for (std::size_t u = 0; u < law.trunc; ++u) {
      if (c[u] == 0) continue;
      for (std::size_t v = 0; v < law.trunc; ++v)
        out[(u + v) % law.trunc] += c[u] * mpz_class(static_cast<long>(traces[b][v]));
    }
  }
  return out;
}

bool dual_basis_check(const SemidirectData& sd, unsigned level) {
  const TwistedLaw law = truncated_law(sd, level);
  const auto traces = regular_trace(law);
  const long total = static_cast<long>(law.size);
  for (std::size_t x = 0; x < law.size; ++x)
    for (std::size_t v = 0; v < law.trunc; ++v) {
      const long want = (x == 0 && v == 0) ? total : 0;
      if (traces[x][v] != want) return false;
    }
  const std::size_t hn = sd.h().order();
  const std::size_t pn = sd.p_pow_n();
  std::vector<std::vector<Elem>> pows;
  GroupAutomorphism cur = GroupAutomorphism::identity(sd.h_ptr());
  for (std::size_t i = 0; i < pn; ++i) {
    pows.push_back(cur.images());
    cur = sd.alpha().compose(cur);
  }
  // total * dual(y) = t^{q} b_{ystar}
  for (std::size_t y = 0; y < law.size; ++y) {
    const std::size_t i = y / hn;
    const Elem hy = static_cast<Elem>(y % hn);
    const std::size_t ystar = ((pn - i) % pn) * hn + pows[i][sd.h().inv(hy)];
    const std::size_t q = (i > 0) ? law.trunc - 1 : 0;
    for (std::size_t x = 0; x < law.size; ++x) {
      const std::size_t z = law.prod[x * law.size + ystar];
      const std::size_t sh = (q + law.shift[x * law.size + ystar]) % law.trunc;
      for (std::size_t v = 0; v < law.trunc; ++v) {
        const long got = traces[z][(v + law.trunc - sh) % law.trunc];
        const long want = (x == y && v == 0) ? total : 0;
        if (got != want) return false;
      }
    }
  }
  return true;
}

namespace {

// Elements of Q[t]/(t^T - 1).
using Poly = std::vector<mpq_class>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size());
  for (std::size_t u = 0; u < a.size(); ++u) {
    if (a[u] == 0) continue;
    for (std::size_t v = 0; v < b.size(); ++v) out[(u + v) % a.size()] += a[u] * b[v];
  }
  return out;
}

using QMat = std::vector<std::vector<mpq_class>>;

QMat q_inverse(QMat a) {
  const std::size_t n = a.size();
  QMat inv(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw InvalidInput("singular trace form");
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    const mpq_class s = 1 / a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const mpq_class f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

mpq_class q_det(QMat a) {
  const std::size_t n = a.size();
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const mpq_class f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

bool irreducible_mod_p(const std::vector<long>& f, unsigned p) {
  // Brute force over monic factors of degree <= deg/2.
  const std::size_t d = f.size() - 1;
  for (std::size_t k = 1; k <= d / 2; ++k) {
    const std::uint64_t count = ipow(p, static_cast<unsigned>(k));
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<long> g(k + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < k; ++i) {
        g[i] = static_cast<long>(c % p);
        c /= p;
      }
      g[k] = 1;
      std::vector<long> r(f);
      for (auto& v : r) v = ((v % static_cast<long>(p)) + p) % p;
      for (std::size_t top = d; top >= k; --top) {
        const long lead = r[top];
        if (lead != 0)
          for (std::size_t i = 0; i <= k; ++i)
            r[top - k + i] = ((r[top - k + i] - lead * g[i]) % static_cast<long>(p) + p) % p;
        if (top == k) break;
      }
      if (std::all_of(r.begin(), r.end(), [](long v) { return v == 0; })) return false;
    }
  }
  return true;
}

// Monic f with o' = Z_p[x]/(f), lowest degree first.
std::vector<long> monogenic_polynomial(const AbelianLocalField& k) {
  const unsigned p = k.p();
  if (k.degree() == 1) return {0, 1};
  if (k.e() == 1) {
    const std::size_t d = static_cast<std::size_t>(k.f());
    const std::uint64_t count = ipow(p, static_cast<unsigned>(d));
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<long> f(d + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        f[i] = static_cast<long>(c % p);
        c /= p;
      }
      f[d] = 1;
      if (f[0] != 0 && irreducible_mod_p(f, p)) return f;
    }
  }
  if (k.f() == 1) {
    std::uint64_t q = p;
    while (static_cast<int>(euler_phi(q)) < k.e()) q *= p;
    if (static_cast<int>(euler_phi(q)) == k.e() && k == AbelianLocalField::cyclotomic(p, q)) {
      std::vector<long> f;
      for (const auto& c : cyclotomic_polynomial(q)) f.push_back(c.get_si());
      return f;
    }
  }
  throw Unsupported("ring of integers of " + k.describe() + " is not handled as a monogenic order");
}

}  // namespace

bool lambda_gamma_different_check(const AbelianLocalField& k_prime, unsigned n, unsigned level) {
  if (level < n) throw InvalidInput("invalid level: below n");
  const unsigned p = k_prime.p();
  const std::vector<long> f = monogenic_polynomial(k_prime);
  const std::size_t d = f.size() - 1;

  // Tr(x^k) from powers of the companion matrix.
  QMat comp(d, std::vector<mpq_class>(d));
  for (std::size_t i = 1; i < d; ++i) comp[i][i - 1] = 1;
  for (std::size_t i = 0; i < d; ++i) comp[i][d - 1] = -f[i];
  std::vector<mpq_class> tr(2 * d);
  QMat pw(d, std::vector<mpq_class>(d));
  for (std::size_t i = 0; i < d; ++i) pw[i][i] = 1;
  for (std::size_t k = 0; k < 2 * d; ++k) {
    for (std::size_t i = 0; i < d; ++i) tr[k] += pw[i][i];
    QMat next(d, std::vector<mpq_class>(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t l = 0; l < d; ++l)
        for (std::size_t j = 0; j < d; ++j) next[i][j] += pw[i][l] * comp[l][j];
    pw = std::move(next);
  }
  QMat gram(d, std::vector<mpq_class>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) gram[i][j] = tr[i + j];
  const QMat ginv = q_inverse(gram);

  const std::size_t pn = ipow(p, n);
  const std::size_t trunc = ipow(p, level - n);
  auto gamma_trace = [&](std::size_t i, std::size_t i2) {
    // Tr(gamma^i gamma^i2) over R_m
    Poly out(trunc);
    const std::size_t s = i + i2;
    if (s % pn == 0) out[(s / pn) % trunc] = static_cast<long>(pn);
    return out;
  };
  // dual[(j', i')] in coordinates: p^-n sum_l ginv[l][j'] x^l t^{q} gamma^{(-i') mod pn}
  for (std::size_t jj = 0; jj < d; ++jj) {
    for (std::size_t ii = 0; ii < pn; ++ii) {
      const std::size_t istar = (pn - ii) % pn;
      Poly tq(trunc);
      tq[ii > 0 ? trunc - 1 : 0] = 1;
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < pn; ++i) {
          Poly acc(trunc);
          for (std::size_t l = 0; l < d; ++l) {
            if (ginv[l][jj] == 0) continue;
            const mpq_class c = gram[j][l] * ginv[l][jj] / static_cast<long>(pn);
            Poly g = poly_mul(gamma_trace(i, istar), tq);
            for (auto& v : g) v *= c;
            for (std::size_t u = 0; u < trunc; ++u) acc[u] += g[u];
          }
          for (std::size_t u = 0; u < trunc; ++u) {
            const mpq_class want = (j == jj && i == ii && u == 0) ? 1 : 0;
            if (acc[u] != want) return false;
          }
        }
      }
    }
  }
  const mpq_class det = q_det(gram);
  const int vdet = padic_valuation(det, p);
  if (vdet % k_prime.f() != 0) return false;
  return -vdet / k_prime.f() == relative_inverse_different(k_prime, AbelianLocalField::rational(p)).v;
}

}  // namespace conductor
