#include "conductor/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "conductor/error.hpp"
#include "conductor/kernels.hpp"

namespace conductor {

namespace {

using u64 = std::uint64_t;

struct Fl {
  u64 l;
  u64 add(u64 a, u64 b) const { return (a + b) % l; }
  u64 sub(u64 a, u64 b) const { return (a + l - b) % l; }
  u64 mul(u64 a, u64 b) const { return a * b % l; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= l;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, l - 2); }
};

using Mat = std::vector<std::vector<u64>>;

// Row-reduced echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Mat& m, const Fl& f) {
  std::vector<std::size_t> piv;
  if (m.empty()) return piv;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    const u64 iv = f.inv(m[row][c]);
    for (auto& x : m[row]) x = f.mul(x, iv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      const u64 t = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = f.sub(m[i][k], f.mul(t, m[row][k]));
    }
    piv.push_back(c);
    ++row;
  }
  m.resize(row);
  return piv;
}

// Null space {x : A x = 0} of a square matrix as row vectors.
Mat kernel(Mat a, const Fl& f) {
  const std::size_t n = a.size();
  auto piv = rref(a, f);
  std::vector<bool> is_piv(n, false);
  for (auto c : piv) is_piv[c] = true;
  Mat out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_piv[free]) continue;
    std::vector<u64> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = f.sub(0, a[r][free]);
    out.push_back(std::move(v));
  }
  return out;
}

// Characteristic polynomial via Hessenberg reduction, lowest degree first.
std::vector<u64> charpoly(Mat h, const Fl& f) {
  const std::size_t n = h.size();
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t sel = j + 1;
    while (sel < n && h[sel][j] == 0) ++sel;
    if (sel == n) continue;
    if (sel != j + 1) {
      std::swap(h[sel], h[j + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][sel], h[r][j + 1]);
    }
    const u64 iv = f.inv(h[j + 1][j]);
    for (std::size_t i = j + 2; i < n; ++i) {
      if (h[i][j] == 0) continue;
      const u64 t = f.mul(h[i][j], iv);
      for (std::size_t k = 0; k < n; ++k) h[i][k] = f.sub(h[i][k], f.mul(t, h[j + 1][k]));
      for (std::size_t r = 0; r < n; ++r) h[r][j + 1] = f.add(h[r][j + 1], f.mul(t, h[r][i]));
    }
  }
  std::vector<std::vector<u64>> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<u64> q(k + 1, 0);
    // (x - h[k-1][k-1]) p_{k-1}
    for (std::size_t i = 0; i < p[k - 1].size(); ++i) {
      q[i + 1] = f.add(q[i + 1], p[k - 1][i]);
      q[i] = f.sub(q[i], f.mul(h[k - 1][k - 1], p[k - 1][i]));
    }
    u64 prod = 1;
    for (std::size_t i = 1; i < k; ++i) {
      prod = f.mul(prod, h[k - i][k - i - 1]);
      const u64 c = f.mul(prod, h[k - 1 - i][k - 1]);
      if (c == 0) continue;
      for (std::size_t t = 0; t < p[k - 1 - i].size(); ++t) q[t] = f.sub(q[t], f.mul(c, p[k - 1 - i][t]));
    }
    p[k] = std::move(q);
  }
  return p[n];
}

u64 primitive_root(u64 l) {
  const auto fac = prime_factors(l - 1);
  Fl f{l};
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (u64 q : fac)
      if (f.pow(g, (l - 1) / q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
}

int compare_values(const CycloNumber& a, const CycloNumber& b) {
  if (a.conductor() != b.conductor()) return a.conductor() < b.conductor() ? -1 : 1;
  const auto ca = a.coeffs(), cb = b.coeffs();
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (ca[i] != cb[i]) return ca[i] > cb[i] ? -1 : 1;
  return 0;
}

struct Subspace {
  Mat basis;  // rows in reduced echelon form
  std::vector<std::size_t> pivots;
  std::size_t next;
};

}  // namespace

std::size_t CharacterTable::find_row(const std::vector<CycloNumber>& values) const {
  for (std::size_t i = 0; i < chars.size(); ++i)
    if (chars[i] == values) return i;
  return chars.size();
}

CharacterTable character_table(std::shared_ptr<const FiniteGroup> gp, std::size_t bound) {
  const FiniteGroup& g = *gp;
  if (g.order() > bound)
    throw ResourceError("group of order " + std::to_string(g.order()) + " exceeds the character table bound " +
                        std::to_string(bound));
  CharacterTable t;
  t.group = gp;
  t.classes = conjugacy_classes(g);
  const std::size_t r = t.classes.count();
  const auto reps = t.classes.reps();
  const auto sizes = t.classes.sizes();
  t.inverse_class.resize(r);
  for (std::size_t i = 0; i < r; ++i) t.inverse_class[i] = t.classes.class_of[g.inv(reps[i])];
  t.exponent = g.exponent();
  const u64 order = g.order();
  const u64 e = t.exponent;

  u64 l = e + 1;
  while (!(is_prime(l) && l * l > 4 * order)) l += e;
  t.modular_prime = static_cast<unsigned long>(l);
  const Fl f{l};

  const auto coeff = class_coefficients(g, t.classes);
  auto cmat = [&](std::size_t j, std::size_t i, std::size_t k) -> u64 { return coeff[(j * r + i) * r + k] % l; };

  std::vector<std::vector<u64>> omegas;
  std::vector<Subspace> work;
  {
    Subspace all;
    all.basis.assign(r, std::vector<u64>(r, 0));
    for (std::size_t i = 0; i < r; ++i) all.basis[i][i] = 1;
    all.pivots.resize(r);
    std::iota(all.pivots.begin(), all.pivots.end(), 0);
    all.next = 1;
    work.push_back(std::move(all));
  }
  while (!work.empty()) {
    Subspace s = std::move(work.back());
    work.pop_back();
    const std::size_t d = s.basis.size();
    if (d == 1) {
      auto w = s.basis[0];
      if (w[0] == 0) throw Error("character table: degenerate central character");
      const u64 iv = f.inv(w[0]);
      for (auto& x : w) x = f.mul(x, iv);
      omegas.push_back(std::move(w));
      continue;
    }
    bool split = false;
    for (std::size_t j = s.next; j < r && !split; ++j) {
      // restriction of M_j (M_j w)_i = sum_k c_{jik} w_k to the subspace
      Mat a(d, std::vector<u64>(d, 0));
      for (std::size_t sidx = 0; sidx < d; ++sidx) {
        const auto& b = s.basis[sidx];
        for (std::size_t t2 = 0; t2 < d; ++t2) {
          const std::size_t i = s.pivots[t2];
          u64 acc = 0;
          for (std::size_t k = 0; k < r; ++k)
            if (b[k]) acc = f.add(acc, f.mul(cmat(j, i, k), b[k]));
          a[t2][sidx] = acc;
        }
      }
      const auto cp = charpoly(a, f);
      std::vector<u64> roots;
      for (u64 x = 0; x < l; ++x) {
        u64 v = 0;
        for (std::size_t i = cp.size(); i-- > 0;) v = f.add(f.mul(v, x), cp[i]);
        if (v == 0) roots.push_back(x);
      }
      if (roots.size() < 2) continue;
      split = true;
      std::size_t total = 0;
      for (u64 lam : roots) {
        Mat shifted = a;
        for (std::size_t i = 0; i < d; ++i) shifted[i][i] = f.sub(shifted[i][i], lam);
        const auto ker = kernel(shifted, f);
        Subspace part;
        for (const auto& c : ker) {
          std::vector<u64> v(r, 0);
          for (std::size_t sidx = 0; sidx < d; ++sidx)
            if (c[sidx])
              for (std::size_t k = 0; k < r; ++k) v[k] = f.add(v[k], f.mul(c[sidx], s.basis[sidx][k]));
          part.basis.push_back(std::move(v));
        }
        part.pivots = rref(part.basis, f);
        part.next = j + 1;
        total += part.basis.size();
        work.push_back(std::move(part));
      }
      if (total != d) throw Error("character table: class algebra not diagonalizable modulo " + std::to_string(l));
    }
    if (!split) throw Error("character table: eigenspaces did not separate");
  }
  if (omegas.size() != r) throw Error("character table: wrong number of characters");

  // power maps: class of rep_i^t
  std::vector<std::vector<std::size_t>> powcls(r);
  for (std::size_t i = 0; i < r; ++i) {
    Elem x = 0;
    const std::size_t o = g.elem_order(reps[i]);
    for (std::size_t tt = 0; tt < o; ++tt) {
      powcls[i].push_back(t.classes.class_of[x]);
      x = g.mul(x, reps[i]);
    }
  }
  const u64 z = f.pow(primitive_root(l), (l - 1) / e);

  std::vector<std::vector<CycloNumber>> rows;
  std::vector<long> degs;
  for (const auto& w : omegas) {
    u64 s = 0;
    for (std::size_t i = 0; i < r; ++i)
      s = f.add(s, f.mul(f.mul(w[i], w[t.inverse_class[i]]), f.inv(sizes[i] % l)));
    const u64 d2 = f.mul(order % l, f.inv(s));
    u64 deg = 0;
    for (u64 dd = 1; dd * dd <= order; ++dd)
      if (f.mul(dd, dd) == d2) {
        deg = dd;
        break;
      }
    if (deg == 0) throw Error("character table: no degree lifts modulo " + std::to_string(l));
    std::vector<u64> chi(r);
    for (std::size_t i = 0; i < r; ++i) chi[i] = f.mul(f.mul(w[i], deg), f.inv(sizes[i] % l));
    std::vector<CycloNumber> row(r);
    for (std::size_t i = 0; i < r; ++i) {
      const std::size_t o = powcls[i].size();
      const u64 zo_inv = f.inv(f.pow(z, e / o));
      std::vector<u64> zp(o);
      zp[0] = 1;
      for (std::size_t k = 1; k < o; ++k) zp[k] = f.mul(zp[k - 1], zo_inv);
      const u64 oinv = f.inv(o % l);
      std::vector<mpq_class> mult(o);
      for (std::size_t k = 0; k < o; ++k) {
        u64 acc = 0;
        for (std::size_t tt = 0; tt < o; ++tt) acc = f.add(acc, f.mul(chi[powcls[i][tt]], zp[(k * tt) % o]));
        acc = f.mul(acc, oinv);
        if (acc > deg) throw Error("character table: eigenvalue multiplicity does not lift");
        mult[k] = static_cast<unsigned long>(acc);
      }
      row[i] = CycloNumber::from_exponents(o, mult);
    }
    rows.push_back(std::move(row));
    degs.push_back(static_cast<long>(deg));
  }
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (degs[a] != degs[b]) return degs[a] < degs[b];
    for (std::size_t i = 0; i < r; ++i) {
      const int c = compare_values(rows[a][i], rows[b][i]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  long sumsq = 0;
  for (auto idx : perm) {
    t.chars.push_back(rows[idx]);
    t.degrees.push_back(degs[idx]);
    sumsq += degs[idx] * degs[idx];
  }
  if (static_cast<u64>(sumsq) != order) throw Error("character table: degree sum check failed");
  return t;
}

CycloNumber inner_product(const CharacterTable& t, const std::vector<CycloNumber>& a,
                          const std::vector<CycloNumber>& b) {
  const auto sizes = t.classes.sizes();
  CycloNumber s;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    s += CycloNumber(static_cast<long>(sizes[i])) * a[i] * b[t.inverse_class[i]];
  }
  return s * CycloNumber(mpq_class(1, static_cast<unsigned long>(t.group->order())));
}

std::size_t galois_row(const CharacterTable& t, std::size_t row, long long k) {
  std::vector<CycloNumber> v;
  v.reserve(t.chars[row].size());
  for (const auto& x : t.chars[row]) v.push_back(galois_apply(x, k, t.exponent));
  const std::size_t idx = t.find_row(v);
  if (idx == t.size()) throw Error("Galois conjugate of a character is not in the table");
  return idx;
}

std::vector<std::size_t> alpha_permutation(const CharacterTable& h_table, const GroupAutomorphism& alpha) {
  const auto ainv = alpha.inverse();
  const auto reps = h_table.classes.reps();
  const std::size_t r = reps.size();
  std::vector<std::size_t> src(r);
  for (std::size_t c = 0; c < r; ++c) src[c] = h_table.classes.class_of[ainv(reps[c])];
  std::vector<std::size_t> perm(h_table.size());
  for (std::size_t row = 0; row < h_table.size(); ++row) {
    std::vector<CycloNumber> v(r);
    for (std::size_t c = 0; c < r; ++c) v[c] = h_table.chars[row][src[c]];
    perm[row] = h_table.find_row(v);
    if (perm[row] == h_table.size()) throw InvalidInput("alpha does not act on the character table");
  }
  return perm;
}

std::vector<EtaOrbit> alpha_orbits(const CharacterTable& h_table, const GroupAutomorphism& alpha) {
  const auto perm = alpha_permutation(h_table, alpha);
  std::vector<bool> seen(perm.size(), false);
  std::vector<EtaOrbit> out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    EtaOrbit o;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      o.members.push_back(j);
    }
    std::sort(o.members.begin(), o.members.end());
    o.w = o.members.size();
    o.eta_degree = h_table.degrees[i];
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<Constituent> restrict_and_decompose(const CharacterTable& g_table, std::size_t row,
                                                const CharacterTable& h_table) {
  const std::size_t rh = h_table.classes.count();
  const auto hreps = h_table.classes.reps();
  std::vector<CycloNumber> res(rh);
  for (std::size_t c = 0; c < rh; ++c) res[c] = g_table.value(row, hreps[c]);
  std::vector<Constituent> out;
  for (std::size_t k = 0; k < h_table.size(); ++k) {
    const CycloNumber ip = inner_product(h_table, res, h_table.chars[k]);
    if (!ip.is_rational() || !ip.is_integral() || ip.rational_value() < 0)
      throw Error("restriction has a non-integral multiplicity");
    const long m = ip.rational_value().get_num().get_si();
    if (m != 0) out.push_back({k, m});
  }
  return out;
}

}  // namespace conductor
