#include "conductor/fitting.hpp"

#include <algorithm>

#include "conductor/error.hpp"

namespace conductor {

GroupRingElement gr_mul(const FiniteGroup& g, const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out(g.order(), 0);
  for (Elem x = 0; x < a.size(); ++x) {
    if (a[x] == 0) continue;
    for (Elem y = 0; y < b.size(); ++y)
      if (b[y] != 0) out[g.mul(x, y)] += a[x] * b[y];
  }
  return out;
}

GroupRingMatrix gr_matmul(const FiniteGroup& g, const GroupRingMatrix& a, const GroupRingMatrix& b) {
  if (a.empty() || b.empty() || a[0].size() != b.size()) throw InvalidInput("matrix shapes do not match");
  GroupRingMatrix out(a.size(), std::vector<GroupRingElement>(b[0].size(), GroupRingElement(g.order(), 0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b[0].size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k) {
        const auto t = gr_mul(g, a[i][k], b[k][j]);
        for (std::size_t x = 0; x < t.size(); ++x) out[i][j][x] += t[x];
      }
  return out;
}

GroupRingElement gr_basis(const FiniteGroup& g, Elem x, long coeff) {
  GroupRingElement e(g.order(), 0);
  e[x] = coeff;
  return e;
}

SplitGroup split_group(const std::string& name) {
  SplitGroup sg;
  sg.name = name;
  sg.group = catalog_group(name);
  sg.table = character_table(sg.group);
  const auto reps = catalog_representations(name, sg.table);
  sg.images.resize(sg.table.size());
  sg.dims.resize(sg.table.size());
  for (const auto& rep : reps) {
    sg.images[rep.character] = representation_images(*sg.group, rep);
    sg.dims[rep.character] = rep.dim;
  }
  return sg;
}

namespace {

void check_shape(const FiniteGroup& g, const GroupRingMatrix& x, std::size_t cols) {
  for (const auto& row : x) {
    if (row.size() != cols) throw InvalidInput("ragged presentation matrix");
    for (const auto& e : row)
      if (e.size() != g.order()) throw InvalidInput("group ring element has the wrong length");
  }
}

}  // namespace

std::vector<CycloNumber> reduced_norm(const SplitGroup& sg, const GroupRingMatrix& x) {
  const FiniteGroup& g = *sg.group;
  const std::size_t b = x.size();
  check_shape(g, x, b);
  std::vector<CycloNumber> out(sg.table.size());
  for (std::size_t row = 0; row < sg.table.size(); ++row) {
    const std::size_t d = sg.dims[row];
    CycloMatrix block(b * d, std::vector<CycloNumber>(b * d));
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j)
        for (Elem e = 0; e < g.order(); ++e) {
          if (x[i][j][e] == 0) continue;
          const CycloNumber c{mpq_class(x[i][j][e])};
          for (std::size_t r = 0; r < d; ++r)
            for (std::size_t s = 0; s < d; ++s) block[i * d + r][j * d + s] += c * sg.images[row][e][r][s];
        }
    out[row] = b == 0 ? CycloNumber(1) : matrix_det(std::move(block));
  }
  return out;
}

FittingGenerators fitting_generators(const SplitGroup& sg, const PresentationMatrix& h) {
  check_shape(*sg.group, h.entries, h.b);
  if (h.entries.size() != h.a) throw InvalidInput("presentation row count differs from a");
  FittingGenerators out;
  if (h.a < h.b) {
    out.zero = true;
    return out;
  }
  std::vector<bool> mask(h.a, false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(h.b), true);
  do {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < h.a; ++i)
      if (mask[i]) rows.push_back(i);
    out.row_sets.push_back(std::move(rows));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  out.generators.resize(out.row_sets.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < out.row_sets.size(); ++k) {
    GroupRingMatrix sub;
    for (std::size_t i : out.row_sets[k]) sub.push_back(h.entries[i]);
    out.generators[k] = reduced_norm(sg, sub);
  }
  return out;
}

GroupRingElement group_ring_det(const FiniteGroup& g, const GroupRingMatrix& x) {
  const std::size_t n = x.size();
  if (n == 0) return gr_basis(g, 0);
  if (n == 1) return x[0][0];
  GroupRingElement out(g.order(), 0);
  for (std::size_t j = 0; j < n; ++j) {
    GroupRingMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<GroupRingElement> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(x[i][k]);
      minor.push_back(std::move(row));
    }
    const auto t = gr_mul(g, x[0][j], group_ring_det(g, minor));
    for (std::size_t e = 0; e < t.size(); ++e) out[e] += (j % 2 == 0) ? t[e] : mpz_class(-t[e]);
  }
  return out;
}

bool commutative_degeneration_check(const SplitGroup& sg, const PresentationMatrix& h) {
  const FiniteGroup& g = *sg.group;
  if (!g.is_abelian()) throw InvalidInput("commutative degeneration needs an abelian group");
  const FittingGenerators fg = fitting_generators(sg, h);
  if (fg.zero) return h.a < h.b;
  for (std::size_t k = 0; k < fg.row_sets.size(); ++k) {
    GroupRingMatrix sub;
    for (std::size_t i : fg.row_sets[k]) sub.push_back(h.entries[i]);
    const GroupRingElement det = group_ring_det(g, sub);
    for (std::size_t row = 0; row < sg.table.size(); ++row) {
      CycloNumber v;
      for (Elem e = 0; e < g.order(); ++e)
        if (det[e] != 0) v += CycloNumber(mpq_class(det[e])) * sg.table.value(row, e);
      if (v != fg.generators[k][row]) return false;
    }
  }
  return true;
}

bool fitting_annihilation_check(const SplitGroup& sg, const FiniteConductorReport& report,
                                const PresentationMatrix& h, const PadicContext& ctx) {
  const FittingGenerators fg = fitting_generators(sg, h);
  if (fg.zero) return true;
  const FiniteGroup& g = *sg.group;
  const CharacterTable& t = sg.table;
  const std::size_t order = g.order();
  const std::size_t r = t.classes.count();
  const auto reps = t.classes.reps();
  const auto sizes = t.classes.sizes();

  // prods[k][c][x]: coefficient at x of (class sum c) * generator k.
  std::vector<std::vector<std::vector<mpq_class>>> prods(fg.generators.size());
  int denom = 0;
  for (std::size_t k = 0; k < fg.generators.size(); ++k) {
    prods[k].assign(r, std::vector<mpq_class>(order));
    for (std::size_t c = 0; c < r; ++c)
      for (Elem x = 0; x < order; ++x) {
        CycloNumber s;
        for (std::size_t row = 0; row < t.size(); ++row) {
          const auto& f = fg.generators[k][row];
          if (f.is_zero()) continue;
          s += t.chars[row][c] * f * t.value(row, g.inv(x));
        }
        if (!s.is_rational()) throw InvalidInput("reduced norm is not Galois coherent");
        mpq_class q = s.rational_value() * static_cast<long>(sizes[c]) / static_cast<long>(order);
        q.canonicalize();
        if (q != 0) denom = std::max(denom, -padic_valuation(q, ctx.p));
        prods[k][c][x] = q;
      }
  }

  const PadicContext wide(ctx.p, ctx.precision + denom);
  const PadicLattice cond = formula_conductor_lattice(t, report, wide);

  // Relations: g * (row i of h) for every g and i, in coordinates (j, x) -> j*|G| + x.
  std::vector<std::vector<mpz_class>> cols;
  for (std::size_t i = 0; i < h.a; ++i)
    for (Elem y = 0; y < order; ++y) {
      std::vector<mpz_class> v(h.b * order, 0);
      for (std::size_t j = 0; j < h.b; ++j) {
        const auto e = gr_mul(g, gr_basis(g, y), h.entries[i][j]);
        for (Elem x = 0; x < order; ++x) v[j * order + x] = e[x];
      }
      cols.push_back(std::move(v));
    }
  // coker(h) may have positive rank; membership is decided in im(h) + p^K Lambda^b
  const int k_cut = ctx.precision - kDefaultGuard - 1;
  if (k_cut < 1) throw PrecisionExhausted("precision too small for the Fitting check");
  for (std::size_t i = 0; i < h.b * order; ++i) {
    std::vector<mpz_class> v(h.b * order, 0);
    v[i] = ctx.power(k_cut);
    cols.push_back(std::move(v));
  }
  const PadicLattice rel = hnf(PadicMatrix::from_columns(ctx, h.b * order, cols));

  for (std::size_t k = 0; k < prods.size(); ++k) {
    for (std::size_t col = 0; col < cond.rank(); ++col) {
      std::vector<mpz_class> y(order);
      for (Elem x = 0; x < order; ++x) {
        mpq_class s = 0;
        for (std::size_t c = 0; c < r; ++c) s += mpq_class(cond.basis().at(c, col)) * prods[k][c][x];
        s.canonicalize();
        if (s != 0 && padic_valuation(s, ctx.p) < 0) return false;
        y[x] = ctx.from_rational(s);
      }
      for (std::size_t j = 0; j < h.b; ++j) {
        std::vector<mpz_class> v(h.b * order, 0);
        for (Elem x = 0; x < order; ++x) v[j * order + x] = y[x];
        if (!lattice_membership(v, rel)) return false;
      }
    }
  }
  return true;
}

}  // namespace conductor
