#include "conductor/group_module.hpp"

#include <algorithm>
#include <numeric>

#include "conductor/error.hpp"

namespace conductor {

namespace {

IntMatrix int_identity(std::size_t n) {
  IntMatrix m(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix c(n, std::vector<mpz_class>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

// The G-module Hom(M, N) with F -> rho_N(g) F rho_M(g^-1), F stored row-major.
struct HomModule {
  std::size_t rm, rn, dim;
  std::vector<IntMatrix> mats;
};

HomModule hom_module(const GroupModule& m, const GroupModule& n) {
  const FiniteGroup& g = *m.group;
  HomModule h{m.rank, n.rank, m.rank * n.rank, {}};
  h.mats.resize(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    const IntMatrix& a = n.mats[x];
    const IntMatrix& b = m.mats[g.inv(x)];
    IntMatrix t(h.dim, std::vector<mpz_class>(h.dim, 0));
    for (std::size_t i = 0; i < h.rn; ++i)
      for (std::size_t j = 0; j < h.rm; ++j)
        for (std::size_t k = 0; k < h.rn; ++k) {
          if (a[i][k] == 0) continue;
          for (std::size_t l = 0; l < h.rm; ++l)
            if (b[l][j] != 0) t[i * h.rm + j][k * h.rm + l] = a[i][k] * b[l][j];
        }
    h.mats[x] = std::move(t);
  }
  return h;
}

struct CochainData {
  PadicLattice z1;  // cocycles on the generators
  PadicLattice b1;  // coboundaries (+ p^t for finite coefficients)
  std::size_t dim = 0, ngens = 0;
  HomModule hom;
};

CochainData cochains(const GroupModule& m, const GroupModule& n, const PadicContext& ctx) {
  if (m.torsion != 0) throw InvalidInput("Ext^1 requires the first module to be a lattice");
  if (m.group != n.group && m.group->order() != n.group->order())
    throw InvalidInput("modules over different groups");
  const FiniteGroup& g = *m.group;
  CochainData cd;
  cd.hom = hom_module(m, n);
  const std::size_t dim = cd.hom.dim;
  const auto& gens = g.generators();
  const std::size_t k = gens.size();
  const std::size_t vars = k * dim;
  cd.dim = dim;
  cd.ngens = k;
  // f(x) = L_x phi, phi = stacked values on generators; f(x s_j) = f(x) + x f(s_j)
  std::vector<IntMatrix> lx(g.order());
  std::vector<bool> set(g.order(), false);
  lx[0] = IntMatrix(dim, std::vector<mpz_class>(vars, 0));
  set[0] = true;
  std::vector<std::vector<mpz_class>> rows;
  std::vector<Elem> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Elem x = queue[qi];
    for (std::size_t j = 0; j < k; ++j) {
      const Elem y = g.mul(x, gens[j]);
      IntMatrix cand = lx[x];
      const IntMatrix& ax = cd.hom.mats[x];
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
          if (ax[r][c] != 0) cand[r][j * dim + c] += ax[r][c];
      if (!set[y]) {
        lx[y] = std::move(cand);
        set[y] = true;
        queue.push_back(y);
      } else {
        for (std::size_t r = 0; r < dim; ++r) {
          std::vector<mpz_class> row(vars);
          bool nz = false;
          for (std::size_t c = 0; c < vars; ++c) {
            row[c] = cand[r][c] - lx[y][r][c];
            if (row[c] != 0) nz = true;
          }
          if (nz) rows.push_back(std::move(row));
        }
      }
    }
  }
  PadicMatrix cst(ctx, std::max<std::size_t>(rows.size(), 1), vars);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < vars; ++c) cst.set(r, c, rows[r][c]);
  const int t = n.torsion;
  cd.z1 = preimage(cst, t == 0 ? kInfiniteValuation : t);

  std::vector<std::vector<mpz_class>> bgens;
  for (std::size_t b = 0; b < dim; ++b) {
    std::vector<mpz_class> v(vars, 0);
    for (std::size_t j = 0; j < k; ++j) {
      const IntMatrix& a = cd.hom.mats[gens[j]];
      for (std::size_t r = 0; r < dim; ++r) v[j * dim + r] = a[r][b] - (r == b ? 1 : 0);
    }
    bgens.push_back(std::move(v));
  }
  if (t > 0) {
    const mpz_class pt = ctx.power(t);
    for (std::size_t i = 0; i < vars; ++i) {
      std::vector<mpz_class> v(vars, 0);
      v[i] = pt;
      bgens.push_back(std::move(v));
    }
  }
  if (bgens.empty()) bgens.emplace_back(vars, 0);
  cd.b1 = hnf(PadicMatrix::from_columns(ctx, vars, bgens));
  return cd;
}

}  // namespace

GroupModule GroupModule::from_generators(std::shared_ptr<const FiniteGroup> g, const std::vector<IntMatrix>& gen_mats,
                                         int torsion) {
  const auto& gens = g->generators();
  if (gen_mats.size() != gens.size()) throw InvalidInput("need one matrix per generator");
  GroupModule m;
  m.rank = gen_mats.empty() ? 1 : gen_mats[0].size();
  m.group = g;
  m.torsion = torsion;
  m.mats.resize(g->order());
  std::vector<bool> set(g->order(), false);
  m.mats[0] = int_identity(m.rank);
  set[0] = true;
  std::vector<Elem> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Elem x = queue[qi];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Elem y = g->mul(x, gens[k]);
      IntMatrix my = int_mul(m.mats[x], gen_mats[k]);
      if (!set[y]) {
        m.mats[y] = std::move(my);
        set[y] = true;
        queue.push_back(y);
      } else if (m.mats[y] != my) {
        throw InvalidInput("module matrices do not satisfy the group relations");
      }
    }
  }
  return m;
}

GroupModule GroupModule::trivial(std::shared_ptr<const FiniteGroup> g, int torsion) {
  return from_generators(g, std::vector<IntMatrix>(g->generators().size(), int_identity(1)), torsion);
}

GroupModule GroupModule::permutation(std::shared_ptr<const FiniteGroup> g, const std::vector<Elem>& subgroup,
                                     int torsion) {
  const FiniteGroup& gr = *g;
  std::vector<std::size_t> coset(gr.order(), SIZE_MAX);
  std::size_t count = 0;
  for (Elem x = 0; x < gr.order(); ++x) {
    if (coset[x] != SIZE_MAX) continue;
    for (Elem s : subgroup) coset[gr.mul(x, s)] = count;
    ++count;
  }
  std::vector<Elem> rep(count);
  for (Elem x = gr.order(); x-- > 0;) rep[coset[x]] = x;
  std::vector<IntMatrix> mats;
  for (Elem s : gr.generators()) {
    IntMatrix a(count, std::vector<mpz_class>(count, 0));
    for (std::size_t i = 0; i < count; ++i) a[coset[gr.mul(s, rep[i])]][i] = 1;
    mats.push_back(std::move(a));
  }
  GroupModule m = from_generators(g, mats, torsion);
  m.rank = count;
  return m;
}

GroupModule GroupModule::regular(std::shared_ptr<const FiniteGroup> g, int torsion) {
  return permutation(g, {0}, torsion);
}

GroupModule GroupModule::from_representation(std::shared_ptr<const FiniteGroup> g, const Representation& rep,
                                             int torsion) {
  std::uint64_t d = 1;
  for (const auto& mat : rep.gen_images)
    for (const auto& row : mat)
      for (const auto& x : row) d = std::lcm(d, x.conductor());
  const std::size_t ph = euler_phi(d);
  std::vector<CycloNumber> basis;
  for (std::size_t j = 0; j < ph; ++j) basis.push_back(CycloNumber::root_of_unity(d, static_cast<long long>(j)));
  const std::size_t n = rep.dim * ph;
  std::vector<IntMatrix> mats;
  for (const auto& mat : rep.gen_images) {
    IntMatrix a(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < rep.dim; ++i)
      for (std::size_t j = 0; j < rep.dim; ++j)
        for (std::size_t b = 0; b < ph; ++b) {
          const auto c = (mat[i][j] * basis[b]).coeffs_at(d);
          for (std::size_t r = 0; r < ph; ++r) {
            if (c[r].get_den() != 1) throw InvalidInput("representation is not integral");
            a[i * ph + r][j * ph + b] = c[r].get_num();
          }
        }
    mats.push_back(std::move(a));
  }
  GroupModule m = from_generators(g, mats, torsion);
  m.rank = n;
  return m;
}

GroupModule GroupModule::reduced(int t) const {
  GroupModule m = *this;
  m.torsion = t;
  return m;
}

IntMatrix GroupModule::act(const std::vector<mpz_class>& z) const {
  IntMatrix out(rank, std::vector<mpz_class>(rank, 0));
  for (std::size_t x = 0; x < z.size(); ++x) {
    if (z[x] == 0) continue;
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j)
        if (mats[x][i][j] != 0) out[i][j] += z[x] * mats[x][i][j];
  }
  return out;
}

std::vector<int> ext1(const GroupModule& m, const GroupModule& n, const PadicContext& ctx) {
  const CochainData cd = cochains(m, n, ctx);
  if (cd.z1.rank() == 0) return {};
  std::vector<std::vector<mpz_class>> coords;
  for (std::size_t c = 0; c < cd.b1.rank(); ++c) {
    auto x = lattice_coordinates(cd.b1.basis().column(c), cd.z1);
    if (!x) throw Error("coboundary is not a cocycle");
    coords.push_back(std::move(*x));
  }
  const auto sm = smith(PadicMatrix::from_columns(ctx, cd.z1.rank(), coords));
  std::vector<int> out;
  for (std::size_t i = 0; i < cd.z1.rank(); ++i) {
    const int v = i < sm.size() ? sm[i] : kInfiniteValuation;
    if (v == kInfiniteValuation) throw Error("Ext^1 is not finite");
    if (v > 0) out.push_back(v);
  }
  return out;
}

bool annihilates_ext1(const std::vector<mpz_class>& z, const GroupModule& m, const GroupModule& n,
                      const PadicContext& ctx) {
  return endomorphism_annihilates_ext1(m.act(z), m, n, ctx);
}

bool endomorphism_annihilates_ext1(const IntMatrix& zm, const GroupModule& m, const GroupModule& n,
                                   const PadicContext& ctx) {
  const CochainData cd = cochains(m, n, ctx);
  const std::size_t rm = cd.hom.rm, rn = cd.hom.rn;
  for (std::size_t c = 0; c < cd.z1.rank(); ++c) {
    const auto phi = cd.z1.basis().column(c);
    std::vector<mpz_class> out(phi.size(), 0);
    for (std::size_t j = 0; j < cd.ngens; ++j)
      for (std::size_t i = 0; i < rn; ++i)
        for (std::size_t l = 0; l < rm; ++l) {
          mpz_class s = 0;
          for (std::size_t k = 0; k < rm; ++k) s += phi[j * cd.dim + i * rm + k] * zm[k][l];
          out[j * cd.dim + i * rm + l] = s;
        }
    if (!lattice_membership(out, cd.b1)) return false;
  }
  return true;
}

}  // namespace conductor
