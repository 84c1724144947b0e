#include "conductor/padic.hpp"

#include <algorithm>
#include <string>

#include "conductor/error.hpp"

namespace conductor {

PadicContext::PadicContext(unsigned p_, int n) : p(p_), precision(n) {
  if (n <= 0) throw InvalidInput("p-adic precision must be positive");
  mpz_ui_pow_ui(modulus.get_mpz_t(), p, static_cast<unsigned long>(n));
}

PadicContext PadicContext::for_group_order(unsigned p, std::size_t order, int extra) {
  int v = 0;
  for (std::size_t o = order; o % p == 0; o /= p) ++v;
  return PadicContext(p, 2 * v + 24 + extra);
}

mpz_class PadicContext::reduce(const mpz_class& x) const {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

mpz_class PadicContext::from_rational(const mpq_class& q) const {
  if (padic_valuation(mpq_class(q.get_den()), p) > 0)
    throw InvalidInput("rational with p in the denominator is not a p-adic integer");
  mpz_class inv;
  mpz_class den = reduce(q.get_den());
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) == 0)
    throw InvalidInput("denominator not invertible mod p^N");
  return reduce(q.get_num() * inv);
}

int PadicContext::valuation(const mpz_class& x) const {
  mpz_class r = reduce(x);
  if (r == 0) return kInfiniteValuation;
  return padic_valuation(r, p);
}

mpz_class PadicContext::unit_inverse(const mpz_class& u) const {
  mpz_class inv;
  mpz_class r = reduce(u);
  if (mpz_invert(inv.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t()) == 0)
    throw InvalidInput("element is not a p-adic unit");
  return inv;
}

mpz_class PadicContext::power(int k) const {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(k));
  return r;
}

int padic_valuation(const mpz_class& x, unsigned p) {
  if (x == 0) return kInfiniteValuation;
  mpz_class y = x;
  int v = 0;
  while (mpz_divisible_ui_p(y.get_mpz_t(), p)) {
    mpz_divexact_ui(y.get_mpz_t(), y.get_mpz_t(), p);
    ++v;
  }
  return v;
}

int padic_valuation(const mpq_class& x, unsigned p) {
  if (x == 0) return kInfiniteValuation;
  return padic_valuation(mpz_class(x.get_num()), p) - padic_valuation(mpz_class(x.get_den()), p);
}

PadicApprox PadicApprox::of(const PadicContext& ctx, const mpz_class& v) {
  return PadicApprox{ctx.p, ctx.precision, ctx.reduce(v)};
}

int PadicApprox::valuation() const {
  if (value == 0) return kInfiniteValuation;
  return std::min(padic_valuation(value, p), precision);
}

namespace {
PadicApprox combine(const PadicApprox& a, const PadicApprox& b, const mpz_class& v) {
  PadicContext ctx(a.p, std::min(a.precision, b.precision));
  return PadicApprox::of(ctx, v);
}
}  // namespace

PadicApprox PadicApprox::operator+(const PadicApprox& o) const { return combine(*this, o, value + o.value); }
PadicApprox PadicApprox::operator-(const PadicApprox& o) const { return combine(*this, o, value - o.value); }
PadicApprox PadicApprox::operator*(const PadicApprox& o) const {
  // a known mod p^N, b mod p^M: product known mod p^{min(N + v(b), M + v(a))}
  const int va = valuation(), vb = o.valuation();
  const long na = static_cast<long>(precision) + (vb == kInfiniteValuation ? o.precision : vb);
  const long nb = static_cast<long>(o.precision) + (va == kInfiniteValuation ? precision : va);
  PadicContext ctx(p, static_cast<int>(std::min({na, nb, static_cast<long>(std::max(precision, o.precision))})));
  return PadicApprox::of(ctx, value * o.value);
}

PadicApprox PadicApprox::divide_by_p_power(int k) const {
  if (k >= precision) throw PrecisionExhausted("division by p^" + std::to_string(k) + " exhausts precision");
  if (valuation() < k) throw InvalidInput("not divisible by p^" + std::to_string(k));
  PadicContext ctx(p, precision - k);
  mpz_class pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(k));
  return PadicApprox::of(ctx, value / pk);
}

PadicApprox PadicApprox::unit_inverse() const {
  PadicContext ctx(p, precision);
  return PadicApprox::of(ctx, ctx.unit_inverse(value));
}

PadicMatrix::PadicMatrix(PadicContext ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

std::vector<mpz_class> PadicMatrix::column(std::size_t c) const {
  std::vector<mpz_class> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

PadicMatrix PadicMatrix::from_columns(const PadicContext& ctx, std::size_t rows,
                                      std::span<const std::vector<mpz_class>> cols) {
  PadicMatrix m(ctx, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw InvalidInput("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, cols[c][r]);
  }
  return m;
}

PadicMatrix PadicMatrix::with_columns(std::span<const std::vector<mpz_class>> cols) const {
  return from_columns(ctx_, rows_, cols);
}

PadicMatrix PadicMatrix::identity(const PadicContext& ctx, std::size_t n) {
  PadicMatrix m(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

int PadicMatrix::min_valuation() const {
  int v = kInfiniteValuation;
  for (const auto& x : a_) v = std::min(v, ctx_.valuation(x));
  return v;
}

void PadicMatrix::swap_columns(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void PadicMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void PadicMatrix::scale_column(std::size_t c, const mpz_class& f) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = ctx_.reduce(at(r, c) * f);
}

void PadicMatrix::scale_row(std::size_t r, const mpz_class& f) {
  for (std::size_t c = 0; c < cols_; ++c) at(r, c) = ctx_.reduce(at(r, c) * f);
}

void PadicMatrix::add_column_multiple(std::size_t dst, std::size_t src, const mpz_class& f) {
  if (f == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    if (at(r, src) != 0) at(r, dst) = ctx_.reduce(at(r, dst) + f * at(r, src));
}

void PadicMatrix::add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& f) {
  if (f == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    if (at(src, c) != 0) at(dst, c) = ctx_.reduce(at(dst, c) + f * at(src, c));
}

long PadicLattice::index_valuation() const {
  long s = 0;
  for (int v : pivot_vals_) s += v;
  return s;
}

namespace {

void certify(const PadicContext& ctx, int v, int guard) {
  if (v >= ctx.precision - guard)
    throw PrecisionExhausted("pivot valuation " + std::to_string(v) + " cannot be certified at precision " +
                             std::to_string(ctx.precision));
}

}  // namespace

PadicLattice hnf(const PadicMatrix& mat, int guard) {
  const PadicContext& ctx = mat.context();
  PadicMatrix m = mat;
  PadicLattice out;
  std::size_t k = 0;
  for (std::size_t r = 0; r < m.rows() && k < m.cols(); ++r) {
    std::size_t best = m.cols();
    int bv = kInfiniteValuation;
    for (std::size_t c = k; c < m.cols(); ++c) {
      const int v = ctx.valuation(m.at(r, c));
      if (v < bv) {
        bv = v;
        best = c;
      }
    }
    if (best == m.cols()) continue;
    certify(ctx, bv, guard);
    m.swap_columns(k, best);
    const mpz_class pv = ctx.power(bv);
    m.scale_column(k, ctx.unit_inverse(m.at(r, k) / pv));
    for (std::size_t c = k + 1; c < m.cols(); ++c) {
      if (m.at(r, c) == 0) continue;
      m.add_column_multiple(c, k, -(m.at(r, c) / pv));
    }
    for (std::size_t j = 0; j < k; ++j) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), m.at(r, j).get_mpz_t(), pv.get_mpz_t());
      m.add_column_multiple(j, k, -q);
    }
    out.pivot_rows_.push_back(r);
    out.pivot_vals_.push_back(bv);
    ++k;
  }
  PadicMatrix basis(ctx, m.rows(), k);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < k; ++c) basis.at(r, c) = m.at(r, c);
  out.basis_ = std::move(basis);
  return out;
}

std::optional<std::vector<mpz_class>> lattice_coordinates(std::span<const mpz_class> x, const PadicLattice& lat) {
  const PadicMatrix& b = lat.basis();
  const PadicContext& ctx = b.context();
  if (x.size() != b.rows()) throw InvalidInput("ambient rank mismatch in membership test");
  std::vector<mpz_class> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = ctx.reduce(x[i]);
  std::vector<mpz_class> coords(lat.rank(), 0);
  std::size_t k = 0;
  for (std::size_t r = 0; r < y.size(); ++r) {
    if (k < lat.rank() && lat.pivot_rows()[k] == r) {
      const int v = lat.pivot_valuations()[k];
      if (y[r] != 0 && ctx.valuation(y[r]) < v) return std::nullopt;
      const mpz_class c = y[r] / ctx.power(v);
      coords[k] = c;
      for (std::size_t i = r; i < y.size(); ++i)
        if (b.at(i, k) != 0) y[i] = ctx.reduce(y[i] - c * b.at(i, k));
      ++k;
    } else if (y[r] != 0) {
      return std::nullopt;
    }
  }
  return coords;
}

bool lattice_membership(std::span<const mpz_class> x, const PadicLattice& lat) {
  return lattice_coordinates(x, lat).has_value();
}

bool lattice_contains(const PadicLattice& big, const PadicLattice& small) {
  for (std::size_t c = 0; c < small.rank(); ++c)
    if (!lattice_membership(small.basis().column(c), big)) return false;
  return true;
}

int quotient_annihilator(const PadicLattice& l1, const PadicLattice& l2) {
  const PadicContext& ctx = l1.basis().context();
  if (!lattice_contains(l1, l2)) throw InvalidInput("quotient_annihilator requires L2 inside L1");
  int k = 0;
  for (std::size_t c = 0; c < l1.rank(); ++c) {
    auto col = l1.basis().column(c);
    int j = 0;
    for (;; ++j) {
      if (j >= ctx.precision - kDefaultGuard)
        throw PrecisionExhausted("quotient annihilator exceeds working precision");
      std::vector<mpz_class> scaled(col.size());
      const mpz_class pj = ctx.power(j);
      for (std::size_t i = 0; i < col.size(); ++i) scaled[i] = col[i] * pj;
      if (lattice_membership(scaled, l2)) break;
    }
    k = std::max(k, j);
  }
  return k;
}

SmithTransform smith_with_transform(const PadicMatrix& mat, int guard) {
  const PadicContext& ctx = mat.context();
  PadicMatrix a = mat;
  PadicMatrix v = PadicMatrix::identity(ctx, mat.cols());
  SmithTransform out;
  const std::size_t steps = std::min(a.rows(), a.cols());
  std::size_t k = 0;
  for (; k < steps; ++k) {
    int bv = kInfiniteValuation;
    std::size_t br = 0, bc = 0;
    for (std::size_t r = k; r < a.rows(); ++r)
      for (std::size_t c = k; c < a.cols(); ++c) {
        const int val = ctx.valuation(a.at(r, c));
        if (val < bv) {
          bv = val;
          br = r;
          bc = c;
        }
      }
    if (bv == kInfiniteValuation) break;
    certify(ctx, bv, guard);
    a.swap_rows(k, br);
    a.swap_columns(k, bc);
    v.swap_columns(k, bc);
    const mpz_class pv = ctx.power(bv);
    const mpz_class uinv = ctx.unit_inverse(a.at(k, k) / pv);
    a.scale_column(k, uinv);
    v.scale_column(k, uinv);
    for (std::size_t r = k + 1; r < a.rows(); ++r)
      if (a.at(r, k) != 0) a.add_row_multiple(r, k, -(a.at(r, k) / pv));
    for (std::size_t c = k + 1; c < a.cols(); ++c) {
      if (a.at(k, c) == 0) continue;
      const mpz_class f = -(a.at(k, c) / pv);
      a.add_column_multiple(c, k, f);
      v.add_column_multiple(c, k, f);
    }
    out.valuations.push_back(bv);
  }
  out.valuations.resize(mat.cols(), kInfiniteValuation);
  out.column_transform = std::move(v);
  return out;
}

std::vector<int> smith(const PadicMatrix& mat, int guard) {
  auto t = smith_with_transform(mat, guard);
  t.valuations.resize(std::min(mat.rows(), mat.cols()));
  return t.valuations;
}

PadicLattice preimage(const PadicMatrix& a, int s, int guard) {
  const PadicContext& ctx = a.context();
  auto t = smith_with_transform(a, guard);
  std::vector<std::vector<mpz_class>> cols;
  for (std::size_t i = 0; i < a.cols(); ++i) {
    const int d = t.valuations[i];
    auto col = t.column_transform.column(i);
    if (d == kInfiniteValuation) {
      cols.push_back(std::move(col));
      continue;
    }
    if (s == kInfiniteValuation) continue;
    const int e = std::max(0, s - d);
    const mpz_class pe = ctx.power(e);
    for (auto& x : col) x *= pe;
    cols.push_back(std::move(col));
  }
  return hnf(PadicMatrix::from_columns(ctx, a.cols(), cols), guard);
}

}  // namespace conductor
