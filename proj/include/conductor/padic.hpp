#pragma once

#include <gmpxx.h>

#include <climits>
#include <optional>
#include <span>
#include <vector>

namespace conductor {

/// Valuation reported for values that vanish at the working precision.
inline constexpr int kInfiniteValuation = INT_MAX;

/// Prime and working precision N; every entry is a residue mod p^N in [0, p^N).
struct PadicContext {
  unsigned p = 3;
  int precision = 32;
  mpz_class modulus;  // p^N

  PadicContext() = default;
  PadicContext(unsigned p_, int n);
  /// Default precision 2 v_p(order) + 24.
  static PadicContext for_group_order(unsigned p, std::size_t order, int extra = 0);

  mpz_class reduce(const mpz_class& x) const;
  mpz_class from_rational(const mpq_class& q) const;  // requires v_p(q) >= 0
  int valuation(const mpz_class& x) const;            // kInfiniteValuation for 0 mod p^N
  mpz_class unit_inverse(const mpz_class& u) const;
  mpz_class power(int k) const;  // p^k
};

int padic_valuation(const mpz_class& x, unsigned p);  // kInfiniteValuation for 0
int padic_valuation(const mpq_class& x, unsigned p);

/// A p-adic integer known modulo p^N. Multiplication keeps N; exact division
/// by p^k drops the precision to N-k.
struct PadicApprox {
  unsigned p = 3;
  int precision = 0;
  mpz_class value;

  static PadicApprox of(const PadicContext& ctx, const mpz_class& v);
  int valuation() const;
  PadicApprox operator+(const PadicApprox& o) const;
  PadicApprox operator-(const PadicApprox& o) const;
  PadicApprox operator*(const PadicApprox& o) const;
  /// Divide by p^k exactly (throws PrecisionExhausted when valuation < k or k >= N).
  PadicApprox divide_by_p_power(int k) const;
  PadicApprox unit_inverse() const;
};

/// Dense row-major matrix of residues mod p^N.
class PadicMatrix {
 public:
  PadicMatrix() = default;
  PadicMatrix(PadicContext ctx, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PadicContext& context() const { return ctx_; }
  mpz_class& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const mpz_class& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, const mpz_class& v) { at(r, c) = ctx_.reduce(v); }
  std::vector<mpz_class> column(std::size_t c) const;
  PadicMatrix with_columns(std::span<const std::vector<mpz_class>> cols) const;
  static PadicMatrix from_columns(const PadicContext& ctx, std::size_t rows,
                                  std::span<const std::vector<mpz_class>> cols);
  static PadicMatrix identity(const PadicContext& ctx, std::size_t n);
  /// Lowest entry valuation; kInfiniteValuation for the zero matrix.
  int min_valuation() const;
  bool operator==(const PadicMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  void swap_columns(std::size_t i, std::size_t j);
  void swap_rows(std::size_t i, std::size_t j);
  void scale_column(std::size_t c, const mpz_class& f);
  void add_column_multiple(std::size_t dst, std::size_t src, const mpz_class& f);  // dst += f*src
  void add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& f);
  void scale_row(std::size_t r, const mpz_class& f);

 private:
  PadicContext ctx_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpz_class> a_;
};

/// Z_p-lattice in Z_p^ambient given by its canonical column HNF: lower
/// echelon, pivots exact powers of p, entries left of a pivot reduced into
/// [0, pivot).
class PadicLattice {
 public:
  PadicLattice() = default;
  std::size_t ambient() const { return basis_.rows(); }
  std::size_t rank() const { return basis_.cols(); }
  const PadicMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_rows() const { return pivot_rows_; }
  const std::vector<int>& pivot_valuations() const { return pivot_vals_; }
  /// Sum of pivot valuations = length of Z_p^ambient / L for full rank.
  long index_valuation() const;
  bool operator==(const PadicLattice& o) const { return basis_ == o.basis_; }

  friend PadicLattice hnf(const PadicMatrix& mat, int guard);

 private:
  PadicMatrix basis_;
  std::vector<std::size_t> pivot_rows_;
  std::vector<int> pivot_vals_;
};

inline constexpr int kDefaultGuard = 8;

/// Canonical column HNF of the span of the columns of `mat`.
PadicLattice hnf(const PadicMatrix& mat, int guard = kDefaultGuard);

/// Coordinates of x in the HNF basis of L, or nothing when x is not in L.
std::optional<std::vector<mpz_class>> lattice_coordinates(std::span<const mpz_class> x, const PadicLattice& lat);
bool lattice_membership(std::span<const mpz_class> x, const PadicLattice& lat);
bool lattice_contains(const PadicLattice& big, const PadicLattice& small);

/// Smallest k with p^k L1 contained in L2 (L1 must contain L2).
int quotient_annihilator(const PadicLattice& l1, const PadicLattice& l2);

/// Elementary divisor valuations in increasing order; kInfiniteValuation
/// marks zero divisors. Length min(rows, cols).
std::vector<int> smith(const PadicMatrix& mat, int guard = kDefaultGuard);

struct SmithTransform {
  std::vector<int> valuations;  // length cols; kInfiniteValuation past the rank
  PadicMatrix column_transform; // V with  U * A * V = diag
};
SmithTransform smith_with_transform(const PadicMatrix& mat, int guard = kDefaultGuard);

/// {a in Z_p^cols : A a in p^s Z_p^rows}; s = kInfiniteValuation gives the kernel.
PadicLattice preimage(const PadicMatrix& a, int s, int guard = kDefaultGuard);

}  // namespace conductor
