#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace conductor {

std::uint64_t euler_phi(std::uint64_t m);
std::vector<std::uint64_t> prime_factors(std::uint64_t m);

/// Coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<mpz_class>& cyclotomic_polynomial(std::uint64_t m);

/// An exact element of Q(zeta_m).
///
/// Stored in the power basis zeta^0..zeta^{phi(m)-1} reduced modulo Phi_m as
/// integer numerators over one positive common denominator. The conductor is
/// always the minimal one and never 2 mod 4, so equality is componentwise.
class CycloNumber {
 public:
  CycloNumber() : m_(1), num_{0}, den_(1) {}
  CycloNumber(long v) : m_(1), num_{mpz_class(v)}, den_(1) {}  // NOLINT
  CycloNumber(const mpq_class& v);                             // NOLINT

  /// zeta_n^k, canonicalized.
  static CycloNumber root_of_unity(std::uint64_t n, long long k);

  /// Element sum_j coeffs[j] * zeta_M^j for an arbitrary exponent vector of
  /// length M (not necessarily reduced).
  static CycloNumber from_exponents(std::uint64_t M, const std::vector<mpq_class>& coeffs);

  /// Element sum_j c_j zeta_m^j with c already reduced modulo Phi_m.
  static CycloNumber from_power_basis(std::uint64_t m, const std::vector<mpq_class>& coeffs);

  std::uint64_t conductor() const { return m_; }
  std::vector<mpq_class> coeffs() const;
  /// Power-basis coordinates after embedding into Q(zeta_M); requires conductor | M.
  std::vector<mpq_class> coeffs_at(std::uint64_t M) const;
  const std::vector<mpz_class>& numerators() const { return num_; }
  const mpz_class& denominator() const { return den_; }

  bool is_zero() const { return m_ == 1 && num_[0] == 0; }
  bool is_rational() const { return m_ == 1; }
  bool is_integral() const { return den_ == 1; }
  mpq_class rational_value() const;  // requires is_rational()

  CycloNumber operator-() const;
  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator-=(const CycloNumber& o);
  CycloNumber& operator*=(const CycloNumber& o);
  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
  CycloNumber inverse() const;  // throws InvalidInput on zero
  friend CycloNumber operator/(const CycloNumber& a, const CycloNumber& b) { return a * b.inverse(); }

  friend bool operator==(const CycloNumber& a, const CycloNumber& b) {
    return a.m_ == b.m_ && a.den_ == b.den_ && a.num_ == b.num_;
  }
  /// Deterministic total order: conductor, then coefficients as rationals.
  friend std::strong_ordering operator<=>(const CycloNumber& a, const CycloNumber& b);

  std::string to_string() const;

 private:
  CycloNumber(std::uint64_t m, std::vector<mpz_class> num, mpz_class den, bool minimal = false);
  void normalize_content();
  void minimize();
  std::vector<mpz_class> dense_at(std::uint64_t M) const;  // numerators on zeta_M^j, j < M
  static CycloNumber from_dense(std::uint64_t M, std::vector<mpz_class> dense, mpz_class den);

  friend CycloNumber galois_apply_unchecked(const CycloNumber&, std::uint64_t k, std::uint64_t modulus);

  std::uint64_t m_;
  std::vector<mpz_class> num_;
  mpz_class den_;
};

/// sigma_k: zeta_m -> zeta_m^k with m the conductor of x. Throws InvalidInput
/// when gcd(k, m) != 1.
CycloNumber galois_apply(const CycloNumber& x, long long k);

/// sigma_k on Q(zeta_modulus) applied to x; conductor(x) must divide modulus
/// and gcd(k, modulus) must be 1.
CycloNumber galois_apply(const CycloNumber& x, long long k, std::uint64_t modulus);

CycloNumber complex_conjugate(const CycloNumber& x);

struct MinimalConductor {
  std::uint64_t conductor;
  CycloNumber value;
};

/// Smallest m' with x in Q(zeta_m'), and x rewritten there. Values are kept
/// canonical already, so this reports the stored representation.
MinimalConductor minimal_conductor(const CycloNumber& x);

/// Field-membership test used by minimal_conductor and local-field code:
/// true iff x is fixed by every sigma_a with a = 1 mod d (a taken mod lcm).
bool lies_in_cyclotomic_subfield(const CycloNumber& x, std::uint64_t d);

}  // namespace conductor
