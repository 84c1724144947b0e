#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "conductor/cyclo.hpp"

namespace conductor {

/// Abelian extension of Q_p: the fixed field of `stab` inside Q_p(zeta_m).
///
/// The local Galois group of Q_p(zeta_m)/Q_p is identified with
/// D = {a in (Z/m)^x : a mod m' in <p>}, m = p^k m'. Fields compare equal
/// when they are the same subfield, whatever their presentation.
class AbelianLocalField {
 public:
  AbelianLocalField() : AbelianLocalField(3, 1, {}) {}
  AbelianLocalField(unsigned p, std::uint64_t m, const std::vector<std::uint64_t>& stab_gens);

  static AbelianLocalField rational(unsigned p) { return AbelianLocalField(p, 1, {}); }
  static AbelianLocalField cyclotomic(unsigned p, std::uint64_t m) { return AbelianLocalField(p, m, {}); }
  static AbelianLocalField unramified(unsigned p, unsigned f);

  unsigned p() const { return p_; }
  std::uint64_t m() const { return m_; }
  const std::vector<std::uint64_t>& stab() const { return stab_; }  // sorted residues mod m
  std::vector<std::uint64_t> stab_generators() const;
  int e() const { return e_; }
  int f() const { return f_; }
  int degree() const { return e_ * f_; }
  int d_abs() const { return d_abs_; }

  /// Same field presented inside Q_p(zeta_M); m must divide M.
  AbelianLocalField lift(std::uint64_t M) const;

  std::string describe() const;

  friend bool operator==(const AbelianLocalField& a, const AbelianLocalField& b);

 private:
  void finish();

  unsigned p_;
  std::uint64_t m_;
  std::vector<std::uint64_t> stab_;
  int e_ = 1, f_ = 1, d_abs_ = 0;
};

/// The group D above as sorted residues mod m.
std::vector<std::uint64_t> local_galois_group(unsigned p, std::uint64_t m);
/// Inertia subgroup {a in D : a = 1 mod m'}.
std::vector<std::uint64_t> inertia_group(unsigned p, std::uint64_t m);

/// Smallest abelian field containing base and all values.
AbelianLocalField field_of_values(std::span<const CycloNumber> vals, const AbelianLocalField& base);

/// base(zeta_n).
AbelianLocalField adjoin_roots_of_unity(const AbelianLocalField& base, std::uint64_t n);

/// True when small is a subfield of big.
bool contains(const AbelianLocalField& big, const AbelianLocalField& small);

/// Residues mod n of the elements of Gal(Q_p(zeta_M)/K), M = lcm(m_K, n): the
/// automorphisms sigma_a fixing K, acting on Q_p(zeta_n). Sorted, distinct.
std::vector<std::uint64_t> galois_residues(const AbelianLocalField& k, std::uint64_t n);

/// Valuation of the different of the field over Q_p in its own normalized
/// valuation, via the conductor-discriminant formula.
int different_exponent(const AbelianLocalField& field);

struct IdealValuation {
  AbelianLocalField field;
  long v = 0;
  friend bool operator==(const IdealValuation&, const IdealValuation&) = default;
};

/// Inverse different of K_chi over K: v = -(d_abs(K_chi) - e(K_chi/K) d_abs(K)).
IdealValuation relative_inverse_different(const AbelianLocalField& k_chi, const AbelianLocalField& k);

}  // namespace conductor
