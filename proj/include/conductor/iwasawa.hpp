#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "conductor/chartab.hpp"
#include "conductor/group.hpp"
#include "conductor/kernels.hpp"
#include "conductor/local_field.hpp"

namespace conductor {

/// One equivalence class chi/~ : a gamma-orbit of Irr(H) together with its
/// Galois conjugates over K.
struct ChiClass {
  std::vector<EtaOrbit> orbits;  // sorted by first member; orbits[0] carries chi
  std::size_t w = 1;
  long eta_degree = 1;
  long chi_degree = 1;
  AbelianLocalField field;  // K_chi = K(chi(h) | h in H)
  mpq_class multiplier;     // |H| w / chi(1) = |H| / eta(1)
  int multiplier_vp = 0;
  IdealValuation invdiff;
  std::size_t embedding_exponent = 1;  // p^n / w
  long total_valuation = 0;            // e(K_chi/Q_p) v_p(multiplier) + invdiff.v
  std::optional<long> n_chi, s_chi;    // set only when s_chi = 1 is certified
  friend bool operator==(const ChiClass&, const ChiClass&) = default;
};

std::vector<ChiClass> chi_classes(const SemidirectData& sd, const AbelianLocalField& k);

struct SplittingField {
  AbelianLocalField field;      // K(zeta_exp(H))
  bool contains_all_fields = false;  // every K_chi lies in E
  bool classes_split = false;        // over E every class is a single orbit with K_chi = E
  friend bool operator==(const SplittingField&, const SplittingField&) = default;
};

SplittingField splitting_field_bound(const SemidirectData& sd, const AbelianLocalField& k);

struct ConductorDescription {
  unsigned p = 3;
  std::size_t h_order = 1;
  unsigned n = 0;
  AbelianLocalField base;
  std::vector<ChiClass> components;
  long r_cap_exponent = 0;  // R ∩ F = pi_K^a R
  SplittingField splitting;
  bool commutator_prime_to_p = true;
  friend bool operator==(const ConductorDescription&, const ConductorDescription&) = default;
};

ConductorDescription central_conductor(const SemidirectData& sd, const AbelianLocalField& k);

/// Exponent a (in pi_K-valuation) with R ∩ F = pi_K^a R.
long r_cap_conductor(const ConductorDescription& desc);
/// Same intersection over the components not listed in `vanishing`.
long filtered_annihilator(const ConductorDescription& desc, const std::vector<std::size_t>& vanishing);

/// Element of E[G_m], coefficients indexed by group elements.
using GroupAlgebraElement = std::vector<CycloNumber>;

GroupAlgebraElement ga_mul(const FiniteGroup& g, const GroupAlgebraElement& a, const GroupAlgebraElement& b);

struct ClassIdempotents {
  std::vector<GroupAlgebraElement> e_eta;  // one per eta in orbits[0]
  GroupAlgebraElement e_chi;               // sum over orbits[0]
  GroupAlgebraElement eps;                 // sum over all orbits of the class
};

/// Idempotents of a class inside E[G_m] (H at indices 0..|H|-1).
ClassIdempotents idempotents(const CharacterTable& h_table, const ChiClass& cls, const FiniteQuotient& q);

struct IdempotentReport {
  bool eta_idempotent = true;
  bool chi_idempotent = true;
  bool central = true;
  bool orthogonal = true;
  bool sum_is_one = true;
  bool ok() const { return eta_idempotent && chi_idempotent && central && orthogonal && sum_is_one; }
};

IdempotentReport verify_idempotents(const SemidirectData& sd, const AbelianLocalField& k, unsigned level);

/// Basis gamma^i h (i < p^n) of Lambda over R, truncated at level m as
/// R_m = Z[t]/(t^(p^(m-n)) - 1), t = gamma^(p^n).
TwistedLaw truncated_law(const SemidirectData& sd, unsigned level);

/// An element sum_b c_b(t) b of the truncated algebra.
struct TruncatedElement {
  unsigned level = 0;
  std::vector<std::vector<mpz_class>> coeffs;  // per basis element, length p^(m-n)
};

/// Trace over R_m of right multiplication, by the structure-constant kernel.
std::vector<mpz_class> trace_truncated(const SemidirectData& sd, const TruncatedElement& x);

/// Regular traces of all basis elements equal p^n|H| delta_1, and the claimed
/// dual basis (p^n|H|)^-1 h^-1 gamma^-i pairs to the identity.
bool dual_basis_check(const SemidirectData& sd, unsigned level);

/// For o' = Z_p[x]/(f) monogenic over Z_p (K' unramified or Q_p(zeta_p^k)):
/// the trace pairing on Lambda^{o'}(Gamma_n) over R_m has the dual system
/// p^-n x_j^v gamma^-i, and the dual lattice of o' has valuation equal to the
/// relative inverse different.
bool lambda_gamma_different_check(const AbelianLocalField& k_prime, unsigned n, unsigned level);

}  // namespace conductor
