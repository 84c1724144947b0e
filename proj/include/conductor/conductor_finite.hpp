#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "conductor/catalog.hpp"
#include "conductor/chartab.hpp"
#include "conductor/group_module.hpp"
#include "conductor/local_field.hpp"
#include "conductor/padic.hpp"

namespace conductor {

/// One Galois orbit of Irr(G) over K and its conductor summand
/// (|G|/chi(1)) D^-1(o_chi/o) inside o_chi = ring of integers of K(chi).
struct FiniteComponent {
  std::vector<std::size_t> rows;  // sorted; rows[0] is the representative
  long degree = 1;
  AbelianLocalField field;
  mpz_class multiplier;  // |G| / chi(1)
  int multiplier_vp = 0;
  long invdiff_v = 0;    // valuation of D^-1(o_chi/o) in o_chi
  long valuation = 0;    // e(K(chi)/Q_p) v_p(multiplier) + invdiff_v

  friend bool operator==(const FiniteComponent&, const FiniteComponent&) = default;
};

struct FiniteConductorReport {
  unsigned p = 3;
  AbelianLocalField base;
  std::size_t group_order = 1;
  std::vector<FiniteComponent> components;

  friend bool operator==(const FiniteConductorReport&, const FiniteConductorReport&) = default;
};

FiniteConductorReport jacobinski_conductor(const CharacterTable& t, const AbelianLocalField& k);

/// Orbits of Irr(G) under Gal(Qbar/Q), each with the conductor d of Q(chi).
/// Throws Unsupported unless Q(chi) = Q(zeta_d) for every row.
struct RationalOrbit {
  std::vector<std::size_t> rows;
  std::uint64_t d = 1;
};
std::vector<RationalOrbit> rational_orbits(const CharacterTable& t);

/// The conductor predicted by the formula, as a lattice in class-sum
/// coordinates of Z(Z_pG). Requires the report to be over K = Q_p.
PadicLattice formula_conductor_lattice(const CharacterTable& t, const FiniteConductorReport& report,
                                       const PadicContext& ctx);

/// Same, keeping only the conditions for components containing one of the
/// given rows (the conductor of a module supported there).
PadicLattice filtered_conductor_lattice(const CharacterTable& t, const FiniteConductorReport& report,
                                        const std::vector<std::size_t>& support_rows, const PadicContext& ctx);

/// {x in Z(Z_pG) : x L ⊂ Z_pG} for the maximal order L = preimage of
/// (+) M_n(Z_p[zeta_d]) under the catalog representations. With a twist seed,
/// each block of dimension >= 2 is replaced by End of the G-stable lattice
/// spanned by a seeded random vector (another maximal order).
PadicLattice brute_force_conductor(const CharacterTable& t, const std::vector<Representation>& reps,
                                   const PadicContext& ctx, std::optional<std::uint64_t> twist_seed = {});

/// Class-sum coordinates -> group-basis coefficients.
std::vector<mpz_class> class_sums_to_group(const CharacterTable& t, const std::vector<mpz_class>& a);

/// Largest elementary divisor valuation of Ext^1(M, N) (0 when Ext^1 = 0).
int ext1_exponent(const GroupModule& m, const GroupModule& n, const PadicContext& ctx);

/// Every basis element of the conductor lattice kills Ext^1(M, N).
bool annihilation_check(const CharacterTable& t, const PadicLattice& conductor, const GroupModule& m,
                        const GroupModule& n, const PadicContext& ctx);

/// Sharpness probe for the component with representation `rep` (rational,
/// over K = Q_p): with a = the component valuation, looks for N in `targets`
/// such that p^(a-1) does not kill Ext^1(M, N), M the representation lattice.
/// Returns the index of the first such N.
std::optional<std::size_t> roggenkamp_probe(const CharacterTable& t, const FiniteConductorReport& report,
                                            const Representation& rep, const std::vector<GroupModule>& targets,
                                            const PadicContext& ctx);

}  // namespace conductor
