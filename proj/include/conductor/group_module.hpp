#pragma once

#include <gmpxx.h>

#include <memory>
#include <vector>

#include "conductor/catalog.hpp"
#include "conductor/group.hpp"
#include "conductor/padic.hpp"

namespace conductor {

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// A Z_pG-module given by a Z-form: integer matrices acting on columns of
/// Z^rank. With torsion t > 0 the module is Z^rank / p^t Z^rank.
struct GroupModule {
  std::shared_ptr<const FiniteGroup> group;
  std::size_t rank = 0;
  std::vector<IntMatrix> mats;  // one per group element
  int torsion = 0;

  static GroupModule from_generators(std::shared_ptr<const FiniteGroup> g, const std::vector<IntMatrix>& gen_mats,
                                     int torsion = 0);
  static GroupModule trivial(std::shared_ptr<const FiniteGroup> g, int torsion = 0);
  static GroupModule regular(std::shared_ptr<const FiniteGroup> g, int torsion = 0);
  /// Permutation module on the cosets of a subgroup (sorted element list).
  static GroupModule permutation(std::shared_ptr<const FiniteGroup> g, const std::vector<Elem>& subgroup,
                                 int torsion = 0);
  /// Restriction of scalars of an integral representation over Z[zeta_d].
  static GroupModule from_representation(std::shared_ptr<const FiniteGroup> g, const Representation& rep,
                                         int torsion = 0);
  GroupModule reduced(int t) const;
  /// Matrix of sum_g z_g g.
  IntMatrix act(const std::vector<mpz_class>& z) const;
};

/// Valuations of the elementary divisors of Ext^1(M, N) = H^1(G, Hom(M, N)),
/// M a lattice; empty means Ext^1 = 0.
std::vector<int> ext1(const GroupModule& m, const GroupModule& n, const PadicContext& ctx);

/// True when multiplication by the central element z (group-basis
/// coefficients) kills Ext^1(M, N).
bool annihilates_ext1(const std::vector<mpz_class>& z, const GroupModule& m, const GroupModule& n,
                      const PadicContext& ctx);

/// Same for an arbitrary G-endomorphism of M given by its matrix.
bool endomorphism_annihilates_ext1(const IntMatrix& endo, const GroupModule& m, const GroupModule& n,
                                   const PadicContext& ctx);

}  // namespace conductor
