#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "conductor/catalog.hpp"
#include "conductor/chartab.hpp"
#include "conductor/conductor_finite.hpp"
#include "conductor/padic.hpp"

namespace conductor {

/// Element of Z[G], one integer per group element.
using GroupRingElement = std::vector<mpz_class>;
using GroupRingMatrix = std::vector<std::vector<GroupRingElement>>;

GroupRingElement gr_mul(const FiniteGroup& g, const GroupRingElement& a, const GroupRingElement& b);
GroupRingMatrix gr_matmul(const FiniteGroup& g, const GroupRingMatrix& a, const GroupRingMatrix& b);
GroupRingElement gr_basis(const FiniteGroup& g, Elem x, long coeff = 1);

/// A catalog group together with its character table and one validated
/// representation per row.
struct SplitGroup {
  std::string name;
  std::shared_ptr<const FiniteGroup> group;
  CharacterTable table;
  std::vector<std::vector<CycloMatrix>> images;  // indexed by table row, then element
  std::vector<std::size_t> dims;
};

SplitGroup split_group(const std::string& name);

/// Presentation Lambda^a --h--> Lambda^b, x |-> x h for row vectors x.
struct PresentationMatrix {
  std::size_t a = 0, b = 0;
  GroupRingMatrix entries;  // a rows, b columns
};

/// nr(x) as one value per character row: det of the block matrix rho_chi(x).
std::vector<CycloNumber> reduced_norm(const SplitGroup& sg, const GroupRingMatrix& x);

struct FittingGenerators {
  bool zero = false;                               // a < b
  std::vector<std::vector<std::size_t>> row_sets;  // chosen rows, lexicographic
  std::vector<std::vector<CycloNumber>> generators;
};

FittingGenerators fitting_generators(const SplitGroup& sg, const PresentationMatrix& h);

/// Determinant in the commutative ring Z[G] by cofactor expansion.
GroupRingElement group_ring_det(const FiniteGroup& g, const GroupRingMatrix& x);

/// Classical Fitting generators (b x b minors evaluated at every character)
/// equal the reduced-norm generators. Requires G abelian.
bool commutative_degeneration_check(const SplitGroup& sg, const PresentationMatrix& h);

/// Every conductor basis element times every Fitting generator lies in
/// Z_p[G] and kills coker(h).
bool fitting_annihilation_check(const SplitGroup& sg, const FiniteConductorReport& report,
                                const PresentationMatrix& h, const PadicContext& ctx);

}  // namespace conductor
