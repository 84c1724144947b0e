#pragma once

#include <memory>
#include <vector>

#include "conductor/cyclo.hpp"
#include "conductor/group.hpp"

namespace conductor {

/// Irreducible characters of a finite group with exact cyclotomic values.
/// Rows are sorted by degree, then by values class by class (smaller
/// conductor first, larger coefficients first), so the trivial character is
/// row 0.
struct CharacterTable {
  std::shared_ptr<const FiniteGroup> group;
  ConjugacyClasses classes;
  std::vector<std::vector<CycloNumber>> chars;
  std::vector<long> degrees;
  std::vector<std::size_t> inverse_class;
  std::size_t exponent = 1;
  unsigned long modular_prime = 0;  // the prime used for the modular eigenspaces

  std::size_t size() const { return chars.size(); }
  const CycloNumber& value(std::size_t row, Elem g) const { return chars[row][classes.class_of[g]]; }
  /// Row index of the given value vector, or size() if it is not a row.
  std::size_t find_row(const std::vector<CycloNumber>& values) const;
};

inline constexpr std::size_t kCharacterTableBound = 2000;

CharacterTable character_table(std::shared_ptr<const FiniteGroup> g, std::size_t bound = kCharacterTableBound);

/// <a, b> = |G|^-1 sum_g a(g) conj(b(g)) for class functions given on classes.
CycloNumber inner_product(const CharacterTable& t, const std::vector<CycloNumber>& a,
                          const std::vector<CycloNumber>& b);

/// Row index of sigma_k applied to a row (k coprime to the exponent).
std::size_t galois_row(const CharacterTable& t, std::size_t row, long long k);

/// Orbit of Irr(H) under eta -> eta o alpha^-1.
struct EtaOrbit {
  std::vector<std::size_t> members;  // sorted
  std::size_t w = 1;
  long eta_degree = 1;
  friend bool operator==(const EtaOrbit&, const EtaOrbit&) = default;
};

/// Image of every row under eta -> eta o alpha^-1.
std::vector<std::size_t> alpha_permutation(const CharacterTable& h_table, const GroupAutomorphism& alpha);
std::vector<EtaOrbit> alpha_orbits(const CharacterTable& h_table, const GroupAutomorphism& alpha);

struct Constituent {
  std::size_t row;
  long multiplicity;
};

/// Decomposition of res_H of a row of a table of G, where H sits at indices
/// 0..|H|-1 of G.
std::vector<Constituent> restrict_and_decompose(const CharacterTable& g_table, std::size_t row,
                                                const CharacterTable& h_table);

}  // namespace conductor
