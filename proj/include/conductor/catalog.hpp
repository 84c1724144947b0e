#pragma once

#include <memory>
#include <string>
#include <vector>

#include "conductor/chartab.hpp"
#include "conductor/cyclo.hpp"
#include "conductor/group.hpp"

namespace conductor {

/// Named test groups: "C<n>", "C<a>xC<b>", "S3", "D4", "Q8", "A4", "D5", "D7",
/// "C7:C3", "C19:C9", "F20", "S4", "A5", "SL23", "C3xS3".
std::shared_ptr<const FiniteGroup> catalog_group(const std::string& name);
std::vector<std::string> catalog_group_names();

/// Homomorphism on all elements determined by the images of g.generators();
/// `images` live in `target` (use the same group for automorphisms).
std::vector<Elem> extend_homomorphism(const FiniteGroup& g, const FiniteGroup& target, const std::vector<Elem>& images);

using CycloMatrix = std::vector<std::vector<CycloNumber>>;

CycloMatrix matrix_identity(std::size_t n);
CycloMatrix matrix_mul(const CycloMatrix& a, const CycloMatrix& b);
CycloNumber matrix_trace(const CycloMatrix& a);
CycloNumber matrix_det(CycloMatrix a);

/// Irreducible representation given by matrices (acting on columns) for the
/// generators of the group, in the order of FiniteGroup::generators().
struct Representation {
  std::size_t dim = 1;
  std::vector<CycloMatrix> gen_images;
  std::size_t character = 0;  // row of the character table, set by validation
};

/// Matrices for every element, built from the generator images. Throws
/// InvalidInput if the images do not define a homomorphism.
std::vector<CycloMatrix> representation_images(const FiniteGroup& g, const Representation& rep);

/// Hand-entered irreducible representations of S3, D4, A4 and one-dimensional
/// ones of abelian groups, validated against the character table: every row
/// of the table gets exactly one representation. Throws Unsupported for
/// groups outside the catalog.
std::vector<Representation> catalog_representations(const std::string& name, const CharacterTable& table);

/// Named semidirect data: "Gamma", "C3xZ3", "S3xZ3", "C7:Z3", "C9:Z3",
/// "C3xC3:Z3", "C19:Z3", "C11:Z5".
SemidirectData catalog_semidirect(const std::string& name);
std::vector<std::string> catalog_semidirect_names();

}  // namespace conductor
