#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace conductor {

using Elem = std::uint32_t;

/// A finite group on element indices 0..order-1, with 0 the identity.
///
/// Groups of order <= kTableBound keep a full multiplication table. Larger
/// groups multiply through a callback (permutation composition or the
/// semidirect-product formula). Values are immutable after construction.
class FiniteGroup {
 public:
  static constexpr std::size_t kTableBound = 512;
  using MulFn = std::function<Elem(Elem, Elem)>;

  FiniteGroup() = default;

  /// From a full multiplication table (row a, column b holds a*b). The table
  /// is re-indexed so that the identity becomes index 0; generators are
  /// computed greedily.
  static FiniteGroup from_table(const std::vector<std::vector<Elem>>& table);

  /// Closure of the given permutations of {0..degree-1}. Elements are
  /// enumerated breadth-first from the identity.
  static FiniteGroup from_permutations(const std::vector<std::vector<std::uint32_t>>& gens,
                                       std::uint32_t degree);

  /// Low-level constructor: caller guarantees `mul` is a group law with
  /// identity 0 on 0..order-1 and that `gens` generate.
  static FiniteGroup from_law(std::size_t order, MulFn mul, std::vector<Elem> gens);

  std::size_t order() const { return order_; }
  Elem mul(Elem a, Elem b) const {
    return table_.empty() ? law_(a, b) : table_[static_cast<std::size_t>(a) * order_ + b];
  }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem pow(Elem a, long long k) const;
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  std::size_t elem_order(Elem a) const;
  std::size_t exponent() const;

  const std::vector<Elem>& generators() const { return gens_; }
  bool has_table() const { return !table_.empty(); }
  bool is_abelian() const;

  /// Optional permutation images, kept when built from permutations.
  const std::vector<std::vector<std::uint32_t>>& permutations() const { return perms_; }

 private:
  void finish();

  std::size_t order_ = 0;
  std::vector<Elem> table_;
  MulFn law_;
  std::vector<Elem> inverse_;
  std::vector<Elem> gens_;
  std::vector<std::vector<std::uint32_t>> perms_;
};

struct ConjugacyClasses {
  std::vector<std::vector<Elem>> classes;  // each sorted; ordered by smallest element
  std::vector<std::size_t> class_of;       // element -> class index
  std::vector<Elem> reps() const;
  std::vector<std::size_t> sizes() const;
  std::size_t count() const { return classes.size(); }
};

ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

/// Subgroup generated by the given elements (sorted element list).
std::vector<Elem> subgroup_closure(const FiniteGroup& g, std::span<const Elem> gens);

/// Commutator subgroup [G,G] as a sorted element list.
std::vector<Elem> commutator_subgroup(const FiniteGroup& g);

/// Center as a sorted element list.
std::vector<Elem> center(const FiniteGroup& g);

/// Automorphism of a finite group given by the image of every element.
class GroupAutomorphism {
 public:
  GroupAutomorphism(std::shared_ptr<const FiniteGroup> domain, std::vector<Elem> images);
  static GroupAutomorphism identity(std::shared_ptr<const FiniteGroup> domain);

  Elem operator()(Elem x) const { return images_[x]; }
  const std::vector<Elem>& images() const { return images_; }
  const FiniteGroup& domain() const { return *domain_; }
  std::shared_ptr<const FiniteGroup> domain_ptr() const { return domain_; }
  GroupAutomorphism inverse() const;
  GroupAutomorphism compose(const GroupAutomorphism& other) const;  // this after other
  GroupAutomorphism power(long long k) const;
  bool is_identity() const;
  std::size_t order() const;

 private:
  std::shared_ptr<const FiniteGroup> domain_;
  std::vector<Elem> images_;
};

/// G = H x| Gamma with Gamma ~ Z_p topologically generated by gamma, and
/// gamma h gamma^-1 = alpha(h). The exponent n is derived from alpha.
class SemidirectData {
 public:
  SemidirectData(std::shared_ptr<const FiniteGroup> h, GroupAutomorphism alpha, unsigned p);

  const FiniteGroup& h() const { return *h_; }
  std::shared_ptr<const FiniteGroup> h_ptr() const { return h_; }
  const GroupAutomorphism& alpha() const { return alpha_; }
  unsigned p() const { return p_; }
  unsigned n() const { return n_; }
  std::size_t p_pow_n() const;

 private:
  std::shared_ptr<const FiniteGroup> h_;
  GroupAutomorphism alpha_;
  unsigned p_;
  unsigned n_ = 0;
};

/// The finite quotient G_m = H x| Z/p^m. Element gamma^i h has index
/// i*|H| + h, so H occupies 0..|H|-1 and the coset generator gamma is |H|.
struct FiniteQuotient {
  std::shared_ptr<const FiniteGroup> group;
  unsigned level = 0;
  std::size_t h_order = 0;
  std::size_t gamma_order = 0;  // p^m
  Elem gamma() const { return static_cast<Elem>(gamma_order > 1 ? h_order : 0); }
  Elem element(std::size_t i, Elem h) const {
    return static_cast<Elem>((i % gamma_order) * h_order + h);
  }
  std::size_t gamma_exponent(Elem g) const { return g / h_order; }
  Elem h_part(Elem g) const { return static_cast<Elem>(g % h_order); }
};

FiniteQuotient finite_quotient(const SemidirectData& sd, unsigned m);

bool is_prime(std::uint64_t n);
std::uint64_t ipow(std::uint64_t base, unsigned e);

}  // namespace conductor
