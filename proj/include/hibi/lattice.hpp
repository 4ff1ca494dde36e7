#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "hibi/poset.hpp"

namespace hibi {

/// A finite distributive lattice: the underlying poset plus precomputed
/// join and meet tables.
class DistributiveLattice {
 public:
  DistributiveLattice() = default;

  /// Validates that `p` is a distributive lattice. Throws
  /// ErrorKind::not_a_lattice naming a pair without a unique bound, or
  /// ErrorKind::not_distributive naming a failing triple.
  static DistributiveLattice from_poset(Poset p);

  const Poset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  const std::string& label(Element a) const { return poset_.label(a); }
  Element index(std::string_view label) const { return poset_.index(label); }
  bool leq(Element a, Element b) const noexcept { return poset_.leq(a, b); }

  Element join(Element a, Element b) const { return join_[a * size() + b]; }
  Element meet(Element a, Element b) const { return meet_[a * size() + b]; }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }

  /// Elements with at most one lower cover; includes the bottom element.
  std::vector<Element> join_irreducibles() const;

 private:
  Poset poset_;
  std::vector<Element> join_;
  std::vector<Element> meet_;
  Element bottom_ = 0;
  Element top_ = 0;
};

/// The join-irreducibles P of a lattice H as an induced subposet (labels
/// kept), together with the embedding P → H.
struct BirkhoffDual {
  Poset irreducibles;
  std::vector<Element> embedding;

  explicit BirkhoffDual(const DistributiveLattice& h);

  /// Φ(α) = {x ∈ P | x <= α}, as sorted indices into `irreducibles`.
  std::vector<Element> phi(const DistributiveLattice& h, Element alpha) const;
  /// Ψ(I) = join of I. Throws ErrorKind::precondition when I is empty or
  /// not down-closed in P.
  Element psi(const DistributiveLattice& h, std::span<const Element> ideal) const;
};

/// J(P) \ {∅} ordered by inclusion, with the ideal behind every element.
/// Element labels are "{a,b,...}" listing members in P-index order.
struct IdealLattice {
  DistributiveLattice lattice;
  std::vector<std::vector<Element>> ideals;
};

/// Throws ErrorKind::no_unique_minimum when P is empty or has several
/// minimal elements (then J(P) \ {∅} has no bottom).
IdealLattice ideal_lattice(const Poset& p);

/// A surjective lattice homomorphism, validated eagerly.
class LatticeHom {
 public:
  /// `map[a]` is the image of source element a. Throws
  /// ErrorKind::not_homomorphism or ErrorKind::not_surjective.
  LatticeHom(DistributiveLattice source, DistributiveLattice target, std::vector<Element> map);

  /// Map given by labels; every source label must appear.
  static LatticeHom from_labels(DistributiveLattice source, DistributiveLattice target,
                                const std::map<std::string, std::string>& map);

  static LatticeHom identity(const DistributiveLattice& h);

  const DistributiveLattice& source() const noexcept { return source_; }
  const DistributiveLattice& target() const noexcept { return target_; }
  Element operator()(Element a) const { return map_.at(a); }

  /// φ*(β): the meet of the fibre over β.
  Element phi_star(Element beta) const;

 private:
  DistributiveLattice source_;
  DistributiveLattice target_;
  std::vector<Element> map_;
};

/// Q = φ*(join-irreducibles of the target) inside the source's
/// join-irreducibles.
struct QRestriction {
  std::vector<Element> q_lattice;  ///< as source lattice elements
  std::vector<Element> q;          ///< as indices into BirkhoffDual(source).irreducibles
};

/// Computes Q and checks Φ_L(φ(α)) = Φ_H(α) ∩ Q for every α of the source.
/// A failed check throws InternalError.
QRestriction restrict_to_q(const LatticeHom& hom);

}  // namespace hibi
