#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hibi/lattice.hpp"
#include "hibi/poset.hpp"

namespace hibi {

/// The semigroup T̄(P, Q) = {ν order reversing on P | ν(y) even for y ∈ Q}.
/// With Q empty this is T̄(P), the semigroup of the Hibi ring.
class GdhSemigroup {
 public:
  GdhSemigroup(Poset p, std::vector<Element> q);
  static GdhSemigroup from_labels(Poset p, const std::vector<std::string>& q);

  const Poset& poset() const noexcept { return poset_; }
  const std::vector<Element>& q() const noexcept { return q_; }
  std::span<const std::uint8_t> even_mask() const noexcept { return even_; }
  bool in_q(Element x) const { return even_.at(x) != 0; }

  /// Membership; throws ErrorKind::domain_mismatch.
  bool contains(const ExponentVector& nu) const;

  /// The unique minimal element of Q, if there is one.
  std::optional<Element> unique_minimal_q() const;

 private:
  Poset poset_;
  std::vector<Element> q_;
  std::vector<std::uint8_t> even_;
};

GdhSemigroup hibi_semigroup(Poset p);

/// A distributive lattice H with its poset of join-irreducibles P and the
/// embedding P → H. Carries the generator T^{Φ(α)} of the Hibi ring for
/// each α ∈ H.
class HibiRing {
 public:
  explicit HibiRing(DistributiveLattice h);
  /// H = J(P) \ {∅}; element i of P corresponds to its principal ideal.
  static HibiRing over_poset(const Poset& p);

  const DistributiveLattice& lattice() const noexcept { return lattice_; }
  const Poset& poset() const noexcept { return poset_; }
  const std::vector<Element>& embedding() const noexcept { return embedding_; }
  Element bottom_irreducible() const noexcept { return x0_; }

  /// Indicator vector of Φ(α) = {x ∈ P | x <= α}.
  const ExponentVector& generator(Element alpha) const { return generators_.at(alpha); }
  /// Sum of the generators of the given lattice elements.
  ExponentVector recompose(std::span<const Element> factors) const;
  /// Unique multichain α_1 <= ... <= α_s (s = ν(x0)) whose generators sum
  /// to ν. Throws ErrorKind::not_member when ν is not order reversing.
  std::vector<Element> factor_standard(const ExponentVector& nu) const;

  /// ψ(α) = {y ∈ Q | y <= α}, as P indices.
  std::vector<Element> psi(std::span<const Element> q, Element alpha) const;

 private:
  HibiRing(DistributiveLattice h, Poset p, std::vector<Element> embedding);

  DistributiveLattice lattice_;
  Poset poset_;
  std::vector<Element> embedding_;
  std::vector<ExponentVector> generators_;
  Element x0_ = 0;
};

using LatticePair = std::pair<Element, Element>;

/// Straightens the doset product (α β)(α' β') into
/// (α∧α', (α∨α')∧(β∧β')) and ((α∨α')∨(β∧β'), β∨β'). Requires α <= β and
/// α' <= β'; throws ErrorKind::precondition otherwise.
std::pair<LatticePair, LatticePair> straighten_pair(const DistributiveLattice& h, LatticePair first,
                                                    LatticePair second);

/// Generating set of the generalized doset Hibi ring as products of
/// lattice elements (a single element or a comparable pair).
struct GeneratorSet {
  std::vector<std::vector<Element>> factors;
  std::vector<ExponentVector> vectors;
  bool fallback = false;  ///< true when Q has no unique minimal element
};

/// With y0 the unique minimal element of Q: {αβ | α <= β in H1, ψ(α) = ψ(β)}
/// ∪ H2, where H1 = {α >= y0}. Without a unique minimal element, falls back
/// to the irreducible members of bounded degree, raising the degree until
/// the generated semigroup matches membership inside the default box.
GeneratorSet gdh_generators(const HibiRing& ring, std::span<const Element> q);

/// Membership of a standard monomial α_1 <= ... <= α_r via the H1/H2
/// pattern: the H1 tail has even length and ψ agrees on consecutive pairs.
/// Independent of the exponent-vector route.
bool standard_monomial_in_gdh(const HibiRing& ring, std::span<const Element> q,
                              std::span<const Element> multichain);

struct GenerationCheck {
  bool equal = true;
  std::optional<ExponentVector> witness;  ///< smallest vector in the symmetric difference
};

/// Compares the additive semigroup generated by `generators`, restricted to
/// the box [0, box_bound]^P, with the members of `s` inside the box.
GenerationCheck generated_equals_membership(std::span<const ExponentVector> generators,
                                            const GdhSemigroup& s, Natural box_bound);

/// 2 * (rank P + 2).
Natural default_box_bound(const Poset& p);

/// h(s) = #{ν ∈ T̄(P, Q) | ν(x0) = s} for s = 0..s_max. Throws
/// ErrorKind::no_unique_minimum.
std::vector<Natural> hilbert_function(const GdhSemigroup& s, Natural s_max);

}  // namespace hibi
