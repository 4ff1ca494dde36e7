#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hibi/poset.hpp"

namespace hibi {

/// P⁺ = P ∪ {∞} with a midpoint (y1, y2) inserted for every cover y1 ⋖ y2
/// of P⁺ with both ends in Q⁺ = Q ∪ {∞}.
///
/// Indices of `extended`: 0..|P|-1 are the elements of P, |P| is ∞, and the
/// midpoints follow in the order of `midpoints`.
struct PTilde {
  Poset base;
  std::vector<Element> q;
  Poset extended;
  Element infinity = 0;
  std::vector<std::pair<Element, Element>> midpoints;  ///< (y1, y2) as extended indices
  std::vector<Element> q_plus;                         ///< extended indices, ∞ last
};

PTilde build_p_tilde(const Poset& p, std::span<const Element> q);

/// Pointwise least element of T(P, Q): ν0(∞) = 0 on P⁺, and going down
/// ν0(x) = 1 + max over upper covers, rounded up to even on Q.
ExponentVector nu0(const Poset& p, std::span<const Element> q);

enum class ConditionFailure { none, impure, odd_interval };
enum class WitnessCase { none, case1, case2, case3 };

const char* to_string(ConditionFailure f);
const char* to_string(WitnessCase c);

struct WitnessReport {
  bool gorenstein = true;
  ExponentVector nu0;

  ConditionFailure failure = ConditionFailure::none;
  bool both_failed = false;
  /// For impure: a shortest and a longest maximal chain of P̃, bottom-up,
  /// as extended indices.
  std::vector<Element> short_chain;
  std::vector<Element> long_chain;
  /// For odd_interval: y < y' in Q⁺ with rank [y, y'] odd in P̃.
  std::optional<std::pair<Element, Element>> odd_pair;

  WitnessCase witness_case = WitnessCase::none;
  std::pair<Element, Element> witness_pair{};  ///< the cover x ⋖ x' of P used
  std::optional<ExponentVector> witness;
};

/// D_K(H, Q) is Gorenstein iff P̃ is pure and every [y, y'] with y < y' in
/// Q⁺ has even rank in P̃. On failure a witness ν ∈ T(P, Q) with
/// ν - ν0 ∉ T̄(P, Q) is attached.
WitnessReport gorenstein_criterion(const Poset& p, std::span<const Element> q);

/// Scans the covers x ⋖ x' of P for the three patterns (in case order,
/// ties broken by the label pair) and perturbs ν0 accordingly. The result
/// is checked for membership and non-domination; a failed check throws
/// InternalError. Throws ErrorKind::precondition when no pattern matches.
std::pair<WitnessCase, std::pair<Element, Element>> find_witness_pattern(
    const Poset& p, std::span<const Element> q, const ExponentVector& nu0);
ExponentVector witness_from_cases(const Poset& p, std::span<const Element> q, WitnessCase c,
                                  std::pair<Element, Element> cover);

/// Minimal elements of T(P, Q) inside [0, box_bound]^P under
/// ν <= ν' iff ν' - ν ∈ T̄(P, Q). Throws ErrorKind::precondition when the
/// box does not contain ν0.
std::vector<ExponentVector> canonical_minimal_elements(const Poset& p, std::span<const Element> q,
                                                       Natural box_bound);

/// Every ν ∈ T(P, Q) inside the box of side max ν0 + 2 dominates ν0.
bool gorenstein_oracle(const Poset& p, std::span<const Element> q);

}  // namespace hibi
