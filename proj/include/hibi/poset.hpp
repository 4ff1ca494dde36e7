#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hibi/error.hpp"

namespace hibi {

using Element = std::size_t;
using Natural = std::uint64_t;

/// A map from the elements of a poset to the naturals, stored densely by
/// element index. Arithmetic is checked: overflow throws.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t size, Natural fill = 0) : values_(size, fill) {}
  ExponentVector(std::initializer_list<Natural> values) : values_(values) {}
  explicit ExponentVector(std::vector<Natural> values) : values_(std::move(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  Natural operator[](std::size_t i) const { return values_[i]; }
  Natural& operator[](std::size_t i) { return values_[i]; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }
  const std::vector<Natural>& values() const noexcept { return values_; }

  bool is_zero() const noexcept;
  Natural max() const noexcept;

  ExponentVector& operator+=(const ExponentVector& other);
  friend ExponentVector operator+(ExponentVector lhs, const ExponentVector& rhs) {
    lhs += rhs;
    return lhs;
  }

  /// Pointwise `*this <= other`.
  bool pointwise_leq(const ExponentVector& other) const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<Natural> values_;
};

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& v) const noexcept;
};

/// Finite poset over opaque string labels. Immutable once built; stores the
/// full order relation as bit rows plus the cover relation in both
/// directions.
class Poset {
 public:
  Poset() = default;

  /// `relations` are pairs (x, y) meaning x < y. They need not be covers;
  /// the transitive reduction is computed. Rejects duplicate labels,
  /// unknown labels and cycles (including x < x).
  static Poset from_relations(std::vector<std::string> labels,
                              const std::vector<std::pair<std::string, std::string>>& relations);

  /// Same, with relations given by element index.
  static Poset from_index_relations(std::vector<std::string> labels,
                                    const std::vector<std::pair<Element, Element>>& relations);

  /// Builds a poset from a predicate `leq(i, j)` on indices. The predicate
  /// must be a partial order; reflexivity, antisymmetry and transitivity
  /// are checked.
  template <class Leq>
  static Poset from_order(std::vector<std::string> labels, Leq&& leq) {
    const std::size_t n = labels.size();
    std::vector<std::pair<Element, Element>> rel;
    for (Element i = 0; i < n; ++i)
      for (Element j = 0; j < n; ++j)
        if (i != j && leq(i, j)) rel.emplace_back(i, j);
    Poset p = from_index_relations(std::move(labels), rel);
    if (p.relation_count() != rel.size())
      throw Error(ErrorKind::precondition, "order predicate is not transitive");
    return p;
  }

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  const std::string& label(Element x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Element> find(std::string_view label) const;
  /// Throws ErrorKind::unknown_label.
  Element index(std::string_view label) const;

  bool leq(Element x, Element y) const noexcept {
    return (rows_[x * words_ + y / 64] >> (y % 64)) & 1U;
  }
  bool less(Element x, Element y) const noexcept { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const noexcept { return leq(x, y) || leq(y, x); }
  bool leq(std::string_view x, std::string_view y) const { return leq(index(x), index(y)); }

  std::span<const Element> upper_covers(Element x) const { return up_[x]; }
  std::span<const Element> lower_covers(Element x) const { return down_[x]; }
  bool covers(Element x, Element y) const;
  /// All cover pairs (x, y), x ⋖ y, sorted by index.
  std::vector<std::pair<Element, Element>> cover_pairs() const;

  std::vector<Element> minimal_elements() const;
  std::vector<Element> maximal_elements() const;
  /// Indices ordered so that x < y implies x appears first.
  const std::vector<Element>& linear_extension() const noexcept { return topo_; }

  /// Length of the longest chain. Throws ErrorKind::empty_poset.
  std::size_t rank() const;
  /// All maximal chains have the same length. Throws ErrorKind::empty_poset.
  bool is_pure() const;
  /// Longest chain from x up to y (x <= y); the rank of [x, y].
  std::size_t interval_rank(Element x, Element y) const;

  /// Induced subposet on {z | x <= z <= y}. Throws ErrorKind::not_comparable.
  Poset interval(Element x, Element y) const;
  /// Induced subposet on the given elements, in the given order.
  Poset induced(std::span<const Element> elements) const;

  std::size_t relation_count() const noexcept { return relation_count_; }

 private:
  void build(std::vector<std::pair<Element, Element>> relations);

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Element> index_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<std::vector<Element>> up_;
  std::vector<std::vector<Element>> down_;
  std::vector<Element> topo_;
  std::size_t relation_count_ = 0;
};

/// Throws ErrorKind::domain_mismatch unless `v` is indexed by the elements of `p`.
void check_domain(const Poset& p, const ExponentVector& v);

/// All down-closed subsets, each sorted by index; includes the empty set.
std::vector<std::vector<Element>> order_ideals(const Poset& p);

enum class Strictness { weak, strict };

/// Visits every map ν: P → {0..bound} with x <= y ⇒ ν(x) >= ν(y) (weak), or
/// every ν: P → {1..bound} with x < y ⇒ ν(x) > ν(y) (strict). If `even` is
/// non-empty, elements flagged there only take even values.
template <class Visit>
void for_each_order_reversing(const Poset& p, Natural bound, Strictness strictness, Visit&& visit,
                              std::span<const std::uint8_t> even = {}) {
  const std::vector<Element>& topo = p.linear_extension();
  const Natural step = strictness == Strictness::strict ? 1 : 0;
  ExponentVector nu(p.size());
  // Assign from the top down, so every upper cover is fixed before x.
  auto assign = [&](auto&& self, std::size_t k) -> void {
    if (k == 0) {
      visit(static_cast<const ExponentVector&>(nu));
      return;
    }
    const Element x = topo[k - 1];
    Natural lo = step;
    for (Element y : p.upper_covers(x)) lo = std::max(lo, nu[y] + step);
    const bool parity = !even.empty() && even[x] != 0;
    for (Natural v = lo; v <= bound; ++v) {
      if (parity && v % 2 != 0) continue;
      nu[x] = v;
      self(self, k - 1);
    }
  };
  assign(assign, topo.size());
}

std::vector<ExponentVector> enumerate_order_reversing(const Poset& p, Natural bound,
                                                      Strictness strictness = Strictness::weak);

bool is_order_reversing(const Poset& p, const ExponentVector& nu,
                        Strictness strictness = Strictness::weak);

}  // namespace hibi
