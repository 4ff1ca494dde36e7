#pragma once

// Brute-force helpers shared by the test binaries. Nothing here calls the
// enumerators under test.

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "hibi/poset.hpp"

namespace testing_support {

using hibi::Element;
using hibi::ExponentVector;
using hibi::Natural;
using hibi::Poset;

inline Poset chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<Element, Element>> rel;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("x" + std::to_string(i));
    if (i) rel.emplace_back(i - 1, i);
  }
  return Poset::from_index_relations(labels, rel);
}

inline Poset from_covers(std::vector<std::string> labels,
                         std::vector<std::pair<std::string, std::string>> covers) {
  return Poset::from_relations(std::move(labels), covers);
}

// Strict relation on {0..k-1} as a k*k boolean matrix.
using Relation = std::vector<std::uint8_t>;

inline bool transitive(const Relation& r, std::size_t k) {
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (r[a * k + b])
        for (std::size_t c = 0; c < k; ++c)
          if (r[b * k + c] && !r[a * k + c]) return false;
  return true;
}

inline Relation canonical(const Relation& r, std::size_t k) {
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Relation best;
  do {
    Relation s(k * k, 0);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) s[perm[a] * k + perm[b]] = r[a * k + b];
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Every poset on k elements up to isomorphism, as strict relations.
inline std::vector<Relation> posets_up_to_iso(std::size_t k) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) slots.emplace_back(i, j);
  std::vector<Relation> seen;
  for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
    Relation r(k * k, 0);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) r[slots[s].first * k + slots[s].second] = 1;
    if (!transitive(r, k)) continue;
    Relation c = canonical(r, k);
    if (std::find(seen.begin(), seen.end(), c) == seen.end()) seen.push_back(std::move(c));
  }
  return seen;
}

// Posets with a unique minimal element "b" on 1..max_size elements: a
// bottom added below every poset on max_size - 1 or fewer elements.
inline std::vector<Poset> posets_with_bottom(std::size_t max_size) {
  std::vector<Poset> out;
  for (std::size_t k = 0; k + 1 <= max_size; ++k) {
    for (const auto& r : posets_up_to_iso(k)) {
      std::vector<std::string> labels{"b"};
      std::vector<std::pair<Element, Element>> rel;
      for (std::size_t i = 0; i < k; ++i) {
        labels.push_back(std::string(1, static_cast<char>('c' + i)));
        rel.emplace_back(0, i + 1);
      }
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
          if (r[a * k + b]) rel.emplace_back(a + 1, b + 1);
      out.push_back(Poset::from_index_relations(labels, rel));
    }
  }
  return out;
}

inline std::vector<std::vector<Element>> subsets(std::size_t n) {
  std::vector<std::vector<Element>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Element> s;
    for (Element i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

// Every map P -> {lo..hi}, by odometer; no order logic involved.
inline void for_each_map(std::size_t n, Natural lo, Natural hi,
                         const std::function<void(const ExponentVector&)>& visit) {
  ExponentVector v(n, lo);
  while (true) {
    visit(v);
    std::size_t i = 0;
    while (i < n && v[i] == hi) v[i++] = lo;
    if (i == n) return;
    ++v[i];
  }
}

inline bool brute_reversing(const Poset& p, const ExponentVector& v, bool strict) {
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y)
      if (x != y && p.leq(x, y) && (strict ? v[x] <= v[y] : v[x] < v[y])) return false;
  return true;
}

inline bool even_on(const ExponentVector& v, const std::vector<Element>& q) {
  return std::all_of(q.begin(), q.end(), [&](Element y) { return v[y] % 2 == 0; });
}

}  // namespace testing_support
