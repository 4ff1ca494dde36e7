#include "hibi/poset.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>

namespace hibi {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::duplicate_label: return "duplicate_label";
    case ErrorKind::unknown_label: return "unknown_label";
    case ErrorKind::cycle: return "cycle";
    case ErrorKind::empty_poset: return "empty_poset";
    case ErrorKind::not_comparable: return "not_comparable";
    case ErrorKind::not_a_lattice: return "not_a_lattice";
    case ErrorKind::not_distributive: return "not_distributive";
    case ErrorKind::not_homomorphism: return "not_homomorphism";
    case ErrorKind::not_surjective: return "not_surjective";
    case ErrorKind::domain_mismatch: return "domain_mismatch";
    case ErrorKind::not_member: return "not_member";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::no_unique_minimum: return "no_unique_minimum";
    case ErrorKind::invalid_gamma: return "invalid_gamma";
    case ErrorKind::invalid_index: return "invalid_index";
    case ErrorKind::zero_polynomial: return "zero_polynomial";
    case ErrorKind::overflow: return "overflow";
    case ErrorKind::malformed_input: return "malformed_input";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// ExponentVector

bool ExponentVector::is_zero() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](Natural v) { return v == 0; });
}

Natural ExponentVector::max() const noexcept {
  return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end());
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& other) {
  if (other.size() != size())
    throw Error(ErrorKind::domain_mismatch, "exponent vectors of different length");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] > std::numeric_limits<Natural>::max() - other.values_[i])
      throw Error(ErrorKind::overflow, "exponent overflow");
    values_[i] += other.values_[i];
  }
  return *this;
}

bool ExponentVector::pointwise_leq(const ExponentVector& other) const {
  if (other.size() != size())
    throw Error(ErrorKind::domain_mismatch, "exponent vectors of different length");
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] > other.values_[i]) return false;
  return true;
}

std::size_t ExponentVectorHash::operator()(const ExponentVector& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Natural x : v) {
    h ^= std::hash<Natural>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Poset construction

Poset Poset::from_relations(std::vector<std::string> labels,
                            const std::vector<std::pair<std::string, std::string>>& relations) {
  std::unordered_map<std::string, Element> index;
  for (Element i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], i).second)
      throw Error(ErrorKind::duplicate_label, "duplicate label '" + labels[i] + "'");
  }
  std::vector<std::pair<Element, Element>> rel;
  rel.reserve(relations.size());
  for (const auto& [x, y] : relations) {
    auto ix = index.find(x);
    auto iy = index.find(y);
    if (ix == index.end()) throw Error(ErrorKind::unknown_label, "unknown label '" + x + "'");
    if (iy == index.end()) throw Error(ErrorKind::unknown_label, "unknown label '" + y + "'");
    rel.emplace_back(ix->second, iy->second);
  }
  return from_index_relations(std::move(labels), rel);
}

Poset Poset::from_index_relations(std::vector<std::string> labels,
                                  const std::vector<std::pair<Element, Element>>& relations) {
  Poset p;
  p.labels_ = std::move(labels);
  for (Element i = 0; i < p.labels_.size(); ++i) {
    if (!p.index_.emplace(p.labels_[i], i).second)
      throw Error(ErrorKind::duplicate_label, "duplicate label '" + p.labels_[i] + "'");
  }
  for (const auto& [x, y] : relations) {
    if (x >= p.size() || y >= p.size())
      throw Error(ErrorKind::invalid_index, "relation references an element out of range");
  }
  p.build(relations);
  return p;
}

void Poset::build(std::vector<std::pair<Element, Element>> relations) {
  const std::size_t n = size();
  std::vector<std::vector<Element>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& [x, y] : relations) {
    if (x == y) throw Error(ErrorKind::cycle, "cycle at '" + labels_[x] + "'");
    succ[x].push_back(y);
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (Element y : s) ++indegree[y];
  }

  // Kahn's algorithm; smallest index first for a deterministic extension.
  topo_.clear();
  std::vector<Element> ready;
  for (Element x = 0; x < n; ++x)
    if (indegree[x] == 0) ready.push_back(x);
  while (!ready.empty()) {
    auto it = std::min_element(ready.begin(), ready.end());
    Element x = *it;
    ready.erase(it);
    topo_.push_back(x);
    for (Element y : succ[x])
      if (--indegree[y] == 0) ready.push_back(y);
  }
  if (topo_.size() != n) {
    for (Element x = 0; x < n; ++x)
      if (indegree[x] != 0)
        throw Error(ErrorKind::cycle, "cycle through '" + labels_[x] + "'");
  }

  words_ = (n + 63) / 64;
  rows_.assign(n * words_, 0);
  auto row = [&](Element x) { return rows_.data() + x * words_; };
  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    Element x = *it;
    std::uint64_t* rx = row(x);
    rx[x / 64] |= std::uint64_t{1} << (x % 64);
    for (Element y : succ[x]) {
      const std::uint64_t* ry = row(y);
      for (std::size_t w = 0; w < words_; ++w) rx[w] |= ry[w];
    }
  }

  relation_count_ = 0;
  for (std::uint64_t w : rows_) relation_count_ += static_cast<std::size_t>(std::popcount(w));
  relation_count_ -= n;

  // y covers x iff y lies in the strict up-set of x but not in the strict
  // up-set of any z strictly above x.
  up_.assign(n, {});
  down_.assign(n, {});
  std::vector<std::uint64_t> strict(words_), shadow(words_);
  for (Element x = 0; x < n; ++x) {
    std::copy(row(x), row(x) + words_, strict.begin());
    strict[x / 64] &= ~(std::uint64_t{1} << (x % 64));
    std::fill(shadow.begin(), shadow.end(), 0);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = strict[w];
      while (bits) {
        const Element z = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        const std::uint64_t* rz = row(z);
        for (std::size_t v = 0; v < words_; ++v) {
          std::uint64_t above = rz[v];
          if (v == z / 64) above &= ~(std::uint64_t{1} << (z % 64));
          shadow[v] |= above;
        }
      }
    }
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = strict[w] & ~shadow[w];
      while (bits) {
        const Element y = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        up_[x].push_back(y);
        down_[y].push_back(x);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Queries

std::optional<Element> Poset::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Element Poset::index(std::string_view label) const {
  auto found = find(label);
  if (!found) throw Error(ErrorKind::unknown_label, "unknown label '" + std::string(label) + "'");
  return *found;
}

bool Poset::covers(Element x, Element y) const {
  const auto& u = up_[x];
  return std::find(u.begin(), u.end(), y) != u.end();
}

std::vector<std::pair<Element, Element>> Poset::cover_pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < size(); ++x)
    for (Element y : up_[x]) out.emplace_back(x, y);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> Poset::minimal_elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < size(); ++x)
    if (down_[x].empty()) out.push_back(x);
  return out;
}

std::vector<Element> Poset::maximal_elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < size(); ++x)
    if (up_[x].empty()) out.push_back(x);
  return out;
}

std::size_t Poset::rank() const {
  if (empty()) throw Error(ErrorKind::empty_poset, "rank of an empty poset");
  std::vector<std::size_t> height(size(), 0);
  std::size_t best = 0;
  for (Element x : topo_) {
    for (Element y : down_[x]) height[x] = std::max(height[x], height[y] + 1);
    best = std::max(best, height[x]);
  }
  return best;
}

bool Poset::is_pure() const {
  if (empty()) throw Error(ErrorKind::empty_poset, "purity of an empty poset");
  // Shortest and longest saturated chains from each element up to a
  // maximal element.
  const std::size_t n = size();
  std::vector<std::size_t> lo(n, 0), hi(n, 0);
  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    Element x = *it;
    if (up_[x].empty()) continue;
    lo[x] = std::numeric_limits<std::size_t>::max();
    for (Element y : up_[x]) {
      lo[x] = std::min(lo[x], lo[y] + 1);
      hi[x] = std::max(hi[x], hi[y] + 1);
    }
  }
  std::optional<std::size_t> length;
  for (Element x : minimal_elements()) {
    if (lo[x] != hi[x]) return false;
    if (length && *length != lo[x]) return false;
    length = lo[x];
  }
  return true;
}

std::size_t Poset::interval_rank(Element x, Element y) const {
  if (!leq(x, y)) throw Error(ErrorKind::not_comparable, label(x) + " is not below " + label(y));
  // Longest path x -> y through covers, restricted to elements <= y.
  std::vector<long> dist(size(), -1);
  dist[x] = 0;
  for (Element z : topo_) {
    if (dist[z] < 0) continue;
    for (Element w : up_[z])
      if (leq(w, y)) dist[w] = std::max(dist[w], dist[z] + 1);
  }
  return static_cast<std::size_t>(dist[y]);
}

Poset Poset::interval(Element x, Element y) const {
  if (!leq(x, y)) throw Error(ErrorKind::not_comparable, label(x) + " is not below " + label(y));
  std::vector<Element> members;
  for (Element z = 0; z < size(); ++z)
    if (leq(x, z) && leq(z, y)) members.push_back(z);
  return induced(members);
}

Poset Poset::induced(std::span<const Element> elements) const {
  std::vector<std::string> labels;
  labels.reserve(elements.size());
  for (Element e : elements) labels.push_back(label(e));
  std::vector<std::pair<Element, Element>> rel;
  for (Element i = 0; i < elements.size(); ++i)
    for (Element j = 0; j < elements.size(); ++j)
      if (less(elements[i], elements[j])) rel.emplace_back(i, j);
  return from_index_relations(std::move(labels), rel);
}

// ---------------------------------------------------------------------------
// Free functions

void check_domain(const Poset& p, const ExponentVector& v) {
  if (v.size() != p.size())
    throw Error(ErrorKind::domain_mismatch, "exponent vector has " + std::to_string(v.size()) +
                                                " entries, poset has " + std::to_string(p.size()));
}

std::vector<std::vector<Element>> order_ideals(const Poset& p) {
  std::vector<std::vector<Element>> out;
  const auto& topo = p.linear_extension();
  std::vector<bool> in(p.size(), false);
  std::vector<Element> current;
  // Decide elements bottom-up; x may join only if all its lower covers did.
  auto step = [&](auto&& self, std::size_t k) -> void {
    if (k == topo.size()) {
      std::vector<Element> ideal = current;
      std::sort(ideal.begin(), ideal.end());
      out.push_back(std::move(ideal));
      return;
    }
    const Element x = topo[k];
    self(self, k + 1);
    const auto lower = p.lower_covers(x);
    if (std::all_of(lower.begin(), lower.end(), [&](Element y) { return in[y]; })) {
      in[x] = true;
      current.push_back(x);
      self(self, k + 1);
      current.pop_back();
      in[x] = false;
    }
  };
  step(step, 0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<ExponentVector> enumerate_order_reversing(const Poset& p, Natural bound,
                                                      Strictness strictness) {
  std::vector<ExponentVector> out;
  for_each_order_reversing(p, bound, strictness,
                           [&](const ExponentVector& nu) { out.push_back(nu); });
  std::sort(out.begin(), out.end());
  return out;
}

bool is_order_reversing(const Poset& p, const ExponentVector& nu, Strictness strictness) {
  check_domain(p, nu);
  for (Element x = 0; x < p.size(); ++x) {
    if (strictness == Strictness::strict && nu[x] == 0) return false;
    for (Element y : p.upper_covers(x)) {
      if (strictness == Strictness::strict ? nu[x] <= nu[y] : nu[x] < nu[y]) return false;
    }
  }
  return true;
}

}  // namespace hibi
