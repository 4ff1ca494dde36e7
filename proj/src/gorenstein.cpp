#include "hibi/gorenstein.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <tuple>

namespace hibi {

namespace {

std::vector<std::uint8_t> q_mask(const Poset& p, std::span<const Element> q) {
  std::vector<std::uint8_t> mask(p.size(), 0);
  for (Element y : q) {
    if (y >= p.size()) throw Error(ErrorKind::invalid_index, "Q element out of range");
    mask[y] = 1;
  }
  return mask;
}

std::string fresh_label(const Poset& p, std::string label) {
  while (p.find(label)) label += "'";
  return label;
}

// ν ∈ T̄(P, Q) after subtracting `base`; requires ν >= base pointwise.
bool difference_in_closure(const Poset& p, std::span<const std::uint8_t> even,
                           const ExponentVector& nu, const ExponentVector& base) {
  if (!base.pointwise_leq(nu)) return false;
  ExponentVector diff(nu.size());
  for (std::size_t i = 0; i < nu.size(); ++i) {
    diff[i] = nu[i] - base[i];
    if (even[i] && diff[i] % 2 != 0) return false;
  }
  return is_order_reversing(p, diff);
}

bool in_open_semigroup(const Poset& p, std::span<const std::uint8_t> even,
                       const ExponentVector& nu) {
  for (std::size_t i = 0; i < nu.size(); ++i)
    if (even[i] && nu[i] % 2 != 0) return false;
  return is_order_reversing(p, nu, Strictness::strict);
}

bool label_pair_less(const Poset& p, std::pair<Element, Element> a, std::pair<Element, Element> b) {
  return std::tie(p.label(a.first), p.label(a.second)) <
         std::tie(p.label(b.first), p.label(b.second));
}

}  // namespace

const char* to_string(ConditionFailure f) {
  switch (f) {
    case ConditionFailure::none: return "none";
    case ConditionFailure::impure: return "impure";
    case ConditionFailure::odd_interval: return "odd_interval";
  }
  return "?";
}

const char* to_string(WitnessCase c) {
  switch (c) {
    case WitnessCase::none: return "none";
    case WitnessCase::case1: return "case1";
    case WitnessCase::case2: return "case2";
    case WitnessCase::case3: return "case3";
  }
  return "?";
}

PTilde build_p_tilde(const Poset& p, std::span<const Element> q) {
  const auto mask = q_mask(p, q);
  PTilde out;
  out.base = p;
  for (Element y = 0; y < p.size(); ++y)
    if (mask[y]) out.q.push_back(y);

  const Element n = p.size();
  out.infinity = n;
  std::vector<std::string> labels = p.labels();
  labels.push_back(fresh_label(p, "inf"));
  std::vector<std::pair<Element, Element>> rel = p.cover_pairs();
  for (Element x : p.maximal_elements()) rel.emplace_back(x, n);

  for (const auto& [a, b] : p.cover_pairs())
    if (mask[a] && mask[b]) out.midpoints.emplace_back(a, b);
  for (Element x : p.maximal_elements())
    if (mask[x]) out.midpoints.emplace_back(x, n);
  std::sort(out.midpoints.begin(), out.midpoints.end());

  for (const auto& [a, b] : out.midpoints) {
    const Element mid = labels.size();
    labels.push_back(fresh_label(p, "(" + labels[a] + "," + labels[b] + ")"));
    rel.emplace_back(a, mid);
    rel.emplace_back(mid, b);
  }
  out.extended = Poset::from_index_relations(std::move(labels), rel);
  out.q_plus = out.q;
  out.q_plus.push_back(n);
  return out;
}

ExponentVector nu0(const Poset& p, std::span<const Element> q) {
  const auto mask = q_mask(p, q);
  ExponentVector nu(p.size());
  const auto& topo = p.linear_extension();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    Natural above = 0;  // ν0(∞)
    for (Element y : p.upper_covers(*it)) above = std::max(above, nu[y]);
    Natural v = above + 1;
    if (mask[*it] && v % 2 != 0) ++v;
    nu[*it] = v;
  }
  return nu;
}

std::pair<WitnessCase, std::pair<Element, Element>> find_witness_pattern(
    const Poset& p, std::span<const Element> q, const ExponentVector& nu) {
  const auto mask = q_mask(p, q);
  const auto covers = p.cover_pairs();
  const WitnessCase order[] = {WitnessCase::case1, WitnessCase::case2, WitnessCase::case3};
  for (WitnessCase c : order) {
    std::optional<std::pair<Element, Element>> best;
    for (const auto& cover : covers) {
      const auto [x, x2] = cover;
      bool hit = false;
      switch (c) {
        case WitnessCase::case1: hit = mask[x] && mask[x2] && nu[x] >= nu[x2] + 4; break;
        case WitnessCase::case2: hit = !mask[x] && nu[x] >= nu[x2] + 2; break;
        case WitnessCase::case3: hit = mask[x] && !mask[x2] && nu[x] >= nu[x2] + 2; break;
        case WitnessCase::none: break;
      }
      if (hit && (!best || label_pair_less(p, cover, *best))) best = cover;
    }
    if (best) return {c, *best};
  }
  throw Error(ErrorKind::precondition, "no witness pattern among the covers of P");
}

ExponentVector witness_from_cases(const Poset& p, std::span<const Element> q, WitnessCase c,
                                  std::pair<Element, Element> cover) {
  const auto mask = q_mask(p, q);
  const auto [x, x2] = cover;
  if (c == WitnessCase::none || !p.covers(x, x2))
    throw Error(ErrorKind::precondition, "witness needs a case and a cover pair");
  const ExponentVector base = nu0(p, q);
  ExponentVector nu = base;
  for (Element z = 0; z < p.size(); ++z) {
    switch (c) {
      case WitnessCase::case1:
        if (p.leq(z, x2) && z != x) nu[z] += 2;
        break;
      case WitnessCase::case2:
        if (z == x) nu[z] += 1;
        else if (p.leq(z, x2)) nu[z] += 2;
        break;
      case WitnessCase::case3:
        if (z == x2) nu[z] += 1;
        else if (p.less(z, x2) && z != x) nu[z] += 2;
        break;
      case WitnessCase::none: break;
    }
  }
  if (!in_open_semigroup(p, mask, nu))
    throw InternalError("witness is not in T(P,Q)");
  if (difference_in_closure(p, mask, nu, base))
    throw InternalError("witness dominates nu0");
  return nu;
}

WitnessReport gorenstein_criterion(const Poset& p, std::span<const Element> q) {
  WitnessReport report;
  report.nu0 = nu0(p, q);
  const PTilde pt = build_p_tilde(p, q);
  const Poset& e = pt.extended;

  // Shortest and longest chain length from each element up to ∞.
  constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> lo(e.size(), unset), hi(e.size(), 0);
  const auto& topo = e.linear_extension();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    if (e.upper_covers(*it).empty()) {
      lo[*it] = hi[*it] = 0;
      continue;
    }
    for (Element y : e.upper_covers(*it)) {
      lo[*it] = std::min(lo[*it], lo[y] + 1);
      hi[*it] = std::max(hi[*it], hi[y] + 1);
    }
  }
  const auto minimal = e.minimal_elements();
  Element short_start = minimal.front(), long_start = minimal.front();
  for (Element m : minimal) {
    if (lo[m] < lo[short_start]) short_start = m;
    if (hi[m] > hi[long_start]) long_start = m;
  }
  const bool pure = lo[short_start] == hi[long_start];
  if (!pure) {
    report.failure = ConditionFailure::impure;
    for (Element x = short_start;;) {
      report.short_chain.push_back(x);
      if (e.upper_covers(x).empty()) break;
      for (Element y : e.upper_covers(x))
        if (lo[y] + 1 == lo[x]) { x = y; break; }
    }
    for (Element x = long_start;;) {
      report.long_chain.push_back(x);
      if (e.upper_covers(x).empty()) break;
      for (Element y : e.upper_covers(x))
        if (hi[y] + 1 == hi[x]) { x = y; break; }
    }
  }

  for (Element y : pt.q_plus)
    for (Element y2 : pt.q_plus) {
      if (!e.less(y, y2) || e.interval_rank(y, y2) % 2 == 0) continue;
      if (!report.odd_pair || label_pair_less(e, {y, y2}, *report.odd_pair))
        report.odd_pair = std::pair{y, y2};
    }
  if (report.odd_pair) {
    if (report.failure == ConditionFailure::none)
      report.failure = ConditionFailure::odd_interval;
    else
      report.both_failed = true;
  }

  if (report.failure == ConditionFailure::none) return report;
  report.gorenstein = false;
  const auto [c, cover] = find_witness_pattern(p, q, report.nu0);
  report.witness_case = c;
  report.witness_pair = cover;
  report.witness = witness_from_cases(p, q, c, cover);
  return report;
}

std::vector<ExponentVector> canonical_minimal_elements(const Poset& p, std::span<const Element> q,
                                                       Natural box_bound) {
  const auto mask = q_mask(p, q);
  const ExponentVector base = nu0(p, q);
  if (!p.empty() && box_bound < base.max())
    throw Error(ErrorKind::precondition, "box bound is below max nu0");
  std::vector<ExponentVector> members;
  for_each_order_reversing(
      p, box_bound, Strictness::strict, [&](const ExponentVector& nu) { members.push_back(nu); },
      mask);
  std::vector<ExponentVector> out;
  for (const auto& nu : members) {
    const bool dominated = std::any_of(members.begin(), members.end(), [&](const auto& other) {
      return other != nu && difference_in_closure(p, mask, nu, other);
    });
    if (!dominated) out.push_back(nu);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool gorenstein_oracle(const Poset& p, std::span<const Element> q) {
  const auto mask = q_mask(p, q);
  const ExponentVector base = nu0(p, q);
  const Natural bound = (p.empty() ? 0 : base.max()) + 2;
  bool all = true;
  for_each_order_reversing(
      p, bound, Strictness::strict,
      [&](const ExponentVector& nu) {
        if (all && !difference_in_closure(p, mask, nu, base)) all = false;
      },
      mask);
  return all;
}

}  // namespace hibi
