#include "hibi/semigroup.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace hibi {

// ---------------------------------------------------------------------------
// GdhSemigroup

GdhSemigroup::GdhSemigroup(Poset p, std::vector<Element> q)
    : poset_(std::move(p)), q_(std::move(q)), even_(poset_.size(), 0) {
  std::sort(q_.begin(), q_.end());
  q_.erase(std::unique(q_.begin(), q_.end()), q_.end());
  for (Element y : q_) {
    if (y >= poset_.size()) throw Error(ErrorKind::invalid_index, "Q element out of range");
    even_[y] = 1;
  }
}

GdhSemigroup GdhSemigroup::from_labels(Poset p, const std::vector<std::string>& q) {
  std::vector<Element> idx;
  for (const auto& label : q) idx.push_back(p.index(label));
  return GdhSemigroup(std::move(p), std::move(idx));
}

bool GdhSemigroup::contains(const ExponentVector& nu) const {
  if (!is_order_reversing(poset_, nu)) return false;
  return std::all_of(q_.begin(), q_.end(), [&](Element y) { return nu[y] % 2 == 0; });
}

std::optional<Element> GdhSemigroup::unique_minimal_q() const {
  std::optional<Element> found;
  for (Element y : q_) {
    const bool minimal = std::none_of(q_.begin(), q_.end(),
                                      [&](Element z) { return poset_.less(z, y); });
    if (!minimal) continue;
    if (found) return std::nullopt;
    found = y;
  }
  return found;
}

GdhSemigroup hibi_semigroup(Poset p) { return GdhSemigroup(std::move(p), {}); }

// ---------------------------------------------------------------------------
// HibiRing

HibiRing::HibiRing(DistributiveLattice h) {
  BirkhoffDual dual(h);
  *this = HibiRing(std::move(h), std::move(dual.irreducibles), std::move(dual.embedding));
}

HibiRing::HibiRing(DistributiveLattice h, Poset p, std::vector<Element> embedding)
    : lattice_(std::move(h)), poset_(std::move(p)), embedding_(std::move(embedding)) {
  const auto minimal = poset_.minimal_elements();
  if (minimal.size() != 1)
    throw Error(ErrorKind::no_unique_minimum, "join-irreducibles need a unique minimal element");
  x0_ = minimal.front();
  generators_.reserve(lattice_.size());
  for (Element alpha = 0; alpha < lattice_.size(); ++alpha) {
    ExponentVector g(poset_.size());
    for (Element x = 0; x < poset_.size(); ++x)
      if (lattice_.leq(embedding_[x], alpha)) g[x] = 1;
    generators_.push_back(std::move(g));
  }
}

HibiRing HibiRing::over_poset(const Poset& p) {
  IdealLattice il = ideal_lattice(p);
  std::vector<Element> embedding(p.size());
  for (Element x = 0; x < p.size(); ++x) {
    std::vector<Element> principal;
    for (Element z = 0; z < p.size(); ++z)
      if (p.leq(z, x)) principal.push_back(z);
    auto it = std::find(il.ideals.begin(), il.ideals.end(), principal);
    embedding[x] = static_cast<Element>(it - il.ideals.begin());
  }
  return HibiRing(std::move(il.lattice), p, std::move(embedding));
}

ExponentVector HibiRing::recompose(std::span<const Element> factors) const {
  ExponentVector out(poset_.size());
  for (Element alpha : factors) out += generator(alpha);
  return out;
}

std::vector<Element> HibiRing::factor_standard(const ExponentVector& nu) const {
  check_domain(poset_, nu);
  if (!is_order_reversing(poset_, nu))
    throw Error(ErrorKind::not_member, "exponent vector is not order reversing");
  const Natural s = nu[x0_];
  std::vector<Element> chain;
  chain.reserve(s);
  // Level ideals {x | ν(x) >= i} shrink as i grows; their joins descend.
  for (Natural level = s; level >= 1; --level) {
    std::optional<Element> acc;
    for (Element x = 0; x < poset_.size(); ++x)
      if (nu[x] >= level) acc = acc ? lattice_.join(*acc, embedding_[x]) : embedding_[x];
    chain.push_back(*acc);
  }
  return chain;
}

std::vector<Element> HibiRing::psi(std::span<const Element> q, Element alpha) const {
  std::vector<Element> out;
  for (Element y : q)
    if (lattice_.leq(embedding_[y], alpha)) out.push_back(y);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Straightening and generators

std::pair<LatticePair, LatticePair> straighten_pair(const DistributiveLattice& h, LatticePair first,
                                                    LatticePair second) {
  const auto [a, b] = first;
  const auto [a2, b2] = second;
  if (!h.leq(a, b) || !h.leq(a2, b2))
    throw Error(ErrorKind::precondition, "doset pairs must satisfy alpha <= beta");
  const Element lo_join = h.join(a, a2);
  const Element hi_meet = h.meet(b, b2);
  return {{h.meet(a, a2), h.meet(lo_join, hi_meet)}, {h.join(lo_join, hi_meet), h.join(b, b2)}};
}

namespace {

std::vector<ExponentVector> members_in_box(const GdhSemigroup& s, Natural bound) {
  std::vector<ExponentVector> out;
  for_each_order_reversing(
      s.poset(), bound, Strictness::weak, [&](const ExponentVector& nu) { out.push_back(nu); },
      s.even_mask());
  return out;
}

GeneratorSet fallback_generators(const HibiRing& ring, const GdhSemigroup& s) {
  const Element x0 = ring.bottom_irreducible();
  const Natural box = default_box_bound(ring.poset());
  for (Natural degree = s.q().size() + 1; degree <= box; ++degree) {
    std::vector<ExponentVector> members;
    for (auto& nu : members_in_box(s, degree))
      if (nu[x0] >= 1) members.push_back(std::move(nu));
    std::unordered_set<ExponentVector, ExponentVectorHash> lookup(members.begin(), members.end());

    GeneratorSet out;
    out.fallback = true;
    for (const auto& nu : members) {
      bool reducible = false;
      for (const auto& part : members) {
        if (part == nu || !part.pointwise_leq(nu)) continue;
        ExponentVector rest(nu.size());
        for (std::size_t i = 0; i < nu.size(); ++i) rest[i] = nu[i] - part[i];
        if (lookup.contains(rest)) {
          reducible = true;
          break;
        }
      }
      if (!reducible) {
        out.factors.push_back(ring.factor_standard(nu));
        out.vectors.push_back(nu);
      }
    }
    if (generated_equals_membership(out.vectors, s, box).equal) return out;
  }
  throw InternalError("no generating set found within the default box");
}

}  // namespace

GeneratorSet gdh_generators(const HibiRing& ring, std::span<const Element> q) {
  GdhSemigroup s(ring.poset(), std::vector<Element>(q.begin(), q.end()));
  const auto y0 = s.unique_minimal_q();
  if (!y0) return fallback_generators(ring, s);

  const DistributiveLattice& h = ring.lattice();
  const Element floor = ring.embedding()[*y0];
  GeneratorSet out;
  for (Element alpha = 0; alpha < h.size(); ++alpha) {
    if (h.leq(floor, alpha)) continue;
    out.factors.push_back({alpha});
    out.vectors.push_back(ring.generator(alpha));
  }
  for (Element alpha = 0; alpha < h.size(); ++alpha) {
    if (!h.leq(floor, alpha)) continue;
    const auto psi_alpha = ring.psi(s.q(), alpha);
    for (Element beta = 0; beta < h.size(); ++beta) {
      if (!h.leq(alpha, beta) || ring.psi(s.q(), beta) != psi_alpha) continue;
      out.factors.push_back({alpha, beta});
      out.vectors.push_back(ring.generator(alpha) + ring.generator(beta));
    }
  }
  return out;
}

bool standard_monomial_in_gdh(const HibiRing& ring, std::span<const Element> q,
                              std::span<const Element> multichain) {
  const DistributiveLattice& h = ring.lattice();
  for (std::size_t i = 1; i < multichain.size(); ++i)
    if (!h.leq(multichain[i - 1], multichain[i]))
      throw Error(ErrorKind::precondition, "not an ascending multichain");
  // H1 is up-closed, so along a chain it is a suffix.
  std::size_t s = 0;
  while (s < multichain.size() && ring.psi(q, multichain[s]).empty()) ++s;
  if ((multichain.size() - s) % 2 != 0) return false;
  for (std::size_t i = s; i < multichain.size(); i += 2)
    if (ring.psi(q, multichain[i]) != ring.psi(q, multichain[i + 1])) return false;
  return true;
}

GenerationCheck generated_equals_membership(std::span<const ExponentVector> generators,
                                            const GdhSemigroup& s, Natural box_bound) {
  const Poset& p = s.poset();
  for (const auto& g : generators) check_domain(p, g);

  std::unordered_set<ExponentVector, ExponentVectorHash> reached;
  std::deque<ExponentVector> queue;
  ExponentVector zero(p.size());
  reached.insert(zero);
  queue.push_back(zero);
  while (!queue.empty()) {
    ExponentVector current = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      if (g.is_zero()) continue;
      ExponentVector next = current + g;
      if (next.max() > box_bound) continue;
      if (reached.insert(next).second) queue.push_back(std::move(next));
    }
  }

  std::vector<ExponentVector> difference;
  std::size_t matched = 0;
  for (auto& nu : members_in_box(s, box_bound)) {
    if (reached.contains(nu))
      ++matched;
    else
      difference.push_back(std::move(nu));
  }
  if (matched != reached.size()) {
    std::unordered_set<ExponentVector, ExponentVectorHash> members;
    for (auto& nu : members_in_box(s, box_bound)) members.insert(std::move(nu));
    for (const auto& nu : reached)
      if (!members.contains(nu)) difference.push_back(nu);
  }
  GenerationCheck out;
  if (!difference.empty()) {
    out.equal = false;
    out.witness = *std::min_element(difference.begin(), difference.end());
  }
  return out;
}

Natural default_box_bound(const Poset& p) { return 2 * (static_cast<Natural>(p.rank()) + 2); }

std::vector<Natural> hilbert_function(const GdhSemigroup& s, Natural s_max) {
  const auto minimal = s.poset().minimal_elements();
  if (minimal.size() != 1)
    throw Error(ErrorKind::no_unique_minimum, "grading needs a unique minimal element");
  const Element x0 = minimal.front();
  std::vector<Natural> h(s_max + 1, 0);
  for_each_order_reversing(
      s.poset(), s_max, Strictness::weak, [&](const ExponentVector& nu) { ++h[nu[x0]]; },
      s.even_mask());
  return h;
}

}  // namespace hibi
