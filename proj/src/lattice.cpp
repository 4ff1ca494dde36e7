#include "hibi/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace hibi {

namespace {

// The least element of `candidates` under `leq`, if it is below all of them.
template <class Leq>
std::optional<Element> least_of(const std::vector<Element>& candidates, Leq&& leq) {
  for (Element c : candidates) {
    if (std::all_of(candidates.begin(), candidates.end(), [&](Element d) { return leq(c, d); }))
      return c;
  }
  return std::nullopt;
}

}  // namespace

DistributiveLattice DistributiveLattice::from_poset(Poset p) {
  if (p.empty()) throw Error(ErrorKind::empty_poset, "a lattice needs at least one element");
  DistributiveLattice h;
  const std::size_t n = p.size();
  h.join_.assign(n * n, 0);
  h.meet_.assign(n * n, 0);
  std::vector<Element> upper, lower;
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      upper.clear();
      lower.clear();
      for (Element c = 0; c < n; ++c) {
        if (p.leq(a, c) && p.leq(b, c)) upper.push_back(c);
        if (p.leq(c, a) && p.leq(c, b)) lower.push_back(c);
      }
      auto lub = least_of(upper, [&](Element x, Element y) { return p.leq(x, y); });
      auto glb = least_of(lower, [&](Element x, Element y) { return p.leq(y, x); });
      if (!lub || !glb) {
        throw Error(ErrorKind::not_a_lattice, "'" + p.label(a) + "' and '" + p.label(b) +
                                                  "' have no " + (lub ? "meet" : "join"));
      }
      h.join_[a * n + b] = h.join_[b * n + a] = *lub;
      h.meet_[a * n + b] = h.meet_[b * n + a] = *glb;
    }
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        const Element lhs = h.meet_[a * n + h.join_[b * n + c]];
        const Element rhs = h.join_[h.meet_[a * n + b] * n + h.meet_[a * n + c]];
        if (lhs != rhs) {
          throw Error(ErrorKind::not_distributive, "distributivity fails at ('" + p.label(a) +
                                                       "', '" + p.label(b) + "', '" +
                                                       p.label(c) + "')");
        }
      }
  h.bottom_ = p.minimal_elements().front();
  h.top_ = p.maximal_elements().front();
  h.poset_ = std::move(p);
  return h;
}

std::vector<Element> DistributiveLattice::join_irreducibles() const {
  std::vector<Element> out;
  for (Element a = 0; a < size(); ++a)
    if (poset_.lower_covers(a).size() <= 1) out.push_back(a);
  return out;
}

// ---------------------------------------------------------------------------
// Birkhoff duality

BirkhoffDual::BirkhoffDual(const DistributiveLattice& h)
    : embedding(h.join_irreducibles()) {
  irreducibles = h.poset().induced(embedding);
}

std::vector<Element> BirkhoffDual::phi(const DistributiveLattice& h, Element alpha) const {
  std::vector<Element> out;
  for (Element x = 0; x < embedding.size(); ++x)
    if (h.leq(embedding[x], alpha)) out.push_back(x);
  return out;
}

Element BirkhoffDual::psi(const DistributiveLattice& h, std::span<const Element> ideal) const {
  if (ideal.empty()) throw Error(ErrorKind::precondition, "Psi of the empty ideal");
  std::vector<bool> in(embedding.size(), false);
  for (Element x : ideal) {
    if (x >= embedding.size()) throw Error(ErrorKind::invalid_index, "ideal element out of range");
    in[x] = true;
  }
  for (Element x : ideal)
    for (Element y = 0; y < embedding.size(); ++y)
      if (irreducibles.leq(y, x) && !in[y])
        throw Error(ErrorKind::precondition, "set is not down-closed at '" +
                                                 irreducibles.label(x) + "'");
  Element acc = embedding[ideal.front()];
  for (Element x : ideal) acc = h.join(acc, embedding[x]);
  return acc;
}

IdealLattice ideal_lattice(const Poset& p) {
  if (p.minimal_elements().size() != 1)
    throw Error(ErrorKind::no_unique_minimum, "J(P) minus the empty ideal is a lattice only "
                                              "when P has a unique minimal element");
  IdealLattice out;
  for (auto& ideal : order_ideals(p))
    if (!ideal.empty()) out.ideals.push_back(std::move(ideal));
  std::vector<std::string> labels;
  for (const auto& ideal : out.ideals) {
    std::string s = "{";
    for (std::size_t i = 0; i < ideal.size(); ++i) s += (i ? "," : "") + p.label(ideal[i]);
    labels.push_back(s + "}");
  }
  const auto& ideals = out.ideals;
  out.lattice = DistributiveLattice::from_poset(
      Poset::from_order(std::move(labels), [&](Element i, Element j) {
        return std::includes(ideals[j].begin(), ideals[j].end(), ideals[i].begin(),
                             ideals[i].end());
      }));
  return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms

LatticeHom::LatticeHom(DistributiveLattice source, DistributiveLattice target,
                       std::vector<Element> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (map_.size() != source_.size())
    throw Error(ErrorKind::not_homomorphism, "map is not total on the source");
  for (Element t : map_)
    if (t >= target_.size()) throw Error(ErrorKind::invalid_index, "image out of range");
  for (Element a = 0; a < source_.size(); ++a)
    for (Element b = 0; b < source_.size(); ++b) {
      if (map_[source_.join(a, b)] != target_.join(map_[a], map_[b]) ||
          map_[source_.meet(a, b)] != target_.meet(map_[a], map_[b])) {
        throw Error(ErrorKind::not_homomorphism, "map does not preserve join/meet at ('" +
                                                     source_.label(a) + "', '" +
                                                     source_.label(b) + "')");
      }
    }
  std::vector<bool> hit(target_.size(), false);
  for (Element t : map_) hit[t] = true;
  for (Element t = 0; t < target_.size(); ++t)
    if (!hit[t])
      throw Error(ErrorKind::not_surjective, "'" + target_.label(t) + "' is not in the image");
}

LatticeHom LatticeHom::from_labels(DistributiveLattice source, DistributiveLattice target,
                                   const std::map<std::string, std::string>& map) {
  std::vector<Element> images(source.size());
  std::vector<bool> seen(source.size(), false);
  for (const auto& [from, to] : map) {
    const Element a = source.index(from);
    images[a] = target.index(to);
    seen[a] = true;
  }
  for (Element a = 0; a < source.size(); ++a)
    if (!seen[a])
      throw Error(ErrorKind::not_homomorphism, "no image given for '" + source.label(a) + "'");
  return LatticeHom(std::move(source), std::move(target), std::move(images));
}

LatticeHom LatticeHom::identity(const DistributiveLattice& h) {
  std::vector<Element> map(h.size());
  for (Element a = 0; a < h.size(); ++a) map[a] = a;
  return LatticeHom(h, h, std::move(map));
}

Element LatticeHom::phi_star(Element beta) const {
  if (beta >= target_.size()) throw Error(ErrorKind::invalid_index, "element out of range");
  std::optional<Element> acc;
  for (Element a = 0; a < source_.size(); ++a)
    if (map_[a] == beta) acc = acc ? source_.meet(*acc, a) : a;
  return *acc;  // surjectivity guarantees a non-empty fibre
}

QRestriction restrict_to_q(const LatticeHom& hom) {
  const DistributiveLattice& h = hom.source();
  const DistributiveLattice& l = hom.target();
  const BirkhoffDual dual_h(h);
  const BirkhoffDual dual_l(l);

  QRestriction out;
  for (Element y : dual_l.embedding) out.q_lattice.push_back(hom.phi_star(y));
  for (Element alpha : out.q_lattice) {
    auto it = std::find(dual_h.embedding.begin(), dual_h.embedding.end(), alpha);
    if (it == dual_h.embedding.end())
      throw InternalError("phi* of a join-irreducible is not join-irreducible");
    out.q.push_back(static_cast<Element>(it - dual_h.embedding.begin()));
  }

  for (Element alpha = 0; alpha < h.size(); ++alpha) {
    // Φ_L(φ(α)), carried into H by φ*.
    std::vector<Element> lhs;
    for (Element y : dual_l.phi(l, hom(alpha))) lhs.push_back(hom.phi_star(dual_l.embedding[y]));
    // Φ_H(α) ∩ Q.
    std::vector<Element> rhs;
    for (Element q : out.q_lattice)
      if (h.leq(q, alpha)) rhs.push_back(q);
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs != rhs) {
      std::ostringstream msg;
      msg << "restriction identity fails at '" << h.label(alpha) << "'";
      throw InternalError(msg.str());
    }
  }
  return out;
}

}  // namespace hibi
