#include <set>

#include "doctest.h"
#include "hibi/semigroup.hpp"
#include "support.hpp"

using namespace hibi;
using namespace testing_support;

namespace {

Poset vee() { return from_covers({"x0", "x1", "x2"}, {{"x0", "x1"}, {"x0", "x2"}}); }

// Lattice elements of an over_poset ring whose ideal is exactly `ideal`.
Element element_of(const HibiRing& ring, std::vector<Element> ideal) {
  for (Element a = 0; a < ring.lattice().size(); ++a) {
    std::vector<Element> phi;
    for (Element x = 0; x < ring.poset().size(); ++x)
      if (ring.generator(a)[x]) phi.push_back(x);
    if (phi == ideal) return a;
  }
  FAIL("no such element");
  return 0;
}

// Iterated straightening of doset pairs into a multichain.
std::vector<Element> straighten_all(const DistributiveLattice& h, std::vector<LatticePair> pairs) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < pairs.size(); ++i) {
      auto [lo, hi] = straighten_pair(h, pairs[i], pairs[i + 1]);
      if (lo != pairs[i] || hi != pairs[i + 1]) {
        pairs[i] = lo;
        pairs[i + 1] = hi;
        changed = true;
      }
    }
  }
  std::vector<Element> out;
  for (auto [a, b] : pairs) {
    out.push_back(a);
    out.push_back(b);
  }
  return out;
}

}  // namespace

TEST_CASE("generators") {
  HibiRing grid = HibiRing::over_poset(vee());
  const auto& h = grid.lattice();
  CHECK(grid.generator(h.bottom()) == ExponentVector{1, 0, 0});
  CHECK(grid.generator(h.top()) == ExponentVector{1, 1, 1});
  CHECK(grid.generator(element_of(grid, {0, 1})) == ExponentVector{1, 1, 0});
}

TEST_CASE("membership") {
  GdhSemigroup plain = hibi_semigroup(chain(2));
  GdhSemigroup q0(chain(2), {0});
  CHECK(plain.contains(ExponentVector{0, 0}));
  CHECK(q0.contains(ExponentVector{0, 0}));
  CHECK(q0.contains(ExponentVector{2, 1}));
  CHECK_FALSE(q0.contains(ExponentVector{1, 1}));
  CHECK_FALSE(plain.contains(ExponentVector{0, 1}));
  CHECK(GdhSemigroup(vee(), {0}).contains(ExponentVector{2, 2, 1}));
  CHECK_THROWS_AS(q0.contains(ExponentVector{2}), Error);
}

TEST_CASE("standard factorization") {
  HibiRing ring = HibiRing::over_poset(vee());
  const auto& h = ring.lattice();
  CHECK(ring.factor_standard(ExponentVector{0, 0, 0}).empty());
  const Element a = element_of(ring, {0, 1});
  CHECK(ring.factor_standard(ring.generator(a)) == std::vector<Element>{a});
  CHECK(ring.factor_standard(ExponentVector{2, 1, 1}) == std::vector<Element>{h.bottom(), h.top()});
  CHECK_THROWS_AS(ring.factor_standard(ExponentVector{0, 1, 0}), Error);
}

TEST_CASE("straightening on the square") {
  HibiRing ring = HibiRing::over_poset(vee());
  const auto& h = ring.lattice();
  const Element a = element_of(ring, {0, 1}), b = element_of(ring, {0, 2});
  const Element bot = h.bottom(), top = h.top();
  auto [p1, p2] = straighten_pair(h, {a, a}, {b, b});
  CHECK(p1 == LatticePair{bot, bot});
  CHECK(p2 == LatticePair{top, top});
  CHECK(ring.generator(a) + ring.generator(a) + ring.generator(b) + ring.generator(b) ==
        ring.generator(bot) + ring.generator(bot) + ring.generator(top) + ring.generator(top));
  auto [q1, q2] = straighten_pair(h, {bot, a}, {a, top});
  CHECK(q1 == LatticePair{bot, a});
  CHECK(q2 == LatticePair{a, top});
  auto [r1, r2] = straighten_pair(h, {a, a}, {a, a});
  CHECK(r1 == LatticePair{a, a});
  CHECK(r2 == LatticePair{a, a});
  CHECK_THROWS_AS(straighten_pair(h, {top, bot}, {a, a}), Error);
}

TEST_CASE("straightening preserves exponents on every lattice up to eight elements") {
  for (const Poset& p : posets_with_bottom(5)) {
    HibiRing ring = HibiRing::over_poset(p);
    const auto& h = ring.lattice();
    if (h.size() > 8) continue;
    for (Element a = 0; a < h.size(); ++a)
      for (Element b = 0; b < h.size(); ++b) {
        if (!h.leq(a, b)) continue;
        for (Element c = 0; c < h.size(); ++c)
          for (Element d = 0; d < h.size(); ++d) {
            if (!h.leq(c, d)) continue;
            auto [x, y] = straighten_pair(h, {a, b}, {c, d});
            const auto before = ring.generator(a) + ring.generator(b) + ring.generator(c) +
                                ring.generator(d);
            const auto after = ring.generator(x.first) + ring.generator(x.second) +
                               ring.generator(y.first) + ring.generator(y.second);
            CHECK(before == after);
            CHECK(h.leq(x.first, x.second));
            CHECK(h.leq(x.second, y.first));
            CHECK(h.leq(y.first, y.second));
          }
      }
  }
}

TEST_CASE("generator sets from the proposition") {
  // Q = {x0}: every comparable pair, the second Veronese.
  HibiRing ring = HibiRing::over_poset(vee());
  const auto& h = ring.lattice();
  std::size_t comparable = 0;
  for (Element a = 0; a < h.size(); ++a)
    for (Element b = 0; b < h.size(); ++b) comparable += h.leq(a, b);
  std::vector<Element> q0{0};
  CHECK(gdh_generators(ring, q0).vectors.size() == comparable);

  // Q = P: the squares.
  std::vector<Element> all{0, 1, 2};
  auto squares = gdh_generators(ring, all);
  CHECK(squares.vectors.size() == h.size());
  for (const auto& f : squares.factors) CHECK((f.size() == 2 && f[0] == f[1]));

  // A three-element chain with Q = {bottom}: six products.
  HibiRing c3 = HibiRing::over_poset(chain(3));
  CHECK(gdh_generators(c3, q0).vectors.size() == 6);
  CHECK_FALSE(gdh_generators(c3, q0).fallback);
}

TEST_CASE("generated semigroup matches membership") {
  for (const Poset& p : posets_with_bottom(6)) {
    HibiRing ring = HibiRing::over_poset(p);
    GdhSemigroup s = hibi_semigroup(p);
    std::vector<ExponentVector> gens;
    for (Element a = 0; a < ring.lattice().size(); ++a) gens.push_back(ring.generator(a));
    CHECK(generated_equals_membership(gens, s, 4).equal);
  }
  for (const Poset& p : posets_with_bottom(5)) {
    HibiRing ring = HibiRing::over_poset(p);
    for (const auto& q : subsets(p.size())) {
      GdhSemigroup s(p, q);
      if (!s.unique_minimal_q()) continue;
      auto gens = gdh_generators(ring, q);
      for (const auto& g : gens.vectors) CHECK(s.contains(g));
      CHECK(generated_equals_membership(gens.vectors, s, 4).equal);
    }
  }
}

TEST_CASE("dropping a generator is detected") {
  HibiRing ring = HibiRing::over_poset(chain(2));
  std::vector<ExponentVector> gens;
  for (Element a = 0; a < ring.lattice().size(); ++a) gens.push_back(ring.generator(a));
  const ExponentVector dropped = gens.back();
  gens.pop_back();
  auto check = generated_equals_membership(gens, hibi_semigroup(chain(2)), 4);
  CHECK_FALSE(check.equal);
  REQUIRE(check.witness);
  CHECK(*check.witness == dropped);
}

TEST_CASE("fallback generators without a unique minimal element of Q") {
  for (const Poset& p : posets_with_bottom(4)) {
    HibiRing ring = HibiRing::over_poset(p);
    for (const auto& q : subsets(p.size())) {
      GdhSemigroup s(p, q);
      if (s.unique_minimal_q()) continue;
      auto gens = gdh_generators(ring, q);
      CHECK(gens.fallback);
      CHECK(generated_equals_membership(gens.vectors, s, default_box_bound(p)).equal);
    }
  }
}

TEST_CASE("standard monomials and the membership pattern") {
  for (const Poset& p : posets_with_bottom(5)) {
    HibiRing ring = HibiRing::over_poset(p);
    const Element x0 = ring.bottom_irreducible();
    for (const auto& q : subsets(p.size())) {
      GdhSemigroup s(p, q);
      const bool unique = s.unique_minimal_q().has_value();
      std::vector<ExponentVector> members;
      for_each_order_reversing(p, 4, Strictness::weak,
                               [&](const ExponentVector& nu) { members.push_back(nu); });
      for (const auto& nu : members) {
        auto chain_of = ring.factor_standard(nu);
        CHECK(chain_of.size() == nu[x0]);
        CHECK(ring.recompose(chain_of) == nu);
        if (unique) CHECK(standard_monomial_in_gdh(ring, q, chain_of) == s.contains(nu));
      }
    }
  }
}

TEST_CASE("products of pair generators straighten into members") {
  for (const Poset& p : posets_with_bottom(4)) {
    HibiRing ring = HibiRing::over_poset(p);
    for (const auto& q : subsets(p.size())) {
      GdhSemigroup s(p, q);
      if (!s.unique_minimal_q()) continue;
      auto gens = gdh_generators(ring, q);
      std::vector<LatticePair> pairs;
      for (const auto& f : gens.factors)
        if (f.size() == 2) pairs.emplace_back(f[0], f[1]);
      for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = 0; j < pairs.size(); ++j) {
          auto straight = straighten_all(ring.lattice(), {pairs[i], pairs[j]});
          const auto nu = ring.recompose(straight);
          CHECK(s.contains(nu));
          CHECK(standard_monomial_in_gdh(ring, q, straight));
          CHECK(straight == ring.factor_standard(nu));
        }
    }
  }
}

TEST_CASE("semigroup closure on sums") {
  for (const Poset& p : posets_with_bottom(5)) {
    for (const auto& q : subsets(p.size())) {
      GdhSemigroup s(p, q);
      std::vector<ExponentVector> members;
      for_each_order_reversing(
          p, 2, Strictness::weak, [&](const ExponentVector& nu) { members.push_back(nu); },
          s.even_mask());
      for (std::size_t i = 0; i < members.size(); i += 3)
        for (std::size_t j = 0; j < members.size(); j += 5) CHECK(s.contains(members[i] + members[j]));
      // Box members are exactly the vectors meeting the inequalities and congruences.
      std::size_t brute = 0;
      for_each_map(p.size(), 0, 2, [&](const ExponentVector& v) {
        brute += brute_reversing(p, v, false) && even_on(v, q);
      });
      CHECK(members.size() == brute);
    }
  }
}

TEST_CASE("Hilbert functions") {
  CHECK(hilbert_function(hibi_semigroup(chain(1)), 4) == std::vector<Natural>{1, 1, 1, 1, 1});
  CHECK(hilbert_function(hibi_semigroup(vee()), 4) == std::vector<Natural>{1, 4, 9, 16, 25});
  CHECK(hilbert_function(GdhSemigroup(chain(2), {0}), 2) == std::vector<Natural>{1, 0, 3});
  Poset two_min = from_covers({"a", "b"}, {});
  CHECK_THROWS_AS(hilbert_function(hibi_semigroup(two_min), 3), Error);
}
