#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hibi/gorenstein.hpp"
#include "hibi/lattice.hpp"
#include "hibi/poset.hpp"

namespace hibi {

/// A strictly increasing tuple [c1, ..., cr] of positive integers, r >= 1.
struct GammaTuple {
  std::vector<int> entries;

  std::size_t size() const noexcept { return entries.size(); }
  int operator[](std::size_t i) const { return entries[i]; }
  /// "[1,2,5]"
  std::string label() const;
  /// Accepts "1,2,5" or "[1,2,5]", whitespace ignored. Throws
  /// ErrorKind::invalid_gamma.
  static GammaTuple parse(std::string_view text);

  friend bool operator==(const GammaTuple&, const GammaTuple&) = default;
  friend auto operator<=>(const GammaTuple&, const GammaTuple&) = default;
};

/// Membership in Γ'(m×n): 1 <= size <= m, strictly increasing in [1, n].
bool in_gamma_prime(const GammaTuple& t, int m, int n);
/// Throws ErrorKind::invalid_gamma unless γ ∈ Γ(m×n) (size exactly m).
void validate_gamma(const GammaTuple& gamma, int m, int n);

/// [c1..cr] <= [d1..ds] iff r >= s and ci <= di for i <= s.
bool gamma_leq(const GammaTuple& a, const GammaTuple& b);
bool gamma_less(const GammaTuple& a, const GammaTuple& b);
/// Componentwise max over the shorter length.
GammaTuple gamma_join(const GammaTuple& a, const GammaTuple& b);
/// Componentwise min over the shorter length, then the tail of the longer.
GammaTuple gamma_meet(const GammaTuple& a, const GammaTuple& b);

/// All δ ∈ Γ'(m×n) with δ >= γ, sorted by size descending then entries.
std::vector<GammaTuple> gamma_prime_elements(int m, int n, const GammaTuple& gamma);
/// Γ(m×n), lexicographic. Throws ErrorKind::invalid_gamma unless 1 <= m <= n.
std::vector<GammaTuple> gamma_elements(int m, int n);
/// Γ'(m×n; γ) validated as a distributive lattice. Intended for desk scale;
/// the validation is cubic in the element count.
DistributiveLattice gamma_prime_lattice(int m, int n, const GammaTuple& gamma);

/// The join-irreducibles of Γ'(m×n; γ), found by their closed form and
/// not by building the lattice.
struct SchubertPoset {
  int m = 0;
  int n = 0;
  GammaTuple gamma;
  Poset poset;  ///< labels are GammaTuple labels
  std::vector<GammaTuple> tuples;
  std::vector<std::pair<int, int>> xi;  ///< ξ per element; unset (0, 0) for γ
  Element bottom = 0;                   ///< index of γ
};

bool is_join_irreducible_schubert(const GammaTuple& delta, int m, int n, const GammaTuple& gamma);
/// ξ(δ) for a join-irreducible δ ≠ γ.
std::pair<int, int> xi(const GammaTuple& delta, int m, int n, const GammaTuple& gamma);
SchubertPoset join_irreducibles_schubert(int m, int n, const GammaTuple& gamma);

struct BlockDecomposition {
  std::vector<int> u;                   ///< u(1) < ... < u(k), 1-based
  std::vector<std::vector<int>> blocks;  ///< B1 .. B_{k+1}
  std::vector<std::vector<int>> gaps;    ///< χ0 .. χk
  std::size_t k() const noexcept { return u.size(); }
};

BlockDecomposition block_decomposition(int m, int n, const GammaTuple& gamma);

enum class Group { O, SO };
const char* to_string(Group g);

/// Block criteria. With k = 0 and b_m = n the O condition on B_{k+1} is
/// treated as vacuous.
bool verdict_orthogonal(int m, int n, const GammaTuple& gamma);
bool verdict_special_orthogonal(int m, int n, const GammaTuple& gamma);
/// The SO condition for b_m = n written as |B_i| = |χ_{i-1}| for i <= k
/// plus |B_{k+1}| = |χ_k|.
bool verdict_special_orthogonal_split_form(int m, int n, const GammaTuple& gamma);
bool block_verdict(Group g, int m, int n, const GammaTuple& gamma);

/// Q1 = {[b1..bi] | i = 1..m} for O, Q2 = {[b1..bi] | i = 1..m-1} for SO,
/// as indices into `s.poset`.
std::vector<Element> schubert_q(const SchubertPoset& s, Group g);

struct CrossCheck {
  bool block = false;
  WitnessReport criterion;
  bool agree() const noexcept { return block == criterion.gorenstein; }
};

/// Block verdict against the general criterion on (P, Q1) or (P, Q2).
CrossCheck cross_check(Group g, int m, int n, const GammaTuple& gamma);

/// A doset pair (α, β) with size α = size β.
struct DosetPair {
  GammaTuple alpha;
  GammaTuple beta;
  friend bool operator==(const DosetPair&, const DosetPair&) = default;
};

/// (α, β) ∈ D_{m,n}: α <= β in Γ'(m×n). Throws ErrorKind::precondition on
/// a size mismatch.
bool in_d(const DosetPair& pair, int m, int n);
/// (α, β) ∈ D_γ ⊆ D_{n,n}: additionally α >= γ.
bool in_d_gamma(const DosetPair& pair, int n, const GammaTuple& gamma);

/// D'_{m,n} = D_{m-1,n} ∪ Γ(m×n).
using DPrimeElement = std::variant<GammaTuple, DosetPair>;
bool in_d_prime(const DPrimeElement& e, int m, int n);

/// Lexicographic: α < α', or α = α' and β < β'.
bool doset_less(const DosetPair& a, const DosetPair& b);
bool doset_leq(const DosetPair& a, const DosetPair& b);
/// The order on D'_{m,n}: Γ(m×n) and D_{m-1,n} keep their orders and
/// δ < (α, β) iff δ < α.
bool doset_less(const DPrimeElement& a, const DPrimeElement& b);

}  // namespace hibi
