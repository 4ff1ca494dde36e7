#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hibi/determinantal.hpp"
#include "hibi/semigroup.hpp"

namespace hibi {

using Integer = boost::multiprecision::cpp_int;

inline constexpr std::size_t kMaxVariables = 64;

/// Exponents indexed by variable position. Variables are numbered so that
/// position 0 is the largest; the built-in ordering is then degree
/// lexicographic.
struct Monomial {
  std::uint32_t degree = 0;
  std::array<std::uint8_t, kMaxVariables> exponents{};

  /// Throws ErrorKind::overflow when an exponent exceeds 255.
  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Variables of K[W, U_γ] in the diagonal sequence
/// W11 > W21 > ... > Wm1 > W12 > ... > Wmm > U_{1 b1} > ... > U_{1n} > U_{2 b2} > ... > U_{mn}.
/// U_{ij} with j < b_i is a structural zero and has no variable.
class VariableSet {
 public:
  /// Throws ErrorKind::invalid_gamma, or ErrorKind::precondition when the
  /// variable count exceeds kMaxVariables.
  VariableSet(int m, int n, GammaTuple gamma);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  const GammaTuple& gamma() const noexcept { return gamma_; }
  std::size_t size() const noexcept { return names_.size(); }

  /// 1-based indices.
  std::size_t w(int i, int j) const;
  bool has_u(int i, int j) const;
  std::size_t u(int i, int j) const;  ///< throws ErrorKind::invalid_index on a structural zero
  const std::string& name(std::size_t v) const { return names_.at(v); }

  Monomial variable(std::size_t v) const;
  std::string format(const Monomial& mono) const;

 private:
  int m_, n_;
  GammaTuple gamma_;
  std::vector<std::size_t> u_offset_;
  std::vector<std::string> names_;
};

/// Monomial comparison under the diagonal degree lexicographic order:
/// total degree first, then the first differing exponent in the sequence.
struct DiagonalOrder {
  std::strong_ordering operator()(const Monomial& a, const Monomial& b) const { return a <=> b; }
  bool greater(const Monomial& a, const Monomial& b) const { return a > b; }
};

class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial constant(Integer c);
  static Polynomial monomial(const Monomial& m, Integer c = 1);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const std::unordered_map<Monomial, Integer, MonomialHash>& terms() const noexcept { return terms_; }
  Integer coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Integer& c);
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  std::unordered_map<Monomial, Integer, MonomialHash> terms_;
};

/// Largest monomial with a nonzero coefficient. Throws
/// ErrorKind::zero_polynomial.
Monomial leading_monomial(const Polynomial& f, DiagonalOrder order = {});

class SymbolicMatrix {
 public:
  SymbolicMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  /// 0-based.
  const Polynomial& at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
  Polynomial& at(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }

  SymbolicMatrix transpose() const;
  friend SymbolicMatrix operator*(const SymbolicMatrix& a, const SymbolicMatrix& b);

 private:
  std::size_t rows_, cols_;
  std::vector<Polynomial> cells_;
};

SymbolicMatrix w_matrix(const VariableSet& vars);
SymbolicMatrix u_matrix(const VariableSet& vars);
/// Z_γ = W U_γ.
SymbolicMatrix z_matrix(const VariableSet& vars);

/// det of the submatrix on 1-based `rows` and `cols`. Throws
/// ErrorKind::precondition on a non-square selection and
/// ErrorKind::invalid_index when an index is out of range.
Polynomial minor(const SymbolicMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

struct LemmaCheck {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> mismatches;
  bool passed() const noexcept { return mismatches.empty(); }
};

struct LemmaReport {
  std::vector<LemmaCheck> checks;
  bool passed() const noexcept;
};

/// Leading monomials of every minor of W and U_γ (main diagonal), of WU_γ
/// with columns above γ, of WᵀW, and of Z_γᵀZ_γ on D_γ against their
/// closed forms; Cauchy–Binet for WU_γ; vanishing of WU_γ minors whose
/// columns are not above γ.
LemmaReport verify_lm_lemmas(int m, int n, const GammaTuple& gamma);

struct DistinctLmReport {
  bool passed = true;
  std::size_t standard_monomials = 0;
  std::vector<std::string> problems;
};

/// Standard monomials on the minors [α|β] with β >= γ, of length 1 to
/// `deg_bound`: their leading monomials match the product formula and are
/// pairwise distinct.
DistinctLmReport distinct_lm_of_standard_monomials(int m, int n, const GammaTuple& gamma,
                                                   std::size_t deg_bound);

struct HilbertMatch {
  bool match = true;
  std::vector<Natural> initial;  ///< distinct leading monomials per degree
  std::vector<Natural> hilbert;  ///< h(s) of D_K(P, Q1) or D_K(P, Q2)
};

/// Degree-s products of the sagbi generators (doset minors of Z_γᵀZ_γ in
/// degree 2, maximal minors of Z_γ in degree 1 for SO) against the
/// Hilbert function of the matching generalized doset Hibi ring.
HilbertMatch initial_algebra_hilbert_match(int m, int n, const GammaTuple& gamma, Group group,
                                           std::size_t s_max);

}  // namespace hibi
