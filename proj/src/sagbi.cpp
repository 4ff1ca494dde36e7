#include "hibi/sagbi.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <optional>
#include <unordered_set>

namespace hibi {

// ---------------------------------------------------------------------------
// Monomials and variables

Monomial& Monomial::operator*=(const Monomial& other) {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const unsigned sum = unsigned{exponents[i]} + other.exponents[i];
    if (sum > 255) throw Error(ErrorKind::overflow, "monomial exponent exceeds 255");
    exponents[i] = static_cast<std::uint8_t>(sum);
  }
  degree += other.degree;
  return *this;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t words[kMaxVariables / 8];
  std::memcpy(words, m.exponents.data(), sizeof words);
  std::uint64_t h = m.degree;
  for (std::uint64_t w : words) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
  return static_cast<std::size_t>(h);
}

VariableSet::VariableSet(int m, int n, GammaTuple gamma) : m_(m), n_(n), gamma_(std::move(gamma)) {
  validate_gamma(gamma_, m, n);
  for (int j = 1; j <= m; ++j)
    for (int i = 1; i <= m; ++i) names_.push_back("W" + std::to_string(i) + "_" + std::to_string(j));
  for (int i = 1; i <= m; ++i) {
    u_offset_.push_back(names_.size());
    for (int j = gamma_[static_cast<std::size_t>(i - 1)]; j <= n; ++j)
      names_.push_back("U" + std::to_string(i) + "_" + std::to_string(j));
  }
  if (names_.size() > kMaxVariables)
    throw Error(ErrorKind::precondition, "more than " + std::to_string(kMaxVariables) + " variables");
}

std::size_t VariableSet::w(int i, int j) const {
  if (i < 1 || i > m_ || j < 1 || j > m_) throw Error(ErrorKind::invalid_index, "W index out of range");
  return static_cast<std::size_t>((j - 1) * m_ + (i - 1));
}

bool VariableSet::has_u(int i, int j) const {
  return i >= 1 && i <= m_ && j <= n_ && j >= gamma_[static_cast<std::size_t>(i - 1)];
}

std::size_t VariableSet::u(int i, int j) const {
  if (!has_u(i, j)) throw Error(ErrorKind::invalid_index, "U index out of range or structurally zero");
  return u_offset_[static_cast<std::size_t>(i - 1)] +
         static_cast<std::size_t>(j - gamma_[static_cast<std::size_t>(i - 1)]);
}

Monomial VariableSet::variable(std::size_t v) const {
  if (v >= size()) throw Error(ErrorKind::invalid_index, "variable out of range");
  Monomial mono;
  mono.exponents[v] = 1;
  mono.degree = 1;
  return mono;
}

std::string VariableSet::format(const Monomial& mono) const {
  std::string s;
  for (std::size_t v = 0; v < size(); ++v) {
    if (!mono.exponents[v]) continue;
    if (!s.empty()) s += "*";
    s += names_[v];
    if (mono.exponents[v] > 1) s += "^" + std::to_string(mono.exponents[v]);
  }
  return s.empty() ? "1" : s;
}

// ---------------------------------------------------------------------------
// Polynomials

Polynomial Polynomial::constant(Integer c) { return monomial(Monomial{}, std::move(c)); }

Polynomial Polynomial::monomial(const Monomial& m, Integer c) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer{0} : it->second;
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Monomial leading_monomial(const Polynomial& f, DiagonalOrder order) {
  if (f.is_zero()) throw Error(ErrorKind::zero_polynomial, "leading monomial of zero");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : f.terms())
    if (!best || order.greater(m, *best)) best = &m;
  return *best;
}

// ---------------------------------------------------------------------------
// Matrices

SymbolicMatrix SymbolicMatrix::transpose() const {
  SymbolicMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

SymbolicMatrix operator*(const SymbolicMatrix& a, const SymbolicMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::precondition, "matrix shapes do not chain");
  SymbolicMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
        out.at(i, j) += a.at(i, k) * b.at(k, j);
      }
  return out;
}

SymbolicMatrix w_matrix(const VariableSet& vars) {
  const auto m = static_cast<std::size_t>(vars.m());
  SymbolicMatrix w(m, m);
  for (int i = 1; i <= vars.m(); ++i)
    for (int j = 1; j <= vars.m(); ++j)
      w.at(i - 1, j - 1) = Polynomial::monomial(vars.variable(vars.w(i, j)));
  return w;
}

SymbolicMatrix u_matrix(const VariableSet& vars) {
  SymbolicMatrix u(static_cast<std::size_t>(vars.m()), static_cast<std::size_t>(vars.n()));
  for (int i = 1; i <= vars.m(); ++i)
    for (int j = 1; j <= vars.n(); ++j)
      if (vars.has_u(i, j)) u.at(i - 1, j - 1) = Polynomial::monomial(vars.variable(vars.u(i, j)));
  return u;
}

SymbolicMatrix z_matrix(const VariableSet& vars) { return w_matrix(vars) * u_matrix(vars); }

Polynomial minor(const SymbolicMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw Error(ErrorKind::precondition, "minor needs a square selection");
  if (rows.size() > 16) throw Error(ErrorKind::precondition, "minor larger than 16");
  for (int r : rows)
    if (r < 1 || static_cast<std::size_t>(r) > m.rows()) throw Error(ErrorKind::invalid_index, "row out of range");
  for (int c : cols)
    if (c < 1 || static_cast<std::size_t>(c) > m.cols()) throw Error(ErrorKind::invalid_index, "column out of range");

  const std::size_t r = rows.size();
  // Laplace along successive rows; the remaining column set determines the row.
  std::vector<std::optional<Polynomial>> memo(std::size_t{1} << r);
  auto det = [&](auto&& self, unsigned mask) -> const Polynomial& {
    auto& slot = memo[mask];
    if (slot) return *slot;
    const std::size_t k = r - static_cast<std::size_t>(__builtin_popcount(mask));
    Polynomial acc;
    if (k == r) {
      acc = Polynomial::constant(1);
    } else {
      int before = 0;
      for (std::size_t c = 0; c < r; ++c) {
        if (!(mask >> c & 1)) continue;
        const Polynomial& entry = m.at(static_cast<std::size_t>(rows[k] - 1), static_cast<std::size_t>(cols[c] - 1));
        if (!entry.is_zero()) {
          const Polynomial& rest = self(self, mask & ~(1u << c));
          if (!rest.is_zero()) {
            Polynomial term = entry * rest;
            if (before % 2) acc -= term;
            else acc += term;
          }
        }
        ++before;
      }
    }
    slot = std::move(acc);
    return *slot;
  };
  return det(det, (1u << r) - 1);
}

bool LemmaReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.passed(); });
}

// ---------------------------------------------------------------------------
// Closed forms of leading monomials

namespace {

// All strictly increasing r-subsets of {1..n}.
std::vector<std::vector<int>> tuples_of(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= n - (r - static_cast<int>(cur.size())) + 1; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::string minor_label(const std::string& matrix, const std::vector<int>& a, const std::vector<int>& b) {
  return GammaTuple{a}.label() + "|" + GammaTuple{b}.label() + " of " + matrix;
}

Monomial product_of(const VariableSet& vars, const std::vector<std::pair<std::size_t, int>>& factors) {
  Monomial mono;
  for (auto [v, e] : factors)
    for (int i = 0; i < e; ++i) mono *= vars.variable(v);
  return mono;
}

void expect_lm(LemmaCheck& check, const VariableSet& vars, const Polynomial& f, const Monomial& want,
               const std::string& what) {
  ++check.checked;
  if (f.is_zero()) {
    check.mismatches.push_back(what + ": vanishes, expected " + vars.format(want));
    return;
  }
  const Monomial got = leading_monomial(f);
  if (got != want)
    check.mismatches.push_back(what + ": lm " + vars.format(got) + ", expected " + vars.format(want));
}

Monomial wu_formula(const VariableSet& vars, const std::vector<int>& c, const std::vector<int>& d) {
  Monomial mono;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const int jj = static_cast<int>(j) + 1;
    mono *= vars.variable(vars.w(c[j], jj));
    mono *= vars.variable(vars.u(jj, d[j]));
  }
  return mono;
}

}  // namespace

LemmaReport verify_lm_lemmas(int m, int n, const GammaTuple& gamma) {
  const VariableSet vars(m, n, gamma);
  const SymbolicMatrix w = w_matrix(vars);
  const SymbolicMatrix u = u_matrix(vars);
  const SymbolicMatrix z = w * u;
  const SymbolicMatrix wtw = w.transpose() * w;
  const SymbolicMatrix ztz = z.transpose() * z;

  auto named = [](const char* name) {
    LemmaCheck c;
    c.name = name;
    return c;
  };
  LemmaCheck diag_w = named("diagonal_w"), diag_u = named("diagonal_u"), wu = named("wu_minors"),
             zeros = named("structural_zeros"), cb = named("cauchy_binet"), sym = named("wtw_minors"),
             zz = named("ztz_minors");

  for (int r = 1; r <= m; ++r) {
    const auto rows = tuples_of(m, r);
    const auto cols = tuples_of(n, r);
    for (const auto& c : rows) {
      for (const auto& d : rows) {
        Monomial want;
        for (std::size_t j = 0; j < c.size(); ++j) want *= vars.variable(vars.w(c[j], d[j]));
        expect_lm(diag_w, vars, minor(w, c, d), want, minor_label("W", c, d));

        Monomial sym_want;
        for (std::size_t j = 0; j < c.size(); ++j) {
          const int jj = static_cast<int>(j) + 1;
          sym_want *= vars.variable(vars.w(jj, c[j]));
          sym_want *= vars.variable(vars.w(jj, d[j]));
        }
        expect_lm(sym, vars, minor(wtw, c, d), sym_want, minor_label("W^T W", c, d));
      }
      for (const auto& d : cols) {
        const Polynomial pu = minor(u, c, d);
        if (!pu.is_zero()) {
          bool diagonal_present = true;
          Monomial want;
          for (std::size_t j = 0; j < c.size(); ++j) {
            if (!vars.has_u(c[j], d[j])) {
              diagonal_present = false;
              break;
            }
            want *= vars.variable(vars.u(c[j], d[j]));
          }
          ++diag_u.checked;
          if (!diagonal_present)
            diag_u.mismatches.push_back(minor_label("U", c, d) + ": nonzero with a zero on the diagonal");
          else if (leading_monomial(pu) != want)
            diag_u.mismatches.push_back(minor_label("U", c, d) + ": lm " + vars.format(leading_monomial(pu)));
        }

        const Polynomial pz = minor(z, c, d);
        Polynomial binet;
        for (const auto& j : rows) binet += minor(w, c, j) * minor(u, j, d);
        ++cb.checked;
        if (binet != pz) cb.mismatches.push_back(minor_label("W U", c, d));

        const bool above = gamma_leq(gamma, GammaTuple{d});
        if (above) {
          expect_lm(wu, vars, pz, wu_formula(vars, c, d), minor_label("W U", c, d));
        } else {
          ++zeros.checked;
          if (!pz.is_zero()) zeros.mismatches.push_back(minor_label("W U", c, d) + ": does not vanish");
        }
      }
    }
  }

  // D_γ: α <= β of equal size, α >= γ.
  const auto above = gamma_prime_elements(m, n, gamma);
  for (const auto& a : above)
    for (const auto& b : above) {
      if (a.size() != b.size() || !gamma_leq(a, b)) continue;
      Monomial want;
      for (std::size_t j = 0; j < a.size(); ++j) {
        const int jj = static_cast<int>(j) + 1;
        want *= product_of(vars, {{vars.w(jj, jj), 2}});
        want *= vars.variable(vars.u(jj, a[j]));
        want *= vars.variable(vars.u(jj, b[j]));
      }
      expect_lm(zz, vars, minor(ztz, a.entries, b.entries), want, minor_label("Z^T Z", a.entries, b.entries));
    }

  LemmaReport report;
  report.checks = {diag_w, diag_u, wu, zeros, cb, sym, zz};
  return report;
}

DistinctLmReport distinct_lm_of_standard_monomials(int m, int n, const GammaTuple& gamma,
                                                   std::size_t deg_bound) {
  const VariableSet vars(m, n, gamma);
  const SymbolicMatrix z = z_matrix(vars);

  struct Element {
    GammaTuple alpha, beta;
    Monomial lm, formula;
  };
  std::vector<Element> elements;
  for (const auto& b : gamma_prime_elements(m, n, gamma))
    for (const auto& a : tuples_of(m, static_cast<int>(b.size()))) {
      const Polynomial p = minor(z, a, b.entries);
      if (p.is_zero()) continue;
      elements.push_back({GammaTuple{a}, b, leading_monomial(p), wu_formula(vars, a, b.entries)});
    }
  // Size descending, then lexicographic, extends the order on minors.
  std::sort(elements.begin(), elements.end(), [](const Element& x, const Element& y) {
    if (x.alpha.size() != y.alpha.size()) return x.alpha.size() > y.alpha.size();
    return std::tie(x.alpha, x.beta) < std::tie(y.alpha, y.beta);
  });
  auto leq = [&](std::size_t i, std::size_t j) {
    return gamma_leq(elements[i].alpha, elements[j].alpha) && gamma_leq(elements[i].beta, elements[j].beta);
  };

  DistinctLmReport report;
  std::unordered_map<Monomial, std::string, MonomialHash> seen;
  std::vector<std::size_t> chain;
  auto describe = [&] {
    std::string s;
    for (std::size_t i : chain)
      s += (s.empty() ? "" : " ") + elements[i].alpha.label() + "|" + elements[i].beta.label();
    return s;
  };
  auto rec = [&](auto&& self, Monomial lm, Monomial formula) -> void {
    if (!chain.empty()) {
      ++report.standard_monomials;
      if (lm != formula) {
        report.passed = false;
        report.problems.push_back(describe() + ": lm differs from the product formula");
      }
      auto [it, inserted] = seen.try_emplace(lm, describe());
      if (!inserted) {
        report.passed = false;
        report.problems.push_back(describe() + " shares its lm with " + it->second);
      }
    }
    if (chain.size() == deg_bound) return;
    const std::size_t start = chain.empty() ? 0 : chain.back();
    for (std::size_t i = start; i < elements.size(); ++i) {
      if (!chain.empty() && !leq(chain.back(), i)) continue;
      chain.push_back(i);
      self(self, lm * elements[i].lm, formula * elements[i].formula);
      chain.pop_back();
    }
  };
  rec(rec, Monomial{}, Monomial{});
  return report;
}

HilbertMatch initial_algebra_hilbert_match(int m, int n, const GammaTuple& gamma, Group group,
                                           std::size_t s_max) {
  const VariableSet vars(m, n, gamma);
  const SymbolicMatrix z = z_matrix(vars);
  const SymbolicMatrix ztz = z.transpose() * z;

  std::vector<std::pair<Monomial, std::size_t>> gens;  // leading monomial, degree
  const auto above = gamma_prime_elements(m, n, gamma);
  for (const auto& a : above)
    for (const auto& b : above) {
      if (a.size() != b.size() || !gamma_leq(a, b)) continue;
      if (group == Group::SO && a.size() == static_cast<std::size_t>(m)) continue;
      gens.emplace_back(leading_monomial(minor(ztz, a.entries, b.entries)), 2);
    }
  if (group == Group::SO) {
    std::vector<int> all_rows(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) all_rows[static_cast<std::size_t>(i)] = i + 1;
    for (const auto& d : above)
      if (d.size() == static_cast<std::size_t>(m)) gens.emplace_back(leading_monomial(minor(z, all_rows, d.entries)), 1);
  }

  std::vector<std::unordered_set<Monomial, MonomialHash>> levels(s_max + 1);
  levels[0].insert(Monomial{});
  for (std::size_t s = 1; s <= s_max; ++s)
    for (const auto& [lm, deg] : gens) {
      if (deg > s) continue;
      for (const auto& mono : levels[s - deg]) levels[s].insert(mono * lm);
    }

  HilbertMatch out;
  for (const auto& level : levels) out.initial.push_back(level.size());
  const SchubertPoset sp = join_irreducibles_schubert(m, n, gamma);
  out.hilbert = hilbert_function(GdhSemigroup(sp.poset, schubert_q(sp, group)), s_max);
  out.match = out.initial == out.hilbert;
  return out;
}

}  // namespace hibi
