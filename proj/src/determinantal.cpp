#include "hibi/determinantal.hpp"

#include <algorithm>
#include <charconv>

namespace hibi {

// ---------------------------------------------------------------------------
// Tuples and the Γ' order

std::string GammaTuple::label() const {
  std::string s = "[";
  for (std::size_t i = 0; i < entries.size(); ++i) s += (i ? "," : "") + std::to_string(entries[i]);
  return s + "]";
}

GammaTuple GammaTuple::parse(std::string_view text) {
  std::string clean;
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '[' && c != ']') clean += c;
  GammaTuple t;
  std::size_t pos = 0;
  while (pos <= clean.size() && !clean.empty()) {
    std::size_t end = clean.find(',', pos);
    if (end == std::string::npos) end = clean.size();
    int v = 0;
    const char* first = clean.data() + pos;
    const char* last = clean.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last)
      throw Error(ErrorKind::invalid_gamma, "cannot parse tuple '" + std::string(text) + "'");
    t.entries.push_back(v);
    pos = end + 1;
  }
  if (t.entries.empty()) throw Error(ErrorKind::invalid_gamma, "empty tuple");
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] < 1 || (i && t[i] <= t[i - 1]))
      throw Error(ErrorKind::invalid_gamma, "tuple " + t.label() + " is not strictly increasing");
  return t;
}

bool in_gamma_prime(const GammaTuple& t, int m, int n) {
  if (t.size() < 1 || t.size() > static_cast<std::size_t>(m)) return false;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] < 1 || t[i] > n || (i && t[i] <= t[i - 1])) return false;
  return true;
}

void validate_gamma(const GammaTuple& gamma, int m, int n) {
  if (m < 1 || n < m) throw Error(ErrorKind::invalid_gamma, "need 1 <= m <= n");
  if (gamma.size() != static_cast<std::size_t>(m) || !in_gamma_prime(gamma, m, n))
    throw Error(ErrorKind::invalid_gamma,
                gamma.label() + " is not in Gamma(" + std::to_string(m) + "x" + std::to_string(n) + ")");
}

bool gamma_leq(const GammaTuple& a, const GammaTuple& b) {
  if (a.size() < b.size()) return false;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool gamma_less(const GammaTuple& a, const GammaTuple& b) { return a != b && gamma_leq(a, b); }

GammaTuple gamma_join(const GammaTuple& a, const GammaTuple& b) {
  const std::size_t r = std::min(a.size(), b.size());
  GammaTuple out;
  for (std::size_t i = 0; i < r; ++i) out.entries.push_back(std::max(a[i], b[i]));
  return out;
}

GammaTuple gamma_meet(const GammaTuple& a, const GammaTuple& b) {
  const GammaTuple& longer = a.size() >= b.size() ? a : b;
  GammaTuple out = longer;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    out.entries[i] = std::min(a[i], b[i]);
  return out;
}

std::vector<GammaTuple> gamma_prime_elements(int m, int n, const GammaTuple& gamma) {
  validate_gamma(gamma, m, n);
  std::vector<GammaTuple> out;
  GammaTuple cur;
  auto extend = [&](auto&& self, std::size_t r) -> void {
    if (cur.size() == r) {
      out.push_back(cur);
      return;
    }
    const std::size_t i = cur.size();
    const int lo = std::max(gamma[i], i ? cur[i - 1] + 1 : 1);
    // Leave room for the remaining r - i - 1 entries.
    const int hi = n - static_cast<int>(r - i - 1);
    for (int v = lo; v <= hi; ++v) {
      cur.entries.push_back(v);
      self(self, r);
      cur.entries.pop_back();
    }
  };
  for (int r = m; r >= 1; --r) extend(extend, static_cast<std::size_t>(r));
  return out;
}

std::vector<GammaTuple> gamma_elements(int m, int n) {
  GammaTuple first;
  for (int i = 1; i <= m; ++i) first.entries.push_back(i);
  auto all = gamma_prime_elements(m, n, first);
  std::erase_if(all, [m](const GammaTuple& t) { return t.size() != static_cast<std::size_t>(m); });
  return all;
}

DistributiveLattice gamma_prime_lattice(int m, int n, const GammaTuple& gamma) {
  auto elements = gamma_prime_elements(m, n, gamma);
  std::vector<std::string> labels;
  for (const auto& t : elements) labels.push_back(t.label());
  return DistributiveLattice::from_poset(Poset::from_order(
      std::move(labels), [&](Element i, Element j) { return gamma_leq(elements[i], elements[j]); }));
}

// ---------------------------------------------------------------------------
// Join-irreducibles

namespace {

// First index (0-based) where δ leaves the prefix of γ, or size δ.
std::size_t departure(const GammaTuple& delta, const GammaTuple& gamma) {
  std::size_t i = 0;
  while (i < delta.size() && delta[i] == gamma[i]) ++i;
  return i;
}

// 0-based indices i where d_i can drop by one inside Γ'(m×n; γ).
std::vector<std::size_t> droppable(const GammaTuple& delta, const GammaTuple& gamma) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < delta.size(); ++i)
    if (delta[i] > gamma[i] && delta[i] > (i ? delta[i - 1] : 0) + 1) out.push_back(i);
  return out;
}

}  // namespace

bool is_join_irreducible_schubert(const GammaTuple& delta, int m, int n, const GammaTuple& gamma) {
  if (!in_gamma_prime(delta, m, n) || !gamma_leq(gamma, delta)) return false;
  const std::size_t t = delta.size();
  if (t == static_cast<std::size_t>(m)) return droppable(delta, gamma).size() <= 1;
  const std::size_t i = departure(delta, gamma);
  if (i == t) return true;
  for (std::size_t j = i; j < t; ++j)
    if (delta[j] != n - static_cast<int>(t) + static_cast<int>(j) + 1) return false;
  return true;
}

std::pair<int, int> xi(const GammaTuple& delta, int m, int n, const GammaTuple& gamma) {
  if (!is_join_irreducible_schubert(delta, m, n, gamma) || delta == gamma)
    throw Error(ErrorKind::precondition, delta.label() + " is not a join-irreducible above gamma");
  const int t = static_cast<int>(delta.size());
  if (t == m) {
    const std::size_t i = droppable(delta, gamma).front();
    return {n - delta[i] - m + static_cast<int>(i) + 1, static_cast<int>(i)};
  }
  const std::size_t i = departure(delta, gamma);
  if (i == delta.size()) return {t - m, t};
  return {t - m, static_cast<int>(i)};
}

SchubertPoset join_irreducibles_schubert(int m, int n, const GammaTuple& gamma) {
  SchubertPoset out;
  out.m = m;
  out.n = n;
  out.gamma = gamma;
  for (auto& t : gamma_prime_elements(m, n, gamma))
    if (is_join_irreducible_schubert(t, m, n, gamma)) out.tuples.push_back(std::move(t));
  std::vector<std::string> labels;
  for (const auto& t : out.tuples) {
    labels.push_back(t.label());
    out.xi.push_back(t == gamma ? std::pair{0, 0} : xi(t, m, n, gamma));
  }
  const auto& tuples = out.tuples;
  out.poset = Poset::from_order(std::move(labels), [&](Element i, Element j) {
    return gamma_leq(tuples[i], tuples[j]);
  });
  out.bottom = static_cast<Element>(std::find(tuples.begin(), tuples.end(), gamma) - tuples.begin());
  return out;
}

// ---------------------------------------------------------------------------
// Blocks and verdicts

BlockDecomposition block_decomposition(int m, int n, const GammaTuple& gamma) {
  validate_gamma(gamma, m, n);
  auto b = [&](int i) { return i == m + 1 ? n + 1 : gamma[static_cast<std::size_t>(i - 1)]; };
  BlockDecomposition out;
  for (int u = 1; u <= m; ++u)
    if (b(u) + 1 < b(u + 1)) out.u.push_back(u);

  auto range = [](int lo, int hi) {
    std::vector<int> r;
    for (int v = lo; v <= hi; ++v) r.push_back(v);
    return r;
  };
  out.gaps.push_back(range(1, b(1) - 1));
  int start = 1;
  for (int u : out.u) {
    std::vector<int> block;
    for (int i = start; i <= u; ++i) block.push_back(b(i));
    out.blocks.push_back(std::move(block));
    out.gaps.push_back(range(b(u) + 1, b(u + 1) - 1));
    start = u + 1;
  }
  std::vector<int> last;
  for (int i = start; i <= m; ++i) last.push_back(b(i));
  out.blocks.push_back(std::move(last));
  return out;
}

const char* to_string(Group g) { return g == Group::O ? "O" : "SO"; }

namespace {

// |B_i| = |χ_{i-1}| for i = 2..upto.
bool blocks_match_gaps(const BlockDecomposition& d, std::size_t upto) {
  for (std::size_t i = 2; i <= upto; ++i)
    if (d.blocks[i - 1].size() != d.gaps[i - 1].size()) return false;
  return true;
}

bool ends_at_n(int m, int n, const GammaTuple& gamma) {
  return gamma[static_cast<std::size_t>(m - 1)] == n;
}

}  // namespace

bool verdict_orthogonal(int m, int n, const GammaTuple& gamma) {
  const auto d = block_decomposition(m, n, gamma);
  const std::size_t k = d.k();
  if (!blocks_match_gaps(d, k)) return false;
  if (!ends_at_n(m, n, gamma)) return d.gaps[k].size() % 2 == 1;
  return k == 0 || d.blocks[k].size() + 1 == d.gaps[k].size();
}

bool verdict_special_orthogonal(int m, int n, const GammaTuple& gamma) {
  const auto d = block_decomposition(m, n, gamma);
  return blocks_match_gaps(d, ends_at_n(m, n, gamma) ? d.k() + 1 : d.k());
}

bool verdict_special_orthogonal_split_form(int m, int n, const GammaTuple& gamma) {
  const auto d = block_decomposition(m, n, gamma);
  const std::size_t k = d.k();
  if (!blocks_match_gaps(d, k)) return false;
  return !ends_at_n(m, n, gamma) || d.blocks[k].size() == d.gaps[k].size();
}

bool block_verdict(Group g, int m, int n, const GammaTuple& gamma) {
  return g == Group::O ? verdict_orthogonal(m, n, gamma) : verdict_special_orthogonal(m, n, gamma);
}

std::vector<Element> schubert_q(const SchubertPoset& s, Group g) {
  std::vector<Element> q;
  const int top = g == Group::O ? s.m : s.m - 1;
  for (int i = 1; i <= top; ++i) {
    GammaTuple prefix{std::vector<int>(s.gamma.entries.begin(), s.gamma.entries.begin() + i)};
    auto it = std::find(s.tuples.begin(), s.tuples.end(), prefix);
    if (it == s.tuples.end()) throw InternalError("prefix " + prefix.label() + " is not join-irreducible");
    q.push_back(static_cast<Element>(it - s.tuples.begin()));
  }
  std::sort(q.begin(), q.end());
  return q;
}

CrossCheck cross_check(Group g, int m, int n, const GammaTuple& gamma) {
  const SchubertPoset s = join_irreducibles_schubert(m, n, gamma);
  CrossCheck out;
  out.block = block_verdict(g, m, n, gamma);
  out.criterion = gorenstein_criterion(s.poset, schubert_q(s, g));
  return out;
}

// ---------------------------------------------------------------------------
// Dosets

bool in_d(const DosetPair& pair, int m, int n) {
  if (pair.alpha.size() != pair.beta.size())
    throw Error(ErrorKind::precondition, "doset pair " + pair.alpha.label() + "," +
                                             pair.beta.label() + " has unequal sizes");
  return in_gamma_prime(pair.alpha, m, n) && in_gamma_prime(pair.beta, m, n) &&
         gamma_leq(pair.alpha, pair.beta);
}

bool in_d_gamma(const DosetPair& pair, int n, const GammaTuple& gamma) {
  return in_d(pair, n, n) && gamma_leq(gamma, pair.alpha);
}

bool in_d_prime(const DPrimeElement& e, int m, int n) {
  if (const auto* delta = std::get_if<GammaTuple>(&e))
    return delta->size() == static_cast<std::size_t>(m) && in_gamma_prime(*delta, m, n);
  return m >= 2 && in_d(std::get<DosetPair>(e), m - 1, n);
}

bool doset_less(const DosetPair& a, const DosetPair& b) {
  return gamma_less(a.alpha, b.alpha) || (a.alpha == b.alpha && gamma_less(a.beta, b.beta));
}

bool doset_leq(const DosetPair& a, const DosetPair& b) { return a == b || doset_less(a, b); }

bool doset_less(const DPrimeElement& a, const DPrimeElement& b) {
  const auto* da = std::get_if<GammaTuple>(&a);
  const auto* db = std::get_if<GammaTuple>(&b);
  if (da && db) return gamma_less(*da, *db);
  if (!da && !db) return doset_less(std::get<DosetPair>(a), std::get<DosetPair>(b));
  if (da) return gamma_less(*da, std::get<DosetPair>(b).alpha);
  return false;
}

}  // namespace hibi
