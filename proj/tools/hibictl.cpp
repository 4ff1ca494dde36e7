// hibictl: command-line front end. JSON on stdout; exit codes
// 0 success or positive verdict, 1 negative verdict, 2 input error,
// 3 internal cross-check failure.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hibi/determinantal.hpp"
#include "hibi/gorenstein.hpp"
#include "hibi/io.hpp"
#include "hibi/lattice.hpp"
#include "hibi/sagbi.hpp"
#include "hibi/semigroup.hpp"

using namespace hibi;
using io::json;

namespace {

constexpr int kOk = 0, kNegative = 1, kInput = 2, kInternal = 3;

bool g_pretty = false;

void emit(const json& j) {
  if (g_pretty) std::cout << io::pretty(j);
  else std::cout << j.dump(2) << "\n";
}

void write_dot(const std::string& path, const std::string& dot) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::malformed_input, "cannot write " + path);
  out << dot;
}

// FILE holds P, or with `as_lattice` a distributive lattice whose
// join-irreducibles become P.
Poset load_p(const std::string& path, bool as_lattice, std::vector<std::string>* q_out = nullptr) {
  const json j = io::read_json_file(path);
  io::SemigroupDescriptor d = io::semigroup_from_json(j);
  if (q_out && q_out->empty()) *q_out = d.q;
  if (!as_lattice) return d.poset;
  return BirkhoffDual(DistributiveLattice::from_poset(std::move(d.poset))).irreducibles;
}

struct PosetCheck {
  std::string file, dot;
  int run() const {
    const Poset p = io::poset_from_json(io::read_json_file(file));
    json out = {{"valid", true},
                {"size", p.size()},
                {"rank", p.rank()},
                {"pure", p.is_pure()},
                {"minimal", io::labels_json(p, p.minimal_elements())},
                {"maximal", io::labels_json(p, p.maximal_elements())},
                {"covers", io::poset_to_json(p)["covers"]}};
    write_dot(dot, io::hasse_dot(p));
    emit(out);
    return kOk;
  }
};

struct LatticeBirkhoff {
  std::string file, dot;
  int run() const {
    const DistributiveLattice h =
        DistributiveLattice::from_poset(io::poset_from_json(io::read_json_file(file)));
    const BirkhoffDual d(h);
    json phi = json::object();
    for (Element a = 0; a < h.size(); ++a) {
      const auto ideal = d.phi(h, a);
      if (d.psi(h, ideal) != a) throw InternalError("psi(phi(" + h.label(a) + ")) differs");
      phi[h.label(a)] = io::labels_json(d.irreducibles, ideal);
    }
    for (const auto& ideal : order_ideals(d.irreducibles)) {
      if (ideal.empty()) continue;
      if (d.phi(h, d.psi(h, ideal)) != ideal) throw InternalError("phi(psi(I)) differs from I");
    }
    write_dot(dot, io::hasse_dot(d.irreducibles));
    emit({{"irreducibles", io::poset_to_json(d.irreducibles)}, {"phi", phi}, {"round_trip", true}});
    return kOk;
  }
};

struct HibiHilb {
  std::string file, q;
  Natural s_max = 4;
  bool lattice = false;
  int run() const {
    std::vector<std::string> labels = io::split_labels(q);
    Poset p = load_p(file, lattice, &labels);
    const GdhSemigroup s = GdhSemigroup::from_labels(std::move(p), labels);
    emit({{"q", io::labels_json(s.poset(), s.q())}, {"hilbert", hilbert_function(s, s_max)}});
    return kOk;
  }
};

struct GorensteinCheck {
  std::string file, q, dot;
  bool oracle = false, lattice = false;
  int run() const {
    std::vector<std::string> labels = io::split_labels(q);
    const Poset p = load_p(file, lattice, &labels);
    const auto qs = io::resolve_labels(p, labels);
    const WitnessReport r = gorenstein_criterion(p, qs);
    json out = io::report_json(p, qs, r);
    int code = r.gorenstein ? kOk : kNegative;
    if (oracle) {
      const bool o = gorenstein_oracle(p, qs);
      out["oracle"] = o;
      if (o != r.gorenstein) code = kInternal;
    }
    if (!dot.empty()) {
      const PTilde pt = build_p_tilde(p, qs);
      write_dot(dot, io::hasse_dot(pt.extended, pt.q_plus, "P~"));
    }
    emit(out);
    return code;
  }
};

Group parse_group(const std::string& g) { return g == "SO" ? Group::SO : Group::O; }

struct SchubertArgs {
  int m = 0, n = 0;
  std::string gamma, group = "O", dot;
  bool cross = false;
  GammaTuple tuple() const {
    GammaTuple t = GammaTuple::parse(gamma);
    validate_gamma(t, m, n);
    return t;
  }
};

int schubert_verdict(const SchubertArgs& a) {
  const GammaTuple g = a.tuple();
  const Group group = parse_group(a.group);
  const bool v = block_verdict(group, a.m, a.n, g);
  json out = {{"gorenstein", v},
              {"group", to_string(group)},
              {"gamma", g.label()},
              {"blocks", io::blocks_json(block_decomposition(a.m, a.n, g))}};
  int code = v ? kOk : kNegative;
  if (a.cross) {
    const CrossCheck cc = cross_check(group, a.m, a.n, g);
    out["criterion"] = cc.criterion.gorenstein;
    if (!cc.agree()) code = kInternal;
  }
  emit(out);
  return code;
}

int schubert_hasse(const SchubertArgs& a) {
  const GammaTuple g = a.tuple();
  const SchubertPoset s = join_irreducibles_schubert(a.m, a.n, g);
  json xi = json::object();
  for (Element x = 0; x < s.poset.size(); ++x)
    if (x != s.bottom) xi[s.poset.label(x)] = {s.xi[x].first, s.xi[x].second};
  const auto q1 = schubert_q(s, Group::O), q2 = schubert_q(s, Group::SO);
  write_dot(a.dot, io::hasse_dot(s.poset, parse_group(a.group) == Group::O ? q1 : q2, "P"));
  emit({{"poset", io::poset_to_json(s.poset)},
        {"bottom", s.poset.label(s.bottom)},
        {"xi", xi},
        {"q_O", io::labels_json(s.poset, q1)},
        {"q_SO", io::labels_json(s.poset, q2)}});
  return kOk;
}

struct SweepArgs {
  int max_m = 3, max_n = 6;
};

int schubert_sweep(const SweepArgs& a) {
  std::size_t instances = 0, positive_o = 0, positive_so = 0;
  json disagreements = json::array();
  for (int n = 1; n <= a.max_n; ++n)
    for (int m = 1; m <= std::min(n, a.max_m); ++m)
      for (const auto& g : gamma_elements(m, n)) {
        ++instances;
        for (Group group : {Group::O, Group::SO}) {
          const CrossCheck cc = cross_check(group, m, n, g);
          (group == Group::O ? positive_o : positive_so) += cc.block;
          if (!cc.agree())
            disagreements.push_back({{"m", m}, {"n", n}, {"gamma", g.label()}, {"group", to_string(group)},
                                     {"block", cc.block}, {"criterion", cc.criterion.gorenstein}});
        }
      }
  emit({{"instances", instances},
        {"gorenstein", {{"O", positive_o}, {"SO", positive_so}}},
        {"disagreements", disagreements}});
  return disagreements.empty() ? kOk : kInternal;
}

struct SagbiArgs {
  int m = 0, n = 0, max_m = 2, max_n = 4;
  std::string gamma;
  std::size_t s_max = 3, degree = 2;
};

json sagbi_instance(int m, int n, const GammaTuple& g, const SagbiArgs& a, bool& passed) {
  json lemmas = json::object();
  const LemmaReport lr = verify_lm_lemmas(m, n, g);
  for (const auto& c : lr.checks)
    lemmas[c.name] = {{"checked", c.checked}, {"mismatches", c.mismatches}};
  const DistinctLmReport dl = distinct_lm_of_standard_monomials(m, n, g, a.degree);
  json hilbert = json::object();
  bool ok = lr.passed() && dl.passed;
  for (Group group : {Group::O, Group::SO}) {
    const HilbertMatch hm = initial_algebra_hilbert_match(m, n, g, group, a.s_max);
    hilbert[to_string(group)] = {{"match", hm.match}, {"initial", hm.initial}, {"hilbert", hm.hilbert}};
    ok = ok && hm.match;
  }
  passed = passed && ok;
  return {{"m", m},
          {"n", n},
          {"gamma", g.label()},
          {"passed", ok},
          {"lemmas", lemmas},
          {"distinct_lm", {{"passed", dl.passed}, {"standard_monomials", dl.standard_monomials},
                           {"problems", dl.problems}}},
          {"hilbert", hilbert}};
}

int sagbi_verify(const SagbiArgs& a) {
  bool passed = true;
  json instances = json::array();
  if (!a.gamma.empty()) {
    const GammaTuple g = GammaTuple::parse(a.gamma);
    validate_gamma(g, a.m, a.n);
    instances.push_back(sagbi_instance(a.m, a.n, g, a, passed));
  } else {
    for (int n = 1; n <= a.max_n; ++n)
      for (int m = 1; m <= std::min(n, a.max_m); ++m)
        for (const auto& g : gamma_elements(m, n)) instances.push_back(sagbi_instance(m, n, g, a, passed));
  }
  emit({{"passed", passed}, {"instances", instances}});
  return passed ? kOk : kInternal;
}

// "--q -inf,a2" would otherwise read "-inf,a2" as a short flag.
std::vector<std::string> glue_values(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if ((args[i] == "--q" || args[i] == "--gamma") && i + 1 < args.size() && !args[i + 1].empty() &&
        args[i + 1][0] == '-' && args[i + 1].rfind("--", 0) != 0) {
      out.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hibi rings, generalized doset Hibi rings and their Gorenstein property"};
  app.name("hibictl");
  app.add_flag("--pretty", g_pretty, "human-readable output instead of JSON");
  app.require_subcommand(1);

  PosetCheck poset_check;
  auto* poset = app.add_subcommand("poset", "poset files");
  poset->require_subcommand(1);
  auto* pc = poset->add_subcommand("check", "validate a poset file");
  pc->add_option("FILE", poset_check.file)->required();
  pc->add_option("--dot", poset_check.dot, "write the Hasse diagram");

  LatticeBirkhoff birkhoff;
  auto* lattice = app.add_subcommand("lattice", "distributive lattices");
  lattice->require_subcommand(1);
  auto* lb = lattice->add_subcommand("birkhoff", "join-irreducibles and the round trip");
  lb->add_option("FILE", birkhoff.file)->required();
  lb->add_option("--dot", birkhoff.dot, "write the poset of join-irreducibles");

  HibiHilb hilb;
  auto* hibi_cmd = app.add_subcommand("hibi", "Hibi rings");
  hibi_cmd->require_subcommand(1);
  auto* hh = hibi_cmd->add_subcommand("hilb", "Hilbert function of T(P, Q)");
  hh->add_option("FILE", hilb.file, "poset or {poset, q} descriptor")->required();
  hh->add_option("--smax", hilb.s_max)->required();
  hh->add_option("--q", hilb.q, "comma separated labels");
  hh->add_flag("--lattice", hilb.lattice, "FILE holds a lattice");

  GorensteinCheck gor;
  auto* gor_cmd = app.add_subcommand("gorenstein", "Gorenstein criterion");
  gor_cmd->require_subcommand(1);
  auto* gc = gor_cmd->add_subcommand("check", "criterion with witness");
  gc->add_option("FILE", gor.file, "poset or {poset, q} descriptor")->required();
  gc->add_option("--q", gor.q, "comma separated labels");
  gc->add_flag("--oracle", gor.oracle, "also run the brute-force oracle");
  gc->add_flag("--lattice", gor.lattice, "FILE holds a lattice");
  gc->add_option("--dot", gor.dot, "write P~");

  SchubertArgs sch;
  SweepArgs sweep;
  auto* sch_cmd = app.add_subcommand("schubert", "Schubert cycle invariant rings");
  sch_cmd->require_subcommand(1);
  auto add_instance = [&](CLI::App* c) {
    c->add_option("-m", sch.m)->required();
    c->add_option("-n", sch.n)->required();
    c->add_option("--gamma", sch.gamma, "b1,b2,...")->required();
    c->add_option("--group", sch.group)->check(CLI::IsMember({"O", "SO"}));
  };
  auto* sv = sch_cmd->add_subcommand("verdict", "block criterion");
  add_instance(sv);
  sv->add_flag("--cross-check", sch.cross, "compare with the general criterion");
  auto* sh = sch_cmd->add_subcommand("hasse", "join-irreducibles with xi");
  add_instance(sh);
  sh->add_option("--dot", sch.dot);
  auto* ss = sch_cmd->add_subcommand("sweep", "block criterion against the general one");
  ss->add_option("--max-m", sweep.max_m);
  ss->add_option("--max-n", sweep.max_n);

  SagbiArgs sag;
  auto* sag_cmd = app.add_subcommand("sagbi", "leading monomials and initial algebras");
  sag_cmd->require_subcommand(1);
  auto* sgv = sag_cmd->add_subcommand("verify", "one instance, or a sweep without --gamma");
  sgv->add_option("-m", sag.m);
  sgv->add_option("-n", sag.n);
  sgv->add_option("--gamma", sag.gamma);
  sgv->add_option("--max-m", sag.max_m);
  sgv->add_option("--max-n", sag.max_n);
  sgv->add_option("--smax", sag.s_max);
  sgv->add_option("--degree", sag.degree, "longest standard monomial checked");

  std::vector<std::string> args = glue_values(argc, argv);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (pc->parsed()) return poset_check.run();
    if (lb->parsed()) return birkhoff.run();
    if (hh->parsed()) return hilb.run();
    if (gc->parsed()) return gor.run();
    if (sv->parsed()) return schubert_verdict(sch);
    if (sh->parsed()) return schubert_hasse(sch);
    if (ss->parsed()) return schubert_sweep(sweep);
    if (sgv->parsed()) return sagbi_verify(sag);
  } catch (const Error& e) {
    emit({{"error", to_string(e.kind())}, {"message", e.what()}});
    return kInput;
  } catch (const InternalError& e) {
    emit({{"error", "internal"}, {"message", e.what()}});
    return kInternal;
  }
  return kInput;
}
