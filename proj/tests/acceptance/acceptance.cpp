// One line per acceptance criterion. Exit status 0 iff every line is PASS.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "homconf/axioms.hpp"
#include "homconf/bialgebra.hpp"
#include "homconf/constructions.hpp"
#include "homconf/corpus.hpp"
#include "homconf/io.hpp"
#include "homconf/oracle.hpp"

using namespace homconf;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned limits.
constexpr double kFixtureSeconds = 5.0;
constexpr double kSingleCheckSeconds = 2.0;
constexpr double kSuiteSeconds = 300.0;
constexpr std::size_t kMinInstances = 50;
constexpr int kOracleSamples = 100;
constexpr std::uint64_t kOracleSeed = 20240601;
constexpr std::uint64_t kCorpusSeed = 7;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Tally {
  std::size_t total = 0;
  std::size_t agree = 0;
  std::size_t positive = 0;
  void add(bool lhs, bool rhs) {
    ++total;
    agree += lhs == rhs;
    positive += lhs;
  }
  bool ok(bool need_both = true) const {
    return total >= kMinInstances && agree == total && (!need_both || (positive > 0 && positive < total));
  }
  std::string text() const {
    return std::to_string(agree) + "/" + std::to_string(total) + " agree, " + std::to_string(positive) + " pass";
  }
};

bool lie_ok(const Algebra& a) { return check_axioms(a, {"skew", "jacobi"}).passed(); }
bool lsc_ok(const Algebra& a) { return check_axioms(a, {"left-symmetry", "multiplicative"}).passed(); }

int failures = 0;

void line(int n, const std::string& name, bool ok, const std::string& detail, double seconds) {
  char t[32];
  std::snprintf(t, sizeof t, "%.2f s", seconds);
  std::cout << (ok ? "PASS" : "FAIL") << " " << n << " " << name << ": " << detail << " (" << t << ")" << std::endl;
  if (!ok) ++failures;
}

FiniteAlgebra idempotent_plane() {
  FiniteAlgebra f;
  f.basis = {"e1", "e2"};
  f.mult.assign(2, std::vector<std::vector<Rational>>(2, std::vector<Rational>(2)));
  f.mult[0][0][0] = 1;
  f.twist = {{1, 0}, {0, 1}};
  return f;
}

Algebra line_action(Kind kind) {
  StructureTable t(2);
  t.set(0, 1, 1, lam());
  Algebra a = make_algebra("line", FreeModule({"a", "b"}), t, Endomorphism::identity(2), kind);
  if (kind == Kind::Lie) a.product = commutator_table(a.product);
  return a;
}

const char* kRankTwoBracket = R"([algebra brk]
kind lie
basis L E
[L, L] = (D+2*L)*E
alpha L = 1*L
alpha E = 1*E

[form w]
algebra brk
w(L, E) = 1
w(E, L) = -1
)";

void fixtures() {
  auto t0 = Clock::now();
  std::vector<std::string> bad;
  Algebra cur = current_algebra(idempotent_plane(), "cur");
  if (!check_left_symmetry(cur).passed()) bad.push_back("current left-symmetry");
  if (!check_left_symmetry(line_action(Kind::LeftSymmetric)).passed()) bad.push_back("line left-symmetry");
  Algebra g = line_action(Kind::Lie);
  if (!check_skew(g).passed() || !check_hom_jacobi(g).passed()) bad.push_back("line bracket");
  DefinitionFile f = parse_definition(kRankTwoBracket);
  const Algebra& brk = f.algebra("brk");
  if (!check_skew(brk).passed() || !check_hom_jacobi(brk).passed()) bad.push_back("rank-two bracket");
  const FreeModule& m = brk.module;
  if (!check_form_skew(f.form("w").form, m).passed()) bad.push_back("form skew");
  Report nd = check_form_nondegenerate(f.form("w").form, m);
  if (!nd.passed() || nd.checks().empty() || nd.checks()[0].note != "det = 1") bad.push_back("form determinant");
  double s = since(t0);
  line(1, "reference fixtures parse and verify", bad.empty() && s < kFixtureSeconds,
       bad.empty() ? "all residuals zero, form det = 1" : "failed: " + bad.front(), s);
}

void sub_adjacent_pipeline(const std::vector<Algebra>& corpus) {
  auto t0 = Clock::now();
  std::size_t ok = 0;
  for (const auto& a : corpus) ok += lie_ok(sub_adjacent(a));
  line(2, "sub-adjacent of certified left-symmetric algebras is Hom-Lie",
       ok == corpus.size() && corpus.size() >= kMinInstances,
       std::to_string(ok) + "/" + std::to_string(corpus.size()) + " pass skew and Hom-Jacobi", since(t0));
}

void equivalences(const std::vector<Algebra>& corpus) {
  auto t0 = Clock::now();
  Rng rng(kCorpusSeed + 1);
  const std::size_t n = corpus.size();
  Tally lie_pair, module, lsc_pair, dual, coalg;
  std::size_t display_disagree = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Algebra& a = corpus[i];
    const Algebra& b = corpus[(i + 1) % n];
    Algebra ga = sub_adjacent(a), gb = sub_adjacent(b);
    for (const auto& p : lie_pair_instances(rng, ga, gb, 1)) {
      lie_pair.add(check_matched_pair_lie(p).passed(), lie_ok(bicrossed_lie(p)));
    }
    for (const auto& r : lsc_module_instances(rng, a, 1)) {
      module.add(check_lsc_module(a, r).passed(), lsc_ok(semidirect_lsc(a, r)));
    }
    for (const auto& p : lsc_pair_instances(rng, a, b, 1)) {
      lsc_pair.add(check_matched_pair_lsc(p).passed(), lsc_ok(bicrossed_lsc(p)));
    }
    for (std::size_t j = 0; j < n; j += 7) {
      for (const auto& s : dual_partner_instances(a, corpus[(i + j) % n])) {
        if (j > 0 && s.product.is_zero()) continue;
        DualPairVerdict v = check_dual_pair(a, s);
        if (v.hypotheses) dual.add(v.lie_pair, v.lsc_pair);
      }
    }
    for (int k = 0; k < 2; ++k) {
      Tensor r = random_fixed_tensor(rng, a, 1);
      CoboundaryVerdict v = check_coboundary_coalgebra(a, r);
      coalg.add(v.coalgebra, v.j_zero);
      display_disagree += check_coboundary_coalgebra(a, r, JDeltaReading::Display).agree() ? 0 : 1;
    }
  }
  bool ok = lie_pair.ok() && module.ok() && lsc_pair.ok() && dual.ok() && coalg.ok();
  std::string detail = "matched Lie " + lie_pair.text() + "; module " + module.text() + "; matched left-symmetric " +
                       lsc_pair.text() + "; dual pairs " + dual.text() + "; coboundary coalgebra " + coalg.text() +
                       " (displayed J-form disagrees on " + std::to_string(display_disagree) + ")";
  line(3, "equivalence oracles", ok, detail, since(t0));
}

void duality_round_trip(const std::vector<Algebra>& corpus, const std::vector<Algebra>& broken) {
  auto t0 = Clock::now();
  std::size_t ok = 0, total = 0;
  for (const auto* set : {&corpus, &broken}) {
    for (const auto& a : *set) {
      ++total;
      ok += dual_algebra_from_coalgebra(dual_coalgebra_from_algebra(a)).product == a.product;
    }
  }
  line(4, "coalgebra duality round trip", ok == total && total >= kMinInstances,
       std::to_string(ok) + "/" + std::to_string(total) + " tables identical", since(t0));
}

void oracle_agreement(const std::vector<Algebra>& all) {
  auto t0 = Clock::now();
  std::size_t ok = 0, total = 0;
  std::string first_bad;
  for (const auto& a : all) {
    for (const auto& ax : axiom_names()) {
      bool symbolic = check_axiom(a, ax).passed();
      bool numeric = oracle_check(a, ax, kOracleSamples, kOracleSeed).passed();
      ++total;
      ok += symbolic == numeric;
      if (symbolic != numeric && first_bad.empty()) first_bad = a.name + " " + ax;
    }
  }
  line(5, "symbolic and numeric verdicts agree", ok == total,
       std::to_string(ok) + "/" + std::to_string(total) + " axiom checks at " + std::to_string(kOracleSamples) +
           " points" + (first_bad.empty() ? "" : ", first disagreement " + first_bad),
       since(t0));
}

// [x, y] = y with twist diag(1, c) and w(x, y) = 1, verified on the finite algebra by enumeration.
bool finite_symplectic(const FiniteAlgebra& f, const std::vector<std::vector<Rational>>& w) {
  const std::size_t n = f.basis.size();
  auto bracket = [&](std::size_t i, std::size_t j) { return f.mult[i][j]; };
  auto twist = [&](std::size_t i) {
    std::vector<Rational> v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = f.twist[r][i];
    return v;
  };
  auto pair = [&](const std::vector<Rational>& u, const std::vector<Rational>& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) s += u[i] * v[j] * w[i][j];
    }
    return s;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (w[i][j] != -w[j][i]) return false;
      for (std::size_t k = 0; k < n; ++k) {
        Rational c = pair(bracket(i, j), twist(k)) + pair(bracket(j, k), twist(i)) + pair(bracket(k, i), twist(j));
        if (c != 0) return false;
      }
    }
  }
  return (w[0][0] * w[1][1] - w[0][1] * w[1][0]) != 0 && check_finite_algebra(f).passed();
}

void symplectic_induction() {
  auto t0 = Clock::now();
  bool ok = true;
  int cases = 0;
  for (int c : {1, 2}) {
    FiniteAlgebra f;
    f.basis = {"x", "y"};
    f.mult.assign(2, std::vector<std::vector<Rational>>(2, std::vector<Rational>(2)));
    f.mult[0][1][1] = 1;
    f.mult[1][0][1] = -1;
    f.twist = {{1, 0}, {0, c}};
    f.kind = Kind::Lie;
    std::vector<std::vector<Rational>> w = {{0, 1}, {-1, 0}};
    if (!finite_symplectic(f, w)) {
      ok = false;
      continue;
    }
    Algebra g = current_algebra(f, "aff");
    BilinearForm form = current_form(w);
    Algebra a = lsc_from_symplectic(g, form);
    ok = ok && check_compatible_product(a, g, form).passed() && commutator_table(a.product) == g.product &&
         sub_adjacent(a).product == g.product;
    ++cases;
  }
  line(6, "symplectic induction", ok && cases == 2,
       "compatibility residuals zero and sub-adjacent bracket equals input on " + std::to_string(cases) + " twists",
       since(t0));
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_cli(const std::vector<std::string>& args, std::string& out) {
  std::vector<const char*> argv = {"homconf"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), o, e);
  out = o.str();
  return code;
}

void parser_determinism(const std::vector<Algebra>& all) {
  auto t0 = Clock::now();
  std::size_t defs = 0, polys = 0, bad = 0;
  Rng rng(kCorpusSeed + 2);
  for (const auto& a : all) {
    DefinitionFile f;
    f.algebras.push_back(a);
    if (a.kind != Kind::Lie) {
      Representation r = lsc_module_instances(rng, a, 2)[2];
      f.reps.push_back({a.name, r});
      f.tensors.push_back({"r", a.name, random_fixed_tensor(rng, a, 2)});
      f.coalgebras.push_back(dual_coalgebra_from_algebra(a));
      f.coalgebras.back().name = "co";
    }
    f.tasks.push_back({"check", {a.name}, 0});
    ++defs;
    if (!same_definition(parse_definition(print_definition(f)), f)) ++bad;
    for (std::size_t i = 0; i < a.rank(); ++i) {
      for (std::size_t j = 0; j < a.rank(); ++j) {
        for (const auto& c : a.product.at(i, j).coeffs) {
          ++polys;
          if (!(parse_poly(to_string(c)) == c)) ++bad;
        }
      }
    }
  }
  namespace fs = std::filesystem;
  fs::path d1 = fs::temp_directory_path() / "homconf-acceptance-1";
  fs::path d2 = fs::temp_directory_path() / "homconf-acceptance-2";
  fs::remove_all(d1);
  fs::remove_all(d2);
  std::string out;
  std::vector<std::string> args = {"corpus", "--rank", "3", "--degree", "2", "--count", "30", "--seed", "11", "--out"};
  auto a1 = args, a2 = args;
  a1.push_back(d1.string());
  a2.push_back(d2.string());
  run_cli(a1, out);
  run_cli(a2, out);
  std::size_t files = 0, identical = 0, exits = 0, exits_ok = 0;
  for (const auto& e : fs::directory_iterator(d1)) {
    ++files;
    identical += slurp(e.path()) == slurp(d2 / e.path().filename());
    if (e.path().extension() != ".def") continue;
    std::string r1, r2;
    int code = run_cli({"check", e.path().string(), "--format", "json"}, r1);
    run_cli({"check", e.path().string(), "--format", "json"}, r2);
    bool passed = r1.find("\"passed\":false") == std::string::npos;
    ++exits;
    exits_ok += (code == (passed ? 0 : 1)) && r1 == r2;
  }
  bool ok = bad == 0 && files > 0 && identical == files && exits_ok == exits;
  line(7, "parser and report determinism", ok,
       std::to_string(defs) + " definition and " + std::to_string(polys) + " polynomial round trips, " +
           std::to_string(bad) + " mismatches; " + std::to_string(identical) + "/" + std::to_string(files) +
           " corpus files identical; " + std::to_string(exits_ok) + "/" + std::to_string(exits) +
           " exit codes match reports",
       since(t0));
}

void performance(Clock::time_point suite_start) {
  auto t0 = Clock::now();
  Rng rng(kCorpusSeed + 3);
  double worst = 0;
  std::string worst_name;
  for (int s = 0; s < 3; ++s) {
    for (Kind kind : {Kind::Lie, Kind::LeftSymmetric}) {
      Algebra a = make_algebra("perf", FreeModule({"e1", "e2", "e3", "e4"}), random_table(rng, 4, 4, 4, 3, 0.6),
                               Endomorphism::identity(4), kind);
      std::vector<std::vector<Poly>> m(4, std::vector<Poly>(4));
      for (std::size_t i = 0; i < 4; ++i) m[i][i] = random_poly(rng, {Var::d()}, 1, 2);
      a.alpha = Endomorphism(m);
      for (const auto& ax : axiom_names()) {
        auto t = Clock::now();
        check_axiom(a, ax);
        double d = since(t);
        if (d > worst) {
          worst = d;
          worst_name = ax;
        }
      }
    }
  }
  double suite = since(suite_start);
  char buf[96];
  std::snprintf(buf, sizeof buf, "slowest single check %.3f s (%s), suite %.1f s", worst, worst_name.c_str(), suite);
  line(8, "performance envelope", worst < kSingleCheckSeconds && suite < kSuiteSeconds, buf, since(t0));
}

}  // namespace

int main() {
  auto start = Clock::now();
  CorpusOptions opt{3, 2, kCorpusSeed};
  std::vector<Algebra> corpus = certified_lsc_corpus(60, opt);
  Rng rng(kCorpusSeed);
  std::vector<Algebra> broken;
  for (const auto& a : corpus) broken.push_back(perturb(rng, a, 2));
  std::vector<Algebra> all = corpus;
  all.insert(all.end(), broken.begin(), broken.end());
  for (const auto& a : corpus) {
    Algebra g = sub_adjacent(a);
    g.name = a.name + "-lie";
    all.push_back(g);
    Algebra h = perturb(rng, g, 2);
    h.kind = Kind::Lie;
    all.push_back(h);
  }

  fixtures();
  sub_adjacent_pipeline(corpus);
  equivalences(corpus);
  duality_round_trip(corpus, broken);
  oracle_agreement(all);
  symplectic_induction();
  parser_determinism(all);
  performance(start);
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
