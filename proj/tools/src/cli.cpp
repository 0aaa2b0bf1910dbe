#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "homconf/axioms.hpp"
#include "homconf/corpus.hpp"
#include "homconf/errors.hpp"
#include "homconf/oracle.hpp"

namespace homconf::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string w; std::getline(in, w, ',');) {
    if (!w.empty()) out.push_back(w);
  }
  return out;
}

void need_args(const Task& t, std::size_t n) {
  if (t.args.size() < n) {
    throw Error("line " + std::to_string(t.line) + ": task " + t.verb + " needs " + std::to_string(n) + " arguments");
  }
}

Report module_report(const Algebra& alg, const Representation& rep) {
  return alg.kind == Kind::Lie ? check_lie_module(alg, rep) : check_lsc_module(alg, rep);
}

Algebra semidirect(const Algebra& alg, const Representation& rep) {
  return alg.kind == Kind::Lie ? semidirect_lie(alg, rep) : semidirect_lsc(alg, rep);
}

Report subject(Report r, const std::string& name) {
  Report out(name);
  out.merge(r);
  return out;
}

Report pair_report(const DefinitionFile& f, const NamedPair& p) {
  return p.kind == Kind::Lie ? check_matched_pair_lie(resolve_lie_pair(f, p))
                             : check_matched_pair_lsc(resolve_lsc_pair(f, p));
}

Algebra bicrossed(const DefinitionFile& f, const NamedPair& p) {
  return p.kind == Kind::Lie ? bicrossed_lie(resolve_lie_pair(f, p)) : bicrossed_lsc(resolve_lsc_pair(f, p));
}

std::vector<std::size_t> first_indices(const std::string& k) {
  std::vector<std::size_t> out;
  std::size_t n = std::stoul(k);
  for (std::size_t i = 0; i < n; ++i) out.push_back(i);
  return out;
}

Report run_task(const DefinitionFile& f, const Task& t) {
  const std::string& v = t.verb;
  if (v == "check") {
    need_args(t, 1);
    const Algebra& a = f.algebra(t.args[0]);
    std::vector<std::string> ax(t.args.begin() + 1, t.args.end());
    if (ax.empty()) ax = default_axioms(a.kind);
    return subject(check_axioms(a, ax), a.name);
  }
  if (v == "module") {
    need_args(t, 2);
    return subject(module_report(f.algebra(t.args[0]), f.rep(t.args[1]).rep), t.args[0] + " " + t.args[1]);
  }
  if (v == "semidirect") {
    need_args(t, 2);
    Algebra s = semidirect(f.algebra(t.args[0]), f.rep(t.args[1]).rep);
    return subject(check_axioms(s, default_axioms(s.kind)), s.name);
  }
  if (v == "symplectic") {
    need_args(t, 2);
    return subject(check_symplectic(f.algebra(t.args[0]), f.form(t.args[1]).form), t.args[0] + " " + t.args[1]);
  }
  if (v == "parakahler") {
    need_args(t, 3);
    return subject(check_parakahler(f.algebra(t.args[0]), first_indices(t.args[2]), f.form(t.args[1]).form),
                   t.args[0] + " " + t.args[1]);
  }
  if (v == "compatible") {
    need_args(t, 3);
    return subject(check_compatible_product(f.algebra(t.args[0]), f.algebra(t.args[1]), f.form(t.args[2]).form),
                   t.args[0] + " " + t.args[1] + " " + t.args[2]);
  }
  if (v == "matched") {
    need_args(t, 1);
    return subject(pair_report(f, f.pair(t.args[0])), t.args[0]);
  }
  if (v == "bicrossed") {
    need_args(t, 1);
    Algebra b = bicrossed(f, f.pair(t.args[0]));
    return subject(check_axioms(b, default_axioms(b.kind)), t.args[0]);
  }
  if (v == "dual-pair") {
    need_args(t, 2);
    DualPairVerdict d = check_dual_pair(f.algebra(t.args[0]), f.algebra(t.args[1]));
    return subject(d.report, t.args[0] + " " + t.args[1]);
  }
  if (v == "coalgebra") {
    need_args(t, 1);
    return subject(check_coalgebra(f.coalgebra(t.args[0])), t.args[0]);
  }
  if (v == "cocycle") {
    need_args(t, 2);
    return subject(check_cocycle(f.algebra(t.args[0]), f.coalgebra(t.args[1])), t.args[0] + " " + t.args[1]);
  }
  if (v == "bialgebra") {
    need_args(t, 2);
    return subject(check_bialgebra(f.algebra(t.args[0]), f.algebra(t.args[1])), t.args[0] + " " + t.args[1]);
  }
  if (v == "coboundary") {
    need_args(t, 2);
    const NamedTensor& r = f.tensor(t.args[1]);
    return subject(check_coboundary_coalgebra(f.algebra(t.args[0]), r.tensor).report, t.args[0] + " " + t.args[1]);
  }
  throw Error("line " + std::to_string(t.line) + ": unknown task " + v);
}

Json check_record(const std::string& subj, const Check& c) {
  Json r;
  r["subject"] = subj;
  r["axiom"] = c.axiom;
  r["tuple"] = c.tuple;
  r["passed"] = c.passed();
  Json res = Json::array();
  for (const auto& rc : c.residual) {
    Json x;
    x["component"] = rc.component;
    x["value"] = to_string(rc.value);
    res.push_back(x);
  }
  r["residual"] = res;
  r["note"] = c.note;
  return r;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string finite_name(const std::string& base, const std::string& suffix, const std::string& chosen) {
  return chosen.empty() ? base + suffix : chosen;
}

FiniteAlgebra as_finite(const Algebra& a) {
  FiniteAlgebra f;
  const std::size_t n = a.rank();
  f.basis = a.module.basis();
  f.kind = a.kind;
  f.mult.assign(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
  f.twist.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Poly& c = a.product.at(i, j).coeffs[k];
        if (!c.is_constant()) throw NotCertified("current needs constant structure constants");
        f.mult[i][j][k] = c.constant_term();
      }
      const Poly& t = a.alpha.at(i, j);
      if (!t.is_constant()) throw NotCertified("current needs a constant twist");
      f.twist[i][j] = t.constant_term();
    }
  }
  return f;
}

const Algebra& pick_algebra(const DefinitionFile& f, const std::string& name) {
  if (!name.empty()) return f.algebra(name);
  if (f.algebras.empty()) throw Error("no algebra declared");
  return f.algebras.front();
}

template <typename T>
const T& pick(const std::vector<T>& v, const char* what) {
  if (v.empty()) throw Error(std::string("no ") + what + " declared");
  return v.front();
}

}  // namespace

std::string format_json(const std::vector<Report>& reports) {
  std::ostringstream out;
  std::size_t checks = 0, failures = 0;
  for (const auto& r : reports) {
    for (const auto& c : r.checks()) {
      out << check_record(r.subject(), c).dump() << "\n";
      ++checks;
      failures += c.passed() ? 0 : 1;
    }
  }
  Json s;
  s["summary"] = true;
  s["checks"] = checks;
  s["failures"] = failures;
  s["passed"] = failures == 0;
  out << s.dump() << "\n";
  return out.str();
}

std::string format_text(const std::vector<Report>& reports) {
  std::ostringstream out;
  std::size_t checks = 0, failures = 0;
  for (const auto& r : reports) {
    out << "== " << r.subject() << "\n";
    for (const auto& c : r.checks()) {
      out << (c.passed() ? "pass " : "FAIL ") << c.axiom << " (" << join(c.tuple, ", ") << ")";
      if (!c.passed()) out << " residual " << Report::residual_text(c);
      if (!c.note.empty()) out << " [" << c.note << "]";
      out << "\n";
      ++checks;
      failures += c.passed() ? 0 : 1;
    }
  }
  out << checks << " checks, " << failures << " failures\n";
  return out.str();
}

std::vector<Report> run_checks(const DefinitionFile& file, const std::vector<std::string>& axioms) {
  std::vector<Report> out;
  if (!axioms.empty()) {
    for (const auto& a : file.algebras) out.push_back(subject(check_axioms(a, axioms), a.name));
    return out;
  }
  if (!file.tasks.empty()) {
    for (const auto& t : file.tasks) out.push_back(run_task(file, t));
    return out;
  }
  for (const auto& a : file.algebras) out.push_back(subject(check_axioms(a, default_axioms(a.kind)), a.name));
  for (const auto& r : file.reps) {
    out.push_back(subject(module_report(file.algebra(r.algebra), r.rep), r.algebra + " " + r.rep.name));
  }
  for (const auto& c : file.coalgebras) out.push_back(subject(check_coalgebra(c), c.name));
  for (const auto& p : file.pairs) out.push_back(subject(pair_report(file, p), p.name));
  return out;
}

DefinitionFile construct(const std::string& kind, const DefinitionFile& f, const std::string& source,
                         const std::string& extra, const std::string& name) {
  DefinitionFile out;
  auto with_check = [&](const Algebra& a) {
    out.tasks.push_back({"check", {a.name}, 0});
  };
  if (kind == "sub-adjacent") {
    const Algebra& a = pick_algebra(f, source);
    Algebra g = sub_adjacent(a);
    g.name = finite_name(a.name, "-lie", name);
    out.algebras.push_back(g);
    with_check(g);
  } else if (kind == "current") {
    const Algebra& a = pick_algebra(f, source);
    Algebra c = current_algebra(as_finite(a), finite_name(a.name, "-cur", name));
    out.algebras.push_back(c);
    with_check(c);
  } else if (kind == "semidirect") {
    const NamedRep& r = extra.empty() ? pick(f.reps, "rep") : f.rep(extra);
    Algebra s = semidirect(f.algebra(r.algebra), r.rep);
    s.name = finite_name(r.algebra, "-semi", name);
    out.algebras.push_back(s);
    with_check(s);
  } else if (kind == "bicrossed") {
    const NamedPair& p = source.empty() ? pick(f.pairs, "pair") : f.pair(source);
    Algebra b = bicrossed(f, p);
    b.name = finite_name(p.name, "-double", name);
    out.algebras.push_back(b);
    with_check(b);
  } else if (kind == "dual") {
    const NamedRep& r = extra.empty() ? pick(f.reps, "rep") : f.rep(extra);
    const Algebra& a = f.algebra(r.algebra);
    Representation d;
    if (a.kind == Kind::Lie) {
      d = {r.rep.name + "*", r.rep.space.dual(), r.rep.beta.dual(), dual_action(r.rep.left), std::nullopt};
    } else {
      d = dual_module(a, r.rep);
      d.name = r.rep.name + "*";
    }
    if (!name.empty()) d.name = name;
    out.algebras.push_back(a);
    out.reps.push_back({a.name, d});
    out.tasks.push_back({"module", {a.name, d.name}, 0});
  } else if (kind == "dual-coalgebra") {
    const Algebra& a = pick_algebra(f, source);
    Coalgebra c = dual_coalgebra_from_algebra(a);
    c.name = finite_name(a.name, "-co", name);
    out.coalgebras.push_back(c);
    out.tasks.push_back({"coalgebra", {c.name}, 0});
  } else if (kind == "dual-algebra") {
    const Coalgebra& c = source.empty() ? pick(f.coalgebras, "coalgebra") : f.coalgebra(source);
    Algebra a = dual_algebra_from_coalgebra(c);
    a.name = finite_name(c.name, "-alg", name);
    out.algebras.push_back(a);
    with_check(a);
  } else if (kind == "from-symplectic") {
    const NamedForm& w = extra.empty() ? pick(f.forms, "form") : f.form(extra);
    const Algebra& g = f.algebra(source.empty() ? w.algebra : source);
    Algebra a = lsc_from_symplectic(g, w.form);
    a.name = finite_name(g.name, "-lsc", name);
    out.algebras.push_back(g);
    out.algebras.push_back(a);
    out.forms.push_back({w.name, g.name, w.form});
    with_check(a);
    out.tasks.push_back({"compatible", {a.name, g.name, w.name}, 0});
  } else if (kind == "coboundary") {
    const NamedTensor& r = extra.empty() ? pick(f.tensors, "tensor") : f.tensor(extra);
    const Algebra& a = f.algebra(source.empty() ? r.algebra : source);
    Coalgebra c = coboundary_cobracket(a, r.tensor);
    c.name = finite_name(r.name, "-cob", name);
    out.coalgebras.push_back(c);
    out.tasks.push_back({"coalgebra", {c.name}, 0});
  } else {
    throw Error("unknown construction " + kind);
  }
  return out;
}

void write_corpus(const std::string& dir, std::size_t rank, int degree, std::size_t count, std::uint64_t seed) {
  std::filesystem::create_directories(dir);
  CorpusOptions opt{rank, degree, seed};
  std::vector<Algebra> algs = certified_lsc_corpus(count, opt);
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::ostringstream manifest;
  for (std::size_t i = 0; i < algs.size(); ++i) {
    DefinitionFile f;
    Algebra a = algs[i];
    bool broken = i % 3 == 2;
    if (broken) a = perturb(rng, a, std::max(degree, 0));
    f.algebras.push_back(a);
    f.tasks.push_back({"check", {a.name}, 0});
    if (!broken) {
      Algebra g = sub_adjacent(a);
      g.name = a.name + "-lie";
      f.algebras.push_back(g);
      f.tasks.push_back({"check", {g.name}, 0});
      f.tensors.push_back({"r", a.name, random_fixed_tensor(rng, a, std::min(degree, 1))});
      f.tasks.push_back({"coboundary", {a.name, "r"}, 0});
    }
    std::ostringstream file;
    file << "instance-" << std::setw(3) << std::setfill('0') << i << ".def";
    write_file((std::filesystem::path(dir) / file.str()).string(), print_definition(f));
    Json m;
    m["file"] = file.str();
    m["algebra"] = a.name;
    m["rank"] = a.rank();
    m["degree"] = a.product.max_degree();
    m["certified"] = check_axioms(a, default_axioms(a.kind)).passed();
    bool all = true;
    for (const auto& r : run_checks(f, {})) all = all && r.passed();
    m["exit"] = all ? 0 : 1;
    manifest << m.dump() << "\n";
  }
  write_file((std::filesystem::path(dir) / "manifest.ndjson").string(), manifest.str());
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"homconf: exact checks for Hom-Lie and Hom-left-symmetric conformal algebras"};
  app.require_subcommand(1);

  std::string file, format = "text", axioms;
  auto* check = app.add_subcommand("check", "Run declared tasks or the default axioms");
  check->add_option("file", file, "Definition file")->required();
  check->add_option("--axioms", axioms, "Comma-separated axioms for every algebra");
  check->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

  std::string kind, out_path, from, with, name;
  auto* cons = app.add_subcommand("construct", "Build a new definition file");
  cons->add_option("kind", kind, "Construction")
      ->required()
      ->check(CLI::IsMember({"sub-adjacent", "current", "semidirect", "bicrossed", "dual", "dual-coalgebra",
                             "dual-algebra", "from-symplectic", "coboundary"}));
  cons->add_option("file", file, "Definition file")->required();
  cons->add_option("--out", out_path, "Output file (stdout when omitted)");
  cons->add_option("--from", from, "Algebra, pair or coalgebra to start from");
  cons->add_option("--with", with, "Representation, form or tensor to use");
  cons->add_option("--name", name, "Name of the constructed object");

  int samples = 100;
  std::uint64_t seed = 1;
  if (const char* env = std::getenv("HOMCONF_SEED")) seed = std::strtoull(env, nullptr, 10);
  auto* oracle = app.add_subcommand("oracle", "Compare symbolic verdicts with numeric sampling");
  oracle->add_option("file", file, "Definition file")->required();
  oracle->add_option("--samples", samples, "Sample points per check")->check(CLI::PositiveNumber);
  oracle->add_option("--seed", seed, "Sampling seed (default HOMCONF_SEED or 1)");
  oracle->add_option("--axioms", axioms, "Comma-separated axioms");
  oracle->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

  std::size_t rank = 3, count = 50;
  int degree = 2;
  std::string dir;
  auto* corpus = app.add_subcommand("corpus", "Write randomized instances");
  corpus->add_option("--rank", rank, "Maximal rank")->check(CLI::Range(1, 4));
  corpus->add_option("--degree", degree, "Maximal coefficient degree")->check(CLI::Range(0, 3));
  corpus->add_option("--count", count, "Number of instances");
  corpus->add_option("--seed", seed, "Generator seed");
  corpus->add_option("--out", dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    auto emit = [&](const std::vector<Report>& reports) {
      out << (format == "json" ? format_json(reports) : format_text(reports));
      for (const auto& r : reports) {
        if (!r.passed()) return 1;
      }
      return 0;
    };
    if (*check) {
      DefinitionFile f = parse_definition(read_file(file));
      return emit(run_checks(f, split_list(axioms)));
    }
    if (*cons) {
      DefinitionFile f = parse_definition(read_file(file));
      std::string text = print_definition(construct(kind, f, from, with, name));
      if (out_path.empty()) {
        out << text;
      } else {
        write_file(out_path, text);
      }
      return 0;
    }
    if (*oracle) {
      DefinitionFile f = parse_definition(read_file(file));
      Report r("oracle");
      for (const auto& a : f.algebras) {
        std::vector<std::string> ax = axioms.empty() ? default_axioms(a.kind) : split_list(axioms);
        for (const auto& x : ax) {
          bool symbolic = check_axiom(a, x).passed();
          bool numeric = oracle_check(a, x, samples, seed).passed();
          Check c{x, {a.name}, {}, std::string("symbolic ") + (symbolic ? "pass" : "fail")};
          if (symbolic != numeric) c.residual.push_back({"numeric", Poly(numeric ? 1 : -1)});
          r.add(c);
        }
      }
      return emit({r});
    }
    if (*corpus) {
      write_corpus(dir, rank, degree, count, seed);
      return 0;
    }
  } catch (const ParseError& e) {
    err << file << ":" << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace homconf::cli
