#include "homconf/bialgebra.hpp"

#include "homconf/axioms.hpp"
#include "homconf/errors.hpp"

namespace homconf {
namespace {

Poly leg_var(std::size_t k) { return del(static_cast<int>(k)); }

void require_coalgebra_shape(const Coalgebra& c) {
  if (c.delta.size() != c.rank() || c.twist.rank() != c.rank()) throw RankMismatch("coalgebra data has wrong size");
  for (const auto& t : c.delta) {
    if (t.arity() != 2 || t.ranks()[0] != c.rank() || t.ranks()[1] != c.rank()) {
      throw RankMismatch("coproduct must be an arity-2 tensor over the module");
    }
  }
}

// Appends x as a new last leg.
Tensor append_leg(const Tensor& w, const Element& x) {
  std::vector<std::size_t> ranks = w.ranks();
  ranks.push_back(x.rank());
  const Poly d = leg_var(ranks.size());
  Tensor out(ranks);
  for (const auto& [idx, g] : w.entries()) {
    Tensor::Index target = idx;
    target.push_back(0);
    for (std::size_t k = 0; k < x.rank(); ++k) {
      if (x.coeffs[k].is_zero()) continue;
      target.back() = k;
      out.add_to(target, g * x.coeffs[k].substitute(Var::d(), d));
    }
  }
  return out;
}

Tensor twist_legs(const Endomorphism& a, Tensor w, std::initializer_list<std::size_t> legs) {
  for (auto leg : legs) w = tensor_apply_endo_leg(a, w, leg);
  return w;
}

Element basis_vector(std::size_t n, std::size_t i) { return Element::basis(n, i); }

Element twist(const Algebra& alg, const Element& x) { return apply_endo(alg.alpha, x); }

// P(x){param} w = (L(x) (x) alpha + alpha (x) L(x)){param} w.
Tensor p_action(const Algebra& alg, const Element& x, const Tensor& w, const Poly& param) {
  return act_on_leg(alg.product, x, tensor_apply_endo_leg(alg.alpha, w, 1), 0, param) +
         act_on_leg(alg.product, x, tensor_apply_endo_leg(alg.alpha, w, 0), 1, param);
}

}  // namespace

Coalgebra zero_coalgebra(std::string name, FreeModule module, Endomorphism twist) {
  const std::size_t n = module.rank();
  return Coalgebra{std::move(name), std::move(module), std::move(twist), std::vector<Tensor>(n, Tensor({n, n}))};
}

Tensor apply_coproduct(const Coalgebra& c, const Element& x) {
  require_coalgebra_shape(c);
  if (x.rank() != c.rank()) throw RankMismatch("element rank differs from coalgebra rank");
  const Poly total = leg_var(1) + leg_var(2);
  Tensor out({c.rank(), c.rank()});
  for (std::size_t k = 0; k < x.rank(); ++k) {
    if (x.coeffs[k].is_zero()) continue;
    out += x.coeffs[k].substitute(Var::d(), total) * c.delta[k];
  }
  return out;
}

Tensor apply_coproduct_leg(const Coalgebra& c, const Tensor& w, std::size_t leg) {
  require_coalgebra_shape(c);
  if (leg >= w.arity()) throw IndexOutOfRange("leg index out of range");
  if (w.ranks()[leg] != c.rank()) throw RankMismatch("leg rank differs from coalgebra rank");
  const std::size_t m = w.arity();
  if (m + 1 > 4) throw IndexOutOfRange("tensors have at most four legs");
  std::vector<std::size_t> ranks = w.ranks();
  ranks.insert(ranks.begin() + static_cast<std::ptrdiff_t>(leg) + 1, c.rank());

  // Old leg q (1-based) moves to q + 1 beyond the split; the split leg becomes a sum.
  std::vector<std::pair<Var, Poly>> outer;
  for (std::size_t q = leg + 1; q <= m; ++q) {
    if (q == leg + 1) {
      outer.emplace_back(Var::leg(static_cast<int>(q)), leg_var(q) + leg_var(q + 1));
    } else {
      outer.emplace_back(Var::leg(static_cast<int>(q)), leg_var(q + 1));
    }
  }
  const std::pair<Var, Poly> inner[] = {{Var::leg(1), leg_var(leg + 1)}, {Var::leg(2), leg_var(leg + 2)}};

  Tensor out(ranks);
  for (const auto& [idx, g] : w.entries()) {
    Poly moved = g.compose(outer);
    for (const auto& [pq, h] : c.delta[idx[leg]].entries()) {
      Tensor::Index target = idx;
      target[leg] = pq[0];
      target.insert(target.begin() + static_cast<std::ptrdiff_t>(leg) + 1, pq[1]);
      out.add_to(target, moved * h.compose(inner));
    }
  }
  return out;
}

Tensor twist_all_legs(const Endomorphism& alpha, const Tensor& w) {
  Tensor out = w;
  for (std::size_t leg = 0; leg < w.arity(); ++leg) out = tensor_apply_endo_leg(alpha, out, leg);
  return out;
}

Report check_coalgebra(const Coalgebra& c) {
  require_coalgebra_shape(c);
  Report r(c.name);
  const std::vector<FreeModule> legs(3, c.module);
  for (std::size_t k = 0; k < c.rank(); ++k) {
    const Tensor& d = c.delta[k];
    Tensor x = tensor_apply_endo_leg(c.twist, apply_coproduct_leg(c, d, 1), 0);
    Tensor y = tensor_apply_endo_leg(c.twist, apply_coproduct_leg(c, d, 0), 2);
    Tensor res = x - x.permute({1, 0, 2}) - y + y.permute({1, 0, 2});
    r.add(Check{"coalgebra", {c.module.label(k)}, res.components(legs), {}});
  }
  return r;
}

Algebra dual_algebra_from_coalgebra(const Coalgebra& c, Kind kind) {
  require_coalgebra_shape(c);
  const std::size_t n = c.rank();
  StructureTable t(n);
  const std::pair<Var, Poly> pairing[] = {{Var::leg(1), lam()}, {Var::leg(2), -del() - lam()}};
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& [idx, h] : c.delta[k].entries()) {
      Element e = t.at(idx[0], idx[1]);
      e.coeffs[k] += h.compose(pairing);
      t.set(idx[0], idx[1], std::move(e));
    }
  }
  return make_algebra(c.name + "*", c.module.dual(), std::move(t), c.twist.dual(), kind);
}

Coalgebra dual_coalgebra_from_algebra(const Algebra& alg) {
  const std::size_t n = alg.rank();
  const std::pair<Var, Poly> pairing[] = {{Var::lambda(), leg_var(1)}, {Var::d(), -leg_var(1) - leg_var(2)}};
  std::vector<Tensor> delta(n, Tensor({n, n}));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Element& e = alg.product.at(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (!e.coeffs[k].is_zero()) delta[k].add_to({i, j}, e.coeffs[k].compose(pairing));
      }
    }
  }
  return Coalgebra{alg.name + "*", alg.module.dual(), alg.alpha.dual(), std::move(delta)};
}

Tensor phi_action(const Algebra& alg, const Element& x, const Tensor& w, const Poly& param) {
  StructureTable ad = commutator_table(alg.product);
  return act_on_leg(alg.product, x, tensor_apply_endo_leg(alg.alpha, w, 1), 0, param) +
         act_on_leg(ad, x, tensor_apply_endo_leg(alg.alpha, w, 0), 1, param);
}

Report check_cocycle(const Algebra& alg, const Coalgebra& c) {
  require_coalgebra_shape(c);
  if (c.rank() != alg.rank()) throw RankMismatch("coalgebra and algebra ranks differ");
  const std::size_t n = alg.rank();
  StructureTable ad = commutator_table(alg.product);
  const std::vector<FreeModule> legs(2, alg.module);
  Report r(alg.name);
  const Poly shifted = -lam() - leg_var(1) - leg_var(2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Element a = basis_vector(n, i), b = basis_vector(n, j);
      Tensor lhs = apply_coproduct(c, twist(alg, product(ad, a, b, lam())));
      Tensor t1 = phi_action(alg, a, c.delta[j], lam());
      Tensor t2 = phi_action(alg, b, c.delta[i], nu()).substitute(Var::nu(), shifted);
      Tensor res = lhs - t1 + t2;
      r.add(Check{"cocycle", {alg.module.label(i), alg.module.label(j)}, res.components(legs), {}});
    }
  }
  return r;
}

Report check_bialgebra(const Algebra& alg, const Algebra& algstar) {
  if (alg.rank() != algstar.rank()) throw RankMismatch("dual algebra has a different rank");
  const std::vector<std::string> lsc = {"left-symmetry", "multiplicative"};
  Report r(alg.name + "+" + algstar.name);
  r.merge(check_axioms(alg, lsc), "a");
  r.merge(check_axioms(algstar, lsc), "astar");
  Check tw{"twist-dual", {}, {}, {}};
  Endomorphism expected = alg.alpha.dual();
  for (std::size_t i = 0; i < alg.rank(); ++i) {
    for (std::size_t j = 0; j < alg.rank(); ++j) {
      Poly d = algstar.alpha.at(i, j) - expected.at(i, j);
      if (!d.is_zero()) tw.residual.push_back({algstar.module.label(i) + "|" + algstar.module.label(j), d});
    }
  }
  r.add(std::move(tw));
  Coalgebra on_a = dual_coalgebra_from_algebra(algstar);
  on_a.module = alg.module;
  Coalgebra on_astar = dual_coalgebra_from_algebra(alg);
  on_astar.module = algstar.module;
  r.merge(check_coalgebra(on_a), "a");
  r.merge(check_coalgebra(on_astar), "astar");
  r.merge(check_cocycle(alg, on_a), "a");
  r.merge(check_cocycle(algstar, on_astar), "astar");
  return r;
}

bool is_twist_fixed(const Algebra& alg, const Tensor& r) { return twist_all_legs(alg.alpha, r) == r; }

Coalgebra coboundary_cobracket(const Algebra& alg, const Tensor& r) {
  const std::size_t n = alg.rank();
  if (r.arity() != 2 || r.ranks()[0] != n || r.ranks()[1] != n) throw RankMismatch("r must lie in A (x) A");
  if (!is_twist_fixed(alg, r)) throw TwistFixpointViolated();
  std::vector<Tensor> delta;
  const Poly total = -leg_var(1) - leg_var(2);
  for (std::size_t a = 0; a < n; ++a) {
    delta.push_back(phi_action(alg, basis_vector(n, a), r, lam()).substitute(Var::lambda(), total));
  }
  return Coalgebra{alg.name + "-cob", alg.module, alg.alpha, std::move(delta)};
}

std::vector<std::pair<Element, Element>> pure_terms(const Tensor& r) {
  if (r.arity() != 2) throw RankMismatch("r must have two legs");
  const std::uint32_t allowed = (1U << Var::leg(1).id()) | (1U << Var::leg(2).id());
  std::vector<std::pair<Element, Element>> out;
  for (const auto& [idx, g] : r.entries()) {
    if ((g.var_mask() & ~allowed) != 0) throw UnknownParameter("r may only use D1 and D2");
    for (const auto& term : g.terms()) {
      Poly left = Poly(term.coef) * del().pow(term.exps[Var::leg(1).id()]);
      Poly right = del().pow(term.exps[Var::leg(2).id()]);
      out.emplace_back(Element::basis(r.ranks()[0], idx[0], left), Element::basis(r.ranks()[1], idx[1], right));
    }
  }
  return out;
}

Tensor double_bracket(const Algebra& alg, const Tensor& r) {
  const std::size_t n = alg.rank();
  StructureTable ad = commutator_table(alg.product);
  auto terms = pure_terms(r);
  Tensor out({n, n, n});
  for (const auto& [ri, li] : terms) {
    for (const auto& [rj, lj] : terms) {
      Element rr = product(alg.product, ri, rj, mu());
      Element lr = product(ad, lj, ri, mu());
      Element ll = product(ad, li, lj, mu());
      Element ali = twist(alg, li), alj = twist(alg, lj), arj = twist(alg, rj), ari = twist(alg, ri);
      out += Tensor::pure({rr, alj, ali}).substitute(Var::mu(), leg_var(3));
      out -= Tensor::pure({alj, rr, ali}).substitute(Var::mu(), leg_var(3));
      out -= Tensor::pure({arj, lr, ali}).substitute(Var::mu(), leg_var(1));
      out += Tensor::pure({lr, arj, ali}).substitute(Var::mu(), leg_var(2));
      out -= Tensor::pure({ari, arj, ll}).substitute(Var::mu(), leg_var(1));
    }
  }
  return out;
}

Tensor j_delta(const Algebra& alg, const Tensor& r, std::size_t a, JDeltaReading reading) {
  const std::size_t n = alg.rank();
  if (a >= n) throw IndexOutOfRange("generator index out of range");
  if (!is_twist_fixed(alg, r)) throw TwistFixpointViolated();
  StructureTable ad = commutator_table(alg.product);
  const Element x = basis_vector(n, a);
  const Endomorphism& al = alg.alpha;
  const Poly total3 = -leg_var(1) - leg_var(2) - leg_var(3);

  Tensor rr = double_bracket(alg, r);
  Tensor q = act_on_leg(alg.product, x, twist_legs(al, rr, {1, 2}), 0, lam()) +
             act_on_leg(alg.product, x, twist_legs(al, rr, {0, 2}), 1, lam()) +
             act_on_leg(ad, x, twist_legs(al, rr, {0, 1}), 2, lam());
  Tensor out = twist_all_legs(al, q.substitute(Var::lambda(), total3));

  Tensor s = r - r.permute({1, 0});
  const Element ax = twist(alg, x);
  const Poly second_mu = reading == JDeltaReading::Corrected ? leg_var(3) : -leg_var(3);
  for (const auto& [rj, lj] : pure_terms(r)) {
    Element aal = twist(alg, twist(alg, lj));
    Element y = product(alg.product, x, rj, lam());
    Tensor first = append_leg(p_action(alg, y, s, mu()), aal);
    out += first.substitute(Var::mu(), -leg_var(1) - leg_var(2)).substitute(Var::lambda(), total3);
    Tensor second = append_leg(p_action(alg, ax, p_action(alg, rj, s, mu()), lam()), aal);
    out -= second.substitute(Var::mu(), second_mu).substitute(Var::lambda(), total3);
  }
  return out;
}

CoboundaryVerdict check_coboundary_coalgebra(const Algebra& alg, const Tensor& r, JDeltaReading reading) {
  CoboundaryVerdict v;
  Coalgebra c = coboundary_cobracket(alg, r);
  Report co = check_coalgebra(c);
  v.coalgebra = co.passed();
  v.report = Report(alg.name);
  v.report.merge(co);
  const std::vector<FreeModule> legs(3, alg.module);
  v.j_zero = true;
  for (std::size_t a = 0; a < alg.rank(); ++a) {
    Tensor j = j_delta(alg, r, a, reading);
    if (!j.is_zero()) v.j_zero = false;
    v.report.add(Check{"j-delta", {alg.module.label(a)}, j.components(legs), {}});
  }
  Check eq{"equivalence", {}, {}, {}};
  if (!v.agree()) {
    eq.residual.push_back({"verdict", Poly(1)});
    eq.note = "verdicts differ";
  }
  v.report.add(std::move(eq));
  return v;
}

}  // namespace homconf
