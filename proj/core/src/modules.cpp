#include "homconf/axioms.hpp"
#include "homconf/constructions.hpp"
#include "homconf/errors.hpp"

namespace homconf {
namespace {

// Shorthand for an algebra acting on a module.
struct Action {
  const Algebra& alg;
  const Representation& rep;
  std::vector<Element> a;   // algebra basis
  std::vector<Element> aa;  // alpha of the algebra basis
  std::vector<Element> m;   // module basis
  std::vector<Element> bm;  // beta of the module basis
  StructureTable right;

  Action(const Algebra& g, const Representation& r)
      : alg(g), rep(r), right(r.right ? *r.right : StructureTable(g.rank(), r.rank(), r.rank())) {
    if (r.left.left_rank() != g.rank() || r.left.right_rank() != r.rank() || r.left.out_rank() != r.rank()) {
      throw RankMismatch("action table does not match algebra and module");
    }
    if (r.beta.rank() != r.rank()) throw RankMismatch("module twist has wrong rank");
    for (std::size_t i = 0; i < g.rank(); ++i) {
      a.push_back(Element::basis(g.rank(), i));
      aa.push_back(g.alpha.image_of_basis(i));
    }
    for (std::size_t i = 0; i < r.rank(); ++i) {
      m.push_back(Element::basis(r.rank(), i));
      bm.push_back(r.beta.image_of_basis(i));
    }
  }

  Element mul(const Element& x, const Element& y, const Poly& p) const { return product(alg.product, x, y, p); }
  Element l(const Element& x, const Element& v, const Poly& p) const { return product(rep.left, x, v, p); }
  Element r(const Element& x, const Element& v, const Poly& p) const { return product(right, x, v, p); }
  Element beta(const Element& v) const { return apply_endo(rep.beta, v); }

  Check check(const std::string& axiom, std::vector<std::string> tuple, const Element& res) const {
    return Check{axiom, std::move(tuple), components(res, rep.space), {}};
  }
  const std::string& al(std::size_t i) const { return alg.module.label(i); }
  const std::string& ml(std::size_t i) const { return rep.space.label(i); }
};

template <class F>
void over_aam(const Action& c, Report& r, const std::string& axiom, F f) {
  for (std::size_t i = 0; i < c.a.size(); ++i) {
    for (std::size_t j = 0; j < c.a.size(); ++j) {
      for (std::size_t v = 0; v < c.m.size(); ++v) {
        r.add(c.check(axiom, {c.al(i), c.al(j), c.ml(v)}, f(i, j, v)));
      }
    }
  }
}

template <class F>
void over_am(const Action& c, Report& r, const std::string& axiom, F f) {
  for (std::size_t i = 0; i < c.a.size(); ++i) {
    for (std::size_t v = 0; v < c.m.size(); ++v) r.add(c.check(axiom, {c.al(i), c.ml(v)}, f(i, v)));
  }
}

}  // namespace

Representation regular_representation(const Algebra& alg) {
  return Representation{alg.name + "-regular", alg.module, alg.alpha, alg.product,
                        right_multiplication_table(alg.product)};
}

Representation adjoint_representation(const Algebra& lie) {
  return Representation{lie.name + "-adjoint", lie.module, lie.alpha, lie.product, std::nullopt};
}

Report check_lie_module(const Algebra& lie, const Representation& rep) {
  Action c(lie, rep);
  Report r(rep.name);
  over_aam(c, r, "lie-module", [&](std::size_t i, std::size_t j, std::size_t v) {
    Element t1 = c.l(c.mul(c.a[i], c.a[j], lam()), c.bm[v], lam() + mu());
    Element t2 = c.l(c.aa[i], c.l(c.a[j], c.m[v], mu()), lam());
    Element t3 = c.l(c.aa[j], c.l(c.a[i], c.m[v], lam()), mu());
    return t1 - t2 + t3;
  });
  return r;
}

Report check_lie_module_twist(const Algebra& lie, const Representation& rep) {
  Action c(lie, rep);
  Report r(rep.name);
  over_am(c, r, "module-twist", [&](std::size_t i, std::size_t v) {
    return c.beta(c.l(c.a[i], c.m[v], lam())) - c.l(c.aa[i], c.bm[v], lam());
  });
  return r;
}

Algebra semidirect_lie(const Algebra& lie, const Representation& rep) {
  Action c(lie, rep);
  const std::size_t n = lie.rank(), k = rep.rank();
  StructureTable t(n + k);
  auto embed = [&](const Element& x, std::size_t offset) {
    Element out(n + k);
    for (std::size_t q = 0; q < x.rank(); ++q) out.coeffs[offset + q] = x.coeffs[q];
    return out;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.set(i, j, embed(lie.product.at(i, j), 0));
    for (std::size_t v = 0; v < k; ++v) {
      t.set(i, n + v, embed(c.l(c.a[i], c.m[v], lam()), n));
      t.set(n + v, i, embed(-c.l(c.a[i], c.m[v], -lam() - del()), n));
    }
  }
  return make_algebra(lie.name + "x" + rep.name, lie.module.disjoint_sum(rep.space), std::move(t),
                      lie.alpha.direct_sum(rep.beta), Kind::Lie);
}

Report check_lsc_module(const Algebra& lsc, const Representation& rep) {
  Action c(lsc, rep);
  Report r(rep.name);
  r.merge(check_left_symmetry(lsc), "algebra");
  r.merge(check_multiplicative(lsc), "algebra");
  over_am(c, r, "twist-left", [&](std::size_t i, std::size_t v) {
    return c.beta(c.l(c.a[i], c.m[v], lam())) - c.l(c.aa[i], c.bm[v], lam());
  });
  over_am(c, r, "twist-right", [&](std::size_t i, std::size_t v) {
    return c.beta(c.r(c.a[i], c.m[v], lam())) - c.r(c.aa[i], c.bm[v], lam());
  });
  over_aam(c, r, "left-left", [&](std::size_t i, std::size_t j, std::size_t v) {
    Element t1 = c.l(c.mul(c.a[i], c.a[j], lam()), c.bm[v], lam() + mu());
    Element t2 = c.l(c.aa[i], c.l(c.a[j], c.m[v], mu()), lam());
    Element t3 = c.l(c.mul(c.a[j], c.a[i], mu()), c.bm[v], lam() + mu());
    Element t4 = c.l(c.aa[j], c.l(c.a[i], c.m[v], lam()), mu());
    return t1 - t2 - t3 + t4;
  });
  over_aam(c, r, "left-right", [&](std::size_t i, std::size_t j, std::size_t v) {
    const Poly outer = -lam() - mu() - del();
    Element t1 = c.r(c.aa[j], c.l(c.a[i], c.m[v], lam()), outer);
    Element t2 = c.l(c.aa[i], c.r(c.a[j], c.m[v], -mu() - del()), lam());
    Element t3 = c.r(c.aa[j], c.r(c.a[i], c.m[v], lam()), outer);
    Element t4 = c.r(c.mul(c.a[i], c.a[j], lam()), c.bm[v], -mu() - del());
    return t1 - t2 - t3 + t4;
  });
  return r;
}

Algebra semidirect_lsc(const Algebra& lsc, const Representation& rep) {
  Action c(lsc, rep);
  const std::size_t n = lsc.rank(), k = rep.rank();
  StructureTable t(n + k);
  auto embed = [&](const Element& x, std::size_t offset) {
    Element out(n + k);
    for (std::size_t q = 0; q < x.rank(); ++q) out.coeffs[offset + q] = x.coeffs[q];
    return out;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.set(i, j, embed(lsc.product.at(i, j), 0));
    for (std::size_t v = 0; v < k; ++v) {
      t.set(i, n + v, embed(c.l(c.a[i], c.m[v], lam()), n));
      t.set(n + v, i, embed(c.r(c.a[i], c.m[v], -lam() - del()), n));
    }
  }
  return make_algebra(lsc.name + "x" + rep.name, lsc.module.disjoint_sum(rep.space), std::move(t),
                      lsc.alpha.direct_sum(rep.beta), Kind::LeftSymmetric);
}

DerivedReps derived_reps(const Algebra& lsc, const Representation& rep) {
  Action c(lsc, rep);
  Algebra lie = make_algebra(lsc.name + "-lie", lsc.module, commutator_table(lsc.product), lsc.alpha, Kind::Lie);
  Representation left{rep.name + "-l", rep.space, rep.beta, rep.left, std::nullopt};
  Representation diff{rep.name + "-rho", rep.space, rep.beta, rep.left - c.right, std::nullopt};
  Representation restricted{rep.name + "-rho0", rep.space, rep.beta, diff.left,
                            StructureTable(lsc.rank(), rep.rank(), rep.rank())};
  return DerivedReps{check_lie_module(lie, left), check_lie_module(lie, diff), check_lsc_module(lsc, restricted)};
}

StructureTable dual_action(const StructureTable& t) {
  const std::size_t n = t.left_rank(), m = t.right_rank();
  if (t.out_rank() != m) throw RankMismatch("dual action needs an action table");
  StructureTable out(n, m, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Element e(m);
      for (std::size_t k = 0; k < m; ++k) {
        e.coeffs[k] = -t.at(i, k).coeffs[j].compose({{Var::d(), -lam() - del()}});
      }
      out.set(i, j, std::move(e));
    }
  }
  return out;
}

Report check_dual_side_conditions(const Algebra& lsc, const Representation& rep, SideConditions mode) {
  if (mode == SideConditions::Module) return check_lsc_module(lsc, rep);
  Action c(lsc, rep);
  Report r(rep.name);
  over_am(c, r, "side-twist-left", [&](std::size_t i, std::size_t v) {
    return c.beta(c.l(c.aa[i], c.m[v], lam())) - c.l(c.a[i], c.bm[v], lam());
  });
  over_am(c, r, "side-twist-right", [&](std::size_t i, std::size_t v) {
    return c.beta(c.r(c.aa[i], c.m[v], lam())) - c.r(c.a[i], c.bm[v], lam());
  });
  over_aam(c, r, "side-left-left", [&](std::size_t i, std::size_t j, std::size_t v) {
    Element t1 = c.beta(c.l(c.mul(c.a[i], c.a[j], lam()), c.m[v], lam() + mu()));
    Element t2 = c.l(c.a[i], c.l(c.aa[j], c.m[v], mu()), lam());
    Element t3 = c.beta(c.l(c.mul(c.a[j], c.a[i], mu()), c.m[v], lam() + mu()));
    Element t4 = c.l(c.a[j], c.l(c.aa[i], c.m[v], lam()), mu());
    return t1 - t2 - t3 + t4;
  });
  over_aam(c, r, "side-left-right", [&](std::size_t i, std::size_t j, std::size_t v) {
    const Poly outer = -lam() - mu() - del();
    Element t1 = c.r(c.a[j], c.l(c.aa[i], c.m[v], lam()), outer);
    Element t2 = c.l(c.a[i], c.r(c.aa[j], c.m[v], -mu() - del()), lam());
    Element t3 = c.r(c.a[j], c.r(c.aa[i], c.m[v], lam()), outer);
    Element t4 = c.beta(c.r(c.mul(c.a[i], c.a[j], lam()), c.m[v], -mu() - del()));
    return t1 - t2 - t3 + t4;
  });
  return r;
}

Representation dual_module(const Algebra& lsc, const Representation& rep, SideConditions mode) {
  if (!check_dual_side_conditions(lsc, rep, mode).passed()) {
    throw SideConditionsFail("dual module hypotheses fail for " + rep.name);
  }
  Action c(lsc, rep);
  StructureTable ls = dual_action(rep.left);
  StructureTable rs = dual_action(c.right);
  return Representation{rep.name + "*", rep.space.dual(), rep.beta.dual(), ls - rs, scale(-1, rs)};
}

}  // namespace homconf
