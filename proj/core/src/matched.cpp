#include "homconf/axioms.hpp"
#include "homconf/constructions.hpp"
#include "homconf/errors.hpp"

namespace homconf {
namespace {

std::vector<Element> basis_of(std::size_t n) {
  std::vector<Element> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(Element::basis(n, i));
  return e;
}

std::vector<Element> twisted_basis(const Algebra& a) {
  std::vector<Element> e;
  for (std::size_t i = 0; i < a.rank(); ++i) e.push_back(a.alpha.image_of_basis(i));
  return e;
}

// x in X acts on Y through lx, rx; a in Y acts on X through ly, ry.
struct Side {
  const Algebra& x;
  const Algebra& y;
  const StructureTable& lx;
  const StructureTable& rx;
  const StructureTable& ly;
  const StructureTable& ry;
};

template <class F>
void over_xyy(const Side& s, Report& r, const std::string& axiom, F f) {
  for (std::size_t i = 0; i < s.x.rank(); ++i) {
    for (std::size_t j = 0; j < s.y.rank(); ++j) {
      for (std::size_t k = 0; k < s.y.rank(); ++k) {
        Element res = f(i, j, k);
        r.add(Check{axiom, {s.x.module.label(i), s.y.module.label(j), s.y.module.label(k)},
                    components(res, s.y.module), {}});
      }
    }
  }
}

// r_X(alpha(x)){-L-M-D}[a{L}b] = r_X(l_Y(b){M}x){-L-D}g(a) - r_X(l_Y(a){L}x){-M-D}g(b)
//   + g(a){L}(r_X(x){-M-D}b) - g(b){M}(r_X(x){-L-D}a)
void right_compatibility(const Side& s, Report& r, const std::string& axiom) {
  auto ex = basis_of(s.x.rank());
  auto ey = basis_of(s.y.rank());
  auto ax = twisted_basis(s.x);
  auto gy = twisted_basis(s.y);
  const auto& py = s.y.product;
  over_xyy(s, r, axiom, [&](std::size_t i, std::size_t j, std::size_t k) {
    const Element& x = ex[i];
    const Element& a = ey[j];
    const Element& b = ey[k];
    Element bracket = product(py, a, b, lam()) - product(py, b, a, -lam() - del());
    Element lhs = product(s.rx, ax[i], bracket, -lam() - mu() - del());
    Element r1 = product(s.rx, product(s.ly, b, x, mu()), gy[j], -lam() - del());
    Element r2 = product(s.rx, product(s.ly, a, x, lam()), gy[k], -mu() - del());
    Element r3 = product(py, gy[j], product(s.rx, x, b, -mu() - del()), lam());
    Element r4 = product(py, gy[k], product(s.rx, x, a, -lam() - del()), mu());
    return lhs - r1 + r2 - r3 + r4;
  });
}

// l_X(alpha(x)){L}(a{M}b) = -l_X(l_Y(a){M}x - r_Y(a){-L-D}x){L+M}g(b)
//   + (l_X(x){L}a - r_X(x){-M-D}a){L+M}g(b) + r_X(r_Y(b){-L-D}x){-M-D}g(a) + g(a){M}(l_X(x){L}b)
void left_compatibility(const Side& s, Report& r, const std::string& axiom) {
  auto ex = basis_of(s.x.rank());
  auto ey = basis_of(s.y.rank());
  auto ax = twisted_basis(s.x);
  auto gy = twisted_basis(s.y);
  const auto& py = s.y.product;
  over_xyy(s, r, axiom, [&](std::size_t i, std::size_t j, std::size_t k) {
    const Element& x = ex[i];
    const Element& a = ey[j];
    const Element& b = ey[k];
    Element lhs = product(s.lx, ax[i], product(py, a, b, mu()), lam());
    Element inner_x = product(s.ly, a, x, mu()) - product(s.ry, a, x, -lam() - del());
    Element r1 = -product(s.lx, inner_x, gy[k], lam() + mu());
    Element inner_y = product(s.lx, x, a, lam()) - product(s.rx, x, a, -mu() - del());
    Element r2 = product(py, inner_y, gy[k], lam() + mu());
    Element r3 = product(s.rx, product(s.ry, b, x, -lam() - del()), gy[j], -mu() - del());
    Element r4 = product(py, gy[j], product(s.lx, x, b, lam()), mu());
    return lhs - r1 - r2 - r3 - r4;
  });
}

Element embed(const Element& x, std::size_t offset, std::size_t n) {
  Element out(n);
  for (std::size_t q = 0; q < x.rank(); ++q) out.coeffs[offset + q] = x.coeffs[q];
  return out;
}

void check_pair_shapes(const Algebra& a, const Algebra& b, const StructureTable& on_b, const StructureTable& on_a) {
  if (on_b.left_rank() != a.rank() || on_b.right_rank() != b.rank() || on_b.out_rank() != b.rank() ||
      on_a.left_rank() != b.rank() || on_a.right_rank() != a.rank() || on_a.out_rank() != a.rank()) {
    throw RankMismatch("matched pair actions do not fit the algebras");
  }
}

struct Split {
  Algebra a;
  Algebra b;
  std::size_t k;
  std::size_t n;
};

Element block(const Element& x, std::size_t from, std::size_t len) {
  Element out(len);
  for (std::size_t q = 0; q < len; ++q) out.coeffs[q] = x.coeffs[from + q];
  return out;
}

bool outside_zero(const Element& x, std::size_t from, std::size_t len) {
  for (std::size_t q = 0; q < x.rank(); ++q) {
    if ((q < from || q >= from + len) && !x.coeffs[q].is_zero()) return false;
  }
  return true;
}

Split split_blocks(const Algebra& alg, std::size_t k, Kind kind) {
  const std::size_t n = alg.rank();
  if (k == 0 || k >= n) throw IndexOutOfRange("split point must leave both parts nonempty");
  std::vector<std::vector<Poly>> ma(k, std::vector<Poly>(k)), mb(n - k, std::vector<Poly>(n - k));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Poly& v = alg.alpha.at(r, c);
      if ((r < k) != (c < k)) {
        if (!v.is_zero()) throw NotCertified("twist does not preserve the splitting");
      } else if (r < k) {
        ma[r][c] = v;
      } else {
        mb[r - k][c - k] = v;
      }
    }
  }
  StructureTable ta(k), tb(n - k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((i < k) != (j < k)) continue;
      const Element& v = alg.product.at(i, j);
      if (i < k) {
        if (!outside_zero(v, 0, k)) throw NotCertified("first part is not a subalgebra");
        ta.set(i, j, block(v, 0, k));
      } else {
        if (!outside_zero(v, k, n - k)) throw NotCertified("second part is not a subalgebra");
        tb.set(i - k, j - k, block(v, k, n - k));
      }
    }
  }
  std::vector<std::string> la(alg.module.basis().begin(), alg.module.basis().begin() + k);
  std::vector<std::string> lb(alg.module.basis().begin() + k, alg.module.basis().end());
  return Split{make_algebra(alg.name + "-1", FreeModule(la), std::move(ta), Endomorphism(ma), kind),
               make_algebra(alg.name + "-2", FreeModule(lb), std::move(tb), Endomorphism(mb), kind), k, n};
}

// Entry with L replaced by -L-D.
Element reflect(const Element& x) { return x.compose({{Var::lambda(), -lam() - del()}}); }

}  // namespace

Report check_matched_pair_lie(const LieMatchedPair& p) {
  check_pair_shapes(p.a, p.b, p.rho, p.sigma);
  Report r(p.a.name + "+" + p.b.name);
  r.merge(check_axioms(p.a, {"skew", "jacobi"}), "a");
  r.merge(check_axioms(p.b, {"skew", "jacobi"}), "b");
  r.merge(check_lie_module(p.a, Representation{"rho", p.b.module, p.b.alpha, p.rho, std::nullopt}), "rho");
  r.merge(check_lie_module(p.b, Representation{"sigma", p.a.module, p.a.alpha, p.sigma, std::nullopt}), "sigma");

  auto ex = basis_of(p.a.rank());
  auto eb = basis_of(p.b.rank());
  auto ax = twisted_basis(p.a);
  auto gb = twisted_basis(p.b);
  const auto& pa = p.a.product;
  const auto& pb = p.b.product;
  for (std::size_t i = 0; i < ex.size(); ++i) {
    for (std::size_t j = 0; j < eb.size(); ++j) {
      for (std::size_t k = 0; k < eb.size(); ++k) {
        const Element &x = ex[i], &a = eb[j], &b = eb[k];
        Element t1 = product(p.rho, ax[i], product(pb, a, b, mu()), lam());
        Element t2 = product(pb, product(p.rho, x, a, lam()), gb[k], lam() + mu());
        Element t3 = product(pb, gb[j], product(p.rho, x, b, lam()), mu());
        Element t4 = product(p.rho, product(p.sigma, a, x, -lam() - del()), gb[k], lam() + mu());
        Element t5 = product(p.rho, product(p.sigma, b, x, -lam() - del()), gb[j], -mu() - del());
        r.add(Check{"compat-rho", {p.a.module.label(i), p.b.module.label(j), p.b.module.label(k)},
                    components(t1 - t2 - t3 + t4 - t5, p.b.module), {}});
      }
    }
  }
  for (std::size_t i = 0; i < ex.size(); ++i) {
    for (std::size_t j = 0; j < ex.size(); ++j) {
      for (std::size_t k = 0; k < eb.size(); ++k) {
        const Element &x = ex[i], &y = ex[j], &a = eb[k];
        Element t1 = product(p.sigma, gb[k], product(pa, x, y, lam()), -lam() - mu() - del());
        Element t2 = product(pa, ax[i], product(p.sigma, a, y, -mu() - del()), lam());
        Element t3 = product(pa, ax[j], product(p.sigma, a, x, -lam() - del()), mu());
        Element t4 = product(p.sigma, product(p.rho, x, a, lam()), ax[j], -mu() - del());
        Element t5 = product(p.sigma, product(p.rho, y, a, mu()), ax[i], -lam() - del());
        r.add(Check{"compat-sigma", {p.a.module.label(i), p.a.module.label(j), p.b.module.label(k)},
                    components(t1 - t2 + t3 + t4 - t5, p.a.module), {}});
      }
    }
  }
  return r;
}

Algebra bicrossed_lie(const LieMatchedPair& p) {
  check_pair_shapes(p.a, p.b, p.rho, p.sigma);
  const std::size_t na = p.a.rank(), nb = p.b.rank(), n = na + nb;
  auto ex = basis_of(na);
  auto eb = basis_of(nb);
  StructureTable t(n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) t.set(i, j, embed(p.a.product.at(i, j), 0, n));
  }
  for (std::size_t i = 0; i < nb; ++i) {
    for (std::size_t j = 0; j < nb; ++j) t.set(na + i, na + j, embed(p.b.product.at(i, j), na, n));
  }
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      // [x{L}b] = rho(x){L}b - sigma(b){-L-D}x
      t.set(i, na + j,
            embed(product(p.rho, ex[i], eb[j], lam()), na, n) -
                embed(product(p.sigma, eb[j], ex[i], -lam() - del()), 0, n));
      // [a{L}y] = sigma(a){L}y - rho(y){-L-D}a
      t.set(na + j, i,
            embed(product(p.sigma, eb[j], ex[i], lam()), 0, n) -
                embed(product(p.rho, ex[i], eb[j], -lam() - del()), na, n));
    }
  }
  return make_algebra(p.a.name + "+" + p.b.name, p.a.module.disjoint_sum(p.b.module), std::move(t),
                      p.a.alpha.direct_sum(p.b.alpha), Kind::Lie);
}

LieMatchedPair split_lie(const Algebra& lie, std::size_t k) {
  Split s = split_blocks(lie, k, Kind::Lie);
  const std::size_t nb = s.n - k;
  StructureTable rho(k, nb, nb), sigma(nb, k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      const Element& xb = lie.product.at(i, k + j);
      const Element& ay = lie.product.at(k + j, i);
      rho.set(i, j, block(xb, k, nb));
      sigma.set(j, i, block(ay, 0, k));
    }
  }
  return LieMatchedPair{std::move(s.a), std::move(s.b), std::move(rho), std::move(sigma)};
}

LscMatchedPair split_lsc(const Algebra& lsc, std::size_t k) {
  Split s = split_blocks(lsc, k, lsc.kind == Kind::Lie ? Kind::LeftSymmetric : lsc.kind);
  const std::size_t nb = s.n - k;
  StructureTable la(k, nb, nb), ra(k, nb, nb), lb(nb, k, k), rb(nb, k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      const Element& xb = lsc.product.at(i, k + j);
      const Element& ay = lsc.product.at(k + j, i);
      la.set(i, j, block(xb, k, nb));
      rb.set(j, i, reflect(block(xb, 0, k)));
      lb.set(j, i, block(ay, 0, k));
      ra.set(i, j, reflect(block(ay, k, nb)));
    }
  }
  return LscMatchedPair{std::move(s.a), std::move(s.b), std::move(la), std::move(ra), std::move(lb), std::move(rb)};
}

Report check_matched_pair_lsc(const LscMatchedPair& p) {
  check_pair_shapes(p.a, p.b, p.la, p.lb);
  check_pair_shapes(p.a, p.b, p.ra, p.rb);
  Report r(p.a.name + "+" + p.b.name);
  r.merge(check_lsc_module(p.a, Representation{"b", p.b.module, p.b.alpha, p.la, p.ra}), "a-on-b");
  r.merge(check_lsc_module(p.b, Representation{"a", p.a.module, p.a.alpha, p.lb, p.rb}), "b-on-a");
  Side ab{p.a, p.b, p.la, p.ra, p.lb, p.rb};
  Side ba{p.b, p.a, p.lb, p.rb, p.la, p.ra};
  right_compatibility(ab, r, "compat-right-a");
  left_compatibility(ab, r, "compat-left-a");
  right_compatibility(ba, r, "compat-right-b");
  left_compatibility(ba, r, "compat-left-b");
  return r;
}

Algebra bicrossed_lsc(const LscMatchedPair& p) {
  check_pair_shapes(p.a, p.b, p.la, p.lb);
  check_pair_shapes(p.a, p.b, p.ra, p.rb);
  const std::size_t na = p.a.rank(), nb = p.b.rank(), n = na + nb;
  auto ex = basis_of(na);
  auto eb = basis_of(nb);
  StructureTable t(n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) t.set(i, j, embed(p.a.product.at(i, j), 0, n));
  }
  for (std::size_t i = 0; i < nb; ++i) {
    for (std::size_t j = 0; j < nb; ++j) t.set(na + i, na + j, embed(p.b.product.at(i, j), na, n));
  }
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      // x{L}b = r_B(b){-L-D}x + l_A(x){L}b
      t.set(i, na + j,
            embed(product(p.rb, eb[j], ex[i], -lam() - del()), 0, n) + embed(product(p.la, ex[i], eb[j], lam()), na, n));
      // a{L}y = l_B(a){L}y + r_A(y){-L-D}a
      t.set(na + j, i,
            embed(product(p.lb, eb[j], ex[i], lam()), 0, n) + embed(product(p.ra, ex[i], eb[j], -lam() - del()), na, n));
    }
  }
  return make_algebra(p.a.name + "+" + p.b.name, p.a.module.disjoint_sum(p.b.module), std::move(t),
                      p.a.alpha.direct_sum(p.b.alpha), Kind::LeftSymmetric);
}

LieMatchedPair dual_lie_pair(const Algebra& a, const Algebra& astar) {
  if (a.rank() != astar.rank()) throw RankMismatch("dual algebra has a different rank");
  Algebra ga = make_algebra(a.name + "-lie", a.module, commutator_table(a.product), a.alpha, Kind::Lie);
  Algebra gs = make_algebra(astar.name + "-lie", astar.module, commutator_table(astar.product), astar.alpha, Kind::Lie);
  return LieMatchedPair{ga, gs, dual_action(a.product), dual_action(astar.product)};
}

LscMatchedPair dual_lsc_pair(const Algebra& a, const Algebra& astar) {
  if (a.rank() != astar.rank()) throw RankMismatch("dual algebra has a different rank");
  StructureTable la = dual_action(a.product);
  StructureTable ra = dual_action(right_multiplication_table(a.product));
  StructureTable lb = dual_action(astar.product);
  StructureTable rb = dual_action(right_multiplication_table(astar.product));
  return LscMatchedPair{a, astar, la - ra, scale(-1, ra), lb - rb, scale(-1, rb)};
}

bool dual_module_twist_conditions(const Algebra& alg) {
  const auto e = basis_of(alg.rank());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const Element ai = alg.alpha.image_of_basis(i);
    for (std::size_t j = 0; j < e.size(); ++j) {
      const Element aj = alg.alpha.image_of_basis(j);
      // alpha(l(alpha(a))m) = l(a)alpha(m) and alpha(r(alpha(a))m) = r(a)alpha(m)
      if (!(apply_endo(alg.alpha, product(alg.product, ai, e[j], lam())) == product(alg.product, e[i], aj, lam()))) {
        return false;
      }
      if (!(apply_endo(alg.alpha, product(alg.product, e[j], ai, lam())) == product(alg.product, aj, e[i], lam()))) {
        return false;
      }
    }
  }
  return true;
}

DualPairVerdict check_dual_pair(const Algebra& a, const Algebra& astar) {
  DualPairVerdict v;
  const std::vector<std::string> lsc_axioms = {"left-symmetry", "multiplicative"};
  v.hypotheses = check_axioms(a, lsc_axioms).passed() && check_axioms(astar, lsc_axioms).passed() &&
                 astar.alpha == a.alpha.dual() && dual_module_twist_conditions(a) &&
                 dual_module_twist_conditions(astar);
  Report lie = check_matched_pair_lie(dual_lie_pair(a, astar));
  Report lsc = check_matched_pair_lsc(dual_lsc_pair(a, astar));
  v.lie_pair = lie.passed();
  v.lsc_pair = lsc.passed();
  v.report = Report(a.name + "+" + astar.name);
  v.report.merge(lie, "lie");
  v.report.merge(lsc, "lsc");
  if (v.hypotheses) {
    Check c{"equivalence", {}, {}, v.agree() ? "" : "verdicts differ"};
    if (!v.agree()) c.residual.push_back({"verdict", Poly(1)});
    v.report.add(std::move(c));
  }
  return v;
}

}  // namespace homconf
