#include "homconf/constructions.hpp"

#include "homconf/axioms.hpp"
#include "homconf/errors.hpp"
#include "homconf/linsolve.hpp"

namespace homconf {
namespace {

using Vec = std::vector<Rational>;

struct Finite {
  const FiniteAlgebra& f;
  std::size_t n;

  Vec mul(const Vec& x, const Vec& y) const {
    Vec r(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j] == 0) continue;
        for (std::size_t k = 0; k < n; ++k) r[k] += x[i] * y[j] * f.mult[i][j][k];
      }
    }
    return r;
  }
  Vec tw(const Vec& x) const {
    Vec r(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) r[i] += f.twist[i][j] * x[j];
    }
    return r;
  }
  Vec e(std::size_t i) const {
    Vec r(n);
    r[i] = 1;
    return r;
  }
};

Vec operator-(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Vec operator+(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Check finite_check(const FiniteAlgebra& f, const std::string& axiom, std::vector<std::size_t> idx,
                   const Vec& v) {
  Check c{axiom, {}, {}, {}};
  for (auto i : idx) c.tuple.push_back(f.basis[i]);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] != 0) c.residual.push_back({f.basis[k], Poly(v[k])});
  }
  return c;
}

std::vector<Element> basis_of(std::size_t n) {
  std::vector<Element> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(Element::basis(n, i));
  return e;
}

}  // namespace

Report check_finite_algebra(const FiniteAlgebra& f) {
  const std::size_t n = f.basis.size();
  if (f.mult.size() != n || f.twist.size() != n) throw RankMismatch("finite algebra data has wrong size");
  Finite a{f, n};
  Report r("finite");
  if (f.kind == Kind::Lie) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        r.add(finite_check(f, "skew", {i, j}, a.mul(a.e(i), a.e(j)) + a.mul(a.e(j), a.e(i))));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vec x = a.e(i), y = a.e(j), z = a.e(k);
        if (f.kind == Kind::Lie) {
          Vec v = a.mul(a.tw(x), a.mul(y, z)) - a.mul(a.mul(x, y), a.tw(z)) - a.mul(a.tw(y), a.mul(x, z));
          r.add(finite_check(f, "jacobi", {i, j, k}, v));
          continue;
        }
        Vec v = a.mul(a.mul(x, y), a.tw(z)) - a.mul(a.tw(x), a.mul(y, z)) - a.mul(a.mul(y, x), a.tw(z)) +
                a.mul(a.tw(y), a.mul(x, z));
        r.add(finite_check(f, "left-symmetry", {i, j, k}, v));
        if (f.kind == Kind::Novikov) {
          r.add(finite_check(f, "novikov", {i, j, k}, a.mul(a.mul(x, y), a.tw(z)) - a.mul(a.mul(x, z), a.tw(y))));
        }
      }
    }
  }
  if (f.kind != Kind::Lie) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Vec v = a.tw(a.mul(a.e(i), a.e(j))) - a.mul(a.tw(a.e(i)), a.tw(a.e(j)));
        r.add(finite_check(f, "multiplicative", {i, j}, v));
      }
    }
  }
  return r;
}

Algebra current_algebra(const FiniteAlgebra& f, std::string name) {
  Report r = check_finite_algebra(f);
  if (!r.passed()) throw NotCertified("finite-dimensional input fails its axioms");
  const std::size_t n = f.basis.size();
  StructureTable t(n);
  std::vector<std::vector<Poly>> alpha(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      alpha[i][j] = Poly(f.twist[i][j]);
      for (std::size_t k = 0; k < n; ++k) {
        if (f.mult[i][j][k] != 0) t.set(i, j, k, Poly(f.mult[i][j][k]));
      }
    }
  }
  return make_algebra(std::move(name), FreeModule(f.basis), std::move(t), Endomorphism(alpha), f.kind);
}

BilinearForm current_form(const std::vector<std::vector<Rational>>& w) {
  std::vector<std::vector<Poly>> m;
  for (const auto& row : w) {
    std::vector<Poly> r;
    for (const auto& x : row) r.emplace_back(x);
    m.push_back(std::move(r));
  }
  return BilinearForm(std::move(m));
}

Algebra sub_adjacent(const Algebra& alg) {
  if (alg.kind == Kind::Lie) throw NotCertified("sub-adjacent algebra needs a left-symmetric input");
  if (!check_left_symmetry(alg).passed()) throw NotCertified("input is not left-symmetric");
  return make_algebra(alg.name + "-lie", alg.module, commutator_table(alg.product), alg.alpha, Kind::Lie);
}

Report check_form_cyclic(const Algebra& lie, const BilinearForm& w) {
  const std::size_t n = lie.rank();
  auto e = basis_of(n);
  Report r(lie.name);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const auto& t = lie.product;
        Poly v = w.pair(product(t, e[i], e[j], lam()), lie.alpha.image_of_basis(k), mu()) +
                 w.pair(product(t, e[j], e[k], mu() - del()), lie.alpha.image_of_basis(i), -lam()) +
                 w.pair(product(t, e[k], e[i], -mu()), lie.alpha.image_of_basis(j), lam() - mu());
        Check c{"form-cyclic", {lie.module.label(i), lie.module.label(j), lie.module.label(k)}, {}, {}};
        if (!v.is_zero()) c.residual.push_back({"1", v});
        r.add(std::move(c));
      }
    }
  }
  return r;
}

Report check_symplectic(const Algebra& lie, const BilinearForm& w) {
  if (w.rank() != lie.rank()) throw RankMismatch("form rank differs from algebra rank");
  Report r(lie.name);
  r.merge(check_form_skew(w, lie.module));
  r.merge(check_form_nondegenerate(w, lie.module));
  r.merge(check_form_cyclic(lie, w));
  return r;
}

Report check_compatible_product(const Algebra& lsc, const Algebra& lie, const BilinearForm& w) {
  const std::size_t n = lsc.rank();
  auto e = basis_of(n);
  Report r(lsc.name);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Poly v = w.pair(product(lsc.product, e[i], e[j], lam()), lsc.alpha.image_of_basis(k), mu()) +
                 w.pair(lsc.alpha.image_of_basis(j), product(lie.product, e[i], e[k], lam()), mu() - lam());
        Check c{"compatible", {lsc.module.label(i), lsc.module.label(j), lsc.module.label(k)}, {}, {}};
        if (!v.is_zero()) c.residual.push_back({"1", v});
        r.add(std::move(c));
      }
    }
  }
  return r;
}

Algebra lsc_from_symplectic(const Algebra& lie, const BilinearForm& w) {
  if (!check_symplectic(lie, w).passed()) throw NotCertified("form is not symplectic for this algebra");
  const std::size_t n = lie.rank();
  auto e = basis_of(n);
  // Row c, column k: omega(e_k, alpha(e_c))_M. Unknown k: P_k(L, -M).
  PolyMatrix g(n, std::vector<Poly>(n));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t k = 0; k < n; ++k) g[c][k] = w.pair(e[k], lie.alpha.image_of_basis(c), mu());
  }
  StructureTable t(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Poly> rhs(n);
      for (std::size_t c = 0; c < n; ++c) {
        rhs[c] = -w.pair(lie.alpha.image_of_basis(j), product(lie.product, e[i], e[c], lam()), mu() - lam());
      }
      std::vector<Poly> y;
      try {
        y = solve_square_system(g, rhs, Var::mu());
      } catch (const SingularMatrix&) {
        throw NotInducible("pairing against alpha is degenerate");
      } catch (const NoPolynomialSolution&) {
        throw NotInducible("induced product is not polynomial");
      }
      Element out(n);
      for (std::size_t k = 0; k < n; ++k) out.coeffs[k] = y[k].compose({{Var::mu(), -del()}});
      t.set(i, j, std::move(out));
    }
  }
  Algebra out = make_algebra(lie.name + "-induced", lie.module, std::move(t), lie.alpha, Kind::LeftSymmetric);
  if (!check_left_symmetry(out).passed()) throw ConstructionInconsistent("induced product is not left-symmetric");
  if (!(commutator_table(out.product) == lie.product)) {
    throw ConstructionInconsistent("induced product does not reproduce the bracket");
  }
  return out;
}

Report check_parakahler(const Algebra& lie, const std::vector<std::size_t>& first_part, const BilinearForm& w) {
  const std::size_t n = lie.rank();
  std::vector<int> part(n, 1);
  for (auto i : first_part) {
    if (i >= n) throw IndexOutOfRange("split index out of range");
    part[i] = 0;
  }
  Report r(lie.name);
  auto e = basis_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (part[i] != part[j]) continue;
      Check c{"subalgebra", {lie.module.label(i), lie.module.label(j)}, {}, {}};
      Element b = product(lie.product, e[i], e[j], lam());
      for (std::size_t k = 0; k < n; ++k) {
        if (part[k] != part[i] && !b.coeffs[k].is_zero()) c.residual.push_back({lie.module.label(k), b.coeffs[k]});
      }
      r.add(std::move(c));
      Check iso{"isotropic", {lie.module.label(i), lie.module.label(j)}, {}, {}};
      if (!w.at(i, j).is_zero()) iso.residual.push_back({"1", w.at(i, j)});
      r.add(std::move(iso));
    }
  }
  r.merge(check_symplectic(lie, w));
  return r;
}

Algebra change_basis(const Algebra& alg, const Endomorphism& u, const Endomorphism& inverse) {
  const std::size_t n = alg.rank();
  if (!u.compose(inverse).is_identity() || !inverse.compose(u).is_identity()) {
    throw Error("change of basis is not invertible over C[D]");
  }
  StructureTable t(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Element v = product(alg.product, u.image_of_basis(i), u.image_of_basis(j), lam());
      t.set(i, j, apply_endo(inverse, v));
    }
  }
  Endomorphism alpha = inverse.compose(alg.alpha.compose(u));
  return make_algebra(alg.name, alg.module, std::move(t), std::move(alpha), alg.kind);
}

}  // namespace homconf
