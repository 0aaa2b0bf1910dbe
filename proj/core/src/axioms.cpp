#include "homconf/axioms.hpp"

#include "homconf/errors.hpp"

namespace homconf {
namespace {

struct Ctx {
  const Algebra& alg;
  std::vector<Element> e;
  std::vector<Element> ae;

  explicit Ctx(const Algebra& a) : alg(a) {
    for (std::size_t i = 0; i < a.rank(); ++i) {
      e.push_back(Element::basis(a.rank(), i));
      ae.push_back(a.alpha.image_of_basis(i));
    }
  }

  Element mul(const Element& x, const Element& y, const Poly& p) const {
    return product(alg.product, x, y, p);
  }
  Element twist(const Element& x) const { return apply_endo(alg.alpha, x); }
  std::size_t n() const { return alg.rank(); }
  const std::string& label(std::size_t i) const { return alg.module.label(i); }
};

Check make_check(const Ctx& c, const std::string& axiom, std::vector<std::size_t> idx,
                 const Element& residual) {
  Check out{axiom, {}, components(residual, c.alg.module), {}};
  for (auto i : idx) out.tuple.push_back(c.label(i));
  return out;
}

template <class F>
Report pairs(const Algebra& alg, const std::string& axiom, F f) {
  Ctx c(alg);
  Report r(alg.name);
  for (std::size_t i = 0; i < c.n(); ++i) {
    for (std::size_t j = 0; j < c.n(); ++j) r.add(make_check(c, axiom, {i, j}, f(c, i, j)));
  }
  return r;
}

template <class F>
Report triples(const Algebra& alg, const std::string& axiom, F f) {
  Ctx c(alg);
  Report r(alg.name);
  for (std::size_t i = 0; i < c.n(); ++i) {
    for (std::size_t j = 0; j < c.n(); ++j) {
      for (std::size_t k = 0; k < c.n(); ++k) {
        r.add(make_check(c, axiom, {i, j, k}, f(c, i, j, k)));
      }
    }
  }
  return r;
}

}  // namespace

Report check_skew(const Algebra& alg) {
  return pairs(alg, "skew", [](const Ctx& c, std::size_t i, std::size_t j) {
    return c.mul(c.e[i], c.e[j], lam()) + c.mul(c.e[j], c.e[i], -lam() - del());
  });
}

Report check_hom_jacobi(const Algebra& alg) {
  return triples(alg, "jacobi", [](const Ctx& c, std::size_t i, std::size_t j, std::size_t k) {
    Element lhs = c.mul(c.ae[i], c.mul(c.e[j], c.e[k], mu()), lam());
    Element r1 = c.mul(c.mul(c.e[i], c.e[j], lam()), c.ae[k], lam() + mu());
    Element r2 = c.mul(c.ae[j], c.mul(c.e[i], c.e[k], lam()), mu());
    return lhs - r1 - r2;
  });
}

Report check_left_symmetry(const Algebra& alg) {
  return triples(alg, "left-symmetry", [](const Ctx& c, std::size_t i, std::size_t j, std::size_t k) {
    Element t1 = c.mul(c.mul(c.e[i], c.e[j], lam()), c.ae[k], lam() + mu());
    Element t2 = c.mul(c.ae[i], c.mul(c.e[j], c.e[k], mu()), lam());
    Element t3 = c.mul(c.mul(c.e[j], c.e[i], mu()), c.ae[k], lam() + mu());
    Element t4 = c.mul(c.ae[j], c.mul(c.e[i], c.e[k], lam()), mu());
    return t1 - t2 - t3 + t4;
  });
}

Report check_novikov(const Algebra& alg) {
  return triples(alg, "novikov", [](const Ctx& c, std::size_t i, std::size_t j, std::size_t k) {
    Element lhs = c.mul(c.mul(c.e[i], c.e[j], lam()), c.ae[k], lam() + mu());
    Element rhs = c.mul(c.mul(c.e[i], c.e[k], lam()), c.ae[j], -mu() - del());
    return lhs - rhs;
  });
}

Report check_multiplicative(const Algebra& alg) {
  return pairs(alg, "multiplicative", [](const Ctx& c, std::size_t i, std::size_t j) {
    return c.twist(c.mul(c.e[i], c.e[j], lam())) - c.mul(c.ae[i], c.ae[j], lam());
  });
}

Report check_shift_identities(const Algebra& alg) {
  Report r = triples(alg, "shift-left", [](const Ctx& c, std::size_t i, std::size_t j, std::size_t k) {
    // the inner D becomes -(L+M) once the outer product is taken
    Element lhs = c.mul(c.mul(c.e[i], c.e[j], -lam() - del()), c.ae[k], lam() + mu());
    Element rhs = c.mul(c.mul(c.e[i], c.e[j], mu()), c.ae[k], lam() + mu());
    return lhs - rhs;
  });
  r.merge(triples(alg, "shift-right", [](const Ctx& c, std::size_t i, std::size_t j, std::size_t k) {
    Element lhs = c.mul(c.ae[i], c.mul(c.e[j], c.e[k], -lam() - del()), mu());
    Element rhs = c.mul(c.ae[i], c.mul(c.e[j], c.e[k], nu()), mu());
    return lhs - rhs.substitute(Var::nu(), -lam() - mu() - del());
  }));
  return r;
}

Report check_mixed_identity(const Algebra& alg) {
  return triples(alg, "mixed", [](const Ctx& c, std::size_t i, std::size_t j, std::size_t k) {
    const Poly outer = -mu() - del();
    Element t1 = c.mul(c.mul(c.e[i], c.e[j], lam()), c.ae[k], outer);
    Element t2 = c.mul(c.ae[i], c.mul(c.e[j], c.e[k], outer), lam());
    Element t3 = c.mul(c.mul(c.e[j], c.e[i], -lam() - del()), c.ae[k], outer);
    Element t4 = c.mul(c.ae[j], c.mul(c.e[i], c.e[k], lam()), -mu() - del() - lam());
    return t1 - t2 - t3 + t4;
  });
}

const std::vector<std::string>& axiom_names() {
  static const std::vector<std::string> names = {"skew",    "jacobi",         "left-symmetry",
                                                 "novikov", "multiplicative", "shift",
                                                 "mixed"};
  return names;
}

std::vector<std::string> default_axioms(Kind kind) {
  switch (kind) {
    case Kind::Lie:
      return {"skew", "jacobi"};
    case Kind::LeftSymmetric:
      return {"left-symmetry", "multiplicative"};
    case Kind::Novikov:
      return {"left-symmetry", "novikov", "multiplicative"};
  }
  return {};
}

Report check_axiom(const Algebra& alg, const std::string& axiom) {
  if (axiom == "skew") return check_skew(alg);
  if (axiom == "jacobi") return check_hom_jacobi(alg);
  if (axiom == "left-symmetry") return check_left_symmetry(alg);
  if (axiom == "novikov") return check_novikov(alg);
  if (axiom == "multiplicative") return check_multiplicative(alg);
  if (axiom == "shift") return check_shift_identities(alg);
  if (axiom == "mixed") return check_mixed_identity(alg);
  throw Error("unknown axiom " + axiom);
}

Report check_axioms(const Algebra& alg, const std::vector<std::string>& axioms) {
  Report r(alg.name);
  for (const auto& a : axioms) r.merge(check_axiom(alg, a));
  return r;
}

}  // namespace homconf
