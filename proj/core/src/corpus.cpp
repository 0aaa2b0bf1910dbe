#include "homconf/corpus.hpp"

#include <algorithm>
#include <functional>

#include "homconf/axioms.hpp"
#include "homconf/errors.hpp"

namespace homconf {

namespace {

std::vector<std::string> labels(std::size_t n, const std::string& stem = "e") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i + 1));
  return out;
}

Rational nonzero_rational(Rng& rng) {
  std::uniform_int_distribution<int> pick(0, 5);
  static const int vals[] = {1, -1, 2, -2, 3, 1};
  std::uniform_int_distribution<int> den(1, 2);
  Rational q(vals[pick(rng)], den(rng));
  q.canonicalize();
  return q;
}

FiniteAlgebra empty_finite(std::size_t n) {
  FiniteAlgebra f;
  f.basis = labels(n);
  f.mult.assign(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
  f.twist.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) f.twist[i][i] = 1;
  f.kind = Kind::LeftSymmetric;
  return f;
}

// Product alpha(x y) for a diagonal twist: the Hom-deformation of an untwisted algebra.
void deform(FiniteAlgebra& f) {
  const std::size_t n = f.basis.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) f.mult[i][j][k] *= f.twist[k][k];
    }
  }
}

// e1 is a left unit: e1 e_i = e_i; twist diag(1, c2, ...).
FiniteAlgebra left_unit(Rng& rng, std::size_t n, bool twisted) {
  FiniteAlgebra f = empty_finite(n);
  for (std::size_t i = 0; i < n; ++i) f.mult[0][i][i] = 1;
  for (std::size_t i = 1; i < n; ++i) f.twist[i][i] = nonzero_rational(rng);
  if (twisted) deform(f);
  return f;
}

// e1 e1 = e2, e1 e2 = e3; twist diag(c, c^2, c^3).
FiniteAlgebra nilpotent(Rng& rng, std::size_t n, bool twisted) {
  FiniteAlgebra f = empty_finite(n);
  Rational c = nonzero_rational(rng);
  Rational p = c;
  for (std::size_t i = 0; i < n; ++i) {
    f.twist[i][i] = p;
    p *= c;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) f.mult[0][i][i + 1] = 1;
  if (twisted) deform(f);
  return f;
}

// e1 e1 = e1 plus abelian directions with free twist.
FiniteAlgebra idempotent_sum(Rng& rng, std::size_t n) {
  FiniteAlgebra f = empty_finite(n);
  f.mult[0][0][0] = 1;
  for (std::size_t i = 1; i < n; ++i) f.twist[i][i] = nonzero_rational(rng);
  return f;
}

FiniteAlgebra abelian(Rng& rng, std::size_t n) {
  FiniteAlgebra f = empty_finite(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) f.twist[i][j] = i == j ? nonzero_rational(rng) : Rational(0);
  }
  return f;
}

// a{L}b = d(L) b with d free of D.
Algebra one_parameter(Rng& rng, int degree) {
  StructureTable t(2);
  Poly d;
  while (d.is_zero()) d = random_poly(rng, {Var::lambda()}, degree, 3);
  t.set(0, 1, 1, d);
  return make_algebra("ab", FreeModule(labels(2)), t, Endomorphism::identity(2), Kind::LeftSymmetric);
}

// Direct sum of two certified algebras with zero cross products.
Algebra direct_sum(const Algebra& a, const Algebra& b) {
  const std::size_t na = a.rank(), n = a.rank() + b.rank();
  StructureTable t(n);
  for (std::size_t i = 0; i < a.rank(); ++i) {
    for (std::size_t j = 0; j < a.rank(); ++j) {
      for (std::size_t k = 0; k < a.rank(); ++k) t.set(i, j, k, a.product.at(i, j).coeffs[k]);
    }
  }
  for (std::size_t i = 0; i < b.rank(); ++i) {
    for (std::size_t j = 0; j < b.rank(); ++j) {
      for (std::size_t k = 0; k < b.rank(); ++k) t.set(na + i, na + j, na + k, b.product.at(i, j).coeffs[k]);
    }
  }
  return make_algebra("sum", FreeModule(labels(n)), t, a.alpha.direct_sum(b.alpha), Kind::LeftSymmetric);
}

// I + N with N strictly triangular, entries constant or linear in D.
std::pair<Endomorphism, Endomorphism> unimodular(Rng& rng, std::size_t n) {
  std::bernoulli_distribution upper(0.5), keep(0.5);
  std::vector<std::vector<Poly>> nm(n, std::vector<Poly>(n));
  bool up = upper(rng);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((up ? i < j : i > j) && keep(rng)) nm[i][j] = random_poly(rng, {Var::d()}, 1, 1);
    }
  }
  Endomorphism nil(nm);
  Endomorphism id = Endomorphism::identity(n);
  std::vector<std::vector<Poly>> um = id.matrix();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) um[i][j] += nm[i][j];
  }
  // (I + N)^{-1} = sum_k (-N)^k.
  std::vector<std::vector<Poly>> inv = id.matrix();
  Endomorphism power = id;
  for (std::size_t k = 1; k < n; ++k) {
    power = power.compose(nil);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) inv[i][j] += (k % 2 ? Poly(-1) : Poly(1)) * power.at(i, j);
    }
  }
  return {Endomorphism(um), Endomorphism(inv)};
}

int twist_degree(const Endomorphism& e) {
  int d = 0;
  for (const auto& row : e.matrix()) {
    for (const auto& c : row) d = std::max(d, c.total_degree());
  }
  return d;
}

bool certified(const Algebra& a) { return check_axioms(a, {"left-symmetry", "multiplicative"}).passed(); }

}  // namespace

Rational random_rational(Rng& rng, int span) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, 4);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

Poly random_poly(Rng& rng, const std::vector<Var>& vars, int degree, int terms) {
  std::uniform_int_distribution<int> exp(0, std::max(degree, 0));
  std::vector<Poly::Term> out;
  for (int t = 0; t < terms; ++t) {
    Monomial m{};
    int left = degree;
    for (auto v : vars) {
      int e = std::min(left, exp(rng));
      m[v.id()] = static_cast<std::uint8_t>(e);
      left -= e;
    }
    out.push_back({m, random_rational(rng)});
  }
  return Poly::from_terms(std::move(out));
}

StructureTable random_table(Rng& rng, std::size_t left, std::size_t right, std::size_t out, int degree,
                            double density) {
  StructureTable t(left, right, out);
  std::bernoulli_distribution keep(density);
  for (std::size_t i = 0; i < left; ++i) {
    for (std::size_t j = 0; j < right; ++j) {
      for (std::size_t k = 0; k < out; ++k) {
        if (keep(rng)) t.set(i, j, k, random_poly(rng, {Var::lambda(), Var::d()}, degree, 2));
      }
    }
  }
  return t;
}

std::vector<Algebra> certified_lsc_corpus(std::size_t count, const CorpusOptions& opt) {
  Rng rng(opt.seed);
  const std::size_t max_rank = std::max<std::size_t>(opt.max_rank, 1);
  std::uniform_int_distribution<std::size_t> rank_of(1, max_rank);
  std::bernoulli_distribution coin(0.5);
  std::vector<Algebra> out;
  std::size_t family = 0;
  std::size_t attempts = 0;
  while (out.size() < count && attempts < 20 * count + 100) {
    ++attempts;
    std::size_t n = rank_of(rng);
    Algebra a;
    try {
      switch (family++ % 7) {
        case 0:
          a = current_algebra(n == 1 ? idempotent_sum(rng, 1) : left_unit(rng, n, coin(rng)), "lu");
          break;
        case 1:
          a = current_algebra(nilpotent(rng, n, coin(rng)), "nil");
          break;
        case 2:
          a = current_algebra(idempotent_sum(rng, n), "idem");
          break;
        case 3:
          a = current_algebra(abelian(rng, n), "abel");
          break;
        case 4:
          if (max_rank < 2 || opt.max_degree < 1) continue;
          a = one_parameter(rng, std::min(opt.max_degree, 2));
          break;
        case 5: {
          if (max_rank < 2) continue;
          std::size_t left = max_rank >= 3 && coin(rng) ? 2 : 1;
          if (left + 1 > max_rank) left = 1;
          Algebra x = current_algebra(left == 1 ? idempotent_sum(rng, 1) : left_unit(rng, 2, coin(rng)), "x");
          Algebra y = current_algebra(abelian(rng, 1), "y");
          a = direct_sum(x, y);
          break;
        }
        default:
          if (max_rank < 2 || opt.max_degree < 1) continue;
          a = current_algebra(left_unit(rng, 2, true), "lu");
          break;
      }
    } catch (const NotCertified&) {
      continue;
    }
    if (a.rank() > max_rank) continue;
    if (opt.max_degree >= 1 && a.rank() > 1 && coin(rng)) {
      auto [u, inv] = unimodular(rng, a.rank());
      Algebra moved = change_basis(a, u, inv);
      if (moved.product.max_degree() <= opt.max_degree && twist_degree(moved.alpha) <= opt.max_degree) a = moved;
    }
    if (a.product.max_degree() > opt.max_degree || !certified(a)) continue;
    a.name = "c" + std::to_string(out.size()) + "-" + a.name;
    out.push_back(std::move(a));
  }
  return out;
}

StructureTable perturb(Rng& rng, StructureTable t, int degree) {
  std::uniform_int_distribution<std::size_t> li(0, t.left_rank() - 1), ri(0, t.right_rank() - 1),
      oi(0, t.out_rank() - 1);
  std::size_t i = li(rng), j = ri(rng), k = oi(rng);
  Poly extra;
  while (extra.is_zero()) extra = random_poly(rng, {Var::lambda(), Var::d()}, degree, 2);
  Element e = t.at(i, j);
  e.coeffs[k] += extra;
  t.set(i, j, std::move(e));
  return t;
}

Algebra perturb(Rng& rng, const Algebra& alg, int degree) {
  Algebra out = alg;
  out.product = perturb(rng, alg.product, degree);
  out.name = alg.name + "-broken";
  return out;
}

std::vector<Representation> lsc_module_instances(Rng& rng, const Algebra& lsc, int degree) {
  const std::size_t n = lsc.rank();
  std::vector<Representation> out;
  Representation reg = regular_representation(lsc);
  out.push_back(reg);
  for (std::size_t m = 1; m <= 2; ++m) {
    FreeModule v(labels(m, "v"));
    out.push_back({"zero", v, Endomorphism::identity(m), StructureTable(n, m, m), StructureTable(n, m, m)});
    out.push_back({"random", v, Endomorphism::identity(m), random_table(rng, n, m, m, degree, 0.4),
                   random_table(rng, n, m, m, degree, 0.4)});
  }
  out.push_back({"broken-left", reg.space, reg.beta, perturb(rng, reg.left, degree), reg.right});
  out.push_back({"broken-right", reg.space, reg.beta, reg.left, perturb(rng, *reg.right, degree)});
  return out;
}

std::vector<Representation> lie_module_instances(Rng& rng, const Algebra& lie, int degree) {
  const std::size_t n = lie.rank();
  std::vector<Representation> out;
  Representation ad = adjoint_representation(lie);
  out.push_back(ad);
  for (std::size_t m = 1; m <= 2; ++m) {
    FreeModule v(labels(m, "v"));
    out.push_back({"zero", v, Endomorphism::identity(m), StructureTable(n, m, m), std::nullopt});
    out.push_back({"random", v, Endomorphism::identity(m), random_table(rng, n, m, m, degree, 0.4), std::nullopt});
  }
  out.push_back({"broken", ad.space, ad.beta, perturb(rng, ad.left, degree), std::nullopt});
  return out;
}

std::vector<LscMatchedPair> lsc_pair_instances(Rng& rng, const Algebra& a, const Algebra& b, int degree) {
  std::vector<LscMatchedPair> out;
  const std::size_t na = a.rank(), nb = b.rank();
  out.push_back(split_lsc(semidirect_lsc(a, regular_representation(a)), na));
  out.push_back({a, b, StructureTable(na, nb, nb), StructureTable(na, nb, nb), StructureTable(nb, na, na),
                 StructureTable(nb, na, na)});
  out.push_back({a, b, random_table(rng, na, nb, nb, degree, 0.3), random_table(rng, na, nb, nb, degree, 0.3),
                 random_table(rng, nb, na, na, degree, 0.3), random_table(rng, nb, na, na, degree, 0.3)});
  LscMatchedPair broken = out[0];
  switch (rng() % 4) {
    case 0: broken.la = perturb(rng, broken.la, degree); break;
    case 1: broken.ra = perturb(rng, broken.ra, degree); break;
    case 2: broken.lb = perturb(rng, broken.lb, degree); break;
    default: broken.rb = perturb(rng, broken.rb, degree); break;
  }
  out.push_back(broken);
  return out;
}

std::vector<LieMatchedPair> lie_pair_instances(Rng& rng, const Algebra& a, const Algebra& b, int degree) {
  std::vector<LieMatchedPair> out;
  const std::size_t na = a.rank(), nb = b.rank();
  out.push_back(split_lie(semidirect_lie(a, adjoint_representation(a)), na));
  out.push_back({a, b, StructureTable(na, nb, nb), StructureTable(nb, na, na)});
  out.push_back({a, b, random_table(rng, na, nb, nb, degree, 0.3), random_table(rng, nb, na, na, degree, 0.3)});
  LieMatchedPair broken = out[0];
  if (rng() % 2) {
    broken.rho = perturb(rng, broken.rho, degree);
  } else {
    broken.sigma = perturb(rng, broken.sigma, degree);
  }
  out.push_back(broken);
  return out;
}

std::vector<Algebra> dual_partner_instances(const Algebra& a, const Algebra& b) {
  std::vector<Algebra> out;
  Algebra zero = make_algebra(a.name + "*", a.module.dual(), StructureTable(a.rank()), a.alpha.dual(), a.kind);
  out.push_back(zero);
  if (b.rank() == a.rank()) {
    Algebra s = b;
    s.name = b.name + "*";
    s.module = a.module.dual();
    s.alpha = a.alpha.dual();
    out.push_back(s);
  }
  return out;
}

Tensor random_fixed_tensor(Rng& rng, const Algebra& alg, int degree) {
  const std::size_t n = alg.rank();
  Tensor r({n, n});
  std::uniform_int_distribution<std::size_t> ix(0, n - 1);
  for (int t = 0; t < 3; ++t) {
    Tensor cand({n, n});
    cand.add_to({ix(rng), ix(rng)}, random_poly(rng, {Var::leg(1), Var::leg(2)}, degree, 2));
    if (is_twist_fixed(alg, cand)) r += cand;
  }
  return r;
}

}  // namespace homconf
