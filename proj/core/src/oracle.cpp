#include "homconf/oracle.hpp"

#include <functional>
#include <random>

#include "homconf/axioms.hpp"
#include "homconf/errors.hpp"

namespace homconf {
namespace {

// Dense polynomial in D, lowest degree first.
using UPoly = std::vector<Rational>;

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly add(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Affine expression c + s*D standing for a lambda parameter.
struct Affine {
  Rational c;
  Rational s;
  UPoly dense() const {
    UPoly r{c, s};
    trim(r);
    return r;
  }
};

// p(c + s D) by Horner.
UPoly at_affine(const UPoly& p, const Affine& a) {
  UPoly r;
  UPoly x = a.dense();
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = add(mul(r, x), UPoly{*it});
  trim(r);
  return r;
}

Rational eval(const UPoly& p, const Rational& d) {
  Rational r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * d + *it;
  return r;
}

// Reads a polynomial in D only.
UPoly dense_in_d(const Poly& p) {
  UPoly r;
  for (const auto& t : p.terms()) {
    for (int v = 0; v < kMaxVars; ++v) {
      if (v != Var::d().id() && t.exps[v] != 0) throw Error("oracle expects a polynomial in D");
    }
    std::size_t e = t.exps[Var::d().id()];
    if (r.size() <= e) r.resize(e + 1);
    r[e] += t.coef;
  }
  trim(r);
  return r;
}

using NumElem = std::vector<UPoly>;

struct Engine {
  std::size_t n;
  // entry[i][j][k] as a list of (L-exponent, D-polynomial)
  std::vector<std::vector<std::vector<std::vector<std::pair<int, UPoly>>>>> entry;
  std::vector<std::vector<UPoly>> alpha;

  explicit Engine(const Algebra& alg) : n(alg.rank()) {
    entry.assign(n, std::vector<std::vector<std::vector<std::pair<int, UPoly>>>>(
                        n, std::vector<std::vector<std::pair<int, UPoly>>>(n)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          std::map<int, UPoly> by_l;
          for (const auto& t : alg.product.at(i, j).coeffs[k].terms()) {
            int l = t.exps[Var::lambda().id()];
            std::size_t e = t.exps[Var::d().id()];
            UPoly& u = by_l[l];
            if (u.size() <= e) u.resize(e + 1);
            u[e] += t.coef;
          }
          for (auto& [l, u] : by_l) entry[i][j][k].emplace_back(l, u);
        }
      }
    }
    alpha.assign(n, std::vector<UPoly>(n));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) alpha[r][c] = dense_in_d(alg.alpha.at(r, c));
    }
  }

  NumElem basis(std::size_t i) const {
    NumElem x(n);
    x[i] = {Rational(1)};
    return x;
  }

  NumElem twist(const NumElem& x) const {
    NumElem r(n);
    for (std::size_t row = 0; row < n; ++row) {
      for (std::size_t c = 0; c < n; ++c) r[row] = add(r[row], mul(alpha[row][c], x[c]));
    }
    return r;
  }

  NumElem tw(std::size_t i) const { return twist(basis(i)); }

  // x{p}y = sum x_i(-p) y_j(p + D) P_k^{ij}(p, D) e_k
  NumElem prod(const NumElem& x, const NumElem& y, const Affine& p) const {
    NumElem r(n);
    const Affine neg{-p.c, -p.s};
    const Affine shift{p.c, p.s + 1};
    UPoly pd = p.dense();
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].empty()) continue;
      UPoly xi = at_affine(x[i], neg);
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j].empty()) continue;
        UPoly f = mul(xi, at_affine(y[j], shift));
        for (std::size_t k = 0; k < n; ++k) {
          UPoly e;
          for (const auto& [l, u] : entry[i][j][k]) {
            UPoly pw{Rational(1)};
            for (int q = 0; q < l; ++q) pw = mul(pw, pd);
            e = add(e, mul(pw, u));
          }
          r[k] = add(r[k], mul(f, e));
        }
      }
    }
    return r;
  }
};

NumElem sub(const NumElem& a, const NumElem& b) {
  NumElem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = add(a[i], mul(UPoly{Rational(-1)}, b[i]));
  return r;
}

struct Point {
  Rational l, m, d;
};

using Residual = std::function<NumElem(const Engine&, const Point&, std::size_t, std::size_t, std::size_t)>;

Residual residual_for(const std::string& axiom, int& arity) {
  arity = 3;
  auto A = [](const Rational& c, int s = 0) { return Affine{c, Rational(s)}; };
  if (axiom == "skew") {
    arity = 2;
    return [A](const Engine& e, const Point& p, std::size_t i, std::size_t j, std::size_t) {
      NumElem a = e.prod(e.basis(i), e.basis(j), A(p.l));
      NumElem b = e.prod(e.basis(j), e.basis(i), A(-p.l, -1));
      return sub(a, sub(NumElem(e.n), b));
    };
  }
  if (axiom == "multiplicative") {
    arity = 2;
    return [A](const Engine& e, const Point& p, std::size_t i, std::size_t j, std::size_t) {
      return sub(e.twist(e.prod(e.basis(i), e.basis(j), A(p.l))), e.prod(e.tw(i), e.tw(j), A(p.l)));
    };
  }
  if (axiom == "jacobi") {
    return [A](const Engine& e, const Point& p, std::size_t i, std::size_t j, std::size_t k) {
      NumElem lhs = e.prod(e.tw(i), e.prod(e.basis(j), e.basis(k), A(p.m)), A(p.l));
      NumElem r1 = e.prod(e.prod(e.basis(i), e.basis(j), A(p.l)), e.tw(k), A(p.l + p.m));
      NumElem r2 = e.prod(e.tw(j), e.prod(e.basis(i), e.basis(k), A(p.l)), A(p.m));
      return sub(sub(lhs, r1), r2);
    };
  }
  if (axiom == "left-symmetry") {
    return [A](const Engine& e, const Point& p, std::size_t i, std::size_t j, std::size_t k) {
      NumElem t1 = e.prod(e.prod(e.basis(i), e.basis(j), A(p.l)), e.tw(k), A(p.l + p.m));
      NumElem t2 = e.prod(e.tw(i), e.prod(e.basis(j), e.basis(k), A(p.m)), A(p.l));
      NumElem t3 = e.prod(e.prod(e.basis(j), e.basis(i), A(p.m)), e.tw(k), A(p.l + p.m));
      NumElem t4 = e.prod(e.tw(j), e.prod(e.basis(i), e.basis(k), A(p.l)), A(p.m));
      return sub(sub(t1, t2), sub(t3, t4));
    };
  }
  if (axiom == "novikov") {
    return [A](const Engine& e, const Point& p, std::size_t i, std::size_t j, std::size_t k) {
      NumElem lhs = e.prod(e.prod(e.basis(i), e.basis(j), A(p.l)), e.tw(k), A(p.l + p.m));
      NumElem rhs = e.prod(e.prod(e.basis(i), e.basis(k), A(p.l)), e.tw(j), A(-p.m, -1));
      return sub(lhs, rhs);
    };
  }
  if (axiom == "shift") {
    return [A](const Engine& e, const Point& p, std::size_t i, std::size_t j, std::size_t k) {
      NumElem l1 = e.prod(e.prod(e.basis(i), e.basis(j), A(-p.l, -1)), e.tw(k), A(p.l + p.m));
      NumElem r1 = e.prod(e.prod(e.basis(i), e.basis(j), A(p.m)), e.tw(k), A(p.l + p.m));
      NumElem l2 = e.prod(e.tw(i), e.prod(e.basis(j), e.basis(k), A(-p.l, -1)), A(p.m));
      // the inner parameter is pinned to its value at the sampled outer D
      NumElem r2 = e.prod(e.tw(i), e.prod(e.basis(j), e.basis(k), A(-p.l - p.m - p.d)), A(p.m));
      NumElem out = sub(l1, r1);
      NumElem second = sub(l2, r2);
      for (std::size_t q = 0; q < out.size(); ++q) out[q] = add(out[q], second[q]);
      return out;
    };
  }
  if (axiom == "mixed") {
    return [A](const Engine& e, const Point& p, std::size_t i, std::size_t j, std::size_t k) {
      NumElem t1 = e.prod(e.prod(e.basis(i), e.basis(j), A(p.l)), e.tw(k), A(-p.m, -1));
      NumElem t2 = e.prod(e.tw(i), e.prod(e.basis(j), e.basis(k), A(-p.m, -1)), A(p.l));
      NumElem t3 = e.prod(e.prod(e.basis(j), e.basis(i), A(-p.l, -1)), e.tw(k), A(-p.m, -1));
      NumElem t4 = e.prod(e.tw(j), e.prod(e.basis(i), e.basis(k), A(p.l)), A(-p.m - p.l, -1));
      return sub(sub(t1, t2), sub(t3, t4));
    };
  }
  throw Error("oracle has no rule for axiom " + axiom);
}

}  // namespace

Report oracle_check(const Algebra& alg, const std::string& axiom, int samples, std::uint64_t seed) {
  int arity = 0;
  Residual f = residual_for(axiom, arity);
  Engine e(alg);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-97, 97);
  std::uniform_int_distribution<int> den(1, 13);
  auto draw = [&] {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
  };
  std::vector<Point> points;
  for (int s = 0; s < samples; ++s) points.push_back({draw(), draw(), draw()});

  Report r(alg.name);
  const std::size_t n = alg.rank();
  const std::size_t kmax = arity == 3 ? n : 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < kmax; ++k) {
        Check c{axiom, {alg.module.label(i), alg.module.label(j)}, {}, {}};
        if (arity == 3) c.tuple.push_back(alg.module.label(k));
        for (std::size_t s = 0; s < points.size(); ++s) {
          NumElem v = f(e, points[s], i, j, k);
          for (std::size_t q = 0; q < n; ++q) {
            Rational val = eval(v[q], points[s].d);
            if (val != 0) {
              c.residual.push_back({alg.module.label(q), Poly(val)});
              c.note = "sample " + std::to_string(s);
              break;
            }
          }
          if (!c.residual.empty()) break;
        }
        r.add(std::move(c));
      }
    }
  }
  return r;
}

}  // namespace homconf
