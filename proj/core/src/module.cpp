#include "homconf/module.hpp"

#include <algorithm>

#include "homconf/errors.hpp"
#include "homconf/linsolve.hpp"

namespace homconf {

FreeModule::FreeModule(std::vector<std::string> basis) : basis_(std::move(basis)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = i + 1; j < basis_.size(); ++j) {
      if (basis_[i] == basis_[j]) throw Error("duplicate basis label " + basis_[i]);
    }
  }
}

std::optional<std::size_t> FreeModule::index_of(const std::string& label) const {
  auto it = std::find(basis_.begin(), basis_.end(), label);
  if (it == basis_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - basis_.begin());
}

FreeModule FreeModule::direct_sum(const FreeModule& other) const {
  auto b = basis_;
  b.insert(b.end(), other.basis_.begin(), other.basis_.end());
  return FreeModule(std::move(b));
}

FreeModule FreeModule::disjoint_sum(const FreeModule& other) const {
  std::vector<std::string> labels = other.basis_;
  for (auto& l : labels) {
    while (index_of(l)) l += "'";
  }
  return direct_sum(FreeModule(labels));
}

FreeModule FreeModule::dual() const {
  std::vector<std::string> b;
  b.reserve(basis_.size());
  for (const auto& l : basis_) {
    // e** is identified with e.
    if (!l.empty() && l.back() == '*') {
      b.push_back(l.substr(0, l.size() - 1));
    } else {
      b.push_back(l + "*");
    }
  }
  return FreeModule(std::move(b));
}

// --- Element ---------------------------------------------------------------

Element Element::basis(std::size_t rank, std::size_t i, const Poly& coef) {
  Element x(rank);
  x.coeffs.at(i) = coef;
  return x;
}

bool Element::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Poly& p) { return p.is_zero(); });
}

std::uint32_t Element::var_mask() const {
  std::uint32_t m = 0;
  for (const auto& c : coeffs) m |= c.var_mask();
  return m;
}

Element& Element::operator+=(const Element& o) {
  if (o.rank() != rank()) throw RankMismatch("element ranks differ");
  for (std::size_t i = 0; i < rank(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (o.rank() != rank()) throw RankMismatch("element ranks differ");
  for (std::size_t i = 0; i < rank(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

Element operator*(const Poly& p, const Element& x) {
  Element r = x;
  for (auto& c : r.coeffs) c = p * c;
  return r;
}

Element Element::substitute(Var target, const Poly& replacement) const {
  Element r = *this;
  for (auto& c : r.coeffs) c = c.substitute(target, replacement);
  return r;
}

Element Element::compose(std::initializer_list<std::pair<Var, Poly>> images) const {
  Element r = *this;
  for (auto& c : r.coeffs) c = c.compose(images);
  return r;
}

std::vector<ResidualComponent> components(const Element& x, const FreeModule& module) {
  std::vector<ResidualComponent> out;
  for (std::size_t i = 0; i < x.rank(); ++i) {
    if (!x.coeffs[i].is_zero()) out.push_back({module.label(i), x.coeffs[i]});
  }
  return out;
}

// --- Endomorphism ----------------------------------------------------------

Endomorphism::Endomorphism(std::vector<std::vector<Poly>> matrix) : m_(std::move(matrix)) {
  for (const auto& row : m_) {
    if (row.size() != m_.size()) throw RankMismatch("endomorphism matrix is not square");
    for (const auto& e : row) {
      if ((e.var_mask() & ~(1U << Var::d().id())) != 0) {
        throw Error("endomorphism entries must be polynomials in D");
      }
    }
  }
}

Endomorphism Endomorphism::identity(std::size_t n) { return scalar(n, 1); }

Endomorphism Endomorphism::scalar(std::size_t n, const Rational& c) {
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Poly(c);
  return Endomorphism(std::move(m));
}

Endomorphism Endomorphism::diagonal(std::vector<Poly> entries) {
  const std::size_t n = entries.size();
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = std::move(entries[i]);
  return Endomorphism(std::move(m));
}

bool Endomorphism::is_identity() const { return *this == identity(rank()); }

Element Endomorphism::image_of_basis(std::size_t j) const {
  Element x(rank());
  for (std::size_t i = 0; i < rank(); ++i) x.coeffs[i] = m_[i][j];
  return x;
}

Endomorphism Endomorphism::compose(const Endomorphism& inner) const {
  if (inner.rank() != rank()) throw RankMismatch("endomorphism ranks differ");
  const std::size_t n = rank();
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) m[i][j] += m_[i][k] * inner.m_[k][j];
    }
  }
  return Endomorphism(std::move(m));
}

Endomorphism Endomorphism::direct_sum(const Endomorphism& other) const {
  const std::size_t n = rank();
  const std::size_t k = other.rank();
  std::vector<std::vector<Poly>> m(n + k, std::vector<Poly>(n + k));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = m_[i][j];
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[n + i][n + j] = other.m_[i][j];
  }
  return Endomorphism(std::move(m));
}

Endomorphism Endomorphism::dual() const {
  const std::size_t n = rank();
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = m_[j][i].compose({{Var::d(), -del()}});
  }
  return Endomorphism(std::move(m));
}

Element apply_endo(const Endomorphism& e, const Element& x) {
  if (e.rank() != x.rank()) throw RankMismatch("endomorphism and element ranks differ");
  Element y(x.rank());
  for (std::size_t i = 0; i < x.rank(); ++i) {
    for (std::size_t j = 0; j < x.rank(); ++j) {
      if (!e.at(i, j).is_zero() && !x.coeffs[j].is_zero()) y.coeffs[i] += e.at(i, j) * x.coeffs[j];
    }
  }
  return y;
}

// --- Tensor ----------------------------------------------------------------

Tensor Tensor::pure(const std::vector<Element>& factors) {
  std::vector<std::size_t> ranks;
  std::vector<std::vector<Poly>> legs;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    ranks.push_back(factors[k].rank());
    std::vector<Poly> c;
    for (const auto& p : factors[k].coeffs) c.push_back(p.substitute(Var::d(), del(static_cast<int>(k) + 1)));
    legs.push_back(std::move(c));
  }
  Tensor t(ranks);
  Index idx(factors.size(), 0);
  // Depth-first over nonzero coefficients.
  auto rec = [&](auto&& self, std::size_t leg, const Poly& acc) -> void {
    if (leg == legs.size()) {
      t.add_to(idx, acc);
      return;
    }
    for (std::size_t i = 0; i < legs[leg].size(); ++i) {
      if (legs[leg][i].is_zero()) continue;
      idx[leg] = i;
      self(self, leg + 1, acc * legs[leg][i]);
    }
  };
  rec(rec, 0, Poly(1));
  return t;
}

Poly Tensor::coeff(const Index& idx) const {
  auto it = entries_.find(idx);
  return it == entries_.end() ? Poly() : it->second;
}

void Tensor::add_to(const Index& idx, const Poly& value) {
  if (idx.size() != ranks_.size()) throw IndexOutOfRange("tensor index has wrong arity");
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= ranks_[k]) throw IndexOutOfRange("tensor index out of range");
  }
  if (value.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(idx, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

std::uint32_t Tensor::var_mask() const {
  std::uint32_t m = 0;
  for (const auto& [idx, c] : entries_) m |= c.var_mask();
  return m;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (o.ranks_ != ranks_) throw RankMismatch("tensor shapes differ");
  for (const auto& [idx, c] : o.entries_) add_to(idx, c);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  if (o.ranks_ != ranks_) throw RankMismatch("tensor shapes differ");
  for (const auto& [idx, c] : o.entries_) add_to(idx, -c);
  return *this;
}

Tensor Tensor::operator-() const {
  Tensor r = *this;
  for (auto& [idx, c] : r.entries_) c = -c;
  return r;
}

Tensor operator*(const Poly& p, const Tensor& t) {
  Tensor r(t.ranks_);
  for (const auto& [idx, c] : t.entries_) r.add_to(idx, p * c);
  return r;
}

Tensor Tensor::substitute(Var target, const Poly& replacement) const {
  Tensor r(ranks_);
  for (const auto& [idx, c] : entries_) r.add_to(idx, c.substitute(target, replacement));
  return r;
}

Tensor Tensor::compose(std::span<const std::pair<Var, Poly>> images) const {
  Tensor r(ranks_);
  for (const auto& [idx, c] : entries_) r.add_to(idx, c.compose(images));
  return r;
}

Tensor Tensor::permute(const std::vector<std::size_t>& perm) const {
  if (perm.size() != arity()) throw IndexOutOfRange("permutation has wrong arity");
  std::vector<std::size_t> ranks(arity());
  std::vector<std::pair<Var, Poly>> rename;
  for (std::size_t k = 0; k < arity(); ++k) {
    ranks[k] = ranks_[perm[k]];
    rename.emplace_back(Var::leg(static_cast<int>(perm[k]) + 1), del(static_cast<int>(k) + 1));
  }
  Tensor r(ranks);
  for (const auto& [idx, c] : entries_) {
    Index out(arity());
    for (std::size_t k = 0; k < arity(); ++k) out[k] = idx[perm[k]];
    r.add_to(out, c.compose(rename));
  }
  return r;
}

std::vector<ResidualComponent> Tensor::components(const std::vector<FreeModule>& modules) const {
  std::vector<ResidualComponent> out;
  for (const auto& [idx, c] : entries_) {
    std::string label;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k != 0) label += "|";
      label += modules.at(k).label(idx[k]);
    }
    out.push_back({label, c});
  }
  return out;
}

Tensor tensor_apply_endo_leg(const Endomorphism& e, const Tensor& w, std::size_t leg) {
  if (leg >= w.arity()) throw IndexOutOfRange("leg index out of range");
  if (e.rank() != w.ranks()[leg]) throw RankMismatch("endomorphism rank differs from leg rank");
  const Poly d_leg = del(static_cast<int>(leg) + 1);
  std::vector<std::vector<Poly>> shifted(e.rank(), std::vector<Poly>(e.rank()));
  for (std::size_t i = 0; i < e.rank(); ++i) {
    for (std::size_t j = 0; j < e.rank(); ++j) shifted[i][j] = e.at(i, j).substitute(Var::d(), d_leg);
  }
  Tensor r(w.ranks());
  for (const auto& [idx, c] : w.entries()) {
    Tensor::Index out = idx;
    for (std::size_t k = 0; k < e.rank(); ++k) {
      const Poly& m = shifted[k][idx[leg]];
      if (m.is_zero()) continue;
      out[leg] = k;
      r.add_to(out, m * c);
    }
  }
  return r;
}

namespace {
void require_lambda(Var param) {
  const auto& a = Alphabet::standard();
  if (param.id() >= a.size() || a.var_class(param) == VarClass::Partial) {
    throw UnknownParameter("not a lambda parameter: " +
                           (param.id() < a.size() ? a.name(param) : std::string("?")));
  }
}
}  // namespace

Tensor eliminate_lambda(const Tensor& w, Var param, const Poly& combo) {
  require_lambda(param);
  return w.substitute(param, combo);
}

Element eliminate_lambda(const Element& x, Var param, const Poly& combo) {
  require_lambda(param);
  return x.substitute(param, combo);
}

Poly total_partial(std::size_t arity) {
  Poly s;
  for (std::size_t k = 1; k <= arity; ++k) s += del(static_cast<int>(k));
  return s;
}

// --- BilinearForm ----------------------------------------------------------

BilinearForm::BilinearForm(std::vector<std::vector<Poly>> matrix) : m_(std::move(matrix)) {
  for (const auto& row : m_) {
    if (row.size() != m_.size()) throw RankMismatch("form matrix is not square");
    for (const auto& e : row) {
      if ((e.var_mask() & ~(1U << Var::lambda().id())) != 0) {
        throw Error("form entries must be polynomials in L");
      }
    }
  }
}

Poly BilinearForm::pair(const Element& x, const Element& y, const Poly& param) const {
  if (x.rank() != rank() || y.rank() != rank()) throw RankMismatch("form and element ranks differ");
  // omega(p(D)v, q(D)w)_t = p(-t) q(t) omega(v, w)_t, evaluated at a fresh t.
  const Var t = fresh_temp(x.var_mask() | y.var_mask() | param.var_mask());
  const Poly tp = Poly::var(t);
  Poly total;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x.coeffs[i].is_zero()) continue;
    Poly xi = x.coeffs[i].substitute(Var::d(), -tp);
    for (std::size_t j = 0; j < rank(); ++j) {
      if (y.coeffs[j].is_zero() || m_[i][j].is_zero()) continue;
      total += xi * y.coeffs[j].substitute(Var::d(), tp) * m_[i][j].substitute(Var::lambda(), tp);
    }
  }
  return total.substitute(t, param);
}

Report check_form_skew(const BilinearForm& w, const FreeModule& module) {
  Report r("form-skew");
  for (std::size_t i = 0; i < w.rank(); ++i) {
    for (std::size_t j = 0; j < w.rank(); ++j) {
      Poly res = w.at(i, j) + w.at(j, i).compose({{Var::lambda(), -lam()}});
      Check c{"form-skew", {module.label(i), module.label(j)}, {}, {}};
      if (!res.is_zero()) c.residual.push_back({"1", res});
      r.add(std::move(c));
    }
  }
  return r;
}

Report check_form_nondegenerate(const BilinearForm& w, const FreeModule& module) {
  (void)module;
  Report r("form-nondegenerate");
  PolyMatrix m(w.rank(), std::vector<Poly>(w.rank()));
  for (std::size_t i = 0; i < w.rank(); ++i) {
    for (std::size_t j = 0; j < w.rank(); ++j) m[i][j] = w.at(i, j).substitute(Var::lambda(), -del());
  }
  Poly det = determinant(m);
  Check c{"nondegenerate", {}, {}, "det = " + to_string(det)};
  // A unit of C[D] is a nonzero constant.
  if (det.is_zero()) {
    c.residual.push_back({"det", Poly(1)});
  } else if (!det.is_constant()) {
    c.residual.push_back({"det", det});
  }
  r.add(std::move(c));
  return r;
}

}  // namespace homconf
