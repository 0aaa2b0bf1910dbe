#pragma once

// Finite free C[D]-modules, their elements, C[D]-linear maps, tensor powers
// and conformal bilinear forms.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homconf/poly.hpp"
#include "homconf/report.hpp"

namespace homconf {

/// Rank-n free C[D]-module with a named basis.
class FreeModule {
 public:
  FreeModule() = default;
  explicit FreeModule(std::vector<std::string> basis);

  std::size_t rank() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  const std::string& label(std::size_t i) const { return basis_.at(i); }
  std::optional<std::size_t> index_of(const std::string& label) const;

  /// Direct sum: basis of *this followed by basis of `other`.
  FreeModule direct_sum(const FreeModule& other) const;
  /// Direct sum that primes labels of `other` until they are unique.
  FreeModule disjoint_sum(const FreeModule& other) const;
  /// Dual module with starred labels `e*`.
  FreeModule dual() const;

  friend bool operator==(const FreeModule&, const FreeModule&) = default;

 private:
  std::vector<std::string> basis_;
};

/// Element sum_i c_i(D, ...) e_i. Coefficients may transiently carry lambda parameters.
struct Element {
  std::vector<Poly> coeffs;

  Element() = default;
  explicit Element(std::size_t rank) : coeffs(rank) {}
  explicit Element(std::vector<Poly> c) : coeffs(std::move(c)) {}

  static Element basis(std::size_t rank, std::size_t i, const Poly& coef = Poly(1));

  std::size_t rank() const { return coeffs.size(); }
  bool is_zero() const;
  std::uint32_t var_mask() const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element operator-() const;
  friend Element operator*(const Poly& p, const Element& x);
  friend bool operator==(const Element&, const Element&) = default;

  /// Applies a substitution to every coefficient.
  Element substitute(Var target, const Poly& replacement) const;
  Element compose(std::initializer_list<std::pair<Var, Poly>> images) const;
};

/// C[D]-linear endomorphism; column j is the image of basis vector j.
class Endomorphism {
 public:
  Endomorphism() = default;
  explicit Endomorphism(std::vector<std::vector<Poly>> matrix);

  static Endomorphism identity(std::size_t n);
  static Endomorphism scalar(std::size_t n, const Rational& c);
  static Endomorphism diagonal(std::vector<Poly> entries);

  std::size_t rank() const { return m_.size(); }
  const Poly& at(std::size_t row, std::size_t col) const { return m_.at(row).at(col); }
  const std::vector<std::vector<Poly>>& matrix() const { return m_; }
  bool is_identity() const;

  Element image_of_basis(std::size_t j) const;
  Endomorphism compose(const Endomorphism& inner) const;
  /// Block-diagonal sum acting on a direct sum.
  Endomorphism direct_sum(const Endomorphism& other) const;
  /// Transpose with D -> -D: the induced map on the conformal dual.
  Endomorphism dual() const;

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  std::vector<std::vector<Poly>> m_;
};

Element apply_endo(const Endomorphism& e, const Element& x);

/// Element of M_1 (x) ... (x) M_m, coefficients in D1..Dm (plus transient parameters).
class Tensor {
 public:
  using Index = std::vector<std::size_t>;

  Tensor() = default;
  explicit Tensor(std::vector<std::size_t> ranks) : ranks_(std::move(ranks)) {}

  /// Pure tensor x_1 (x) ... (x) x_m; the D of x_k becomes D_k.
  static Tensor pure(const std::vector<Element>& factors);

  std::size_t arity() const { return ranks_.size(); }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  const std::map<Index, Poly>& entries() const { return entries_; }
  Poly coeff(const Index& idx) const;
  void add_to(const Index& idx, const Poly& value);
  bool is_zero() const { return entries_.empty(); }
  std::uint32_t var_mask() const;

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  Tensor operator-() const;
  friend Tensor operator*(const Poly& p, const Tensor& t);
  friend bool operator==(const Tensor&, const Tensor&) = default;

  Tensor substitute(Var target, const Poly& replacement) const;
  Tensor compose(std::span<const std::pair<Var, Poly>> images) const;
  /// Reorders legs: leg k of the result is leg perm[k] of *this.
  Tensor permute(const std::vector<std::size_t>& perm) const;

  /// Nonzero entries as residual components labelled `a|b|c`.
  std::vector<ResidualComponent> components(const std::vector<FreeModule>& modules) const;

 private:
  std::vector<std::size_t> ranks_;
  std::map<Index, Poly> entries_;
};

/// Applies `e` on leg `leg` (0-based), reading its D as D_{leg+1}.
Tensor tensor_apply_endo_leg(const Endomorphism& e, const Tensor& w, std::size_t leg);

/// Substitutes a lambda parameter by a combination such as -D1-D2.
Tensor eliminate_lambda(const Tensor& w, Var param, const Poly& combo);
Element eliminate_lambda(const Element& x, Var param, const Poly& combo);

/// D1 + ... + Dm.
Poly total_partial(std::size_t arity);

/// Matrix of omega(e_i, e_j)_L, polynomials in L.
class BilinearForm {
 public:
  BilinearForm() = default;
  explicit BilinearForm(std::vector<std::vector<Poly>> matrix);

  std::size_t rank() const { return m_.size(); }
  const Poly& at(std::size_t i, std::size_t j) const { return m_.at(i).at(j); }
  const std::vector<std::vector<Poly>>& matrix() const { return m_; }

  /// omega(x, y)_p for arbitrary elements and parameter expression p.
  Poly pair(const Element& x, const Element& y, const Poly& param) const;

  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

 private:
  std::vector<std::vector<Poly>> m_;
};

Report check_form_skew(const BilinearForm& w, const FreeModule& module);
Report check_form_nondegenerate(const BilinearForm& w, const FreeModule& module);

/// Labels of the nonzero coefficients of an element.
std::vector<ResidualComponent> components(const Element& x, const FreeModule& module);

}  // namespace homconf
