#pragma once

// Structure tables and the sesquilinear lambda-product calculus.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "homconf/module.hpp"

namespace homconf {

/// lambda-product data e_i{L}e_j = sum_k P_k^{ij}(L, D) e_k between free modules.
///
/// Only basis pairs are stored; sesquilinearity extends the product to all
/// elements, so it never needs to be stored or checked.
class StructureTable {
 public:
  StructureTable() = default;
  StructureTable(std::size_t left_rank, std::size_t right_rank, std::size_t out_rank);
  /// Square table on one module.
  explicit StructureTable(std::size_t rank) : StructureTable(rank, rank, rank) {}

  std::size_t left_rank() const { return left_; }
  std::size_t right_rank() const { return right_; }
  std::size_t out_rank() const { return out_; }

  /// Entry for the pair (i, j); zero element when absent.
  const Element& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Element value);
  void set(std::size_t i, std::size_t j, std::size_t k, const Poly& value);
  bool is_zero() const;
  int max_degree() const;

  friend bool operator==(const StructureTable& a, const StructureTable& b);

 private:
  std::size_t left_ = 0;
  std::size_t right_ = 0;
  std::size_t out_ = 0;
  std::vector<Element> entries_;  // row-major, left index outer
};

enum class Kind { Lie, LeftSymmetric, Novikov };

std::string to_string(Kind k);
Kind kind_from_string(const std::string& s);

/// Free module + lambda-product + twist alpha. For Kind::Lie the product is the bracket.
struct Algebra {
  std::string name;
  FreeModule module;
  StructureTable product;
  Endomorphism alpha;
  Kind kind = Kind::LeftSymmetric;

  std::size_t rank() const { return module.rank(); }
};

/// Builds an algebra and checks that the table, twist and module agree in rank.
Algebra make_algebra(std::string name, FreeModule module, StructureTable product,
                     Endomorphism alpha, Kind kind);

/// x{p}y for an arbitrary parameter expression p. The D inside p refers to the
/// D of the result, so `p = -M - D` realises x_{-M-D} y.
Element product(const StructureTable& t, const Element& x, const Element& y, const Poly& param);

/// x{param}y where `param` is a fresh variable.
Element lambda_apply(const StructureTable& t, const Element& x, const Element& y, Var param);

/// lambda-action of x on leg `leg` (0-based) of w; the table's right factor is that leg.
Tensor act_on_leg(const StructureTable& t, const Element& x, const Tensor& w, std::size_t leg,
                  const Poly& param);

/// [a{L}b] = a{L}b - b{-L-D}a.
StructureTable commutator_table(const StructureTable& t);

/// Table of R(a){L}m := m{-L-D}a for a square product.
StructureTable right_multiplication_table(const StructureTable& t);

/// Table whose entry (i, j) equals sum over pairs given by a formula with swapped
/// arguments and reparametrised lambda: out(i,j) = in(j,i) at L -> -L-D.
StructureTable swap_arguments(const StructureTable& t);

StructureTable operator+(const StructureTable& a, const StructureTable& b);
StructureTable operator-(const StructureTable& a, const StructureTable& b);
StructureTable scale(const Rational& c, const StructureTable& t);

}  // namespace homconf
