#include "homconf/lambda.hpp"

#include "homconf/errors.hpp"

namespace homconf {

StructureTable::StructureTable(std::size_t left_rank, std::size_t right_rank, std::size_t out_rank)
    : left_(left_rank),
      right_(right_rank),
      out_(out_rank),
      entries_(left_rank * right_rank, Element(out_rank)) {}

const Element& StructureTable::at(std::size_t i, std::size_t j) const {
  if (i >= left_ || j >= right_) throw IndexOutOfRange("structure table index out of range");
  return entries_[i * right_ + j];
}

void StructureTable::set(std::size_t i, std::size_t j, Element value) {
  if (i >= left_ || j >= right_) throw IndexOutOfRange("structure table index out of range");
  if (value.rank() != out_) throw RankMismatch("structure table entry has wrong rank");
  constexpr std::uint32_t allowed = (1U << Var::lambda().id()) | (1U << Var::d().id());
  if ((value.var_mask() & ~allowed) != 0) {
    throw Error("structure table entries may only use L and D");
  }
  entries_[i * right_ + j] = std::move(value);
}

void StructureTable::set(std::size_t i, std::size_t j, std::size_t k, const Poly& value) {
  Element e = at(i, j);
  if (k >= out_) throw IndexOutOfRange("structure table output index out of range");
  e.coeffs[k] = value;
  set(i, j, std::move(e));
}

bool StructureTable::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

int StructureTable::max_degree() const {
  int d = -1;
  for (const auto& e : entries_) {
    for (const auto& c : e.coeffs) d = std::max(d, c.total_degree());
  }
  return d;
}

bool operator==(const StructureTable& a, const StructureTable& b) {
  return a.left_ == b.left_ && a.right_ == b.right_ && a.out_ == b.out_ && a.entries_ == b.entries_;
}

std::string to_string(Kind k) {
  switch (k) {
    case Kind::Lie:
      return "lie";
    case Kind::LeftSymmetric:
      return "left-symmetric";
    case Kind::Novikov:
      return "novikov";
  }
  return "?";
}

Kind kind_from_string(const std::string& s) {
  if (s == "lie") return Kind::Lie;
  if (s == "left-symmetric" || s == "lsc") return Kind::LeftSymmetric;
  if (s == "novikov") return Kind::Novikov;
  throw Error("unknown algebra kind " + s);
}

Algebra make_algebra(std::string name, FreeModule module, StructureTable product,
                     Endomorphism alpha, Kind kind) {
  const std::size_t n = module.rank();
  if (product.left_rank() != n || product.right_rank() != n || product.out_rank() != n) {
    throw RankMismatch("product table rank differs from module rank");
  }
  if (alpha.rank() != n) throw RankMismatch("twist rank differs from module rank");
  return Algebra{std::move(name), std::move(module), std::move(product), std::move(alpha), kind};
}

Element product(const StructureTable& t, const Element& x, const Element& y, const Poly& param) {
  if (x.rank() != t.left_rank() || y.rank() != t.right_rank()) {
    throw RankMismatch("operands do not match the structure table");
  }
  const Var tv = fresh_temp(x.var_mask() | y.var_mask() | param.var_mask());
  const Poly tp = Poly::var(tv);
  const std::pair<Var, Poly> right_shift[] = {{Var::d(), tp + del()}};
  const std::pair<Var, Poly> left_shift[] = {{Var::d(), -tp}};
  const std::pair<Var, Poly> entry_shift[] = {{Var::lambda(), tp}};

  Element out(t.out_rank());
  for (std::size_t i = 0; i < x.rank(); ++i) {
    if (x.coeffs[i].is_zero()) continue;
    // (f(D) a){t} = f(-t) a{t}
    Poly xi = x.coeffs[i].compose(left_shift);
    for (std::size_t j = 0; j < y.rank(); ++j) {
      if (y.coeffs[j].is_zero()) continue;
      const Element& entry = t.at(i, j);
      if (entry.is_zero()) continue;
      // a{t}(g(D) b) = g(t + D) a{t}b
      Poly factor = xi * y.coeffs[j].compose(right_shift);
      for (std::size_t k = 0; k < t.out_rank(); ++k) {
        if (entry.coeffs[k].is_zero()) continue;
        out.coeffs[k] += factor * entry.coeffs[k].compose(entry_shift);
      }
    }
  }
  if (param == tp) return out;
  for (auto& c : out.coeffs) c = c.substitute(tv, param);
  return out;
}

Element lambda_apply(const StructureTable& t, const Element& x, const Element& y, Var param) {
  if (((x.var_mask() | y.var_mask()) >> param.id()) & 1U) {
    throw ParamCollision("parameter " + Alphabet::standard().name(param) + " occurs in an operand");
  }
  return product(t, x, y, Poly::var(param));
}

Tensor act_on_leg(const StructureTable& t, const Element& x, const Tensor& w, std::size_t leg,
                  const Poly& param) {
  if (leg >= w.arity()) throw IndexOutOfRange("leg index out of range");
  if (w.ranks()[leg] != t.right_rank() || x.rank() != t.left_rank()) {
    throw RankMismatch("leg rank does not match the structure table");
  }
  std::vector<std::size_t> ranks = w.ranks();
  ranks[leg] = t.out_rank();
  const Var dv = Var::leg(static_cast<int>(leg) + 1);
  const Poly dl = Poly::var(dv);
  const Var tv = fresh_temp(x.var_mask() | w.var_mask() | param.var_mask());
  const Poly tp = Poly::var(tv);
  const std::pair<Var, Poly> right_shift[] = {{dv, tp + dl}};
  const std::pair<Var, Poly> left_shift[] = {{Var::d(), -tp}};
  const std::pair<Var, Poly> entry_shift[] = {{Var::lambda(), tp}, {Var::d(), dl}};

  Tensor out(ranks);
  for (const auto& [idx, g] : w.entries()) {
    Poly shifted = g.compose(right_shift);
    for (std::size_t i = 0; i < x.rank(); ++i) {
      if (x.coeffs[i].is_zero()) continue;
      const Element& entry = t.at(i, idx[leg]);
      if (entry.is_zero()) continue;
      Poly factor = x.coeffs[i].compose(left_shift) * shifted;
      Tensor::Index target = idx;
      for (std::size_t k = 0; k < t.out_rank(); ++k) {
        if (entry.coeffs[k].is_zero()) continue;
        target[leg] = k;
        out.add_to(target, factor * entry.coeffs[k].compose(entry_shift));
      }
    }
  }
  if (param == tp) return out;
  return out.substitute(tv, param);
}

StructureTable swap_arguments(const StructureTable& t) {
  StructureTable out(t.right_rank(), t.left_rank(), t.out_rank());
  const std::pair<Var, Poly> flip[] = {{Var::lambda(), -lam() - del()}};
  for (std::size_t i = 0; i < t.right_rank(); ++i) {
    for (std::size_t j = 0; j < t.left_rank(); ++j) {
      Element e = t.at(j, i);
      for (auto& c : e.coeffs) c = c.compose(flip);
      out.set(i, j, std::move(e));
    }
  }
  return out;
}

StructureTable commutator_table(const StructureTable& t) { return t - swap_arguments(t); }

StructureTable right_multiplication_table(const StructureTable& t) { return swap_arguments(t); }

StructureTable operator+(const StructureTable& a, const StructureTable& b) {
  if (a.left_rank() != b.left_rank() || a.right_rank() != b.right_rank() ||
      a.out_rank() != b.out_rank()) {
    throw RankMismatch("structure table shapes differ");
  }
  StructureTable out = a;
  for (std::size_t i = 0; i < a.left_rank(); ++i) {
    for (std::size_t j = 0; j < a.right_rank(); ++j) out.set(i, j, a.at(i, j) + b.at(i, j));
  }
  return out;
}

StructureTable operator-(const StructureTable& a, const StructureTable& b) {
  return a + scale(-1, b);
}

StructureTable scale(const Rational& c, const StructureTable& t) {
  StructureTable out = t;
  for (std::size_t i = 0; i < t.left_rank(); ++i) {
    for (std::size_t j = 0; j < t.right_rank(); ++j) out.set(i, j, Poly(c) * t.at(i, j));
  }
  return out;
}

}  // namespace homconf
