#pragma once

// Small algebras shared by the test suites.

#include <string>
#include <vector>

#include "homconf/lambda.hpp"

namespace fixtures {

using namespace homconf;

inline Element basis(std::size_t n, std::size_t i, const Poly& c = Poly(1)) {
  return Element::basis(n, i, c);
}

inline Algebra zero_algebra(std::size_t n, Kind kind = Kind::LeftSymmetric) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  return make_algebra("zero", FreeModule(labels), StructureTable(n), Endomorphism::identity(n), kind);
}

// a{L}b = d(L) b, everything else zero; alpha = diag(c, 1).
inline Algebra line_action(const Poly& d = lam(), const Rational& c = 1, Kind kind = Kind::LeftSymmetric) {
  StructureTable t(2);
  t.set(0, 1, 1, d);
  return make_algebra("line", FreeModule({"a", "b"}), t,
                      Endomorphism::diagonal({Poly(c), Poly(1)}), kind);
}

// Lie side of the above: [a{L}b] = d(L) b, [b{L}a] = -d(-L-D) b.
inline Algebra line_action_lie(const Poly& d = lam(), const Rational& c = 1) {
  Algebra a = line_action(d, c, Kind::Lie);
  a.product = commutator_table(a.product);
  return a;
}

// [L{L}L] = (D + 2L) E; alpha(L) = f L, alpha(E) = g E.
inline Algebra rank_two_bracket(const Poly& f = 1, const Poly& g = 1, const Poly& coeff = del() + 2 * lam()) {
  StructureTable t(2);
  t.set(0, 0, 1, coeff);
  return make_algebra("brk", FreeModule({"L", "E"}), t, Endomorphism::diagonal({f, g}), Kind::Lie);
}

// Rank one, e{L}e = e.
inline Algebra unit_rank_one(Kind kind = Kind::LeftSymmetric) {
  StructureTable t(1);
  t.set(0, 0, 0, Poly(1));
  return make_algebra("unit", FreeModule({"e"}), t, Endomorphism::identity(1), kind);
}

}  // namespace fixtures
