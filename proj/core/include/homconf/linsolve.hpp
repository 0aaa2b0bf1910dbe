#pragma once

#include <vector>

#include "homconf/poly.hpp"

namespace homconf {

using PolyMatrix = std::vector<std::vector<Poly>>;

/// Determinant by cofactor expansion over column subsets. Exact for any entries.
Poly determinant(const PolyMatrix& m);

/// Solves M x = b over the fraction field of Q[v] (other variables in b ride along
/// as coefficients) and returns x when every entry is a polynomial.
///
/// Entries of M must be polynomials in `v` alone. Throws SingularMatrix when
/// det(M) = 0 and NoPolynomialSolution when some x_i has a true denominator.
std::vector<Poly> solve_square_system(const PolyMatrix& m, const std::vector<Poly>& b,
                                      Var v = Var::mu());

}  // namespace homconf
