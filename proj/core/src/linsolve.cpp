#include "homconf/linsolve.hpp"

#include <unordered_map>

#include "homconf/errors.hpp"

namespace homconf {

namespace {

// det of rows [row, n) restricted to the columns in `cols` (bitmask).
Poly minor_det(const PolyMatrix& m, std::size_t row, std::uint32_t cols,
               std::unordered_map<std::uint32_t, Poly>& memo) {
  const std::size_t n = m.size();
  if (row == n) return Poly(1);
  if (auto it = memo.find(cols); it != memo.end()) return it->second;
  Poly total;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (((cols >> c) & 1U) == 0) continue;
    if (!m[row][c].is_zero()) {
      Poly sub = minor_det(m, row + 1, cols & ~(1U << c), memo);
      Poly term = m[row][c] * sub;
      if (sign > 0) {
        total += term;
      } else {
        total -= term;
      }
    }
    sign = -sign;
  }
  memo.emplace(cols, total);
  return total;
}

}  // namespace

Poly determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw RankMismatch("determinant of a non-square matrix");
  }
  if (n > 20) throw Error("matrix too large for cofactor expansion");
  std::unordered_map<std::uint32_t, Poly> memo;
  return minor_det(m, 0, (n == 0) ? 0U : ((1U << n) - 1U), memo);
}

std::vector<Poly> solve_square_system(const PolyMatrix& m, const std::vector<Poly>& b, Var v) {
  const std::size_t n = m.size();
  if (b.size() != n) throw RankMismatch("right-hand side length differs from matrix size");
  for (const auto& row : m) {
    for (const auto& e : row) {
      if ((e.var_mask() & ~(1U << v.id())) != 0) {
        throw Error("solve_square_system: matrix entries must be univariate");
      }
    }
  }
  Poly det = determinant(m);
  if (det.is_zero()) throw SingularMatrix();

  // Cramer: x_i = det(M with column i replaced by b) / det(M).
  std::vector<Poly> x;
  x.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    PolyMatrix mi = m;
    for (std::size_t r = 0; r < n; ++r) mi[r][i] = b[r];
    auto q = determinant(mi).divide_univariate(det, v);
    if (!q) throw NoPolynomialSolution();
    x.push_back(std::move(*q));
  }
  return x;
}

}  // namespace homconf
