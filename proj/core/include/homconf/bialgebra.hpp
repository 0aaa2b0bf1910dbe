#pragma once

// Coalgebras, dual (co)products, 1-cocycles, bialgebras and coboundary
// cobrackets built from a tensor r.

#include <string>
#include <vector>

#include "homconf/lambda.hpp"
#include "homconf/report.hpp"

namespace homconf {

/// delta[k] is the arity-2 tensor Delta(e_k), extended C[D]-linearly with
/// Delta(D a) = (D1 + D2) Delta(a).
struct Coalgebra {
  std::string name;
  FreeModule module;
  Endomorphism twist;
  std::vector<Tensor> delta;

  std::size_t rank() const { return module.rank(); }
};

/// Zero cobracket on a module.
Coalgebra zero_coalgebra(std::string name, FreeModule module, Endomorphism twist);

/// Delta(x) for an element; parameters other than D pass through.
Tensor apply_coproduct(const Coalgebra& c, const Element& x);
/// Replaces leg `leg` (0-based) of `w` by its coproduct; the arity grows by one.
Tensor apply_coproduct_leg(const Coalgebra& c, const Tensor& w, std::size_t leg);

/// Applies the twist on every leg.
Tensor twist_all_legs(const Endomorphism& alpha, const Tensor& w);

/// (a (x) Delta)Delta - t12 (a (x) Delta)Delta - (Delta (x) a)Delta + t12 (Delta (x) a)Delta per generator.
Report check_coalgebra(const Coalgebra& c);

/// e*_i{M}e*_j = sum_k c_k^{ij}(M, -D-M) e*_k where Delta(e_k) = sum c_k^{ij}(D1, D2) e_i (x) e_j.
Algebra dual_algebra_from_coalgebra(const Coalgebra& c, Kind kind = Kind::LeftSymmetric);

/// delta(e*_k) = sum P_k^{ij}(D1, -D1-D2) e*_i (x) e*_j where e_i{L}e_j = sum P_k^{ij}(L, D) e_k.
Coalgebra dual_coalgebra_from_algebra(const Algebra& alg);

/// (L(x) (x) alpha + alpha (x) ad(x)){param} w on an arity-2 tensor.
Tensor phi_action(const Algebra& alg, const Element& x, const Tensor& w, const Poly& param);

/// delta(alpha([a{L}b])) - phi(a){L}delta(b) + phi(b){-L-D1-D2}delta(a) over basis pairs.
Report check_cocycle(const Algebra& alg, const Coalgebra& c);

/// Both algebras left-symmetric and multiplicative, twist of A* equal to alpha*,
/// both transported coproducts coalgebras and 1-cocycles.
Report check_bialgebra(const Algebra& alg, const Algebra& algstar);

/// alpha (x) alpha (r) == r.
bool is_twist_fixed(const Algebra& alg, const Tensor& r);

/// delta(a) = (L(a) (x) alpha + alpha (x) ad(a)){L} r at L = -D1-D2. Throws TwistFixpointViolated.
Coalgebra coboundary_cobracket(const Algebra& alg, const Tensor& r);

/// Splits r into pure terms r_i (x) l_i with monomial coefficients.
std::vector<std::pair<Element, Element>> pure_terms(const Tensor& r);

/// The five-sum bracket [[r, r]] with each sum's own elimination of M.
Tensor double_bracket(const Algebra& alg, const Tensor& r);

enum class JDeltaReading {
  Corrected,  // second M-sum eliminates M = D3
  Display,    // second M-sum eliminates M = -D3, as displayed
};

/// alpha^3(Q(a){L}[[r,r]] at L = -D1-D2-D3) + M(a) for the basis vector e_a.
/// Throws TwistFixpointViolated.
Tensor j_delta(const Algebra& alg, const Tensor& r, std::size_t a,
               JDeltaReading reading = JDeltaReading::Corrected);

struct CoboundaryVerdict {
  bool coalgebra = false;  // the coboundary cobracket passes check_coalgebra
  bool j_zero = false;     // j_delta vanishes on every generator
  Report report;

  bool agree() const { return coalgebra == j_zero; }
};

/// Computes both verdicts for the coboundary of r and records their agreement.
CoboundaryVerdict check_coboundary_coalgebra(const Algebra& alg, const Tensor& r,
                                             JDeltaReading reading = JDeltaReading::Corrected);

}  // namespace homconf
