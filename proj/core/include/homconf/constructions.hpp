#pragma once

// Builders and condition checkers: current and sub-adjacent algebras,
// symplectic forms, modules, semidirect and bicrossed products, duals,
// matched pairs.

#include <optional>
#include <string>
#include <vector>

#include "homconf/lambda.hpp"
#include "homconf/report.hpp"

namespace homconf {

// --- finite-dimensional input and current algebras ---------------------------

/// Structure constants of an ordinary n-dimensional Hom-algebra: mult[i][j][k] is
/// the coefficient of e_k in e_i e_j; twist[r][c] is the matrix of alpha.
struct FiniteAlgebra {
  std::vector<std::string> basis;
  std::vector<std::vector<std::vector<Rational>>> mult;
  std::vector<std::vector<Rational>> twist;
  Kind kind = Kind::LeftSymmetric;
};

/// Brute-force check of the finite-dimensional axioms of `kind`.
Report check_finite_algebra(const FiniteAlgebra& f);

/// a{L}b = ab. Throws NotCertified when the finite input fails its axioms.
Algebra current_algebra(const FiniteAlgebra& f, std::string name = "cur");

/// The bilinear form omega(p a, q b)_L = p(-L) q(L) w(a, b).
BilinearForm current_form(const std::vector<std::vector<Rational>>& w);

/// Bracket a{L}b - b{-L-D}a. Throws NotCertified when `alg` is not left-symmetric.
Algebra sub_adjacent(const Algebra& alg);

// --- forms -------------------------------------------------------------------

/// omega([a{L}b], alpha(c))_M + omega([b{M-D}c], alpha(a))_{-L} + omega([c{-M}a], alpha(b))_{L-M}.
Report check_form_cyclic(const Algebra& lie, const BilinearForm& w);
/// Skew, nondegenerate and cyclic.
Report check_symplectic(const Algebra& lie, const BilinearForm& w);

/// omega(a{L}b, alpha(c))_M + omega(alpha(b), [a{L}c])_{M-L} over basis triples.
Report check_compatible_product(const Algebra& lsc, const Algebra& lie, const BilinearForm& w);

/// Solves omega(a{L}b, alpha(c))_M = -omega(alpha(b), [a{L}c])_{M-L} for the product.
/// Throws NotCertified, NotInducible or ConstructionInconsistent.
Algebra lsc_from_symplectic(const Algebra& lie, const BilinearForm& w);

/// Subalgebra closure of both parts, symplectic form, isotropic parts.
Report check_parakahler(const Algebra& lie, const std::vector<std::size_t>& first_part,
                        const BilinearForm& w);

// --- modules -----------------------------------------------------------------

/// Action of an algebra on a free module: left(a){L}m and, for left-symmetric
/// algebras, right(a){L}m with m{M}a = right(a){-M-D}m.
struct Representation {
  std::string name;
  FreeModule space;
  Endomorphism beta;
  StructureTable left;
  std::optional<StructureTable> right;

  std::size_t rank() const { return space.rank(); }
};

/// Regular module of an algebra on itself (right action from the product).
Representation regular_representation(const Algebra& alg);
/// Adjoint action of a Lie algebra on itself.
Representation adjoint_representation(const Algebra& lie);

/// [a{L}b]{L+M}beta(v) - alpha(a){L}(b{M}v) + alpha(b){M}(a{L}v).
Report check_lie_module(const Algebra& lie, const Representation& rep);
/// beta(a{L}v) - alpha(a){L}beta(v).
Report check_lie_module_twist(const Algebra& lie, const Representation& rep);

/// [(a+u){L}(b+v)] = [a{L}b] + a{L}v - b{-L-D}u on A + M.
Algebra semidirect_lie(const Algebra& lie, const Representation& rep);

/// Left-symmetry and multiplicativity of the algebra, twist compatibility of
/// both actions, and the left-left and left-right module identities.
Report check_lsc_module(const Algebra& lsc, const Representation& rep);

/// (a+u){L}(b+v) = a{L}b + l(a){L}v + r(b){-L-D}u on A + M.
Algebra semidirect_lsc(const Algebra& lsc, const Representation& rep);

struct DerivedReps {
  Report left;        // l as a module of the sub-adjacent algebra
  Report difference;  // l - r as a module of the sub-adjacent algebra
  Report restricted;  // (M, l - r, 0) as a module of the left-symmetric algebra
};
DerivedReps derived_reps(const Algebra& lsc, const Representation& rep);

/// Action on the conformal dual: (T*(a){L}f){M}u = -f{M-L}(T(a){L}u).
StructureTable dual_action(const StructureTable& t);

enum class SideConditions {
  AlgebraTwist,  // twist placed on the algebra argument, as the dual-module hypotheses state
  Module,  // the module identities of the input representation
};

Report check_dual_side_conditions(const Algebra& lsc, const Representation& rep,
                                  SideConditions mode = SideConditions::AlgebraTwist);

/// (M*, l* - r*, -r*, beta*). Throws SideConditionsFail.
Representation dual_module(const Algebra& lsc, const Representation& rep,
                           SideConditions mode = SideConditions::AlgebraTwist);

// --- matched pairs -------------------------------------------------------------

/// rho: A acts on B (table nA x nB -> nB); sigma: B acts on A.
struct LieMatchedPair {
  Algebra a;
  Algebra b;
  StructureTable rho;
  StructureTable sigma;
};

Report check_matched_pair_lie(const LieMatchedPair& p);
Algebra bicrossed_lie(const LieMatchedPair& p);
/// Reads the pair back from a Lie algebra whose first `k` and remaining basis
/// vectors span subalgebras. Throws NotCertified otherwise.
LieMatchedPair split_lie(const Algebra& lie, std::size_t k);

/// (B, lA, rA) is an A-module and (A, lB, rB) is a B-module.
struct LscMatchedPair {
  Algebra a;
  Algebra b;
  StructureTable la;
  StructureTable ra;
  StructureTable lb;
  StructureTable rb;
};

Report check_matched_pair_lsc(const LscMatchedPair& p);
Algebra bicrossed_lsc(const LscMatchedPair& p);
/// Left-symmetric counterpart of split_lie.
LscMatchedPair split_lsc(const Algebra& lsc, std::size_t k);

struct DualPairVerdict {
  // Both algebras certified left-symmetric, twist of A* is alpha*, and both
  // regular modules satisfy the twist conditions of dual_module_twist_conditions.
  bool hypotheses = false;
  bool lie_pair = false;
  bool lsc_pair = false;
  Report report;

  bool agree() const { return lie_pair == lsc_pair; }
};

/// Lie pair (g(A), g(A*), L*_A, L*_{A*}) against the left-symmetric pair
/// (A, A*, L*_A - R*_A, -R*_A, L*_{A*} - R*_{A*}, -R*_{A*}).
/// alpha(alpha(a){L}m) = a{L}alpha(m) and alpha(m{L}alpha(a)) = alpha(m){L}a on basis pairs,
/// the twist conditions under which dual modules of the regular module are modules.
bool dual_module_twist_conditions(const Algebra& alg);
DualPairVerdict check_dual_pair(const Algebra& a, const Algebra& astar);
LieMatchedPair dual_lie_pair(const Algebra& a, const Algebra& astar);
LscMatchedPair dual_lsc_pair(const Algebra& a, const Algebra& astar);

// --- change of basis -------------------------------------------------------------

/// Transports the algebra along f_i = sum_j U_ji(D) e_j. `inverse` must be U^{-1}.
Algebra change_basis(const Algebra& alg, const Endomorphism& u, const Endomorphism& inverse);

}  // namespace homconf
