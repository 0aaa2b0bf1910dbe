#pragma once

// Axiom checkers for Hom-Lie, Hom-left-symmetric and Hom-Novikov conformal algebras.
// Every check quantifies over basis tuples and reports one residual per tuple.

#include <string>
#include <vector>

#include "homconf/lambda.hpp"
#include "homconf/report.hpp"

namespace homconf {

/// [a{L}b] + [b{M}a] at M = -L-D.
Report check_skew(const Algebra& alg);
/// [alpha(a){L}[b{M}c]] - [[a{L}b]{L+M}alpha(c)] - [alpha(b){M}[a{L}c]].
Report check_hom_jacobi(const Algebra& alg);
/// (a{L}b){L+M}alpha(c) - alpha(a){L}(b{M}c) - (b{M}a){L+M}alpha(c) + alpha(b){M}(a{L}c).
Report check_left_symmetry(const Algebra& alg);
/// (a{L}b){L+M}alpha(c) - (a{L}c){-M-D}alpha(b).
Report check_novikov(const Algebra& alg);
/// alpha(a{L}b) - alpha(a){L}alpha(b).
Report check_multiplicative(const Algebra& alg);
/// The two parameter-shift identities that follow from sesquilinearity alone.
Report check_shift_identities(const Algebra& alg);
/// Left symmetry restated with the outer parameter -M-D; equivalent to left symmetry.
Report check_mixed_identity(const Algebra& alg);

/// Names accepted by check_axiom.
const std::vector<std::string>& axiom_names();
/// Axioms checked when none are requested explicitly.
std::vector<std::string> default_axioms(Kind kind);
Report check_axiom(const Algebra& alg, const std::string& axiom);
Report check_axioms(const Algebra& alg, const std::vector<std::string>& axioms);

}  // namespace homconf
