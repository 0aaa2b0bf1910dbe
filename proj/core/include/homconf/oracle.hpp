#pragma once

// Numeric cross-check of the axiom checkers.
//
// The oracle never touches the symbolic product: it evaluates L and M at
// random rationals, keeps D as a dense univariate polynomial, expands the
// sesquilinear rules directly, and finally evaluates at a random D.

#include <cstdint>
#include <string>

#include "homconf/lambda.hpp"
#include "homconf/report.hpp"

namespace homconf {

/// One check per basis tuple; a nonzero sample is reported as a constant residual.
Report oracle_check(const Algebra& alg, const std::string& axiom, int samples, std::uint64_t seed);

}  // namespace homconf
