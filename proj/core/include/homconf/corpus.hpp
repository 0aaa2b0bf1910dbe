#pragma once

// Randomized instances for the property suites: certified algebras, broken
// perturbations, modules, matched pairs, dual pairs and r-tensors.

#include <cstdint>
#include <random>
#include <vector>

#include "homconf/bialgebra.hpp"
#include "homconf/constructions.hpp"

namespace homconf {

struct CorpusOptions {
  std::size_t max_rank = 3;
  int max_degree = 2;
  std::uint64_t seed = 1;
};

using Rng = std::mt19937_64;

Rational random_rational(Rng& rng, int span = 5);
/// Random polynomial in `vars` with total degree at most `degree`.
Poly random_poly(Rng& rng, const std::vector<Var>& vars, int degree, int terms = 3);
StructureTable random_table(Rng& rng, std::size_t left, std::size_t right, std::size_t out, int degree,
                            double density = 0.5);

/// Left-symmetric and multiplicative algebras, rank and degree within the options.
/// Built from small finite algebras, their twisted variants and one-parameter
/// families, then moved by a random unimodular change of basis.
std::vector<Algebra> certified_lsc_corpus(std::size_t count, const CorpusOptions& opt);

/// Adds a random polynomial to one structure entry. The result is usually not certified.
Algebra perturb(Rng& rng, const Algebra& alg, int degree);
StructureTable perturb(Rng& rng, StructureTable t, int degree);

/// Modules of `lsc`: regular, zero, random and perturbed regular actions.
std::vector<Representation> lsc_module_instances(Rng& rng, const Algebra& lsc, int degree);
/// Modules of a Lie algebra: adjoint, zero, random and perturbed adjoint actions.
std::vector<Representation> lie_module_instances(Rng& rng, const Algebra& lie, int degree);

/// Matched pairs from splitting semidirect products, random actions and perturbations.
std::vector<LscMatchedPair> lsc_pair_instances(Rng& rng, const Algebra& a, const Algebra& b, int degree);
std::vector<LieMatchedPair> lie_pair_instances(Rng& rng, const Algebra& a, const Algebra& b, int degree);

/// Candidate A* for the dual-pair and bialgebra checks: the zero algebra and
/// `b` on the dual module of `a`, each with the dual twist.
std::vector<Algebra> dual_partner_instances(const Algebra& a, const Algebra& b);

/// r in A (x) A fixed by alpha (x) alpha, entries in D1, D2 of degree at most `degree`.
Tensor random_fixed_tensor(Rng& rng, const Algebra& alg, int degree);

}  // namespace homconf
