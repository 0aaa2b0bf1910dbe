#pragma once

#include <random>

#include "homconf/lambda.hpp"
#include "random_poly.hpp"

namespace fixtures {

// Arbitrary (uncertified) table with entries in L, D of total degree <= degree.
inline homconf::StructureTable random_table(std::mt19937_64& rng, std::size_t left, std::size_t right,
                                            std::size_t out, int degree, double density = 0.5) {
  using namespace homconf;
  StructureTable t(left, right, out);
  std::bernoulli_distribution keep(density);
  for (std::size_t i = 0; i < left; ++i) {
    for (std::size_t j = 0; j < right; ++j) {
      for (std::size_t k = 0; k < out; ++k) {
        if (keep(rng)) t.set(i, j, k, random_poly(rng, {Var::lambda(), Var::d()}, degree, 2));
      }
    }
  }
  return t;
}

inline homconf::Element random_element(std::mt19937_64& rng, std::size_t rank, int degree) {
  using namespace homconf;
  Element x(rank);
  for (auto& c : x.coeffs) c = random_poly(rng, {Var::d()}, degree, 2);
  return x;
}

}  // namespace fixtures
