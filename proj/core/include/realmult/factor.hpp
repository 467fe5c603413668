#pragma once

#include <vector>

#include "realmult/polynomial.hpp"

namespace realmult {

struct PolyFactor {
  IntPolynomial poly;  // primitive, positive leading coefficient, irreducible
  int multiplicity;
};

struct Factorization {
  // p = unit_content * prod(poly^multiplicity)
  Integer unit_content;
  std::vector<PolyFactor> factors;

  IntPolynomial expand() const;
};

constexpr int kMaxFactorDegree = 24;

// Squarefree decomposition: (primitive squarefree g_i, i) with p ~ prod g_i^i.
std::vector<PolyFactor> squarefree_decomposition(const IntPolynomial& p);

// Factors sorted by (degree, coefficients). Squarefree parts above
// kMaxFactorDegree raise DegreeTooLarge.
Factorization factor_over_rationals(const IntPolynomial& p);

bool is_irreducible(const IntPolynomial& p);

// Degrees of the irreducible factors of p modulo a prime (p squarefree mod q).
std::vector<int> distinct_degree_pattern(const IntPolynomial& p, unsigned long q);

}  // namespace realmult
