#pragma once

// High-precision numerics kept behind a narrow interface so the heavy
// multiprecision headers stay in a single translation unit.

#include <complex>
#include <vector>

#include "realmult/polynomial.hpp"

namespace realmult::detail {

// Irreducible factors of a squarefree primitive f (degree >= 1), found by
// grouping numerically computed roots and confirmed by exact division.
// allowed_degree[d] == false rules out a factor of degree d.
std::vector<IntPolynomial> numeric_split(const IntPolynomial& f, const std::vector<bool>& allowed_degree);

// All complex roots of a squarefree f, for reporting and root matching.
std::vector<std::complex<double>> approximate_roots(const IntPolynomial& f);

}  // namespace realmult::detail
