#pragma once

#include <array>
#include <vector>

#include "realmult/integer.hpp"
#include "realmult/number_field.hpp"

namespace realmult {

// (P + sqrt(D)) / Q with D > 0 not a square and Q | D - P^2.
struct QuadraticSurd {
  Integer P;
  Integer Q;
  Integer D;

  // theta must have degree exactly 2 (WrongDegree / DegenerateRational otherwise).
  static QuadraticSurd from_algebraic(const AlgebraicReal& theta);

  Integer digit() const;  // floor of the value
  QuadraticSurd next() const;  // 1 / (value - digit)
  // Primitive (a, b, c) with a*x^2 + b*x + c vanishing at the value, a > 0.
  std::array<Integer, 3> form() const;

  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) { return x.P == y.P && x.Q == y.Q && x.D == y.D; }
};

struct SurdExpansion {
  std::vector<Integer> preperiod;
  std::vector<Integer> period;
  std::vector<QuadraticSurd> cycle;  // states along the period, in order
};

// Exact eventually periodic expansion by state repetition.
SurdExpansion expand_surd(const QuadraticSurd& s);

// D = f^2 * dK with dK fundamental. Requires D = 0,1 mod 4 and D not a square.
Integer fundamental_discriminant(const Integer& D, Integer& conductor);
bool is_fundamental_discriminant(const Integer& D);

// Q(sqrt d) with generator sqrt d (positive root); d > 0 not a square.
FieldPtr quadratic_field(const Integer& d);

}  // namespace realmult
