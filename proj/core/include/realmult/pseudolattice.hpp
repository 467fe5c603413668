#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "realmult/matrix.hpp"
#include "realmult/number_field.hpp"

namespace realmult {

// Z-span of finitely many reals in one number field.
class PseudoLattice {
 public:
  PseudoLattice() = default;

  // Inputs as given (common field), in order.
  const std::vector<AlgebraicReal>& generators() const { return generators_; }
  // Z-basis from the Hermite normal form of the coordinate lattice.
  const std::vector<AlgebraicReal>& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }
  std::size_t input_count() const { return generators_.size(); }
  const FieldPtr& field() const { return field_; }

  // All basis elements divided by the first generator (lambda_1 = 1).
  PseudoLattice normalized() const;
  bool contains(const AlgebraicReal& x) const;

  friend PseudoLattice from_periods(const std::vector<AlgebraicReal>& periods);

 private:
  std::vector<AlgebraicReal> generators_;
  std::vector<AlgebraicReal> basis_;
  FieldPtr field_;
};

PseudoLattice from_periods(const std::vector<AlgebraicReal>& periods);
PseudoLattice scale(const PseudoLattice& m, const AlgebraicReal& mu);
// Integer basis change: new generator i = sum_j u(i, j) * old generator j.
PseudoLattice transform(const PseudoLattice& m, const IntMatrix& u);

bool equals(const PseudoLattice& a, const PseudoLattice& b);

constexpr long kDefaultProportionalityBound = 10;
// mu > 0 with mu * a = b; mu = 1 is preferred when the modules coincide.
std::optional<AlgebraicReal> is_proportional(const PseudoLattice& a, const PseudoLattice& b,
                                             long coefficient_bound = kDefaultProportionalityBound);

struct RMCertificate {
  AlgebraicReal theta;            // lambda_2 / lambda_1 from the basis
  IntPolynomial min_poly;         // of theta, primitive, a > 0
  AlgebraicReal canonical_theta;  // representative on the reduction cycle
  std::array<Integer, 3> canonical_form;  // (a, b, c) of canonical_theta
  Integer D;
  Integer dK;
  Integer f;
};

struct EndomorphismRing {
  bool real_multiplication = false;  // false: End = Z
  int theta_degree = 0;
  std::optional<RMCertificate> certificate;
};

EndomorphismRing endomorphism_ring(const PseudoLattice& m);
RMCertificate rm_certificate(const AlgebraicReal& theta);

// Lexicographically smallest primitive form (a, b, c), a > 0, on the
// reduction cycle of theta's expansion; the value is returned in theta's field.
AlgebraicReal canonical_theta(const AlgebraicReal& theta, std::array<Integer, 3>* form = nullptr);

// Z + Z(lambda_2 / lambda_1) from the first two generators.
PseudoLattice hecke_project(const PseudoLattice& jac);

struct TauResult {
  IntMatrix tau;
  bool asymmetric = false;   // input block was not symmetric
  bool symmetrized = false;  // (T + T^t)/2 was integral and used
};
TauResult tau_truncate(const IntMatrix& t);

struct RMQuadraticCheck {
  bool holds = false;
  IntPolynomial quadratic;  // t12 x^2 + (t11 - t22) x - t12
  AlgebraicReal residual;
};
RMQuadraticCheck rm_quadratic_check(const AlgebraicReal& theta, const IntMatrix& tau);

int cover_degree(int g);

}  // namespace realmult
