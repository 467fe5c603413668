#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "realmult/matrix.hpp"
#include "realmult/number_field.hpp"

namespace realmult {

struct CFExpansion {
  std::vector<Integer> preperiod;
  std::vector<Integer> period;
};

// Classical expansion of a quadratic irrational.
CFExpansion cf_expand(const AlgebraicReal& theta);
// First count digits of the classical expansion, computed by exact field steps.
std::vector<Integer> cf_digits(const AlgebraicReal& theta, std::size_t count);
// Value of [d0; d1, ..., d_{k-1}, (period)...] as an algebraic real.
AlgebraicReal cf_value(const CFExpansion& cf);

// (theta_1, ..., theta_{n-1}), positive, in one field, with 1 and the
// components independent over Q.
class JPState {
 public:
  JPState() = default;
  explicit JPState(std::vector<AlgebraicReal> theta);

  std::size_t dimension() const { return theta_.size() + 1; }
  const std::vector<AlgebraicReal>& theta() const { return theta_; }
  const FieldPtr& field() const { return theta_.front().field(); }
  // (1, theta_1, ..., theta_{n-1})
  std::vector<AlgebraicReal> vector() const;
  std::string key() const;
  std::vector<std::string> canonical() const;

  friend bool operator==(const JPState& a, const JPState& b) { return a.theta_ == b.theta_; }

  // Skips positivity and independence checks; used for intermediate states
  // whose validity follows from the step construction.
  static JPState unchecked(std::vector<AlgebraicReal> theta);

 private:
  std::vector<AlgebraicReal> theta_;
};

struct JPStep {
  std::vector<Integer> digits;
  JPState next;
};

JPStep jp_step(const JPState& state);

// First row (0,...,0,1); row i has 1 in column i-1 and b_i in the last column.
IntMatrix digit_matrix(const std::vector<Integer>& digits);

enum class JPStatus { periodic, not_periodic_within_bound, degenerate };
const char* to_string(JPStatus s);

struct JacobiPerronExpansion {
  std::size_t dimension = 0;
  JPStatus status = JPStatus::degenerate;
  std::vector<std::vector<Integer>> preperiod_digits;
  std::vector<std::vector<Integer>> period_digits;
  std::vector<IntMatrix> digit_matrices;  // preperiod then period
  IntMatrix period_matrix;                // product over one period
  std::vector<AlgebraicReal> initial;     // input state
  std::vector<AlgebraicReal> period_state;  // state at the start of the period
  std::size_t steps = 0;
  std::string note;
};

constexpr std::size_t kDefaultMaxJPSteps = 2000;

JacobiPerronExpansion jp_expand(const JPState& state, std::size_t max_steps = kDefaultMaxJPSteps);
// Digit vectors of the first count steps (stops early on a degenerate step).
std::vector<std::vector<Integer>> jp_digit_stream(const JPState& state, std::size_t count);

struct HeckeUnit {
  AlgebraicReal value;  // generator of Q(lambda_A), lambda_A itself
  IntPolynomial char_poly;
  IntPolynomial min_poly;
  std::vector<RootInterval> conjugates;  // real roots of char_poly, increasing
  std::size_t perron_index = 0;          // index of lambda_A in conjugates
  IntMatrix period_matrix;
};

HeckeUnit hecke_unit(const JacobiPerronExpansion& expansion);
// lambda_A written in the field of the expansion's states: sum_j A[0][j] v_j.
AlgebraicReal lambda_in_state_field(const JacobiPerronExpansion& expansion);

// A v = lambda_A v for v = (1, theta...), checked in the compositum of the
// state field and Q(lambda_A).
bool verify_perron_eigenvector(const IntMatrix& A, const JPState& state, const HeckeUnit& unit);

struct ConvergenceReport {
  std::vector<Rational> error_upper;  // per number of periods k = 1..K
  std::vector<Rational> error_lower;
  bool monotone = false;
};

// Distance between the direction of the last column of (preperiod product)*A^k
// and (1, theta...) of the initial state, bounded in interval arithmetic.
ConvergenceReport check_convergence(const JacobiPerronExpansion& expansion, unsigned periods = 5);

}  // namespace realmult
