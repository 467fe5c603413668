#include "realmult/contfrac.hpp"

#include <unordered_map>

#include "realmult/errors.hpp"
#include "realmult/quadratic_surd.hpp"

namespace realmult {

CFExpansion cf_expand(const AlgebraicReal& theta) {
  QuadraticSurd s = QuadraticSurd::from_algebraic(theta);
  SurdExpansion e = expand_surd(s);
  return {e.preperiod, e.period};
}

std::vector<Integer> cf_digits(const AlgebraicReal& theta, std::size_t count) {
  std::vector<Integer> out;
  AlgebraicReal x = theta;
  for (std::size_t i = 0; i < count; ++i) {
    Integer d = x.floor();
    out.push_back(d);
    AlgebraicReal f = x - AlgebraicReal(x.field(), Rational(d));
    if (f.is_zero()) break;
    x = f.inverse();
  }
  return out;
}

AlgebraicReal cf_value(const CFExpansion& cf) {
  if (cf.period.empty()) throw Error(ErrorCode::InvalidArgument, "empty period");
  // omega = [period...]: q_{k-1} w^2 + (q_{k-2} - p_{k-1}) w - p_{k-2} = 0
  Integer p2 = 0, p1 = 1, q2 = 1, q1 = 0;
  for (const auto& a : cf.period) {
    Integer p = a * p1 + p2, q = a * q1 + q2;
    p2 = p1;
    p1 = p;
    q2 = q1;
    q1 = q;
  }
  IntPolynomial poly({-p2, q2 - p1, q1});
  auto roots = isolate_real_roots(poly);
  if (roots.empty()) throw Error(ErrorCode::Internal, "periodic part has no real fixed point");
  FieldPtr f = RealNumberField::from_root(poly, roots.back());
  AlgebraicReal omega = AlgebraicReal::generator(f);
  // Fold the preperiod from the inside out.
  AlgebraicReal x = omega;
  for (auto it = cf.preperiod.rbegin(); it != cf.preperiod.rend(); ++it) x = AlgebraicReal(f, Rational(*it)) + x.inverse();
  return x;
}

// ---------------------------------------------------------------------------

JPState::JPState(std::vector<AlgebraicReal> theta) {
  if (theta.empty()) throw Error(ErrorCode::InvalidArgument, "Jacobi-Perron state needs at least one component");
  theta_ = to_common_field(theta);
  for (const auto& t : theta_)
    if (t.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "Jacobi-Perron components must be positive");
  // 1, theta_1, ..., theta_{n-1} must be independent over Q.
  const FieldPtr f = theta_.front().field();
  const std::size_t d = static_cast<std::size_t>(f->degree());
  RatMatrix m(theta_.size() + 1, d);
  m(0, 0) = 1;
  for (std::size_t i = 0; i < theta_.size(); ++i) {
    AlgebraicReal t = theta_[i].field()->degree() == 1 && d > 1 ? AlgebraicReal(f, theta_[i].rational_value()) : theta_[i];
    theta_[i] = t;
    for (std::size_t j = 0; j < d; ++j) m(i + 1, j) = t.coords()[j];
  }
  if (rank(m) != theta_.size() + 1)
    throw Error(ErrorCode::DegenerateRational, "components and 1 are linearly dependent over Q");
}

JPState JPState::unchecked(std::vector<AlgebraicReal> theta) {
  JPState s;
  s.theta_ = std::move(theta);
  return s;
}

std::vector<AlgebraicReal> JPState::vector() const {
  std::vector<AlgebraicReal> v;
  v.push_back(AlgebraicReal(field(), Rational(1)));
  for (const auto& t : theta_) v.push_back(t);
  return v;
}

std::string JPState::key() const {
  std::string k;
  for (const auto& t : theta_) {
    k += t.coords_key();
    k += '|';
  }
  return k;
}

std::vector<std::string> JPState::canonical() const {
  std::vector<std::string> out;
  for (const auto& t : theta_) out.push_back(t.to_canonical());
  return out;
}

JPStep jp_step(const JPState& state) {
  const auto& th = state.theta();
  std::vector<Integer> b;
  std::vector<AlgebraicReal> fr;
  for (const auto& t : th) {
    Integer d = t.floor();
    b.push_back(d);
    fr.push_back(t - AlgebraicReal(t.field(), Rational(d)));
  }
  if (fr.front().is_zero()) throw Error(ErrorCode::DegenerateRational, "fractional part of the first component vanished");
  AlgebraicReal inv = fr.front().inverse();
  std::vector<AlgebraicReal> next;
  for (std::size_t i = 1; i < fr.size(); ++i) next.push_back(fr[i] * inv);
  next.push_back(inv);
  return {b, JPState::unchecked(std::move(next))};
}

IntMatrix digit_matrix(const std::vector<Integer>& digits) {
  const std::size_t n = digits.size() + 1;
  IntMatrix b(n, n);
  b(0, n - 1) = 1;
  for (std::size_t i = 1; i < n; ++i) {
    b(i, i - 1) = 1;
    b(i, n - 1) += digits[i - 1];
  }
  return b;
}

const char* to_string(JPStatus s) {
  switch (s) {
    case JPStatus::periodic: return "periodic";
    case JPStatus::not_periodic_within_bound: return "not_periodic_within_bound";
    case JPStatus::degenerate: return "degenerate";
  }
  return "?";
}

JacobiPerronExpansion jp_expand(const JPState& state, std::size_t max_steps) {
  if (max_steps < 1) throw Error(ErrorCode::InvalidArgument, "max_steps must be at least 1");
  JacobiPerronExpansion out;
  out.dimension = state.dimension();
  out.initial = state.theta();
  std::unordered_map<std::string, std::size_t> seen;
  std::vector<JPState> states{state};
  std::vector<std::vector<Integer>> digits;
  seen.emplace(state.key(), 0);
  JPState s = state;
  for (std::size_t k = 0; k < max_steps; ++k) {
    JPStep step;
    try {
      step = jp_step(s);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateRational) throw;
      out.status = JPStatus::degenerate;
      out.preperiod_digits = digits;
      out.steps = k;
      out.note = e.what();
      for (const auto& d : digits) out.digit_matrices.push_back(digit_matrix(d));
      return out;
    }
    digits.push_back(step.digits);
    s = std::move(step.next);
    auto it = seen.find(s.key());
    if (it != seen.end()) {
      const std::size_t start = it->second;
      out.status = JPStatus::periodic;
      out.steps = k + 1;
      out.preperiod_digits.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(start));
      out.period_digits.assign(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end());
      for (const auto& d : digits) out.digit_matrices.push_back(digit_matrix(d));
      IntMatrix a = IntMatrix::identity(out.dimension);
      for (const auto& d : out.period_digits) a = a * digit_matrix(d);
      out.period_matrix = a;
      out.period_state = states[start].theta();
      // Matrix periodicity B_k = B_{k+p}: one more period must replay the digits.
      JPState t = s;
      for (const auto& d : out.period_digits) {
        JPStep again = jp_step(t);
        if (again.digits != d) throw Error(ErrorCode::Internal, "periodic state did not replay its digits");
        t = std::move(again.next);
      }
      return out;
    }
    seen.emplace(s.key(), k + 1);
    states.push_back(s);
  }
  out.status = JPStatus::not_periodic_within_bound;
  out.steps = max_steps;
  out.preperiod_digits = digits;
  for (const auto& d : digits) out.digit_matrices.push_back(digit_matrix(d));
  out.note = "no state repetition within " + std::to_string(max_steps) + " steps";
  return out;
}

std::vector<std::vector<Integer>> jp_digit_stream(const JPState& state, std::size_t count) {
  std::vector<std::vector<Integer>> out;
  JPState s = state;
  for (std::size_t k = 0; k < count; ++k) {
    try {
      JPStep step = jp_step(s);
      out.push_back(step.digits);
      s = std::move(step.next);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateRational) throw;
      break;
    }
  }
  return out;
}

HeckeUnit hecke_unit(const JacobiPerronExpansion& expansion) {
  if (expansion.status != JPStatus::periodic)
    throw Error(ErrorCode::NotPeriodic, std::string("expansion status is ") + to_string(expansion.status));
  HeckeUnit u;
  u.period_matrix = expansion.period_matrix;
  u.char_poly = charpoly(expansion.period_matrix);
  if (abs(u.char_poly.coeff(0)) != 1)
    throw Error(ErrorCode::Internal, "period matrix is not unimodular: constant term " + u.char_poly.coeff(0).get_str());
  u.conjugates = isolate_real_roots(u.char_poly);
  if (u.conjugates.empty()) throw Error(ErrorCode::NoPerronRoot, "characteristic polynomial has no real root");
  u.perron_index = u.conjugates.size() - 1;
  FieldPtr f = RealNumberField::from_root(u.char_poly, u.conjugates.back());
  u.value = AlgebraicReal::generator(f);
  u.min_poly = f->polynomial();
  if (compare(u.value, AlgebraicReal(1)) != Ordering::greater)
    throw Error(ErrorCode::NoPerronRoot, "largest real root of " + to_string(u.char_poly) + " is not above 1");
  return u;
}

AlgebraicReal lambda_in_state_field(const JacobiPerronExpansion& expansion) {
  if (expansion.status != JPStatus::periodic) throw Error(ErrorCode::NotPeriodic, "expansion is not periodic");
  const FieldPtr f = expansion.period_state.front().field();
  AlgebraicReal lambda(f, Rational(expansion.period_matrix(0, 0)));
  for (std::size_t j = 1; j < expansion.dimension; ++j)
    lambda = lambda + AlgebraicReal(f, Rational(expansion.period_matrix(0, j))) * expansion.period_state[j - 1];
  return lambda;
}

bool verify_perron_eigenvector(const IntMatrix& a, const JPState& state, const HeckeUnit& unit) {
  std::vector<AlgebraicReal> all = state.vector();
  const std::size_t n = all.size();
  if (a.rows() != n || a.cols() != n) return false;
  all.push_back(unit.value);
  all = to_common_field(all);
  const AlgebraicReal& lambda = all.back();
  for (std::size_t i = 0; i < n; ++i) {
    AlgebraicReal lhs(lambda.field(), Rational(0));
    for (std::size_t j = 0; j < n; ++j) lhs = lhs + AlgebraicReal(lambda.field(), Rational(a(i, j))) * all[j];
    if (!(lhs - lambda * all[i]).is_zero()) return false;
  }
  return true;
}

ConvergenceReport check_convergence(const JacobiPerronExpansion& expansion, unsigned periods) {
  if (expansion.status != JPStatus::periodic) throw Error(ErrorCode::NotPeriodic, "expansion is not periodic");
  ConvergenceReport rep;
  const std::size_t n = expansion.dimension;
  IntMatrix pre = IntMatrix::identity(n);
  for (const auto& d : expansion.preperiod_digits) pre = pre * digit_matrix(d);
  std::vector<RootInterval> theta;
  for (const auto& t : expansion.initial) theta.push_back(t.enclosure(512));
  IntMatrix m = pre;
  for (unsigned k = 1; k <= periods; ++k) {
    m = m * expansion.period_matrix;
    Rational lo_max = 0, hi_max = 0;
    for (std::size_t i = 1; i < n; ++i) {
      Rational d(m(i, n - 1), m(0, n - 1));
      d.canonicalize();
      const RootInterval& t = theta[i - 1];
      Rational a = abs(d - t.lo), b = abs(d - t.hi);
      Rational lower = t.contains(d) ? Rational(0) : std::min(a, b);
      Rational upper = std::max(a, b);
      if (lower > lo_max) lo_max = lower;
      if (upper > hi_max) hi_max = upper;
    }
    rep.error_lower.push_back(lo_max);
    rep.error_upper.push_back(hi_max);
  }
  rep.monotone = true;
  for (std::size_t k = 1; k < rep.error_upper.size(); ++k)
    if (!(rep.error_upper[k] < rep.error_lower[k - 1])) rep.monotone = false;
  return rep;
}

}  // namespace realmult
