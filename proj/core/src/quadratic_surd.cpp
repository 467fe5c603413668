#include "realmult/quadratic_surd.hpp"

#include <map>
#include <utility>

#include "realmult/errors.hpp"

namespace realmult {

QuadraticSurd QuadraticSurd::from_algebraic(const AlgebraicReal& theta) {
  IntPolynomial mp = theta.minimal_polynomial();
  if (mp.degree() == 1) throw Error(ErrorCode::DegenerateRational, "value is rational: " + theta.rational_value().get_str());
  if (mp.degree() != 2) throw Error(ErrorCode::WrongDegree, "expected a quadratic irrational, got degree " + std::to_string(mp.degree()));
  const Integer a = mp.coeff(2), b = mp.coeff(1), c = mp.coeff(0);
  const Integer disc = b * b - 4 * a * c;
  // theta is the larger root iff theta > -b/(2a)
  Rational mid(-b, 2 * a);
  mid.canonicalize();
  bool larger = compare(theta, AlgebraicReal(mid)) == Ordering::greater;
  if (larger) return {-b, 2 * a, disc};
  return {b, -2 * a, disc};
}

Integer QuadraticSurd::digit() const {
  const Integer s = isqrt(D);
  if (Q > 0) return floor_div(P + s, Q);
  // (P + sqrt D)/Q with Q < 0: floor = -ceil((P + sqrt D)/|Q|) = -floor((P + s)/|Q|) - 1
  return -floor_div(P + s, -Q) - 1;
}

QuadraticSurd QuadraticSurd::next() const {
  const Integer a = digit();
  const Integer p = a * Q - P;
  const Integer num = D - p * p;
  if (num % Q != 0) throw Error(ErrorCode::Internal, "surd invariant Q | D - P^2 violated");
  return {p, num / Q, D};
}

std::array<Integer, 3> QuadraticSurd::form() const {
  Integer a = Q, b = -2 * P, c = (P * P - D) / Q;
  Integer g = gcd(gcd(a, b), c);
  a /= g;
  b /= g;
  c /= g;
  if (a < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  return {a, b, c};
}

SurdExpansion expand_surd(const QuadraticSurd& s0) {
  SurdExpansion out;
  std::map<std::pair<Integer, Integer>, std::size_t> seen;
  std::vector<QuadraticSurd> states;
  std::vector<Integer> digits;
  QuadraticSurd s = s0;
  while (true) {
    auto key = std::make_pair(s.P, s.Q);
    auto it = seen.find(key);
    if (it != seen.end()) {
      const std::size_t start = it->second;
      out.preperiod.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(start));
      out.period.assign(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end());
      out.cycle.assign(states.begin() + static_cast<std::ptrdiff_t>(start), states.end());
      return out;
    }
    seen.emplace(key, states.size());
    states.push_back(s);
    digits.push_back(s.digit());
    s = s.next();
  }
}

Integer fundamental_discriminant(const Integer& D, Integer& conductor) {
  if (D <= 0 || is_square(D)) throw Error(ErrorCode::InvalidDiscriminant, "discriminant must be positive and not a square: " + D.get_str());
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), D.get_mpz_t(), 4);
  if (r != 0 && r != 1) throw Error(ErrorCode::InvalidDiscriminant, "discriminant must be 0 or 1 mod 4: " + D.get_str());
  conductor = 1;
  Integer dk = D;
  for (const auto& [p, e] : factor_integer(D)) {
    for (int k = 0; k + 1 < e; k += 2) {
      Integer cand = dk / (p * p);
      Integer m;
      mpz_fdiv_r_ui(m.get_mpz_t(), cand.get_mpz_t(), 4);
      if (m == 0 || m == 1) {
        dk = cand;
        conductor *= p;
      }
    }
  }
  return dk;
}

bool is_fundamental_discriminant(const Integer& D) {
  Integer f;
  try {
    return fundamental_discriminant(D, f) == D;
  } catch (const Error&) {
    return false;
  }
}

FieldPtr quadratic_field(const Integer& d) {
  if (d <= 0 || is_square(d)) throw Error(ErrorCode::InvalidArgument, "quadratic field needs a positive non-square: " + d.get_str());
  Integer s = isqrt(d);
  return RealNumberField::create(IntPolynomial({-d, Integer(0), Integer(1)}), RootInterval{Rational(s), Rational(s + 1)});
}

}  // namespace realmult
