#include "realmult/polynomial.hpp"

#include <sstream>

#include "realmult/errors.hpp"

namespace realmult {

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) c.emplace_back(x);
  return RatPolynomial(std::move(c));
}

Integer content(const IntPolynomial& p) {
  Integer g = 0;
  for (const auto& x : p.coefficients()) g = gcd(g, x);
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<Integer> c = p.coefficients();
  for (auto& x : c) x /= g;
  return IntPolynomial(std::move(c));
}

IntPolynomial primitive_part(const RatPolynomial& p) {
  if (p.is_zero()) return IntPolynomial();
  Integer den = 1;
  for (const auto& x : p.coefficients()) den = lcm(den, x.get_den());
  std::vector<Integer> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) c.emplace_back(x.get_num() * (den / x.get_den()));
  return primitive_part(IntPolynomial(std::move(c)));
}

RatPolynomial monic(const RatPolynomial& p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.leading();
  return inv * p;
}

IntPolynomial derivative(const IntPolynomial& p) {
  std::vector<Integer> c;
  for (int i = 1; i <= p.degree(); ++i) c.emplace_back(p.coeff(i) * i);
  return IntPolynomial(std::move(c));
}

RatPolynomial derivative(const RatPolynomial& p) {
  std::vector<Rational> c;
  for (int i = 1; i <= p.degree(); ++i) c.emplace_back(p.coeff(i) * i);
  return RatPolynomial(std::move(c));
}

Rational evaluate(const IntPolynomial& p, const Rational& x) {
  Rational r = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

Rational evaluate(const RatPolynomial& p, const Rational& x) {
  Rational r = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

int sign_at(const IntPolynomial& p, const Rational& x) { return sgn(evaluate(p, x)); }

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPolynomial(), a};
  std::vector<Rational> r = a.coefficients();
  const int db = b.degree();
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational inv_lead = 1 / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Rational f = r[static_cast<std::size_t>(i)] * inv_lead;
    if (f == 0) continue;
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeff(j);
  }
  r.resize(static_cast<std::size_t>(db));
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

RatPolynomial remainder(const RatPolynomial& a, const RatPolynomial& b) { return divmod(a, b).second; }

RatPolynomial gcd(const RatPolynomial& a_in, const RatPolynomial& b_in) {
  RatPolynomial a = a_in, b = b_in;
  while (!b.is_zero()) {
    RatPolynomial r = remainder(a, b);
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

RatPolynomial xgcd(const RatPolynomial& a, const RatPolynomial& b, RatPolynomial& s, RatPolynomial& t) {
  RatPolynomial r0 = a, r1 = b;
  RatPolynomial s0 = RatPolynomial::constant(1), s1;
  RatPolynomial t0, t1 = RatPolynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPolynomial s2 = s0 - q * s1;
    RatPolynomial t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    s = RatPolynomial();
    t = RatPolynomial();
    return r0;
  }
  Rational inv = 1 / r0.leading();
  s = inv * s0;
  t = inv * t0;
  return inv * r0;
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree part of zero polynomial");
  if (p.degree() <= 0) return IntPolynomial::constant(1);
  RatPolynomial rp = to_rational(p);
  RatPolynomial g = gcd(rp, derivative(rp));
  return primitive_part(divmod(rp, g).first);
}

bool is_squarefree(const IntPolynomial& p) {
  if (p.degree() <= 0) return true;
  RatPolynomial rp = to_rational(p);
  return gcd(rp, derivative(rp)).degree() == 0;
}

std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "exact division by zero polynomial");
  if (a.is_zero()) return IntPolynomial();
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Integer> r = a.coefficients();
  const int db = b.degree();
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db + 1), Integer(0));
  for (int i = a.degree(); i >= db; --i) {
    const Integer& top = r[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t())) return std::nullopt;
    Integer f = top / b.leading();
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeff(j);
  }
  for (int i = 0; i < db; ++i)
    if (r[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  return IntPolynomial(std::move(q));
}

RatPolynomial taylor_shift(const RatPolynomial& p, const Rational& shift) {
  // Horner in the shifted variable.
  RatPolynomial result;
  RatPolynomial lin({shift, Rational(1)});
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) result = result * lin + RatPolynomial::constant(*it);
  return result;
}

IntPolynomial power(const IntPolynomial& p, int e) {
  IntPolynomial r = IntPolynomial::constant(1);
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

namespace {

template <class T>
std::string poly_to_string(const Poly<T>& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    T c = p.coeff(i);
    if (c == 0) continue;
    bool negative = c < 0;
    T mag = negative ? T(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << mag.get_str();
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace

std::string to_string(const IntPolynomial& p, char var) { return poly_to_string(p, var); }
std::string to_string(const RatPolynomial& p, char var) { return poly_to_string(p, var); }

std::string coefficient_list(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (i) out += ",";
    out += p.coefficients()[i].get_str();
  }
  return out;
}

std::vector<std::string> coefficient_strings(const IntPolynomial& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coefficients()) out.push_back(c.get_str());
  return out;
}

}  // namespace realmult
