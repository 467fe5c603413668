#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "realmult/integer.hpp"

namespace realmult {

// Dense univariate polynomial, coefficients in ascending degree order. The
// zero polynomial has no coefficients and degree -1; otherwise the leading
// coefficient is nonzero.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }
  Poly(std::initializer_list<T> coefficients) : c_(coefficients) { trim(); }

  static Poly constant(const T& value) { return Poly(std::vector<T>{value}); }
  static Poly monomial(const T& value, int degree) {
    std::vector<T> c(static_cast<std::size_t>(degree) + 1, T(0));
    c.back() = value;
    return Poly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  T coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : T(0); }
  const T& leading() const { return c_.back(); }
  const std::vector<T>& coefficients() const { return c_; }

  Poly operator-() const {
    std::vector<T> c = c_;
    for (auto& x : c) x = -x;
    return Poly(std::move(c));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }

  friend Poly operator*(const T& s, const Poly& a) {
    std::vector<T> c = a.c_;
    for (auto& x : c) x *= s;
    return Poly(std::move(c));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPolynomial = Poly<Integer>;
using RatPolynomial = Poly<Rational>;

RatPolynomial to_rational(const IntPolynomial& p);

Integer content(const IntPolynomial& p);
// Primitive integer polynomial with positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& p);
IntPolynomial primitive_part(const RatPolynomial& p);
RatPolynomial monic(const RatPolynomial& p);

IntPolynomial derivative(const IntPolynomial& p);
RatPolynomial derivative(const RatPolynomial& p);

Rational evaluate(const IntPolynomial& p, const Rational& x);
Rational evaluate(const RatPolynomial& p, const Rational& x);
int sign_at(const IntPolynomial& p, const Rational& x);

// Euclidean division over Q; b must be nonzero.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial remainder(const RatPolynomial& a, const RatPolynomial& b);
// Monic gcd (zero if both inputs are zero).
RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b);
// Returns monic g = gcd(a, b) and sets s, t with s*a + t*b = g.
RatPolynomial xgcd(const RatPolynomial& a, const RatPolynomial& b, RatPolynomial& s, RatPolynomial& t);

// p / gcd(p, p'), primitive.
IntPolynomial squarefree_part(const IntPolynomial& p);
bool is_squarefree(const IntPolynomial& p);

// Quotient a / b when b divides a in Z[x], nullopt otherwise.
std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

// p(x + shift)
RatPolynomial taylor_shift(const RatPolynomial& p, const Rational& shift);

IntPolynomial power(const IntPolynomial& p, int e);

std::string to_string(const IntPolynomial& p, char var = 'x');
std::string to_string(const RatPolynomial& p, char var = 'x');
// Comma separated ascending coefficients, as used by the canonical text forms.
std::string coefficient_list(const IntPolynomial& p);
std::vector<std::string> coefficient_strings(const IntPolynomial& p);

}  // namespace realmult
