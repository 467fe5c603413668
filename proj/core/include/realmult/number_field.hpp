#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "realmult/integer.hpp"
#include "realmult/polynomial.hpp"
#include "realmult/roots.hpp"

namespace realmult {

class RealNumberField;
using FieldPtr = std::shared_ptr<const RealNumberField>;

// Q(alpha) for a real root alpha of an irreducible primitive integer
// polynomial, selected by an isolating interval.
class RealNumberField {
 public:
  // poly must be irreducible and iv must isolate exactly one of its roots.
  static FieldPtr create(const IntPolynomial& poly, const RootInterval& iv);
  // Accepts any nonzero poly; the irreducible factor vanishing in iv is used.
  static FieldPtr from_root(const IntPolynomial& poly, const RootInterval& iv);
  // The real root of poly with the given index in increasing order.
  static FieldPtr from_root_index(const IntPolynomial& poly, std::size_t index);
  static FieldPtr rationals();

  int degree() const { return poly_.degree(); }
  const IntPolynomial& polynomial() const { return poly_; }
  // The interval fixed at construction; part of the canonical text form.
  const RootInterval& interval() const { return iv_; }
  // Cached refinement of the root enclosure, width <= 2^-bits.
  RootInterval refined(unsigned bits) const;

  // alpha^(d + j) in the power basis, j = 0 .. d-2.
  const std::vector<std::vector<Rational>>& reduction_table() const { return table_; }

  bool same_as(const RealNumberField& other) const;
  double approx_generator() const;

 private:
  RealNumberField(IntPolynomial poly, RootInterval iv);

  IntPolynomial poly_;
  RootInterval iv_;
  std::vector<std::vector<Rational>> table_;
  mutable std::mutex mu_;
  mutable RootInterval cache_;
  mutable unsigned cache_bits_ = 0;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

enum class Ordering { less = -1, equal = 0, greater = 1 };

class AlgebraicReal {
 public:
  AlgebraicReal();  // zero in Q
  AlgebraicReal(const Rational& q);  // NOLINT: rationals embed implicitly
  AlgebraicReal(int q) : AlgebraicReal(Rational(q)) {}  // NOLINT
  AlgebraicReal(FieldPtr field, std::vector<Rational> coords);
  AlgebraicReal(FieldPtr field, const Rational& q);

  static AlgebraicReal generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  // Throws InvalidArgument unless is_rational().
  Rational rational_value() const;

  AlgebraicReal operator-() const;
  friend AlgebraicReal operator+(const AlgebraicReal& a, const AlgebraicReal& b);
  friend AlgebraicReal operator-(const AlgebraicReal& a, const AlgebraicReal& b);
  friend AlgebraicReal operator*(const AlgebraicReal& a, const AlgebraicReal& b);
  friend AlgebraicReal operator/(const AlgebraicReal& a, const AlgebraicReal& b);
  AlgebraicReal inverse() const;
  AlgebraicReal pow(unsigned e) const;

  // Coordinate equality; both operands must share a field (a rational operand
  // is lifted). Use compare() for values in unrelated fields.
  friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b);
  friend bool operator!=(const AlgebraicReal& a, const AlgebraicReal& b) { return !(a == b); }

  int sign() const;
  Integer floor() const;
  AlgebraicReal frac() const { return *this - AlgebraicReal(field_, Rational(floor())); }

  // Rational enclosure of width <= 2^-bits (roughly).
  RootInterval enclosure(unsigned bits) const;
  double approx() const;

  IntPolynomial minimal_polynomial() const;
  int degree() const { return minimal_polynomial().degree(); }

  // This element written in another field, given the image there of this
  // field's generator.
  AlgebraicReal substitute_generator(const AlgebraicReal& image) const;

  std::string to_canonical() const;
  static AlgebraicReal parse(std::string_view text);
  std::string coords_key() const;

 private:
  FieldPtr field_;
  std::vector<Rational> c_;
};

Ordering compare(const AlgebraicReal& x, const AlgebraicReal& y);
inline bool operator<(const AlgebraicReal& x, const AlgebraicReal& y) { return compare(x, y) == Ordering::less; }
inline bool operator>(const AlgebraicReal& x, const AlgebraicReal& y) { return compare(x, y) == Ordering::greater; }
inline bool operator<=(const AlgebraicReal& x, const AlgebraicReal& y) { return compare(x, y) != Ordering::greater; }
inline bool operator>=(const AlgebraicReal& x, const AlgebraicReal& y) { return compare(x, y) != Ordering::less; }
const char* to_string(Ordering o);

Integer floor(const AlgebraicReal& x);
IntPolynomial minimal_polynomial(const AlgebraicReal& x);
AlgebraicReal evaluate(const RatPolynomial& p, const AlgebraicReal& x);
AlgebraicReal evaluate(const IntPolynomial& p, const AlgebraicReal& x);

// Q(alpha, beta) as Q(gamma) with the images of both generators.
struct Compositum {
  FieldPtr field;
  AlgebraicReal alpha;  // image of the first field's generator
  AlgebraicReal beta;   // image of the second field's generator
};

constexpr int kMaxCompositumDegree = 24;

Compositum compositum(const FieldPtr& a, const FieldPtr& b, int max_degree = kMaxCompositumDegree);

// Rewrites all values into one field (identity when they already share one).
std::vector<AlgebraicReal> to_common_field(const std::vector<AlgebraicReal>& xs, int max_degree = kMaxCompositumDegree);

// The field Q(x) generated by x, with x's image in it, when x has the given
// minimal polynomial.
struct Simplified {
  FieldPtr field;
  AlgebraicReal value;
};
Simplified simplify(const AlgebraicReal& x);

}  // namespace realmult
