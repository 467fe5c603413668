#pragma once

#include <vector>

#include "realmult/integer.hpp"
#include "realmult/polynomial.hpp"

namespace realmult {

// Closed rational interval. For an isolating interval either lo == hi (an
// exact rational root) or lo < hi, neither endpoint is a root, and the
// polynomial changes sign across it.
struct RootInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool exact() const { return lo == hi; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  friend bool operator==(const RootInterval& a, const RootInterval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p);
// Sign variations of the Sturm sequence at x (x must not be a root of p).
int sturm_variations(const std::vector<IntPolynomial>& seq, const Rational& x);
// Number of distinct real roots in the half-open interval (lo, hi].
int count_roots(const std::vector<IntPolynomial>& seq, const Rational& lo, const Rational& hi);
int count_real_roots(const IntPolynomial& p);

// Power of two strictly exceeding every |root|.
Rational root_bound(const IntPolynomial& p);

// Disjoint isolating intervals for the distinct real roots, in increasing order.
std::vector<RootInterval> isolate_real_roots(const IntPolynomial& p);

// Shrinks an isolating interval of a squarefree-or-not p until its width is
// at most max_width. Exact rational roots collapse to a point.
RootInterval refine_root(const IntPolynomial& p, RootInterval iv, const Rational& max_width);

// Whether iv contains exactly one root of p (boundaries included).
bool isolates_one_root(const IntPolynomial& p, const RootInterval& iv);

}  // namespace realmult
