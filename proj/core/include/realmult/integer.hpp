#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace realmult {

using Integer = mpz_class;
using Rational = mpq_class;

Integer floor_div(const Integer& a, const Integer& b);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

// Floor of the square root; n must be nonnegative.
Integer isqrt(const Integer& n);
bool is_square(const Integer& n);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
// Returns g = gcd(a, b) and sets s, t with s*a + t*b = g.
Integer gcdext(const Integer& a, const Integer& b, Integer& s, Integer& t);

long to_long(const Integer& n);

std::string to_string(const Integer& n);
// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
// Always "p/q", e.g. "1/1".
std::string to_fraction_string(const Rational& q);

Integer parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);

// Comma separated lists, no spaces required.
std::vector<Integer> parse_integer_list(std::string_view text);
std::vector<Rational> parse_rational_list(std::string_view text);

std::size_t hash_value(const Integer& n);
std::size_t hash_value(const Rational& q);

// Trial-division factorization for desk-scale inputs: (prime, exponent) pairs of |n|.
std::vector<std::pair<Integer, int>> factor_integer(const Integer& n);

}  // namespace realmult
