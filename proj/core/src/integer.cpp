#include "realmult/integer.hpp"

#include <algorithm>
#include <functional>

#include "realmult/errors.hpp"

namespace realmult {

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "isqrt of negative number");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer gcdext(const Integer& a, const Integer& b, Integer& s, Integer& t) {
  Integer g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

long to_long(const Integer& n) {
  if (!n.fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "integer out of range: " + n.get_str());
  return n.get_si();
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

template <class T, class F>
std::vector<T> parse_list(std::string_view text, F parse_one) {
  std::vector<T> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parse_one(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  text = trim(text);
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  Integer n;
  if (s.empty() || n.set_str(s, 10) != 0) throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
  return n;
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator: '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::vector<Integer> parse_integer_list(std::string_view text) {
  return parse_list<Integer>(text, [](std::string_view s) { return parse_integer(s); });
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  return parse_list<Rational>(text, [](std::string_view s) { return parse_rational(s); });
}

std::size_t hash_value(const Integer& n) {
  return std::hash<std::string>{}(n.get_str(16));
}

std::size_t hash_value(const Rational& q) {
  return hash_value(q.get_num()) * 1000003u ^ hash_value(q.get_den());
}

std::vector<std::pair<Integer, int>> factor_integer(const Integer& n_in) {
  std::vector<std::pair<Integer, int>> out;
  Integer n = abs(n_in);
  if (n <= 1) return out;
  auto pull = [&](const Integer& p) {
    int e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  pull(2);
  pull(3);
  const unsigned long limit = 20000000ul;
  for (unsigned long p = 5; p <= limit; p += 6) {
    if (Integer(p) * p > n) break;
    pull(Integer(p));
    pull(Integer(p + 2));
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
      out.emplace_back(n, 1);
    } else if (is_square(n) && mpz_probab_prime_p(isqrt(n).get_mpz_t(), 40) != 0) {
      out.emplace_back(isqrt(n), 2);
    } else {
      throw Error(ErrorCode::DegreeTooLarge, "integer beyond trial-division range: " + n_in.get_str());
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace realmult
