#include <sstream>

#include "realmult/errors.hpp"
#include "realmult/factor.hpp"
#include "realmult/quadorder.hpp"
#include "realmult/roots.hpp"

namespace realmult {

namespace {

// a + b sqrt(d); d == 0 marks a plain rational.
struct K {
  Rational a, b;
  Integer d;

  K() = default;
  K(int v) : a(v) {}
  K(const Rational& v) : a(v) {}
  K(Rational x, Rational y, Integer dd) : a(std::move(x)), b(std::move(y)), d(std::move(dd)) {}

  static Integer pick(const Integer& x, const Integer& y) { return x != 0 ? x : y; }

  friend K operator+(const K& x, const K& y) { return K(x.a + y.a, x.b + y.b, pick(x.d, y.d)); }
  friend K operator-(const K& x, const K& y) { return K(x.a - y.a, x.b - y.b, pick(x.d, y.d)); }
  K operator-() const { return K(-a, -b, d); }
  friend K operator*(const K& x, const K& y) {
    Integer dd = pick(x.d, y.d);
    return K(x.a * y.a + x.b * y.b * dd, x.a * y.b + x.b * y.a, dd);
  }
  K& operator+=(const K& y) { return *this = *this + y; }
  K& operator*=(const K& y) { return *this = *this * y; }
  friend bool operator==(const K& x, const K& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator==(const K& x, int v) { return x.a == v && x.b == 0; }

  K conj() const { return K(a, -b, d); }
  Rational norm() const { return a * a - b * b * d; }
  K inverse() const {
    Rational n = norm();
    if (n == 0) throw Error(ErrorCode::Internal, "division by zero in k");
    return K(a / n, -b / n, d);
  }
  std::string str() const {
    if (b == 0) return a.get_str();
    std::string s = a == 0 ? "" : a.get_str() + (b > 0 ? "+" : "");
    return s + b.get_str() + "*sqrt(" + d.get_str() + ")";
  }
};

using KPoly = Poly<K>;

KPoly lift(const IntPolynomial& p, const Integer& d) {
  std::vector<K> c;
  for (const auto& x : p.coefficients()) c.emplace_back(Rational(x), Rational(0), d);
  return KPoly(std::move(c));
}

KPoly monic(const KPoly& p) {
  K inv = p.leading().inverse();
  std::vector<K> c = p.coefficients();
  for (auto& x : c) x *= inv;
  return KPoly(std::move(c));
}

std::pair<KPoly, KPoly> divmod(const KPoly& a, const KPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::Internal, "polynomial division by zero");
  std::vector<K> r = a.coefficients();
  const int db = b.degree();
  const K inv = b.leading().inverse();
  std::vector<K> q(static_cast<std::size_t>(std::max(0, a.degree() - db + 1)), K(0));
  for (int i = a.degree(); i >= db; --i) {
    K t = r[static_cast<std::size_t>(i)] * inv;
    q[static_cast<std::size_t>(i - db)] = t;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] = r[static_cast<std::size_t>(i - db + j)] - t * b.coeff(j);
  }
  return {KPoly(std::move(q)), KPoly(std::move(r))};
}

KPoly gcd(KPoly a, KPoly b) {
  while (!b.is_zero()) {
    KPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : monic(a);
}

// p(x + c)
KPoly shift(const KPoly& p, const K& c) {
  KPoly out;
  const KPoly lin({c, K(1)});
  for (int i = p.degree(); i >= 0; --i) out = out * lin + KPoly::constant(p.coeff(i));
  return out;
}

KPoly conj(const KPoly& p) {
  std::vector<K> c;
  for (const auto& x : p.coefficients()) c.push_back(x.conj());
  return KPoly(std::move(c));
}

// Monic irreducible factors over k of a squarefree polynomial (norm method).
std::vector<KPoly> factor_over_k(const KPoly& f, const Integer& d) {
  for (int s = 0; s <= 40; ++s) {
    const K c(Rational(0), Rational(-s), d);
    KPoly fs = shift(f, c);
    KPoly n = fs * conj(fs);
    std::vector<Rational> rc;
    for (const auto& x : n.coefficients()) {
      if (x.b != 0) throw Error(ErrorCode::Internal, "norm not rational");
      rc.push_back(x.a);
    }
    IntPolynomial N = primitive_part(RatPolynomial(std::move(rc)));
    if (!is_squarefree(N)) continue;
    std::vector<KPoly> out;
    for (const auto& h : factor_over_rationals(N).factors) {
      KPoly g = gcd(f, shift(lift(h.poly, d), -c));
      if (g.degree() > 0) out.push_back(g);
    }
    return out;
  }
  throw Error(ErrorCode::Internal, "no squarefree norm found");
}

bool is_rational_square(const Rational& q) {
  return q >= 0 && is_square(q.get_num()) && is_square(q.get_den());
}

bool is_square_in_k(const K& w, const Integer& d) {
  if (w == 0) return true;
  if (w.b == 0) return is_rational_square(w.a) || is_rational_square(w.a / Rational(d));
  const Rational n = w.norm();
  if (!is_rational_square(n)) return false;
  const Rational m(sqrt(n.get_num()), sqrt(n.get_den()));
  for (const Rational& x2 : {Rational((w.a + m) / 2), Rational((w.a - m) / 2)}) {
    if (x2 == 0 || !is_rational_square(x2)) continue;
    const Rational x(sqrt(x2.get_num()), sqrt(x2.get_den()));
    const K r(x, w.b / (2 * x), d);
    if (r * r == w) return true;
  }
  return false;
}

// Square in k(sqrt(delta)) with delta not a square in k.
bool is_square_in_ext(const K& w, const K& delta, const Integer& d) {
  return is_square_in_k(w, d) || is_square_in_k(w * delta, d);
}

K cubic_disc(const KPoly& g) {
  const K p2 = g.coeff(2), p1 = g.coeff(1), p0 = g.coeff(0);
  return p2 * p2 * p1 * p1 - K(4) * p1 * p1 * p1 - K(4) * p2 * p2 * p2 * p0 - K(27) * p0 * p0 + K(18) * p2 * p1 * p0;
}

std::string poly_str(const KPoly& p) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i <= p.degree(); ++i) os << (i ? ", " : "") << p.coeff(i).str();
  os << "]";
  return os.str();
}

constexpr int kMaxDegreeOverK = kMaxFactorDegree / 2;

}  // namespace

FieldDiagnostics field_diagnostics(const HeckeUnit& unit, const QuadOrder& order, int max_relative_degree) {
  FieldDiagnostics r;
  r.min_poly = unit.min_poly;
  r.degree_over_q = r.min_poly.degree();
  r.k_disc = order.dK;
  const Integer& d = order.dK;
  const int n = r.degree_over_q;
  r.totally_real = count_real_roots(r.min_poly) == n ? Tri::verified : Tri::refuted;

  if (n > kMaxDegreeOverK) {
    r.skipped = true;
    r.skip_reason = "DiagnosticSkipped: degree " + std::to_string(n) + " over Q exceeds " + std::to_string(kMaxDegreeOverK) + " for factoring over k";
    return r;
  }
  std::vector<KPoly> fk = factor_over_k(lift(r.min_poly, d), d);
  r.factored = true;
  for (const auto& g : fk) r.factors_over_k.push_back(poly_str(g));
  r.k_inside = fk.size() > 1;
  // Conjugate factors give isomorphic extensions, so the first one serves.
  const KPoly g = fk.front();
  const int m = g.degree();
  r.relative_degree = m;

  auto set_normal = [&](bool normal, const std::string& group) {
    r.normal = normal ? Tri::verified : Tri::refuted;
    r.abelian = normal ? Tri::verified : Tri::refuted;
    r.galois_group = group;
    if (!normal) r.notes.push_back("K|k is not normal, so it is not an abelian extension");
  };

  if (m == 1) {
    set_normal(true, "C1");
    return r;
  }
  if (m == 2) {
    set_normal(true, "C2");
    return r;
  }
  if (m > max_relative_degree) {
    r.skipped = true;
    r.skip_reason = "DiagnosticSkipped: [K:k] = " + std::to_string(m) + " exceeds " + std::to_string(max_relative_degree);
    return r;
  }
  if (m == 3) {
    const bool sq = is_square_in_k(cubic_disc(g), d);
    set_normal(sq, sq ? "C3" : "S3");
    return r;
  }
  if (m == 4) {
    const K a = g.coeff(3), b = g.coeff(2), c = g.coeff(1), e = g.coeff(0);
    const KPoly R({-(a * a * e - K(4) * b * e + c * c), a * c - K(4) * e, -b, K(1)});
    const K delta = cubic_disc(R);
    std::vector<KPoly> rf = factor_over_k(R, d);
    std::vector<K> roots;
    for (const auto& f : rf)
      if (f.degree() == 1) roots.push_back(-f.coeff(0));
    if (roots.size() == 3) {
      set_normal(true, "V4");
    } else if (roots.empty()) {
      set_normal(false, is_square_in_k(delta, d) ? "A4" : "S4");
    } else {
      const K& t = roots.front();
      const bool c4 = is_square_in_ext(t * t - K(4) * e, delta, d) && is_square_in_ext(a * a - K(4) * (b - t), delta, d);
      set_normal(c4, c4 ? "C4" : "D4");
    }
    return r;
  }
  throw Error(ErrorCode::Internal, "unreachable relative degree");
}

}  // namespace realmult
