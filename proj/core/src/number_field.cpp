#include "realmult/number_field.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "realmult/errors.hpp"
#include "realmult/factor.hpp"
#include "realmult/matrix.hpp"

namespace realmult {

namespace {

Rational pow2_neg(unsigned bits) {
  Rational r(1);
  mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), bits);
  r.canonicalize();
  return r;
}

bool has_root_in(const IntPolynomial& g, const RootInterval& iv) {
  if (iv.exact()) return evaluate(g, iv.lo) == 0;
  if (evaluate(g, iv.lo) == 0) return true;
  auto seq = sturm_sequence(g);
  return count_roots(seq, iv.lo, iv.hi) > 0;
}

}  // namespace

RealNumberField::RealNumberField(IntPolynomial poly, RootInterval iv) : poly_(std::move(poly)), iv_(iv), cache_(iv) {
  const int d = poly_.degree();
  if (d >= 2) {
    std::vector<Rational> top(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) top[static_cast<std::size_t>(i)] = Rational(-poly_.coeff(i), poly_.leading());
    for (auto& x : top) x.canonicalize();
    table_.push_back(top);
    for (int j = 1; j <= d - 2; ++j) {
      const auto& prev = table_.back();
      std::vector<Rational> next(static_cast<std::size_t>(d), Rational(0));
      for (int i = 0; i + 1 < d; ++i) next[static_cast<std::size_t>(i + 1)] = prev[static_cast<std::size_t>(i)];
      const Rational& carry = prev[static_cast<std::size_t>(d - 1)];
      if (carry != 0)
        for (int i = 0; i < d; ++i) next[static_cast<std::size_t>(i)] += carry * top[static_cast<std::size_t>(i)];
      table_.push_back(std::move(next));
    }
  }
}

FieldPtr RealNumberField::create(const IntPolynomial& poly_in, const RootInterval& iv_in) {
  if (poly_in.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "field with zero defining polynomial");
  IntPolynomial poly = primitive_part(poly_in);
  if (poly.degree() < 1) throw Error(ErrorCode::InvalidArgument, "defining polynomial must have positive degree");
  if (poly.degree() > kMaxFactorDegree) throw Error(ErrorCode::DegreeTooLarge, "field degree " + std::to_string(poly.degree()) + " exceeds cap");
  if (!isolates_one_root(poly, iv_in)) throw Error(ErrorCode::InvalidArgument, "interval does not isolate a root of " + to_string(poly));
  if (!is_irreducible(poly)) throw Error(ErrorCode::InvalidArgument, "defining polynomial is reducible: " + to_string(poly));
  RootInterval iv = iv_in;
  if (poly.degree() == 1) {
    Rational r(-poly.coeff(0), poly.coeff(1));
    r.canonicalize();
    iv = {r, r};
  }
  return FieldPtr(new RealNumberField(poly, iv));
}

FieldPtr RealNumberField::from_root(const IntPolynomial& poly, const RootInterval& iv) {
  if (poly.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "field with zero defining polynomial");
  if (!isolates_one_root(poly, iv)) throw Error(ErrorCode::InvalidArgument, "interval does not isolate a root of " + to_string(poly));
  auto fac = factor_over_rationals(poly);
  for (const auto& f : fac.factors)
    if (has_root_in(f.poly, iv)) return create(f.poly, iv);
  throw Error(ErrorCode::Internal, "no factor vanishes in the isolating interval");
}

FieldPtr RealNumberField::from_root_index(const IntPolynomial& poly, std::size_t index) {
  auto roots = isolate_real_roots(poly);
  if (index >= roots.size()) throw Error(ErrorCode::InvalidArgument, "real root index out of range");
  return from_root(poly, roots[index]);
}

FieldPtr RealNumberField::rationals() {
  static const FieldPtr q(new RealNumberField(IntPolynomial({Integer(0), Integer(1)}), RootInterval{0, 0}));
  return q;
}

RootInterval RealNumberField::refined(unsigned bits) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (cache_.exact() || cache_bits_ >= bits) return cache_;
  cache_ = refine_root(poly_, cache_, pow2_neg(bits));
  cache_bits_ = bits;
  return cache_;
}

bool RealNumberField::same_as(const RealNumberField& other) const {
  if (this == &other) return true;
  if (poly_ != other.poly_) return false;
  Rational lo = std::max(iv_.lo, other.iv_.lo);
  Rational hi = std::min(iv_.hi, other.iv_.hi);
  if (lo > hi) return false;
  return has_root_in(poly_, {lo, hi});
}

double RealNumberField::approx_generator() const {
  RootInterval r = refined(64);
  return r.midpoint().get_d();
}

bool same_field(const FieldPtr& a, const FieldPtr& b) { return a == b || a->same_as(*b); }

// ---------------------------------------------------------------------------

namespace {

std::vector<Rational> reduce_coords(const RealNumberField& f, std::vector<Rational> c) {
  const std::size_t d = static_cast<std::size_t>(f.degree());
  if (d == 1) {
    // x is the rational root r; evaluate
    Rational r = f.interval().lo;
    Rational v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * r + *it;
    return {v};
  }
  const auto& table = f.reduction_table();
  for (std::size_t k = c.size(); k-- > d;) {
    if (c[k] == 0) continue;
    // 2d-2 is the last tabulated power; fold higher powers down step by step
    Rational t = c[k];
    c[k] = 0;
    if (k - d < table.size()) {
      const auto& row = table[k - d];
      for (std::size_t i = 0; i < d; ++i) c[i] += t * row[i];
    } else {
      const auto& row = table[0];
      for (std::size_t i = 0; i < d; ++i) c[k - d + i] += t * row[i];
    }
  }
  c.resize(d, Rational(0));
  return c;
}

FieldPtr pick_field(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (same_field(a.field(), b.field())) return a.field();
  if (a.field()->degree() == 1) return b.field();
  if (b.field()->degree() == 1) return a.field();
  throw Error(ErrorCode::FieldMismatch, "operands live in different number fields");
}

AlgebraicReal lift(const AlgebraicReal& x, const FieldPtr& f) {
  if (x.field() == f) return x;
  if (same_field(x.field(), f)) return AlgebraicReal(f, x.coords());
  return AlgebraicReal(f, x.rational_value());
}

}  // namespace

AlgebraicReal::AlgebraicReal() : field_(RealNumberField::rationals()), c_{Rational(0)} {}

AlgebraicReal::AlgebraicReal(const Rational& q) : field_(RealNumberField::rationals()), c_{q} {}

AlgebraicReal::AlgebraicReal(FieldPtr field, std::vector<Rational> coords) : field_(std::move(field)) {
  if (!field_) throw Error(ErrorCode::InvalidArgument, "null field");
  c_ = reduce_coords(*field_, std::move(coords));
}

AlgebraicReal::AlgebraicReal(FieldPtr field, const Rational& q) : field_(std::move(field)) {
  if (!field_) throw Error(ErrorCode::InvalidArgument, "null field");
  c_.assign(static_cast<std::size_t>(field_->degree()), Rational(0));
  c_[0] = q;
}

AlgebraicReal AlgebraicReal::generator(const FieldPtr& field) {
  if (field->degree() == 1) return AlgebraicReal(field, field->interval().lo);
  std::vector<Rational> c(static_cast<std::size_t>(field->degree()), Rational(0));
  c[1] = 1;
  return AlgebraicReal(field, std::move(c));
}

bool AlgebraicReal::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool AlgebraicReal::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational AlgebraicReal::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::InvalidArgument, "element is not rational");
  return c_[0];
}

AlgebraicReal AlgebraicReal::operator-() const {
  std::vector<Rational> c = c_;
  for (auto& x : c) x = -x;
  AlgebraicReal r;
  r.field_ = field_;
  r.c_ = std::move(c);
  return r;
}

AlgebraicReal operator+(const AlgebraicReal& a_in, const AlgebraicReal& b_in) {
  FieldPtr f = pick_field(a_in, b_in);
  AlgebraicReal a = lift(a_in, f), b = lift(b_in, f);
  std::vector<Rational> c = a.c_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
  AlgebraicReal r;
  r.field_ = f;
  r.c_ = std::move(c);
  return r;
}

AlgebraicReal operator-(const AlgebraicReal& a, const AlgebraicReal& b) { return a + (-b); }

AlgebraicReal operator*(const AlgebraicReal& a_in, const AlgebraicReal& b_in) {
  FieldPtr f = pick_field(a_in, b_in);
  AlgebraicReal a = lift(a_in, f), b = lift(b_in, f);
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return AlgebraicReal(f, std::move(c));
}

AlgebraicReal AlgebraicReal::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  if (field_->degree() == 1) return AlgebraicReal(field_, 1 / c_[0]);
  RatPolynomial s, t;
  RatPolynomial g = xgcd(RatPolynomial(c_), to_rational(field_->polynomial()), s, t);
  if (g.degree() != 0) throw Error(ErrorCode::Internal, "non-invertible element in a field");
  return AlgebraicReal(field_, s.coefficients().empty() ? std::vector<Rational>{0} : s.coefficients());
}

AlgebraicReal operator/(const AlgebraicReal& a, const AlgebraicReal& b) {
  FieldPtr f = pick_field(a, b);
  return lift(a, f) * lift(b, f).inverse();
}

AlgebraicReal AlgebraicReal::pow(unsigned e) const {
  AlgebraicReal r(field_, Rational(1));
  AlgebraicReal base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) {
  const bool shared = same_field(a.field(), b.field()) || a.field()->degree() == 1 || b.field()->degree() == 1;
  if (!shared) return compare(a, b) == Ordering::equal;
  FieldPtr f = pick_field(a, b);
  return lift(a, f).c_ == lift(b, f).c_;
}

RootInterval AlgebraicReal::enclosure(unsigned bits) const {
  if (is_rational()) return {c_[0], c_[0]};
  RootInterval iv = field_->refined(bits + 8);
  if (iv.exact()) {
    Rational v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * iv.lo + *it;
    return {v, v};
  }
  // Centered form: |v(t) - v(m)| <= r * sum i |c_i| M^(i-1) on [m - r, m + r].
  Rational m = iv.midpoint();
  Rational r = iv.width() / 2;
  Rational big = std::max(Rational(abs(iv.lo)), Rational(abs(iv.hi)));
  Rational v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * m + *it;
  Rational deriv = 0, mpow = 1;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    deriv += abs(c_[i]) * static_cast<long>(i) * mpow;
    mpow *= big;
  }
  Rational e = r * deriv;
  return {v - e, v + e};
}

int AlgebraicReal::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(c_[0]);
  for (unsigned bits = 32;; bits *= 2) {
    RootInterval e = enclosure(bits);
    if (e.lo > 0) return 1;
    if (e.hi < 0) return -1;
    if (bits > (1u << 20)) throw Error(ErrorCode::Internal, "sign refinement did not terminate");
  }
}

Integer AlgebraicReal::floor() const {
  if (is_rational()) return realmult::floor(c_[0]);
  for (unsigned bits = 32;; bits *= 2) {
    RootInterval e = enclosure(bits);
    Integer a = realmult::floor(e.lo), b = realmult::floor(e.hi);
    if (a == b) return a;
    if (bits > (1u << 20)) throw Error(ErrorCode::Internal, "floor refinement did not terminate");
  }
}

double AlgebraicReal::approx() const {
  RootInterval e = enclosure(64);
  return e.midpoint().get_d();
}

IntPolynomial AlgebraicReal::minimal_polynomial() const {
  if (is_rational()) return primitive_part(RatPolynomial({-c_[0], Rational(1)}));
  const std::size_t d = c_.size();
  std::vector<std::vector<Rational>> powers;
  powers.push_back(AlgebraicReal(field_, Rational(1)).c_);
  AlgebraicReal p(field_, Rational(1));
  for (std::size_t k = 1; k <= d; ++k) {
    p = p * *this;
    RatMatrix m(d, k);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < k; ++j) m(i, j) = powers[j][i];
    auto sol = solve(m, p.c_);
    if (sol) {
      std::vector<Rational> coeffs(k + 1, Rational(0));
      for (std::size_t j = 0; j < k; ++j) coeffs[j] = -(*sol)[j];
      coeffs[k] = 1;
      return primitive_part(RatPolynomial(std::move(coeffs)));
    }
    powers.push_back(p.c_);
  }
  throw Error(ErrorCode::Internal, "minimal polynomial search exceeded field degree");
}

AlgebraicReal AlgebraicReal::substitute_generator(const AlgebraicReal& image) const {
  AlgebraicReal r(image.field(), Rational(0));
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * image + AlgebraicReal(image.field(), *it);
  return r;
}

std::string AlgebraicReal::coords_key() const {
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += c_[i].get_str();
  }
  return s;
}

std::string AlgebraicReal::to_canonical() const {
  return "poly=" + coefficient_list(field_->polynomial()) + ";root=" + to_fraction_string(field_->interval().lo) + "," +
         to_fraction_string(field_->interval().hi) + ";coords=" + coords_key();
}

AlgebraicReal AlgebraicReal::parse(std::string_view text) {
  std::string poly_s, root_s, coords_s;
  bool has_poly = false, has_root = false, has_coords = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t semi = text.find(';', start);
    std::string_view part = text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
    auto eq = part.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorCode::ParseError, "expected key=value in '" + std::string(text) + "'");
    std::string key(part.substr(0, eq));
    while (!key.empty() && key.front() == ' ') key.erase(0, 1);
    std::string value(part.substr(eq + 1));
    if (key == "poly") {
      poly_s = value;
      has_poly = true;
    } else if (key == "root") {
      root_s = value;
      has_root = true;
    } else if (key == "coords") {
      coords_s = value;
      has_coords = true;
    } else {
      throw Error(ErrorCode::ParseError, "unknown key '" + key + "'");
    }
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (!has_poly || !has_root || !has_coords) throw Error(ErrorCode::ParseError, "algebraic real needs poly, root and coords: '" + std::string(text) + "'");
  IntPolynomial poly(parse_integer_list(poly_s));
  if (poly.degree() < 1) throw Error(ErrorCode::ParseError, "defining polynomial must have positive degree");
  auto ends = parse_rational_list(root_s);
  if (ends.size() != 2 || ends[1] < ends[0]) throw Error(ErrorCode::ParseError, "root must be 'lo,hi' with lo <= hi");
  RootInterval iv{ends[0], ends[1]};
  if (!isolates_one_root(poly, iv)) throw Error(ErrorCode::ParseError, "root interval does not isolate exactly one root of " + to_string(poly));
  auto coords = parse_rational_list(coords_s);
  if (coords.empty()) throw Error(ErrorCode::ParseError, "empty coordinate vector");
  FieldPtr field;
  try {
    field = RealNumberField::from_root(poly, iv);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (field->degree() == poly.degree()) return AlgebraicReal(field, std::move(coords));
  // Reducible input: rewrite in the factor that carries the root.
  AlgebraicReal gen = AlgebraicReal::generator(field);
  AlgebraicReal r(field, Rational(0));
  for (auto it = coords.rbegin(); it != coords.rend(); ++it) r = r * gen + AlgebraicReal(field, *it);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t locate_root(const AlgebraicReal& x, const std::vector<RootInterval>& roots) {
  for (unsigned bits = 32;; bits *= 2) {
    RootInterval e = x.enclosure(bits);
    std::size_t hits = 0, idx = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (std::max(e.lo, roots[i].lo) <= std::min(e.hi, roots[i].hi)) {
        ++hits;
        idx = i;
      }
    }
    if (hits == 1) return idx;
    if (hits == 0) throw Error(ErrorCode::Internal, "value is not a root of its minimal polynomial");
    if (bits > (1u << 20)) throw Error(ErrorCode::Internal, "root location did not terminate");
  }
}

}  // namespace

Ordering compare(const AlgebraicReal& x, const AlgebraicReal& y) {
  auto from_sign = [](int s) { return s < 0 ? Ordering::less : (s > 0 ? Ordering::greater : Ordering::equal); };
  if (same_field(x.field(), y.field()) || x.is_rational() || y.is_rational()) {
    if (x.is_rational() && !y.is_rational()) return from_sign(-(y - AlgebraicReal(y.field(), x.rational_value())).sign());
    if (y.is_rational() && !x.is_rational()) return from_sign((x - AlgebraicReal(x.field(), y.rational_value())).sign());
    if (x.is_rational() && y.is_rational()) return from_sign(sgn(x.rational_value() - y.rational_value()));
    return from_sign((x - y).sign());
  }
  IntPolynomial px = x.minimal_polynomial(), py = y.minimal_polynomial();
  if (px != py) {
    for (unsigned bits = 32;; bits *= 2) {
      RootInterval ex = x.enclosure(bits), ey = y.enclosure(bits);
      if (ex.hi < ey.lo) return Ordering::less;
      if (ey.hi < ex.lo) return Ordering::greater;
      if (bits > (1u << 20)) throw Error(ErrorCode::Internal, "comparison did not terminate");
    }
  }
  auto roots = isolate_real_roots(px);
  std::size_t ix = locate_root(x, roots), iy = locate_root(y, roots);
  if (ix == iy) return Ordering::equal;
  return ix < iy ? Ordering::less : Ordering::greater;
}

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::less: return "less";
    case Ordering::equal: return "equal";
    case Ordering::greater: return "greater";
  }
  return "?";
}

Integer floor(const AlgebraicReal& x) { return x.floor(); }
IntPolynomial minimal_polynomial(const AlgebraicReal& x) { return x.minimal_polynomial(); }

AlgebraicReal evaluate(const RatPolynomial& p, const AlgebraicReal& x) {
  AlgebraicReal r(x.field(), Rational(0));
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + AlgebraicReal(x.field(), *it);
  return r;
}

AlgebraicReal evaluate(const IntPolynomial& p, const AlgebraicReal& x) { return evaluate(to_rational(p), x); }

Simplified simplify(const AlgebraicReal& x) {
  IntPolynomial p = x.minimal_polynomial();
  if (p.degree() == x.field()->degree()) return {x.field(), x};
  if (p.degree() == 1) {
    Rational v = x.rational_value();
    return {RealNumberField::rationals(), AlgebraicReal(v)};
  }
  auto roots = isolate_real_roots(p);
  std::size_t idx = locate_root(x, roots);
  FieldPtr f = RealNumberField::create(p, roots[idx]);
  return {f, AlgebraicReal::generator(f)};
}

}  // namespace realmult
