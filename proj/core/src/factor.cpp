#include "realmult/factor.hpp"

#include <algorithm>

#include "numeric.hpp"
#include "realmult/errors.hpp"

namespace realmult {

IntPolynomial Factorization::expand() const {
  IntPolynomial r = IntPolynomial::constant(unit_content);
  for (const auto& f : factors) r = r * power(f.poly, f.multiplicity);
  return r;
}

std::vector<PolyFactor> squarefree_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree decomposition of zero polynomial");
  std::vector<PolyFactor> out;
  if (p.degree() <= 0) return out;
  // Yun's algorithm over Q.
  RatPolynomial a = to_rational(p);
  RatPolynomial da = derivative(a);
  RatPolynomial b = gcd(a, da);
  RatPolynomial c = divmod(a, b).first;
  RatPolynomial d = divmod(da, b).first - derivative(c);
  for (int i = 1; c.degree() > 0; ++i) {
    RatPolynomial ai = gcd(c, d);
    c = divmod(c, ai).first;
    d = divmod(d, ai).first - derivative(c);
    if (ai.degree() > 0) out.push_back({primitive_part(ai), i});
  }
  return out;
}

namespace {

using ModPoly = std::vector<unsigned long>;

void mtrim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned long inv_mod(unsigned long a, unsigned long q) {
  // q prime
  unsigned long r = 1, base = a % q, e = q - 2;
  while (e) {
    if (e & 1) r = r * base % q;
    base = base * base % q;
    e >>= 1;
  }
  return r;
}

ModPoly mmod(ModPoly a, const ModPoly& f, unsigned long q) {
  mtrim(a);
  const std::size_t df = f.size() - 1;
  const unsigned long inv = inv_mod(f.back(), q);
  while (a.size() >= f.size()) {
    unsigned long c = a.back() * inv % q;
    const std::size_t shift = a.size() - f.size();
    for (std::size_t j = 0; j <= df; ++j) a[shift + j] = (a[shift + j] + q - c * f[j] % q) % q;
    mtrim(a);
  }
  return a;
}

ModPoly mmul(const ModPoly& a, const ModPoly& b, const ModPoly& f, unsigned long q) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % q;
  return mmod(std::move(r), f, q);
}

ModPoly mgcd(ModPoly a, ModPoly b, unsigned long q) {
  mtrim(a);
  mtrim(b);
  while (!b.empty()) {
    ModPoly r = mmod(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    unsigned long inv = inv_mod(a.back(), q);
    for (auto& x : a) x = x * inv % q;
  }
  return a;
}

ModPoly mdiv(ModPoly a, const ModPoly& b, unsigned long q) {
  mtrim(a);
  if (a.size() < b.size()) return {};
  ModPoly quo(a.size() - b.size() + 1, 0);
  const unsigned long inv = inv_mod(b.back(), q);
  while (a.size() >= b.size()) {
    unsigned long c = a.back() * inv % q;
    const std::size_t shift = a.size() - b.size();
    quo[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + q - c * b[j] % q) % q;
    mtrim(a);
  }
  return quo;
}

ModPoly mpow_x(unsigned long e, const ModPoly& base, const ModPoly& f, unsigned long q) {
  ModPoly r{1};
  ModPoly b = base;
  while (e) {
    if (e & 1) r = mmul(r, b, f, q);
    b = mmul(b, b, f, q);
    e >>= 1;
  }
  return r;
}

ModPoly reduce(const IntPolynomial& p, unsigned long q) {
  ModPoly r;
  for (const auto& c : p.coefficients()) {
    Integer m;
    mpz_fdiv_r_ui(m.get_mpz_t(), c.get_mpz_t(), q);
    r.push_back(m.get_ui());
  }
  mtrim(r);
  return r;
}

std::vector<bool> subset_sums(const std::vector<int>& degrees, int n) {
  std::vector<bool> s(static_cast<std::size_t>(n) + 1, false);
  s[0] = true;
  for (int d : degrees)
    for (int t = n; t >= d; --t)
      if (s[static_cast<std::size_t>(t - d)]) s[static_cast<std::size_t>(t)] = true;
  return s;
}

std::vector<IntPolynomial> split_squarefree(const IntPolynomial& f) {
  const int n = f.degree();
  if (n <= 1) return {f};
  if (n == 2) {
    Integer disc = f.coeff(1) * f.coeff(1) - 4 * f.coeff(2) * f.coeff(0);
    if (!is_square(disc)) return {f};
  }
  std::vector<bool> allowed(static_cast<std::size_t>(n) + 1, true);
  static const unsigned long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113};
  int used = 0;
  for (unsigned long q : primes) {
    if (used >= 6) break;
    auto pattern = distinct_degree_pattern(f, q);
    if (pattern.empty()) continue;
    ++used;
    auto s = subset_sums(pattern, n);
    for (int d = 0; d <= n; ++d) allowed[static_cast<std::size_t>(d)] = allowed[static_cast<std::size_t>(d)] && s[static_cast<std::size_t>(d)];
  }
  bool any = false;
  for (int d = 1; d < n; ++d) any = any || allowed[static_cast<std::size_t>(d)];
  if (!any) return {f};
  return detail::numeric_split(f, allowed);
}

}  // namespace

std::vector<int> distinct_degree_pattern(const IntPolynomial& p, unsigned long q) {
  ModPoly f = reduce(p, q);
  if (static_cast<int>(f.size()) - 1 != p.degree() || p.degree() < 1) return {};
  unsigned long inv = inv_mod(f.back(), q);
  for (auto& x : f) x = x * inv % q;
  ModPoly df;
  for (std::size_t i = 1; i < f.size(); ++i) df.push_back(i % q * f[i] % q);
  mtrim(df);
  if (df.empty() || mgcd(f, df, q).size() != 1) return {};
  std::vector<int> degrees;
  ModPoly h{0, 1};
  for (int i = 1; 2 * i <= static_cast<int>(f.size()) - 1; ++i) {
    h = mpow_x(q, h, f, q);
    ModPoly hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = (hx[1] + q - 1) % q;
    mtrim(hx);
    ModPoly g = mgcd(f, hx, q);
    if (g.size() > 1) {
      for (std::size_t k = 0; k < (g.size() - 1) / static_cast<std::size_t>(i); ++k) degrees.push_back(i);
      f = mdiv(f, g, q);
      h = mmod(h, f, q);
    }
  }
  if (f.size() > 1) degrees.push_back(static_cast<int>(f.size()) - 1);
  return degrees;
}

Factorization factor_over_rationals(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
  Factorization out;
  out.unit_content = content(p);
  if (p.leading() < 0) out.unit_content = -out.unit_content;
  for (const auto& sq : squarefree_decomposition(p)) {
    if (sq.poly.degree() > kMaxFactorDegree)
      throw Error(ErrorCode::DegreeTooLarge, "squarefree factor of degree " + std::to_string(sq.poly.degree()) + " exceeds cap " + std::to_string(kMaxFactorDegree));
    for (auto& g : split_squarefree(sq.poly)) out.factors.push_back({primitive_part(g), sq.multiplicity});
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    const auto& ca = a.poly.coefficients();
    const auto& cb = b.poly.coefficients();
    for (std::size_t i = 0; i < ca.size(); ++i)
      if (ca[i] != cb[i]) return ca[i] < cb[i];
    return a.multiplicity < b.multiplicity;
  });
  if (out.expand() != p) throw Error(ErrorCode::Internal, "factorization does not reproduce its input");
  return out;
}

bool is_irreducible(const IntPolynomial& p) {
  if (p.degree() < 1) return false;
  auto f = factor_over_rationals(p);
  return f.factors.size() == 1 && f.factors[0].multiplicity == 1;
}

}  // namespace realmult
