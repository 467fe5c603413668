#include <algorithm>

#include "realmult/errors.hpp"
#include "realmult/factor.hpp"
#include "realmult/matrix.hpp"
#include "realmult/number_field.hpp"

namespace realmult {

namespace {

// Multiplication-by-generator matrix on the power basis (columns are images).
RatMatrix companion(const RealNumberField& f) {
  const std::size_t d = static_cast<std::size_t>(f.degree());
  RatMatrix c(d, d);
  for (std::size_t i = 0; i + 1 < d; ++i) c(i + 1, i) = 1;
  const auto& top = f.reduction_table()[0];
  for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = top[i];
  return c;
}

Rational pow2_neg(unsigned bits) {
  Rational r(1);
  mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), bits);
  return r;
}

// Locates which root interval among candidates holds alpha + t*beta.
struct RootHit {
  std::size_t factor;
  RootInterval interval;
};

RootHit locate_sum(const AlgebraicReal& alpha, const AlgebraicReal& beta, long t, const std::vector<IntPolynomial>& factors) {
  std::vector<std::pair<std::size_t, RootInterval>> roots;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (const auto& iv : isolate_real_roots(factors[i])) roots.emplace_back(i, iv);
  for (unsigned bits = 32;; bits *= 2) {
    RootInterval ea = alpha.enclosure(bits), eb = beta.enclosure(bits);
    Rational lo = ea.lo + (t > 0 ? t * eb.lo : t * eb.hi);
    Rational hi = ea.hi + (t > 0 ? t * eb.hi : t * eb.lo);
    std::size_t hits = 0, idx = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      // Intervals of distinct factors may overlap; shrink them alongside.
      auto& iv = roots[i].second;
      iv = refine_root(factors[roots[i].first], iv, pow2_neg(bits));
      if (std::max(lo, iv.lo) <= std::min(hi, iv.hi)) {
        ++hits;
        idx = i;
      }
    }
    if (hits == 1) return {roots[idx].first, roots[idx].second};
    if (hits == 0) throw Error(ErrorCode::Internal, "compositum generator matches no root");
    if (bits > (1u << 16)) throw Error(ErrorCode::Internal, "compositum root location did not terminate");
  }
}

}  // namespace

Compositum compositum(const FieldPtr& a, const FieldPtr& b, int max_degree) {
  if (same_field(a, b)) {
    AlgebraicReal g = AlgebraicReal::generator(a);
    return {a, g, g};
  }
  if (a->degree() == 1) return {b, AlgebraicReal(b, a->interval().lo), AlgebraicReal::generator(b)};
  if (b->degree() == 1) return {a, AlgebraicReal::generator(a), AlgebraicReal(a, b->interval().lo)};
  const int d1 = a->degree(), d2 = b->degree();
  if (d1 * d2 > max_degree)
    throw Error(ErrorCode::CompositumTooLarge, "compositum degree " + std::to_string(d1 * d2) + " exceeds bound " + std::to_string(max_degree));

  const std::size_t n1 = static_cast<std::size_t>(d1), n2 = static_cast<std::size_t>(d2), n = n1 * n2;
  RatMatrix c1 = companion(*a), c2 = companion(*b);
  // Basis a^i b^j at index i*n2 + j.
  RatMatrix ma(n, n), mb(n, n);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t k = 0; k < n1; ++k)
      if (c1(i, k) != 0)
        for (std::size_t j = 0; j < n2; ++j) ma(i * n2 + j, k * n2 + j) = c1(i, k);
  for (std::size_t j = 0; j < n2; ++j)
    for (std::size_t l = 0; l < n2; ++l)
      if (c2(j, l) != 0)
        for (std::size_t i = 0; i < n1; ++i) mb(i * n2 + j, i * n2 + l) = c2(j, l);

  const long shifts[] = {1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 7, -7, 11, -11};
  for (long t : shifts) {
    RatMatrix m = ma + Rational(t) * mb;
    IntPolynomial r = primitive_part(charpoly(m));
    if (!is_squarefree(r)) continue;

    auto fac = factor_over_rationals(r);
    std::vector<IntPolynomial> factors;
    for (const auto& f : fac.factors) factors.push_back(f.poly);
    AlgebraicReal alpha0 = AlgebraicReal::generator(a), beta0 = AlgebraicReal::generator(b);
    RootHit hit = locate_sum(alpha0, beta0, t, factors);
    FieldPtr field = RealNumberField::create(factors[hit.factor], hit.interval);

    // Krylov basis gamma^k * 1; solve for the coordinates of a.
    RatMatrix krylov(n, n);
    std::vector<Rational> v(n, Rational(0));
    v[0] = 1;
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) krylov(i, k) = v[i];
      v = m.apply(v);
    }
    std::vector<Rational> target(n, Rational(0));
    target[n2] = 1;  // a^1 b^0
    auto sol = solve(krylov, target);
    if (!sol) throw Error(ErrorCode::Internal, "compositum generator is not primitive");
    AlgebraicReal gamma = AlgebraicReal::generator(field);
    AlgebraicReal alpha = evaluate(RatPolynomial(*sol), gamma);
    AlgebraicReal beta = (gamma - alpha) * AlgebraicReal(field, Rational(1, t));
    if (!evaluate(a->polynomial(), alpha).is_zero() || !evaluate(b->polynomial(), beta).is_zero())
      throw Error(ErrorCode::Internal, "compositum embedding failed verification");
    return {field, alpha, beta};
  }
  throw Error(ErrorCode::Internal, "no squarefree shift found for compositum");
}

std::vector<AlgebraicReal> to_common_field(const std::vector<AlgebraicReal>& xs, int max_degree) {
  if (xs.empty()) return {};
  FieldPtr field;
  std::vector<AlgebraicReal> out;
  for (const auto& x : xs) {
    if (x.field()->degree() == 1) {
      out.push_back(x);
      continue;
    }
    if (!field) {
      field = x.field();
      out.push_back(x);
      continue;
    }
    if (same_field(field, x.field())) {
      out.push_back(AlgebraicReal(field, x.coords()));
      continue;
    }
    Compositum c = compositum(field, x.field(), max_degree);
    for (auto& y : out)
      if (y.field()->degree() != 1) y = y.substitute_generator(c.alpha);
    out.push_back(x.substitute_generator(c.beta));
    field = c.field;
  }
  if (!field) field = RealNumberField::rationals();
  for (auto& y : out)
    if (y.field()->degree() == 1 && field->degree() != 1) y = AlgebraicReal(field, y.rational_value());
  return out;
}

}  // namespace realmult
