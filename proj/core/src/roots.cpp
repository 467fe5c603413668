#include "realmult/roots.hpp"

#include "realmult/errors.hpp"

namespace realmult {

namespace {

// Divide by |content| only; Sturm sequences must keep their signs.
IntPolynomial positive_normalize(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  std::vector<Integer> c = p.coefficients();
  for (auto& x : c) x /= g;
  return IntPolynomial(std::move(c));
}

// Pseudo-remainder with a positive multiplier: lc(b)^k a = q b + r, lc(b)^k > 0.
IntPolynomial positive_pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> r = a.coefficients();
  const int db = b.degree();
  Integer lb = b.leading();
  Integer mult = abs(lb);
  int sign = sgn(lb);
  int dr = a.degree();
  while (dr >= db && dr >= 0) {
    Integer top = r[static_cast<std::size_t>(dr)];
    if (top == 0) {
      r.pop_back();
      --dr;
      continue;
    }
    // r <- |lb| * r - sign * top * x^(dr-db) * b
    for (auto& x : r) x *= mult;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(dr - db + j)] -= top * sign * b.coeff(j);
    r.pop_back();
    --dr;
  }
  return IntPolynomial(std::move(r));
}

}  // namespace

std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Sturm sequence of zero polynomial");
  std::vector<IntPolynomial> seq;
  IntPolynomial s0 = positive_normalize(squarefree_part(p));
  seq.push_back(s0);
  if (s0.degree() <= 0) return seq;
  seq.push_back(positive_normalize(derivative(s0)));
  while (seq.back().degree() > 0) {
    IntPolynomial r = positive_pseudo_remainder(seq[seq.size() - 2], seq.back());
    if (r.is_zero()) break;
    seq.push_back(positive_normalize(-r));
  }
  return seq;
}

int sturm_variations(const std::vector<IntPolynomial>& seq, const Rational& x) {
  int variations = 0;
  int last = 0;
  for (const auto& s : seq) {
    int v = sign_at(s, x);
    if (v == 0) continue;
    if (last != 0 && v != last) ++variations;
    last = v;
  }
  return variations;
}

int count_roots(const std::vector<IntPolynomial>& seq, const Rational& lo, const Rational& hi) {
  if (hi < lo) return 0;
  return sturm_variations(seq, lo) - sturm_variations(seq, hi);
}

int count_real_roots(const IntPolynomial& p) {
  auto seq = sturm_sequence(p);
  Rational b = root_bound(p);
  return count_roots(seq, -b, b);
}

Rational root_bound(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root bound of zero polynomial");
  Rational m = 0;
  Integer lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    Rational r(abs(p.coeff(i)), lead);
    r.canonicalize();
    if (r > m) m = r;
  }
  Rational bound = 1 + m;
  Rational two_pow = 1;
  while (two_pow <= bound) two_pow *= 2;
  return two_pow;
}

std::vector<RootInterval> isolate_real_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot isolate roots of the zero polynomial");
  std::vector<RootInterval> out;
  if (p.degree() <= 0) return out;
  auto seq = sturm_sequence(p);
  const IntPolynomial& sp = seq.front();
  Rational b = root_bound(p);

  struct Pending {
    Rational lo, hi;
    int count;
  };
  std::vector<Pending> stack;
  int total = count_roots(seq, -b, b);
  if (total > 0) stack.push_back({-b, b, total});
  // Depth-first, right child pushed first so roots come out in increasing order.
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.count == 1) {
      if (sign_at(sp, cur.hi) == 0) {
        out.push_back({cur.hi, cur.hi});
        continue;
      }
      if (sign_at(sp, cur.lo) != 0) {
        out.push_back({cur.lo, cur.hi});
        continue;
      }
    }
    Rational mid = (cur.lo + cur.hi) / 2;
    int left = count_roots(seq, cur.lo, mid);
    int right = cur.count - left;
    if (right > 0) stack.push_back({mid, cur.hi, right});
    if (left > 0) stack.push_back({cur.lo, mid, left});
  }
  return out;
}

RootInterval refine_root(const IntPolynomial& p, RootInterval iv, const Rational& max_width) {
  if (iv.exact()) return iv;
  IntPolynomial sp = squarefree_part(p);
  int slo = sign_at(sp, iv.lo);
  if (slo == 0) throw Error(ErrorCode::InvalidArgument, "interval endpoint is a root");
  while (iv.width() > max_width) {
    Rational mid = iv.midpoint();
    int sm = sign_at(sp, mid);
    if (sm == 0) return {mid, mid};
    if (sm == slo) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  return iv;
}

bool isolates_one_root(const IntPolynomial& p, const RootInterval& iv) {
  if (p.degree() <= 0) return false;
  if (iv.exact()) return evaluate(p, iv.lo) == 0;
  if (iv.hi < iv.lo) return false;
  if (sign_at(p, iv.lo) == 0 || sign_at(p, iv.hi) == 0) return false;
  auto seq = sturm_sequence(p);
  return count_roots(seq, iv.lo, iv.hi) == 1;
}

}  // namespace realmult
