#include "numeric.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <functional>

#include "realmult/errors.hpp"
#include "realmult/roots.hpp"

namespace realmult::detail {

namespace mp = boost::multiprecision;
using Real = mp::number<mp::cpp_bin_float<150>, mp::et_off>;
using Complex = mp::number<mp::complex_adaptor<mp::cpp_bin_float<150>>, mp::et_off>;
using LComplex = std::complex<long double>;

namespace {

Real to_real(const Integer& z) { return Real(z.get_str()); }

Integer round_to_integer(const Real& x) {
  mp::cpp_int i = static_cast<mp::cpp_int>(mp::round(x));
  return Integer(i.str());
}

template <class C>
void eval_with_derivative(const std::vector<C>& a, const C& z, C& p, C& dp) {
  p = a.back();
  dp = C(0);
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[i];
  }
}

// One Gauss-Seidel Aberth sweep; returns the largest relative correction.
template <class C, class R>
R aberth_sweep(const std::vector<C>& a, std::vector<C>& z) {
  R worst = 0;
  const std::size_t n = z.size();
  for (std::size_t k = 0; k < n; ++k) {
    C p, dp;
    eval_with_derivative(a, z[k], p, dp);
    if (p == C(0)) continue;
    C ratio = p / dp;
    C s(0);
    for (std::size_t j = 0; j < n; ++j)
      if (j != k) s += C(1) / (z[k] - z[j]);
    C w = ratio / (C(1) - ratio * s);
    z[k] -= w;
    R scale = abs(z[k]);
    if (scale < R(1)) scale = R(1);
    R rel = abs(w) / scale;
    if (rel > worst) worst = rel;
  }
  return worst;
}

std::vector<Complex> complex_roots(const IntPolynomial& f) {
  const int n = f.degree();
  if (n < 1) return {};
  std::vector<LComplex> al;
  std::vector<Complex> am;
  for (const auto& c : f.coefficients()) {
    al.emplace_back(std::stold(c.get_str()), 0.0L);
    am.emplace_back(to_real(c));
  }
  long double bound = 1.0L;
  for (int i = 0; i < n; ++i) bound = std::max(bound, 1.0L + std::fabs(al[static_cast<std::size_t>(i)].real() / al.back().real()));
  std::vector<LComplex> zl;
  const long double pi = 3.141592653589793238462643383279502884L;
  for (int k = 0; k < n; ++k) zl.push_back(std::polar(bound * 0.9L, 2 * pi * k / n + 0.4L));
  for (int it = 0; it < 400; ++it) {
    long double worst = aberth_sweep<LComplex, long double>(al, zl);
    if (!(worst > 1e-17L)) break;
  }
  std::vector<Complex> z;
  for (const auto& w : zl) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) throw Error(ErrorCode::Internal, "root approximation diverged");
    z.emplace_back(Real(static_cast<double>(w.real())), Real(static_cast<double>(w.imag())));
  }
  // Large coefficients put a rounding floor above tol; a tiny correction
  // that stops shrinking counts as converged (callers verify exactly).
  const Real tol("1e-135"), floor_tol("1e-90");
  bool converged = false;
  Real prev = 1;
  int stalled = 0;
  for (int it = 0; it < 600; ++it) {
    Real worst = aberth_sweep<Complex, Real>(am, z);
    if (worst < tol) {
      converged = true;
      break;
    }
    stalled = (worst < floor_tol && worst * 2 > prev) ? stalled + 1 : 0;
    if (stalled >= 3) {
      converged = true;
      break;
    }
    prev = worst;
  }
  if (!converged) throw Error(ErrorCode::Internal, "root approximation did not converge for " + to_string(f));
  return z;
}

struct Unit {
  std::vector<std::size_t> roots;
  int degree;
};

// Real roots are the ones with the smallest imaginary parts; the exact Sturm
// count says how many there are. The rest pair up with their conjugates.
std::vector<Unit> classify(const IntPolynomial& f, std::vector<Complex>& z) {
  const std::size_t n = z.size();
  const int real_count = count_real_roots(f);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return abs(z[a].imag()) < abs(z[b].imag()); });
  std::vector<Unit> units;
  std::vector<bool> used(n, false);
  for (int i = 0; i < real_count; ++i) {
    std::size_t k = order[static_cast<std::size_t>(i)];
    z[k] = Complex(z[k].real(), Real(0));
    used[k] = true;
    units.push_back({{k}, 1});
  }
  for (std::size_t i = static_cast<std::size_t>(real_count); i < n; ++i) {
    std::size_t k = order[i];
    if (used[k] || z[k].imag() < 0) continue;
    std::size_t best = n;
    Real best_dist = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || j == k || z[j].imag() >= 0) continue;
      Real d = abs(z[j] - conj(z[k]));
      if (best == n || d < best_dist) {
        best = j;
        best_dist = d;
      }
    }
    if (best == n) throw Error(ErrorCode::Internal, "unpaired complex root");
    used[k] = used[best] = true;
    units.push_back({{k, best}, 2});
  }
  for (std::size_t k = 0; k < n; ++k)
    if (!used[k]) throw Error(ErrorCode::Internal, "unclassified root");
  return units;
}

bool near_integer(const Real& x, Integer& out) {
  Real r = mp::round(x);
  Real err = abs(x - r);
  Real scale = abs(x);
  if (scale < Real(1)) scale = Real(1);
  if (err > Real("1e-60") * scale) return false;
  out = round_to_integer(r);
  return true;
}

}  // namespace

std::vector<IntPolynomial> numeric_split(const IntPolynomial& f_in, const std::vector<bool>& allowed_degree) {
  IntPolynomial f = f_in;
  std::vector<IntPolynomial> factors;
  if (f.degree() <= 1) {
    factors.push_back(f);
    return factors;
  }
  std::vector<Complex> z = complex_roots(f);
  std::vector<Unit> units = classify(f, z);
  auto allowed = [&](int d) { return d >= 0 && static_cast<std::size_t>(d) < allowed_degree.size() && allowed_degree[static_cast<std::size_t>(d)]; };

  for (int target = 1; 2 * target <= f.degree(); ++target) {
    if (!allowed(target)) continue;
    bool found_any = true;
    while (found_any && 2 * target <= f.degree()) {
      found_any = false;
      const Real lead = to_real(f.leading());
      std::vector<std::size_t> chosen;
      std::vector<std::size_t> hit;
      IntPolynomial hit_poly;
      // Depth-first over unit subsets of total degree target.
      std::function<bool(std::size_t, int)> dfs = [&](std::size_t start, int remaining) -> bool {
        if (remaining == 0) {
          Complex trace(0);
          for (auto u : chosen)
            for (auto r : units[u].roots) trace += z[r];
          Integer tmp;
          if (!near_integer(lead * trace.real(), tmp)) return false;
          std::vector<Complex> poly{Complex(1)};
          for (auto u : chosen)
            for (auto r : units[u].roots) {
              std::vector<Complex> next(poly.size() + 1, Complex(0));
              for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i + 1] += poly[i];
                next[i] -= poly[i] * z[r];
              }
              poly = std::move(next);
            }
          std::vector<Integer> coeffs;
          for (auto& c : poly) {
            Integer v;
            if (!near_integer(lead * c.real(), v)) return false;
            coeffs.push_back(v);
          }
          IntPolynomial g = primitive_part(IntPolynomial(std::move(coeffs)));
          if (g.degree() != target) return false;
          if (!exact_quotient(f, g)) return false;
          hit = chosen;
          hit_poly = g;
          return true;
        }
        for (std::size_t u = start; u < units.size(); ++u) {
          if (units[u].degree > remaining) continue;
          chosen.push_back(u);
          bool ok = dfs(u + 1, remaining - units[u].degree);
          chosen.pop_back();
          if (ok) return true;
        }
        return false;
      };
      if (dfs(0, target)) {
        factors.push_back(hit_poly);
        f = *exact_quotient(f, hit_poly);
        std::vector<Unit> rest;
        for (std::size_t u = 0; u < units.size(); ++u)
          if (std::find(hit.begin(), hit.end(), u) == hit.end()) rest.push_back(units[u]);
        units = std::move(rest);
        found_any = true;
      }
    }
  }
  factors.push_back(primitive_part(f));
  return factors;
}

std::vector<std::complex<double>> approximate_roots(const IntPolynomial& f) {
  std::vector<std::complex<double>> out;
  if (f.degree() < 1) return out;
  for (const auto& c : complex_roots(f))
    out.emplace_back(static_cast<double>(c.real()), static_cast<double>(c.imag()));
  return out;
}

}  // namespace realmult::detail
