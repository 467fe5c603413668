#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace oracle {

namespace {

i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 psi(i64 N) {
  i64 r = N, m = N;
  for (i64 p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      r = r / p * (p + 1);
      while (m % p == 0) m /= p;
    }
  if (m > 1) r = r / m * (m + 1);
  return r;
}

i64 phi(i64 n) {
  i64 r = n, m = n;
  for (i64 p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      r = r / p * (p - 1);
      while (m % p == 0) m /= p;
    }
  if (m > 1) r = r / m * (m - 1);
  return r;
}

i64 gcd3(i64 a, i64 b, i64 c) { return std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c)); }

mpq_class weighted_h(i64 d) {
  if (d == -3) return mpq_class(1, 3);
  if (d == -4) return mpq_class(1, 2);
  return mpq_class(definite_class_number(d));
}

struct DSU {
  std::vector<i64> p;
  explicit DSU(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  i64 find(i64 x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void join(i64 a, i64 b) { p[find(a)] = find(b); }
};

}  // namespace

i64 definite_class_number(i64 d) {
  i64 h = 0;
  for (i64 a = 1; 3 * a * a <= -d; ++a)
    for (i64 b = -a + 1; b <= a; ++b) {
      i64 num = b * b - d;
      if (num % (4 * a)) continue;
      i64 c = num / (4 * a);
      if (c < a) continue;
      if (c == a && b < 0) continue;
      if (gcd3(a, b, c) != 1) continue;
      ++h;
    }
  return h;
}

mpq_class hecke_trace(i64 N, i64 n) {
  const i64 psiN = psi(N);
  mpq_class a1 = 0, a2 = 0, a3 = 0, a4 = 0;
  i64 r = static_cast<i64>(std::llround(std::sqrt(static_cast<double>(n))));
  if (r * r == n) a1 = mpq_class(psiN, 12);

  for (i64 t = 0; t * t < 4 * n; ++t) {
    const i64 disc = t * t - 4 * n;
    mpq_class inner = 0;
    for (i64 f = 1; f * f <= -disc; ++f) {
      if (disc % (f * f)) continue;
      const i64 d = disc / (f * f);
      if (mod(d, 4) != 0 && mod(d, 4) != 1) continue;
      const i64 Nf = std::gcd(N, f);
      i64 count = 0;
      for (i64 x = 0; x < N; ++x)
        if (mod(x * x - t * x + n, N * Nf) == 0) ++count;
      inner += weighted_h(d) * mpq_class(psiN * count, psi(N / Nf));
    }
    a2 += (t == 0 ? 1 : 2) * inner;
  }
  a2 = -a2 / 2;

  for (i64 d = 1; d <= n; ++d) {
    if (n % d) continue;
    const i64 e = n / d;
    i64 s = 0;
    for (i64 tau = 1; tau <= N; ++tau) {
      if (N % tau) continue;
      const i64 g = std::gcd(tau, N / tau);
      if ((e - d) % g == 0) s += phi(g);
    }
    a3 += std::min(d, e) * s;
  }
  a3 = -a3 / 2;

  for (i64 t = 1; t <= n; ++t)
    if (n % t == 0 && std::gcd(N, n / t) == 1) a4 += t;
  mpq_class tr = a1 + a2 + a3 + a4;
  tr.canonicalize();
  return tr;
}

std::optional<i64> IndefiniteClasses::component(i64 a, i64 b, i64 c) const {
  const i64 key = ((a + box) * (2 * box + 1) + (b + box)) * (2 * box + 1) + (c + box);
  auto it = std::lower_bound(keys.begin(), keys.end(), key);
  if (it == keys.end() || *it != key) return std::nullopt;
  return comp[static_cast<std::size_t>(it - keys.begin())];
}

std::optional<i64> IndefiniteClasses::wide_component(i64 a, i64 b, i64 c) const {
  const i64 key = ((a + box) * (2 * box + 1) + (b + box)) * (2 * box + 1) + (c + box);
  auto it = std::lower_bound(keys.begin(), keys.end(), key);
  if (it == keys.end() || *it != key) return std::nullopt;
  return wcomp[static_cast<std::size_t>(it - keys.begin())];
}

IndefiniteClasses indefinite_classes(i64 D, i64 box) {
  IndefiniteClasses out;
  out.box = box;
  const i64 w = 2 * box + 1;
  auto key = [&](i64 a, i64 b, i64 c) { return ((a + box) * w + (b + box)) * w + (c + box); };
  for (i64 a = -box; a <= box; ++a) {
    if (a == 0) continue;  // D not a square: a = 0 never occurs
    for (i64 b = -box; b <= box; ++b) {
      const i64 num = b * b - D;
      if (num % (4 * a)) continue;
      const i64 c = num / (4 * a);
      if (std::abs(c) > box || gcd3(a, b, c) != 1) continue;
      out.keys.push_back(key(a, b, c));
    }
  }
  std::sort(out.keys.begin(), out.keys.end());
  auto index = [&](i64 a, i64 b, i64 c) -> std::optional<std::size_t> {
    if (std::abs(a) > box || std::abs(b) > box || std::abs(c) > box) return std::nullopt;
    auto it = std::lower_bound(out.keys.begin(), out.keys.end(), key(a, b, c));
    if (it == out.keys.end() || *it != key(a, b, c)) return std::nullopt;
    return static_cast<std::size_t>(it - out.keys.begin());
  };
  DSU narrow(out.keys.size()), wide(out.keys.size());
  for (std::size_t i = 0; i < out.keys.size(); ++i) {
    const i64 k = out.keys[i];
    const i64 a = k / (w * w) - box, b = (k / w) % w - box, c = k % w - box;
    // f(x + y, y), f(x - y, y), f(-y, x): all determinant 1
    const i64 nb[3][3] = {{a, b + 2 * a, a + b + c}, {a, b - 2 * a, a - b + c}, {c, -b, a}};
    for (const auto& g : nb)
      if (auto j = index(g[0], g[1], g[2])) {
        narrow.join(static_cast<i64>(i), static_cast<i64>(*j));
        wide.join(static_cast<i64>(i), static_cast<i64>(*j));
      }
    if (auto j = index(-a, b, -c)) wide.join(static_cast<i64>(i), static_cast<i64>(*j));
  }
  out.comp.resize(out.keys.size());
  out.wcomp.resize(out.keys.size());
  std::vector<i64> rn, rw;
  for (std::size_t i = 0; i < out.keys.size(); ++i) {
    out.comp[i] = narrow.find(static_cast<i64>(i));
    out.wcomp[i] = wide.find(static_cast<i64>(i));
    rn.push_back(out.comp[i]);
    rw.push_back(out.wcomp[i]);
  }
  std::sort(rn.begin(), rn.end());
  std::sort(rw.begin(), rw.end());
  out.narrow = std::unique(rn.begin(), rn.end()) - rn.begin();
  out.wide = std::unique(rw.begin(), rw.end()) - rw.begin();
  return out;
}

std::optional<PellHit> pell_search(i64 D, i64 limit) {
  for (i64 y = 1; y <= limit; ++y) {
    for (int s : {-4, 4}) {
      const i64 x2 = D * y * y + s;
      if (x2 <= 0) continue;
      i64 x = static_cast<i64>(std::llround(std::sqrt(static_cast<double>(x2))));
      while (x * x > x2) --x;
      while ((x + 1) * (x + 1) <= x2) ++x;
      if (x * x == x2) return PellHit{x, y, s / 4};
    }
  }
  return std::nullopt;
}

Genus genus(i64 N) {
  Genus g;
  // |P^1(Z/N)|: pairs (c, d) with gcd(c, d, N) = 1 up to units.
  i64 pairs = 0;
  for (i64 c = 0; c < N; ++c)
    for (i64 d = 0; d < N; ++d)
      if (std::gcd(std::gcd(c, d), N) == 1) ++pairs;
  i64 units = 0;
  for (i64 u = 0; u < N; ++u)
    if (std::gcd(u, N) == 1) ++units;
  g.mu = N == 1 ? 1 : pairs / units;
  for (i64 x = 0; x < N; ++x) {
    if (mod(x * x + 1, N) == 0) ++g.nu2;
    if (mod(x * x + x + 1, N) == 0) ++g.nu3;
  }
  for (i64 d = 1; d <= N; ++d)
    if (N % d == 0) g.cusps += phi(std::gcd(d, N / d));
  // 12 g = 12 + mu - 3 nu2 - 4 nu3 - 6 cusps
  g.genus = (12 + g.mu - 3 * g.nu2 - 4 * g.nu3 - 6 * g.cusps) / 12;
  return g;
}

}  // namespace oracle
