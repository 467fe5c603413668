#pragma once

// Independent desk-scale oracles. They use plain machine integers and
// brute force so that they share no code path with the library.

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using i64 = std::int64_t;

// Class number of primitive positive definite forms of discriminant d < 0.
i64 definite_class_number(i64 d);

// Eichler-Selberg trace of T_n on S_2(Gamma_0(N)), gcd(n, N) = 1.
mpq_class hecke_trace(i64 N, i64 n);

struct IndefiniteClasses {
  i64 narrow = 0;  // proper classes of primitive forms
  i64 wide = 0;    // classes up to f ~ -f as well
  // component id of a primitive form (a, b, c) in the search box, if present
  std::optional<i64> component(i64 a, i64 b, i64 c) const;
  std::optional<i64> wide_component(i64 a, i64 b, i64 c) const;

  i64 box = 0;
  std::vector<std::int64_t> keys;  // sorted form keys
  std::vector<i64> comp, wcomp;
};

// Union-find over every primitive form of discriminant D with
// |a|, |b|, |c| <= box, joined by x -> x + y, x -> x - y and (x, y) -> (-y, x).
IndefiniteClasses indefinite_classes(i64 D, i64 box);

// Smallest y >= 1 (up to limit) with x^2 - D y^2 = +-4 for some x > 0.
struct PellHit {
  i64 x = 0, y = 0;
  int norm = 0;
};
std::optional<PellHit> pell_search(i64 D, i64 limit);

struct Genus {
  i64 mu = 0, nu2 = 0, nu3 = 0, cusps = 0, genus = 0;
};
// mu by counting P^1(Z/N), nu2/nu3 by counting roots mod N, cusps by the
// divisor sum of phi(gcd(d, N/d)).
Genus genus(i64 N);

}  // namespace oracle
