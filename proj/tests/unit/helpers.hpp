#pragma once

#include <doctest.h>

#include "realmult/realmult.hpp"

namespace testing {

using namespace realmult;

inline IntPolynomial P(std::initializer_list<long> ascending) {
  std::vector<Integer> c;
  for (long x : ascending) c.emplace_back(x);
  return IntPolynomial(c);
}

// sqrt(d) in Q(sqrt d).
inline AlgebraicReal sqrt_of(long d) { return AlgebraicReal::generator(quadratic_field(Integer(d))); }

inline AlgebraicReal golden() { return (AlgebraicReal(1) + sqrt_of(5)) / AlgebraicReal(2); }

inline IntMatrix M(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Internal;
}

}  // namespace testing
