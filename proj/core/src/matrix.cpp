#include "realmult/matrix.hpp"

#include <sstream>
#include <utility>

#include "realmult/errors.hpp"

namespace realmult {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

bool is_integral(const RatMatrix& m) {
  for (const auto& x : m.data())
    if (x.get_den() != 1) return false;
  return true;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw Error(ErrorCode::InvalidArgument, "matrix entry is not integral: " + m(i, j).get_str());
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix t = m;
  return rref(t).size();
}

RatMatrix nullspace(const RatMatrix& m) {
  RatMatrix t = m;
  auto pivots = rref(t);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  RatMatrix basis(free_cols.size(), m.cols());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t f = free_cols[k];
    basis(k, f) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(k, pivots[i]) = -t(i, f);
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const RatMatrix& m, const std::vector<Rational>& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::InvalidArgument, "solve: right-hand side length mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<Rational> x(m.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidArgument, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Rational determinant(const RatMatrix& m_in) {
  if (!m_in.is_square()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  RatMatrix m = m_in;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

Integer determinant(const IntMatrix& m) {
  Rational d = determinant(to_rational(m));
  return d.get_num();
}

RatPolynomial charpoly(const RatMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::InvalidArgument, "charpoly of non-square matrix");
  const std::size_t n = a.rows();
  // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RatMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    RatMatrix am = a * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  return RatPolynomial(std::move(c));
}

IntPolynomial charpoly(const IntMatrix& a) {
  RatPolynomial p = charpoly(to_rational(a));
  std::vector<Integer> c;
  for (const auto& x : p.coefficients()) {
    if (x.get_den() != 1) throw Error(ErrorCode::Internal, "non-integral characteristic polynomial of integer matrix");
    c.push_back(x.get_num());
  }
  return IntPolynomial(std::move(c));
}

IntMatrix hnf(const IntMatrix& m_in) {
  IntMatrix m = m_in;
  const std::size_t rows = m.rows(), cols = m.cols();
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(a, j), m(b, j));
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // gcd-combine all rows below r into row r at column c
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      if (m(r, c) == 0) {
        swap_rows(r, i);
        continue;
      }
      Integer s, t;
      Integer g = gcdext(m(r, c), m(i, c), s, t);
      Integer u = m(r, c) / g, v = m(i, c) / g;
      for (std::size_t j = c; j < cols; ++j) {
        Integer x = m(r, j), y = m(i, j);
        m(r, j) = s * x + t * y;
        m(i, j) = -v * x + u * y;
      }
    }
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0)
      for (std::size_t j = c; j < cols; ++j) m(r, j) = -m(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(m(i, c), m(r, c));
      if (q == 0) continue;
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= q * m(r, j);
    }
    ++r;
  }
  IntMatrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = m(i, j);
  return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  // Row-reduce [m^T | I]; rows whose left block vanishes span the kernel over Z.
  const std::size_t n = m.cols(), k = m.rows();
  IntMatrix aug(n, k + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = m(j, i);
    aug(i, k + i) = 1;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < n; ++c) {
    for (std::size_t i = r + 1; i < n; ++i) {
      if (aug(i, c) == 0) continue;
      if (aug(r, c) == 0) {
        for (std::size_t j = 0; j < k + n; ++j) std::swap(aug(r, j), aug(i, j));
        continue;
      }
      Integer s, t;
      Integer g = gcdext(aug(r, c), aug(i, c), s, t);
      Integer u = aug(r, c) / g, v = aug(i, c) / g;
      for (std::size_t j = 0; j < k + n; ++j) {
        Integer x = aug(r, j), y = aug(i, j);
        aug(r, j) = s * x + t * y;
        aug(i, j) = -v * x + u * y;
      }
    }
    if (aug(r, c) != 0) ++r;
  }
  IntMatrix basis(n - r, n);
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis(i - r, j) = aug(i, k + j);
  if (basis.rows() == 0) return basis;
  return hnf(basis);
}

IntMatrix matrix_power(const IntMatrix& m, unsigned e) {
  IntMatrix r = IntMatrix::identity(m.rows());
  for (unsigned i = 0; i < e; ++i) r = r * m;
  return r;
}

bool commute(const IntMatrix& a, const IntMatrix& b) { return a * b == b * a; }

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ",";
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ",";
      os << m(i, j).get_str();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

std::vector<std::vector<std::string>> to_string_rows(const IntMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j).get_str());
  return out;
}

}  // namespace realmult
