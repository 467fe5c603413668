#include "realmult/modsym.hpp"

#include <numeric>
#include <set>

#include "realmult/errors.hpp"
#include "realmult/factor.hpp"
#include "realmult/roots.hpp"

namespace realmult {

namespace {

long lmod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

long lgcd(long a, long b) { return std::gcd(a, b); }

std::vector<long> prime_divisors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

long euler_phi(long n) {
  long r = n;
  for (long p : prime_divisors(n)) r = r / p * (p - 1);
  return r;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace

GenusData genus_data(long N) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "level must be positive");
  GenusData g;
  const auto ps = prime_divisors(N);
  g.mu = N;
  for (long p : ps) g.mu = g.mu / p * (p + 1);
  if (N % 4 == 0) {
    g.nu2 = 0;
  } else {
    g.nu2 = 1;
    for (long p : ps) g.nu2 *= (p == 2 ? 1 : (p % 4 == 1 ? 2 : 0));
  }
  if (N % 9 == 0) {
    g.nu3 = 0;
  } else {
    g.nu3 = 1;
    for (long p : ps) g.nu3 *= (p == 3 ? 1 : (p % 3 == 1 ? 2 : 0));
  }
  for (long d = 1; d <= N; ++d)
    if (N % d == 0) g.cusps += euler_phi(lgcd(d, N / d));
  const long twelve_g = 12 + g.mu - 3 * g.nu2 - 4 * g.nu3 - 6 * g.cusps;
  if (twelve_g % 12 != 0) throw Error(ErrorCode::Internal, "genus formula not integral");
  g.genus = twelve_g / 12;
  return g;
}

long genus_formula(long N) { return genus_data(N).genus; }

std::vector<std::array<long, 4>> heilbronn_merel(long n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "Hecke index must be positive");
  std::vector<std::array<long, 4>> out;
  for (long a = 1; a <= n; ++a) {
    if (n % a == 0) {
      const long d = n / a;
      for (long c = 0; c < d; ++c) out.push_back({a, 0, c, d});
    }
    for (long b = 1; b < a; ++b) {
      // ad - bc = n with 0 <= c < d forces n/a <= d < n/(a-b).
      for (long d = (n + a - 1) / a; d * (a - b) < n; ++d) {
        const long t = a * d - n;
        if (t % b != 0) continue;
        const long c = t / b;
        if (c >= 0 && c < d) out.push_back({a, b, c, d});
      }
    }
  }
  return out;
}

long ModularSymbolSpace::symbol_index(long c, long d) const {
  c = lmod(c, N_);
  d = lmod(d, N_);
  return index_[static_cast<std::size_t>(c * N_ + d)];
}

namespace {

struct Cusp {
  Integer p, q;
};

Cusp normalize_cusp(Integer p, Integer q) {
  if (q == 0) return {Integer(1), Integer(0)};
  Integer g = gcd(p, q);
  p /= g;
  q /= g;
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return {p, q};
}

Integer inverse_mod(const Integer& p, const Integer& q) {
  if (q <= 1) return q == 0 ? p : Integer(0);
  Integer x, y;
  gcdext(p, q, x, y);
  Integer r = x % q;
  if (r < 0) r += q;
  return r;
}

// Gamma0(N)-equivalence of cusps in lowest terms.
bool cusps_equivalent(const Cusp& x, const Cusp& y, long N) {
  const Integer s1 = inverse_mod(x.p, x.q), s2 = inverse_mod(y.p, y.q);
  const Integer m = gcd(x.q * y.q, Integer(N));
  Integer diff = s1 * y.q - s2 * x.q;
  return m == 0 ? diff == 0 : diff % m == 0;
}

RatMatrix hcat(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

Integer row_denominator(const RatMatrix& m) {
  Integer l = 1;
  for (const auto& x : m.data()) l = lcm(l, x.get_den());
  return l;
}

IntMatrix scaled_integer(const RatMatrix& m, const Integer& l) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational v = m(i, j) * l;
      r(i, j) = v.get_num();
    }
  return r;
}

}  // namespace

ModularSymbolSpace ModularSymbolSpace::build(long N) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "level must be positive, got " + std::to_string(N));
  ModularSymbolSpace s;
  s.N_ = N;
  const std::size_t NN = static_cast<std::size_t>(N * N);
  s.index_.assign(NN, -1);
  std::vector<long> units;
  for (long u = 0; u < N; ++u)
    if (lgcd(u, N) == 1) units.push_back(u);
  for (long c = 0; c < N; ++c)
    for (long d = 0; d < N; ++d) {
      if (lgcd(lgcd(c, d), N) != 1 || s.index_[static_cast<std::size_t>(c * N + d)] >= 0) continue;
      const long id = static_cast<long>(s.symbols_.size());
      s.symbols_.emplace_back(c, d);
      for (long u : units) s.index_[static_cast<std::size_t>(lmod(u * c, N) * N + lmod(u * d, N))] = id;
    }
  const std::size_t mu = s.symbols_.size();

  // Two-term relations x + xS = 0, (c:d)S = (d:-c).
  std::vector<long> gen(mu, -2);  // -1: zero, otherwise generator id
  std::vector<int> sign(mu, 1);
  std::vector<std::size_t> gen_symbol;
  for (std::size_t i = 0; i < mu; ++i) {
    if (gen[i] != -2) continue;
    const auto [c, d] = s.symbols_[i];
    const std::size_t j = static_cast<std::size_t>(s.symbol_index(d, -c));
    if (j == i) {
      gen[i] = -1;
      continue;
    }
    gen[i] = static_cast<long>(gen_symbol.size());
    gen[j] = gen[i];
    sign[j] = -1;
    gen_symbol.push_back(i);
  }
  const std::size_t ng = gen_symbol.size();

  // Three-term relations x + xT + xT^2 = 0, (c:d)T = (d:-c-d), (c:d)T^2 = (-c-d:c).
  std::vector<std::vector<Rational>> rel_rows;
  std::set<std::array<std::size_t, 3>> seen;
  for (std::size_t i = 0; i < mu; ++i) {
    const auto [c, d] = s.symbols_[i];
    std::array<std::size_t, 3> t = {i, static_cast<std::size_t>(s.symbol_index(d, -c - d)),
                                    static_cast<std::size_t>(s.symbol_index(-c - d, c))};
    std::array<std::size_t, 3> key = t;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) continue;
    std::vector<Rational> row(ng, Rational(0));
    bool any = false;
    for (std::size_t k : t)
      if (gen[k] >= 0) {
        row[static_cast<std::size_t>(gen[k])] += sign[k];
        any = true;
      }
    if (any) rel_rows.push_back(std::move(row));
  }
  RatMatrix rel(rel_rows.size(), ng);
  for (std::size_t i = 0; i < rel_rows.size(); ++i)
    for (std::size_t j = 0; j < ng; ++j) rel(i, j) = rel_rows[i][j];
  auto pivots = rref(rel);
  std::vector<bool> is_pivot(ng, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<long> free_pos(ng, -1);
  for (std::size_t j = 0; j < ng; ++j)
    if (!is_pivot[j]) {
      free_pos[j] = static_cast<long>(s.basis_symbols_.size());
      s.basis_symbols_.push_back(gen_symbol[j]);
    }
  const std::size_t dim = s.basis_symbols_.size();
  RatMatrix gen_coords(ng, dim);
  for (std::size_t j = 0; j < ng; ++j)
    if (!is_pivot[j]) gen_coords(j, static_cast<std::size_t>(free_pos[j])) = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < ng; ++j)
      if (!is_pivot[j] && rel(r, j) != 0) gen_coords(pivots[r], static_cast<std::size_t>(free_pos[j])) = -rel(r, j);
  s.coords_ = RatMatrix(mu, dim);
  for (std::size_t i = 0; i < mu; ++i)
    if (gen[i] >= 0)
      for (std::size_t k = 0; k < dim; ++k) s.coords_(i, k) = gen_coords(static_cast<std::size_t>(gen[i]), k) * sign[i];

  // Boundary: (c:d) lifted to [[a,b],[c,d]] in SL2(Z) maps to [a/c] - [b/d].
  std::vector<std::pair<std::size_t, std::size_t>> ends(dim);
  std::vector<Cusp> cusps;
  auto cusp_id = [&](const Cusp& x) {
    for (std::size_t k = 0; k < cusps.size(); ++k)
      if (cusps_equivalent(cusps[k], x, N)) return k;
    cusps.push_back(x);
    return cusps.size() - 1;
  };
  for (std::size_t k = 0; k < dim; ++k) {
    auto [c, d] = s.symbols_[s.basis_symbols_[k]];
    Integer cc = c == 0 ? Integer(N) : Integer(c);
    Integer dd = d;
    while (gcd(cc, dd) != 1) dd += N;
    Integer x, y;
    gcdext(dd, cc, x, y);  // x dd + y cc = 1
    const Integer a = x, b = -y;
    ends[k] = {cusp_id(normalize_cusp(a, cc)), cusp_id(normalize_cusp(b, dd))};
  }
  for (const auto& cu : cusps) s.cusps_.emplace_back(cu.p, cu.q);
  s.boundary_ = RatMatrix(dim, cusps.size());
  for (std::size_t k = 0; k < dim; ++k) {
    s.boundary_(k, ends[k].first) += 1;
    s.boundary_(k, ends[k].second) -= 1;
  }

  // Star involution (c:d) -> -(-c:d).
  s.star_ = RatMatrix(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    auto [c, d] = s.symbols_[s.basis_symbols_[k]];
    const std::size_t j = static_cast<std::size_t>(s.symbol_index(-c, d));
    for (std::size_t m = 0; m < dim; ++m) s.star_(k, m) = -s.coords_(j, m);
  }

  s.cuspidal_dim_ = dim - rank(s.boundary_);

  // Integral plus-cuspidal lattice: Z-span of Manin symbols cut by [delta | star - I].
  RatMatrix star_minus = s.star_ - RatMatrix::identity(dim);
  RatMatrix W = hcat(s.boundary_, star_minus);
  const Integer l = row_denominator(s.coords_);
  IntMatrix zb = hnf(scaled_integer(s.coords_, l));
  RatMatrix B(zb.rows(), dim);
  for (std::size_t i = 0; i < zb.rows(); ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      B(i, j) = Rational(zb(i, j), l);
      B(i, j).canonicalize();
    }
  RatMatrix BW = B * W;
  RatMatrix BWt = BW.transpose();
  IntMatrix K = integer_kernel(scaled_integer(BWt, row_denominator(BWt)));
  RatMatrix L = to_rational(K) * B;
  const Integer l2 = row_denominator(L);
  IntMatrix zl = hnf(scaled_integer(L, l2));
  s.lattice_ = RatMatrix(zl.rows(), dim);
  for (std::size_t i = 0; i < zl.rows(); ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      s.lattice_(i, j) = Rational(zl(i, j), l2);
      s.lattice_(i, j).canonicalize();
    }
  const std::size_t g = s.lattice_.rows();
  if (g > 0) {
    RatMatrix t = s.lattice_;
    s.lattice_pivots_ = rref(t);
    RatMatrix sq(g, g);
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j) sq(i, j) = s.lattice_(i, s.lattice_pivots_[j]);
    auto inv = inverse(sq);
    if (!inv) throw Error(ErrorCode::Internal, "lattice basis is singular");
    s.lattice_pivot_inverse_ = *inv;
  }
  return s;
}

RatMatrix ModularSymbolSpace::ambient_hecke(long n) const {
  const auto mats = heilbronn_merel(n);
  const std::size_t dim = ambient_dimension();
  RatMatrix t(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const auto [c, d] = symbols_[basis_symbols_[k]];
    for (const auto& m : mats) {
      const long id = symbol_index(c * m[0] + d * m[2], c * m[1] + d * m[3]);
      if (id < 0) continue;
      for (std::size_t j = 0; j < dim; ++j) t(k, j) += coords_(static_cast<std::size_t>(id), j);
    }
  }
  return t;
}

IntMatrix ModularSymbolSpace::hecke(long n) const {
  const std::size_t g = lattice_.rows();
  RatMatrix img = lattice_ * ambient_hecke(n);
  RatMatrix sub(g, g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) sub(i, j) = img(i, lattice_pivots_[j]);
  RatMatrix z = sub * lattice_pivot_inverse_;
  if (z * lattice_ != img) throw Error(ErrorCode::Internal, "Hecke image leaves the plus-cuspidal subspace");
  return to_integer(z);
}

IntMatrix hecke_operator(const ModularSymbolSpace& space, long n) { return space.hecke(n); }

AlgebraicReal eigenvalue_in(const EigenOrbit& orbit, long n, std::size_t embedding) {
  auto it = orbit.eigenvalues.find(n);
  if (it == orbit.eigenvalues.end()) throw Error(ErrorCode::InvalidArgument, "eigenvalue a_" + std::to_string(n) + " not available");
  if (embedding >= orbit.embeddings.size()) throw Error(ErrorCode::InvalidArgument, "embedding index out of range");
  return AlgebraicReal(orbit.embeddings[embedding], it->second.coords());
}

namespace {

using AVec = std::vector<AlgebraicReal>;

// Column kernel of (H - a I) over a's field.
std::vector<AVec> eigen_kernel(const IntMatrix& h, const AlgebraicReal& a) {
  const std::size_t n = h.rows();
  const FieldPtr f = a.field();
  std::vector<AVec> m(n, AVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = AlgebraicReal(f, Rational(h(i, j)));
      if (i == j) m[i][j] = m[i][j] - a;
    }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t p = r;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) continue;
    std::swap(m[p], m[r]);
    const AlgebraicReal inv = m[r][c].inverse();
    for (auto& x : m[r]) x = x * inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const AlgebraicReal t = m[i][c];
      for (std::size_t j = 0; j < n; ++j) m[i][j] = m[i][j] - t * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<AVec> out;
  for (std::size_t fcol = 0; fcol < n; ++fcol) {
    if (is_pivot[fcol]) continue;
    AVec v(n, AlgebraicReal(f, Rational(0)));
    v[fcol] = AlgebraicReal(f, Rational(1));
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][fcol];
    out.push_back(std::move(v));
  }
  return out;
}

AVec apply(const IntMatrix& h, const AVec& v) {
  const FieldPtr f = v.front().field();
  AVec w(h.rows(), AlgebraicReal(f, Rational(0)));
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (h(i, j) != 0) w[i] = w[i] + AlgebraicReal(f, Rational(h(i, j))) * v[j];
  return w;
}

// a with H v = a v, if v is an eigenvector.
std::optional<AlgebraicReal> eigenvalue_of(const IntMatrix& h, const AVec& v) {
  AVec w = apply(h, v);
  std::size_t j = 0;
  while (j < v.size() && v[j].is_zero()) ++j;
  if (j == v.size()) return std::nullopt;
  AlgebraicReal a = w[j] / v[j];
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!(w[i] == a * v[i])) return std::nullopt;
  return a;
}

struct Candidate {
  std::string name;
  IntMatrix m;
};

std::vector<Candidate> separating_candidates(const ModularSymbolSpace& s, long bound) {
  std::vector<Candidate> out;
  std::map<long, IntMatrix> t;
  auto T = [&](long n) -> const IntMatrix& {
    auto it = t.find(n);
    if (it == t.end()) it = t.emplace(n, s.hecke(n)).first;
    return it->second;
  };
  std::set<long> used;
  for (long n = 2; n <= bound; ++n)
    if (is_prime(n) && s.level() % n != 0) {
      out.push_back({"T" + std::to_string(n), T(n)});
      used.insert(n);
    }
  for (long n = 2; n <= bound; ++n)
    if (!used.count(n)) out.push_back({"T" + std::to_string(n), T(n)});
  for (long c2 = -3; c2 <= 3; ++c2)
    for (long c3 = -3; c3 <= 3; ++c3) {
      if (c2 == 0 || c3 == 0) continue;
      IntMatrix m = Integer(c2) * T(2) + Integer(c3) * T(3);
      out.push_back({std::to_string(c2) + "*T2 + " + std::to_string(c3) + "*T3", m});
    }
  return out;
}

}  // namespace

OrbitDecomposition eigen_orbits(const ModularSymbolSpace& space, long hecke_bound, long separating_bound, bool detect_old) {
  OrbitDecomposition dec;
  dec.level = space.level();
  dec.genus = space.genus();
  if (dec.genus == 0) {
    dec.separated = true;
    return dec;
  }
  std::vector<Candidate> cands = separating_candidates(space, separating_bound);
  std::size_t best = cands.size(), best_distinct = 0;
  Factorization best_fac;
  bool found = false;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    IntPolynomial cp = charpoly(cands[i].m);
    // Operators at primes dividing N may have non-real eigenvalues; skip those.
    if (count_real_roots(squarefree_part(cp)) != squarefree_part(cp).degree()) continue;
    Factorization fac = factor_over_rationals(cp);
    bool sqfree = true;
    for (const auto& f : fac.factors) sqfree = sqfree && f.multiplicity == 1;
    if (sqfree) {
      best = i;
      best_fac = fac;
      found = true;
      break;
    }
    if (fac.factors.size() > best_distinct) {
      best_distinct = fac.factors.size();
      best = i;
      best_fac = fac;
    }
  }
  if (best == cands.size()) throw Error(ErrorCode::Internal, "no Hecke operator with real spectrum");
  dec.separated = found;
  dec.separating_operator = cands[best].name;
  dec.separating_matrix = cands[best].m;
  dec.separating_charpoly = charpoly(cands[best].m);
  if (!found)
    dec.diagnostic = "NonSeparating: no squarefree char poly among T2..T" + std::to_string(separating_bound) +
                     " and c2*T2 + c3*T3 with |c| <= 3; using " + cands[best].name + " with char poly " + to_string(dec.separating_charpoly);

  std::map<long, IntMatrix> hecke;
  for (long n = 1; n <= hecke_bound; ++n) hecke.emplace(n, space.hecke(n));

  for (const auto& pf : best_fac.factors) {
    EigenOrbit o;
    o.factor = pf.poly;
    o.degree = pf.poly.degree();
    o.multiplicity = pf.multiplicity;
    const auto roots = isolate_real_roots(pf.poly);
    o.totally_real = static_cast<int>(roots.size()) == o.degree;
    for (std::size_t e = 0; e < roots.size(); ++e) o.embeddings.push_back(RealNumberField::from_root_index(pf.poly, e));
    o.anosov_hecke = o.degree == dec.genus && o.multiplicity == 1;
    if (!o.embeddings.empty()) {
      const AlgebraicReal alpha = AlgebraicReal::generator(o.embeddings.front());
      auto ker = eigen_kernel(dec.separating_matrix, alpha);
      if (!ker.empty()) {
        const AVec& v = ker.front();
        for (const auto& [n, h] : hecke)
          if (auto a = eigenvalue_of(h, v)) o.eigenvalues.emplace(n, *a);
      }
    }
    dec.orbits.push_back(std::move(o));
  }
  std::sort(dec.orbits.begin(), dec.orbits.end(), [](const EigenOrbit& a, const EigenOrbit& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.factor.coefficients() < b.factor.coefficients();
  });

  if (detect_old) {
    const long N = space.level();
    for (long M = 1; M < N; ++M) {
      if (N % M != 0 || genus_formula(M) == 0) continue;
      OrbitDecomposition lower = eigen_orbits(ModularSymbolSpace::build(M), hecke_bound, separating_bound, false);
      for (auto& o : dec.orbits) {
        if (o.old_level) continue;
        for (const auto& lo : lower.orbits) {
          bool match = lo.degree == o.degree;
          bool compared = false;
          for (long p = 2; p <= hecke_bound && match; ++p) {
            if (!is_prime(p) || N % p == 0) continue;
            auto a = o.eigenvalues.find(p);
            auto b = lo.eigenvalues.find(p);
            if (a == o.eigenvalues.end() || b == lo.eigenvalues.end()) continue;
            match = a->second.minimal_polynomial() == b->second.minimal_polynomial();
            compared = true;
          }
          if (match && compared) {
            o.old_level = M;
            break;
          }
        }
      }
    }
  }
  return dec;
}

IntMatrix conjugate_by(const IntMatrix& h, const IntMatrix& u) {
  auto inv = inverse(to_rational(u));
  if (!inv) throw Error(ErrorCode::InvalidArgument, "basis change is singular");
  return to_integer(to_rational(u) * to_rational(h) * *inv);
}

bool is_eigenvector(const IntMatrix& h, const std::vector<AlgebraicReal>& v, const AlgebraicReal& a) {
  AVec w = apply(h, v);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!(w[i] == a * v[i])) return false;
  return true;
}

EigenvectorResult eigenvector_lattice(const ModularSymbolSpace& space, const OrbitDecomposition& dec,
                                      std::size_t orbit, std::size_t embedding, const std::vector<long>& positivity_bounds) {
  (void)space;
  if (orbit >= dec.orbits.size()) throw Error(ErrorCode::InvalidArgument, "orbit index out of range");
  const EigenOrbit& o = dec.orbits[orbit];
  if (!o.anosov_hecke)
    throw Error(ErrorCode::NotAnosov, "orbit of degree " + std::to_string(o.degree) + " at genus " + std::to_string(dec.genus));
  if (embedding >= o.embeddings.size()) throw Error(ErrorCode::InvalidArgument, "embedding index out of range");
  const AlgebraicReal alpha = AlgebraicReal::generator(o.embeddings[embedding]);
  auto ker = eigen_kernel(dec.separating_matrix, alpha);
  if (ker.size() != 1) throw Error(ErrorCode::Internal, "eigenspace of an Anosov-Hecke orbit is not a line");
  AVec v = ker.front();
  if (v[0].is_zero()) throw Error(ErrorCode::Internal, "eigenvector has vanishing first period");
  const AlgebraicReal v0 = v[0];
  for (auto& x : v) x = x / v0;

  EigenvectorResult r;
  r.raw = v;
  r.embedding = embedding;
  const std::size_t g = v.size();
  const FieldPtr f = v[0].field();
  // Lower triangular rows: row i = s e_i + sum_{j<i} c_j e_j, searched row by row.
  for (long bound : positivity_bounds) {
    IntMatrix U(g, g);
    bool ok = true;
    for (std::size_t i = 0; i < g && ok; ++i) {
      bool row_found = false;
      for (long s : {1L, -1L}) {
        AlgebraicReal base = AlgebraicReal(f, Rational(s)) * v[i];
        if (base.sign() > 0) {
          U(i, i) = s;
          row_found = true;
          break;
        }
      }
      for (long c = 1; c <= bound && !row_found; ++c)
        for (std::size_t j = 0; j < i && !row_found; ++j)
          for (long s : {1L, -1L})
            for (long cs : {c, -c}) {
              AlgebraicReal y = AlgebraicReal(f, Rational(s)) * v[i] + AlgebraicReal(f, Rational(cs)) * v[j];
              if (y.sign() > 0 && !row_found) {
                U(i, i) = s;
                U(i, j) = cs;
                row_found = true;
              }
            }
      ok = row_found;
    }
    if (!ok) continue;
    r.basis_change = U;
    r.search_bound = bound;
    r.lambda.assign(g, AlgebraicReal(f, Rational(0)));
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j)
        if (U(i, j) != 0) r.lambda[i] = r.lambda[i] + AlgebraicReal(f, Rational(U(i, j))) * v[j];
    const AlgebraicReal l0 = r.lambda[0];
    for (auto& x : r.lambda) x = x / l0;
    return r;
  }
  throw Error(ErrorCode::PositivityNotAchieved, "no all-positive image under the triangular unimodular search");
}

}  // namespace realmult
