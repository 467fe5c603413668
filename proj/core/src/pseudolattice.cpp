#include "realmult/pseudolattice.hpp"

#include <set>

#include "realmult/errors.hpp"
#include "realmult/quadratic_surd.hpp"

namespace realmult {

namespace {

Integer common_denominator(const std::vector<AlgebraicReal>& xs) {
  Integer l = 1;
  for (const auto& x : xs)
    for (const auto& c : x.coords()) l = lcm(l, c.get_den());
  return l;
}

// HNF of the coordinate rows scaled by l; xs must share a field of degree d.
IntMatrix coordinate_hnf(const std::vector<AlgebraicReal>& xs, const Integer& l, std::size_t d) {
  IntMatrix m(xs.size(), d);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Rational v = xs[i].coords()[j] * l;
      m(i, j) = v.get_num();
    }
  return hnf(m);
}

std::size_t field_degree(const std::vector<AlgebraicReal>& xs) {
  std::size_t d = 1;
  for (const auto& x : xs) d = std::max(d, static_cast<std::size_t>(x.field()->degree()));
  return d;
}

// Lift degree-1 stragglers so every coordinate vector has full length.
std::vector<AlgebraicReal> uniform(std::vector<AlgebraicReal> xs) {
  xs = to_common_field(xs);
  FieldPtr f;
  for (const auto& x : xs)
    if (!f || x.field()->degree() > f->degree()) f = x.field();
  for (auto& x : xs)
    if (x.field()->degree() != f->degree()) x = AlgebraicReal(f, x.rational_value());
  return xs;
}

bool same_span(const std::vector<AlgebraicReal>& a, const std::vector<AlgebraicReal>& b) {
  std::vector<AlgebraicReal> all = a;
  all.insert(all.end(), b.begin(), b.end());
  const Integer l = common_denominator(all);
  const std::size_t d = field_degree(all);
  return coordinate_hnf(a, l, d) == coordinate_hnf(b, l, d);
}

}  // namespace

PseudoLattice from_periods(const std::vector<AlgebraicReal>& periods) {
  bool any = false;
  for (const auto& p : periods) any = any || !p.is_zero();
  if (!any) throw Error(ErrorCode::EmptyModule, "all periods vanish");
  PseudoLattice m;
  m.generators_ = uniform(periods);
  m.field_ = m.generators_.front().field();
  const std::size_t d = static_cast<std::size_t>(m.field_->degree());
  const Integer l = common_denominator(m.generators_);
  IntMatrix h = coordinate_hnf(m.generators_, l, d);
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::vector<Rational> c(d);
    for (std::size_t j = 0; j < d; ++j) {
      c[j] = Rational(h(i, j), l);
      c[j].canonicalize();
    }
    m.basis_.emplace_back(m.field_, std::move(c));
  }
  return m;
}

PseudoLattice PseudoLattice::normalized() const {
  const AlgebraicReal& first = generators_.front();
  if (first.is_zero()) throw Error(ErrorCode::InvalidArgument, "first generator vanishes");
  std::vector<AlgebraicReal> g;
  for (const auto& x : generators_) g.push_back(x / first);
  return from_periods(g);
}

bool PseudoLattice::contains(const AlgebraicReal& x) const {
  std::vector<AlgebraicReal> all = basis_;
  all.push_back(x);
  all = uniform(all);
  std::vector<AlgebraicReal> b(all.begin(), all.end() - 1);
  return same_span(b, all);
}

PseudoLattice scale(const PseudoLattice& m, const AlgebraicReal& mu) {
  std::vector<AlgebraicReal> all = m.generators();
  all.push_back(mu);
  all = uniform(all);
  std::vector<AlgebraicReal> g;
  for (std::size_t i = 0; i + 1 < all.size(); ++i) g.push_back(all[i] * all.back());
  return from_periods(g);
}

PseudoLattice transform(const PseudoLattice& m, const IntMatrix& u) {
  const auto& g = m.generators();
  if (u.cols() != g.size()) throw Error(ErrorCode::InvalidArgument, "basis change has the wrong width");
  std::vector<AlgebraicReal> out;
  for (std::size_t i = 0; i < u.rows(); ++i) {
    AlgebraicReal s(g.front().field(), Rational(0));
    for (std::size_t j = 0; j < g.size(); ++j) s = s + AlgebraicReal(g.front().field(), Rational(u(i, j))) * g[j];
    out.push_back(s);
  }
  return from_periods(out);
}

bool equals(const PseudoLattice& a, const PseudoLattice& b) {
  if (a.rank() != b.rank()) return false;
  std::vector<AlgebraicReal> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  all = uniform(all);
  std::vector<AlgebraicReal> xa(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(a.rank()));
  std::vector<AlgebraicReal> xb(all.begin() + static_cast<std::ptrdiff_t>(a.rank()), all.end());
  return same_span(xa, xb);
}

std::optional<AlgebraicReal> is_proportional(const PseudoLattice& a, const PseudoLattice& b, long bound) {
  if (a.rank() != b.rank()) return std::nullopt;
  std::vector<AlgebraicReal> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  all = uniform(all);
  const std::size_t r = a.rank();
  std::vector<AlgebraicReal> xa(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(r));
  std::vector<AlgebraicReal> xb(all.begin() + static_cast<std::ptrdiff_t>(r), all.end());
  const FieldPtr f = all.front().field();

  std::set<std::string> tried;
  auto attempt = [&](AlgebraicReal mu) -> std::optional<AlgebraicReal> {
    if (mu.is_zero()) return std::nullopt;
    if (mu.sign() < 0) mu = -mu;
    if (!tried.insert(mu.coords_key()).second) return std::nullopt;
    std::vector<AlgebraicReal> scaled;
    for (const auto& x : xa) scaled.push_back(x * mu);
    if (same_span(scaled, xb)) return mu;
    return std::nullopt;
  };

  if (auto mu = attempt(AlgebraicReal(f, Rational(1)))) return mu;
  for (const auto& y : xb)
    for (const auto& x : xa)
      if (auto mu = attempt(y / x)) return mu;
  // Bounded combinations of b's basis over each basis element of a.
  if (r <= 2) {
    for (long c0 = -bound; c0 <= bound; ++c0)
      for (long c1 = (r == 2 ? -bound : 0); c1 <= (r == 2 ? bound : 0); ++c1) {
        AlgebraicReal y = AlgebraicReal(f, Rational(c0)) * xb[0];
        if (r == 2) y = y + AlgebraicReal(f, Rational(c1)) * xb[1];
        if (y.is_zero()) continue;
        for (const auto& x : xa)
          if (auto mu = attempt(y / x)) return mu;
      }
  }
  return std::nullopt;
}

AlgebraicReal canonical_theta(const AlgebraicReal& theta, std::array<Integer, 3>* form_out) {
  QuadraticSurd s0 = QuadraticSurd::from_algebraic(theta);
  SurdExpansion e = expand_surd(s0);
  std::size_t best = 0;
  std::array<Integer, 3> best_form = e.cycle[0].form();
  for (std::size_t i = 1; i < e.cycle.size(); ++i) {
    auto f = e.cycle[i].form();
    if (f < best_form) {
      best_form = f;
      best = i;
    }
  }
  if (form_out) *form_out = best_form;
  const FieldPtr f = theta.field();
  // sqrt(D) = Q0 * theta - P0 in theta's field.
  AlgebraicReal root_d = AlgebraicReal(f, Rational(s0.Q)) * theta - AlgebraicReal(f, Rational(s0.P));
  const QuadraticSurd& c = e.cycle[best];
  return (AlgebraicReal(f, Rational(c.P)) + root_d) * AlgebraicReal(f, Rational(1) / Rational(c.Q));
}

RMCertificate rm_certificate(const AlgebraicReal& theta) {
  RMCertificate cert;
  cert.theta = theta;
  cert.min_poly = theta.minimal_polynomial();
  if (cert.min_poly.degree() != 2) throw Error(ErrorCode::WrongDegree, "real multiplication needs a quadratic slope");
  cert.canonical_theta = canonical_theta(theta, &cert.canonical_form);
  const Integer a = cert.min_poly.coeff(2), b = cert.min_poly.coeff(1), c = cert.min_poly.coeff(0);
  cert.D = b * b - 4 * a * c;
  cert.dK = fundamental_discriminant(cert.D, cert.f);
  return cert;
}

EndomorphismRing endomorphism_ring(const PseudoLattice& m) {
  if (m.rank() != 2) throw Error(ErrorCode::InvalidArgument, "endomorphism ring needs a rank-2 module, got rank " + std::to_string(m.rank()));
  EndomorphismRing out;
  AlgebraicReal theta = m.basis()[1] / m.basis()[0];
  out.theta_degree = theta.minimal_polynomial().degree();
  if (out.theta_degree == 2) {
    out.real_multiplication = true;
    out.certificate = rm_certificate(theta);
  }
  return out;
}

PseudoLattice hecke_project(const PseudoLattice& jac) {
  if (jac.input_count() < 2) throw Error(ErrorCode::InvalidArgument, "projection needs at least two generators");
  const auto& g = jac.generators();
  if (g[0].is_zero()) throw Error(ErrorCode::InvalidArgument, "first generator vanishes");
  AlgebraicReal theta = g[1] / g[0];
  if (theta.is_rational()) throw Error(ErrorCode::RationalSlope, "lambda_2 / lambda_1 = " + theta.rational_value().get_str() + " is rational");
  return from_periods({AlgebraicReal(theta.field(), Rational(1)), theta});
}

TauResult tau_truncate(const IntMatrix& t) {
  if (t.rows() < 2 || t.cols() < 2 || !t.is_square()) throw Error(ErrorCode::InvalidArgument, "tau_truncate needs a square matrix of size at least 2");
  TauResult r;
  r.tau = IntMatrix(2, 2);
  r.tau(0, 0) = t(0, 0);
  r.tau(1, 1) = t(1, 1);
  r.tau(0, 1) = t(0, 1);
  r.tau(1, 0) = t(1, 0);
  if (t(0, 1) != t(1, 0)) {
    r.asymmetric = true;
    Integer s = t(0, 1) + t(1, 0);
    if (s % 2 == 0) {
      r.symmetrized = true;
      r.tau(0, 1) = r.tau(1, 0) = s / 2;
    }
  }
  return r;
}

RMQuadraticCheck rm_quadratic_check(const AlgebraicReal& theta, const IntMatrix& tau) {
  if (tau.rows() != 2 || tau.cols() != 2) throw Error(ErrorCode::InvalidArgument, "tau must be 2x2");
  RMQuadraticCheck out;
  out.quadratic = IntPolynomial({-tau(0, 1), tau(0, 0) - tau(1, 1), tau(0, 1)});
  out.residual = evaluate(out.quadratic, theta);
  out.holds = out.residual.is_zero();
  return out;
}

int cover_degree(int g) {
  if (g < 1) throw Error(ErrorCode::InvalidArgument, "genus must be at least 1");
  return 2 * g - 1;
}

}  // namespace realmult
