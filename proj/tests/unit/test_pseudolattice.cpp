#include "helpers.hpp"

using namespace testing;

TEST_SUITE("pseudolattice") {

TEST_CASE("from_periods") {
  auto a = from_periods({AlgebraicReal(1), sqrt_of(2)});
  CHECK(a.rank() == 2);
  auto b = from_periods({AlgebraicReal(2), AlgebraicReal(2) * sqrt_of(2)});
  CHECK(b.rank() == 2);
  CHECK(b.contains(AlgebraicReal(2)));
  CHECK_FALSE(b.contains(AlgebraicReal(1)));
  auto c = from_periods({AlgebraicReal(1), AlgebraicReal(Rational(1, 2))});
  CHECK(c.rank() == 1);
  CHECK(c.contains(AlgebraicReal(Rational(1, 2))));
  CHECK(code_of([] { from_periods({}); }) == ErrorCode::EmptyModule);
}

TEST_CASE("equals") {
  auto m = from_periods({AlgebraicReal(1), sqrt_of(2)});
  CHECK(equals(m, transform(m, M({{2, 1}, {1, 1}}))));
  CHECK_FALSE(equals(m, from_periods({AlgebraicReal(1), AlgebraicReal(2) * sqrt_of(2)})));
  CHECK_FALSE(equals(m, scale(m, sqrt_of(2))));
  CHECK(equals(scale(m, sqrt_of(2)), from_periods({AlgebraicReal(2), sqrt_of(2)})));
}

TEST_CASE("is_proportional") {
  auto m = from_periods({AlgebraicReal(1), sqrt_of(2)});
  auto mu = is_proportional(m, scale(m, sqrt_of(2)));
  REQUIRE(mu);
  CHECK(*mu == sqrt_of(2));
  auto g = from_periods({AlgebraicReal(1), golden()});
  auto one = is_proportional(g, scale(g, golden()));
  REQUIRE(one);
  CHECK(*one == AlgebraicReal(1));
  CHECK(equals(g, scale(g, golden())));
  CHECK_FALSE(is_proportional(m, from_periods({AlgebraicReal(1), sqrt_of(3)})));
}

TEST_CASE("endomorphism_ring") {
  auto e2 = endomorphism_ring(from_periods({AlgebraicReal(1), sqrt_of(2)}));
  REQUIRE(e2.certificate);
  CHECK(e2.real_multiplication);
  CHECK(e2.certificate->D == 8);
  CHECK(e2.certificate->dK == 8);
  CHECK(e2.certificate->f == 1);
  auto e5 = endomorphism_ring(from_periods({AlgebraicReal(1), golden()}));
  REQUIRE(e5.certificate);
  CHECK(e5.certificate->D == 5);
  CHECK(e5.certificate->f == 1);
  auto e32 = rm_certificate(AlgebraicReal(2) * sqrt_of(2));
  CHECK(e32.min_poly == P({-8, 0, 1}));
  CHECK(e32.D == 32);
  CHECK(e32.dK == 8);
  CHECK(e32.f == 2);
  // cubic: End = Z
  FieldPtr f = RealNumberField::from_root_index(P({-2, 0, 0, 1}), 0);
  auto e3 = endomorphism_ring(from_periods({AlgebraicReal(1), AlgebraicReal::generator(f)}));
  CHECK_FALSE(e3.real_multiplication);
  CHECK(e3.theta_degree == 3);
}

TEST_CASE("RM certificate is invariant under positive unimodular changes") {
  auto base = rm_certificate(sqrt_of(7));
  // theta -> (a theta + b) / (c theta + d)
  const long mats[][4] = {{1, 3, 0, 1}, {0, 1, 1, 0}, {2, 1, 1, 1}, {5, 2, 2, 1}};
  for (const auto& u : mats) {
    AlgebraicReal t = (AlgebraicReal(Integer(u[0])) * sqrt_of(7) + AlgebraicReal(Integer(u[1]))) /
                      (AlgebraicReal(Integer(u[2])) * sqrt_of(7) + AlgebraicReal(Integer(u[3])));
    auto c = rm_certificate(t);
    CHECK(c.D == base.D);
    CHECK(c.canonical_form == base.canonical_form);
  }
}

TEST_CASE("hecke_project") {
  auto a = hecke_project(from_periods({AlgebraicReal(1), golden()}));
  CHECK(equals(a, from_periods({AlgebraicReal(1), golden()})));
  FieldPtr f = RealNumberField::from_root_index(P({-2, 0, 0, 1}), 0);
  auto c = AlgebraicReal::generator(f);
  // (2, 2 sqrt 2, anything) in the compositum
  auto v = to_common_field({AlgebraicReal(2), AlgebraicReal(2) * sqrt_of(2), c});
  auto b = hecke_project(from_periods(v));
  CHECK(b.rank() == 2);
  CHECK(b.contains(AlgebraicReal(b.field(), Rational(1))));
  CHECK(minimal_polynomial(b.generators()[1] / b.generators()[0]) == P({-2, 0, 1}));
  CHECK(code_of([] { hecke_project(from_periods({AlgebraicReal(1), AlgebraicReal(Rational(3, 2))})); }) == ErrorCode::RationalSlope);
}

TEST_CASE("tau_truncate") {
  auto a = tau_truncate(M({{1, 2}, {2, 3}}));
  CHECK(a.tau == M({{1, 2}, {2, 3}}));
  CHECK_FALSE(a.asymmetric);
  auto b = tau_truncate(M({{1, 2, 9}, {2, 3, 9}, {9, 9, 9}}));
  CHECK(b.tau == M({{1, 2}, {2, 3}}));
  auto c = tau_truncate(M({{1, 2}, {4, 3}}));
  CHECK(c.asymmetric);
  CHECK(c.symmetrized);
  CHECK(c.tau == M({{1, 3}, {3, 3}}));
  auto d = tau_truncate(M({{1, 2}, {3, 3}}));
  CHECK(d.asymmetric);
  CHECK_FALSE(d.symmetrized);
}

TEST_CASE("rm_quadratic_check") {
  AlgebraicReal t = (sqrt_of(5) - AlgebraicReal(1)) / AlgebraicReal(2);
  auto a = rm_quadratic_check(t, M({{2, 1}, {1, 1}}));
  CHECK(a.holds);
  CHECK(a.quadratic == P({-1, 1, 1}));
  auto b = rm_quadratic_check(t, M({{0, 1}, {1, 0}}));
  CHECK_FALSE(b.holds);
  CHECK_FALSE(b.residual.is_zero());
  CHECK_FALSE(rm_quadratic_check(sqrt_of(2), M({{0, 1}, {1, 0}})).holds);
}

TEST_CASE("cover_degree") {
  CHECK(cover_degree(2) == 3);
  CHECK(cover_degree(1) == 1);
  CHECK(cover_degree(5) == 9);
}

}
