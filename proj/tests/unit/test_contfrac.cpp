#include "helpers.hpp"

using namespace testing;

namespace {

std::vector<Integer> Z(std::initializer_list<long> xs) {
  std::vector<Integer> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Perron root of x^3 - x^2 - x - 1 and the state ((1 + l) / l, l).
std::pair<AlgebraicReal, JPState> tribonacci() {
  FieldPtr f = RealNumberField::from_root_index(P({-1, -1, -1, 1}), 0);
  AlgebraicReal l = AlgebraicReal::generator(f);
  return {l, JPState({(AlgebraicReal(1) + l) / l, l})};
}

}  // namespace

TEST_SUITE("contfrac") {

TEST_CASE("cf_expand") {
  auto g = cf_expand(golden());
  CHECK(g.preperiod.empty());
  CHECK(g.period == Z({1}));
  auto r2 = cf_expand(sqrt_of(2));
  CHECK(r2.preperiod == Z({1}));
  CHECK(r2.period == Z({2}));
  auto r3 = cf_expand(sqrt_of(3));
  CHECK(r3.preperiod == Z({1}));
  CHECK(r3.period == Z({1, 2}));
}

TEST_CASE("cf_value inverts cf_expand") {
  for (long d : {2, 3, 5, 7, 13, 19, 46, 94, 151}) {
    AlgebraicReal x = sqrt_of(d) / AlgebraicReal(3) + AlgebraicReal(Rational(2, 7));
    CHECK(cf_value(cf_expand(x)) == x);
  }
  CHECK(code_of([] { cf_expand(AlgebraicReal(Rational(5, 3))); }) == ErrorCode::DegenerateRational);
}

TEST_CASE("cf_digits agree with the surd expansion") {
  AlgebraicReal x = sqrt_of(94);
  auto cf = cf_expand(x);
  auto d = cf_digits(x, 60);
  REQUIRE(d.size() == 60);
  for (std::size_t i = 0; i < d.size(); ++i) {
    Integer expect = i < cf.preperiod.size() ? cf.preperiod[i] : cf.period[(i - cf.preperiod.size()) % cf.period.size()];
    CHECK(d[i] == expect);
  }
}

TEST_CASE("jp_step") {
  auto s = jp_step(JPState({golden()}));
  CHECK(s.digits == Z({1}));
  CHECK(s.next.theta()[0] == golden());
  auto r = jp_step(JPState({sqrt_of(2)}));
  CHECK(r.digits == Z({1}));
  CHECK(r.next.theta()[0] == sqrt_of(2) + AlgebraicReal(1));
  auto [l, st] = tribonacci();
  auto t = jp_step(st);
  CHECK(t.digits == Z({1, 1}));
  CHECK(t.next == st);
}

TEST_CASE("JPState validation") {
  CHECK(code_of([] { JPState({-sqrt_of(2)}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { JPState({sqrt_of(2), sqrt_of(2) + AlgebraicReal(1)}); }) == ErrorCode::DegenerateRational);
  CHECK(code_of([] { JPState(std::vector<AlgebraicReal>{}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("jp_expand") {
  auto g = jp_expand(JPState({golden()}));
  CHECK(g.status == JPStatus::periodic);
  CHECK(g.period_digits.size() == 1);
  CHECK(g.period_matrix == M({{0, 1}, {1, 1}}));
  auto r = jp_expand(JPState({sqrt_of(2)}));
  CHECK(r.status == JPStatus::periodic);
  CHECK(r.preperiod_digits.size() == 1);
  CHECK(r.period_digits.size() == 1);
  CHECK(r.period_matrix == M({{0, 1}, {1, 2}}));
  auto t = jp_expand(tribonacci().second);
  CHECK(t.status == JPStatus::periodic);
  CHECK(t.preperiod_digits.empty());
  CHECK(t.period_digits.size() == 1);
  CHECK(t.period_matrix == M({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}}));
}

TEST_CASE("jp_expand on a Bernstein cubic pair is periodic") {
  // (2^(1/3), 4^(1/3)) lies in the family cbrt(D^3 + d) with D = d = 1
  FieldPtr f = RealNumberField::from_root_index(P({-2, 0, 0, 1}), 0);
  AlgebraicReal c = AlgebraicReal::generator(f);
  auto e = jp_expand(JPState({c, c * c}), 100);
  CHECK(e.status == JPStatus::periodic);
  CHECK(verify_perron_eigenvector(e.period_matrix, JPState(e.period_state), hecke_unit(e)));
}

TEST_CASE("jp_expand reports the step bound instead of looping") {
  auto c = compositum(quadratic_field(Integer(2)), quadratic_field(Integer(3)));
  auto e = jp_expand(JPState({c.alpha, c.beta}), 30);
  CHECK(e.status == JPStatus::not_periodic_within_bound);
  CHECK(e.steps == 30);
}

TEST_CASE("hecke_unit") {
  auto g = hecke_unit(jp_expand(JPState({golden()})));
  CHECK(g.char_poly == P({-1, -1, 1}));
  CHECK(g.value == golden());
  auto r = hecke_unit(jp_expand(JPState({sqrt_of(2)})));
  CHECK(r.char_poly == P({-1, -2, 1}));
  CHECK(r.value == AlgebraicReal(1) + sqrt_of(2));
  auto [l, st] = tribonacci();
  auto t = hecke_unit(jp_expand(st));
  CHECK(t.char_poly == P({-1, -1, -1, 1}));
  CHECK(t.value == l);
  CHECK(t.value.approx() == doctest::Approx(1.8393).epsilon(1e-4));
  CHECK(code_of([] {
          JacobiPerronExpansion e;
          hecke_unit(e);
        }) == ErrorCode::NotPeriodic);
}

TEST_CASE("verify_perron_eigenvector") {
  auto g = jp_expand(JPState({golden()}));
  CHECK(verify_perron_eigenvector(g.period_matrix, JPState(g.period_state), hecke_unit(g)));
  auto r = jp_expand(JPState({sqrt_of(2)}));
  CHECK(verify_perron_eigenvector(r.period_matrix, JPState(r.period_state), hecke_unit(r)));
  CHECK(r.period_state[0] == AlgebraicReal(1) + sqrt_of(2));
  auto [l, st] = tribonacci();
  auto t = jp_expand(st);
  CHECK(verify_perron_eigenvector(t.period_matrix, st, hecke_unit(t)));
  // wrong matrix
  CHECK_FALSE(verify_perron_eigenvector(M({{0, 1}, {1, 2}}), JPState({golden()}), hecke_unit(g)));
}

TEST_CASE("lambda_in_state_field") {
  auto r = jp_expand(JPState({sqrt_of(2)}));
  AlgebraicReal l = lambda_in_state_field(r);
  CHECK(l == AlgebraicReal(1) + sqrt_of(2));
}

TEST_CASE("check_convergence shrinks") {
  auto r = jp_expand(JPState({sqrt_of(7)}));
  auto c = check_convergence(r, 4);
  REQUIRE(c.error_upper.size() == 4);
  CHECK(c.error_upper.back() < c.error_upper.front());
  CHECK(c.monotone);
}

}
