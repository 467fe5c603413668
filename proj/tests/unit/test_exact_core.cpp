#include "helpers.hpp"

using namespace testing;

TEST_SUITE("exact-core") {

TEST_CASE("isolate_real_roots") {
  auto r = isolate_real_roots(P({-2, 0, 1}));
  REQUIRE(r.size() == 2);
  CHECK(r[0].hi <= 0);
  CHECK(r[1].lo >= 0);
  CHECK(r[1].lo * r[1].lo < 2);
  CHECK(r[1].hi * r[1].hi > 2);
  CHECK(r[0].lo * r[0].lo > 2);
  CHECK(isolate_real_roots(P({1, 0, 1})).empty());
  auto three = isolate_real_roots(P({-6, 11, -6, 1}));
  REQUIRE(three.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(three[i].contains(Rational(static_cast<long>(i) + 1)));
  for (std::size_t i = 0; i + 1 < 3; ++i) CHECK(three[i].hi <= three[i + 1].lo);
}

TEST_CASE("isolated intervals hold exactly one root under Sturm counting") {
  const IntPolynomial ps[] = {P({-1, -1, -1, 1}), P({1, -10, 0, 1}), P({-5, 0, -5, 0, 1}), P({1, 0, -10, 0, 1})};
  for (const auto& p : ps) {
    auto seq = sturm_sequence(p);
    auto iv = isolate_real_roots(p);
    CHECK(static_cast<int>(iv.size()) == count_real_roots(p));
    for (const auto& i : iv) CHECK(isolates_one_root(p, i));
  }
}

TEST_CASE("factor_over_rationals") {
  auto f = factor_over_rationals(P({-1, 0, 1}));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.expand() == P({-1, 0, 1}));
  CHECK(is_irreducible(P({-1, 1, 1})));
  auto g = factor_over_rationals(P({-1, 0, 0, 0, 1}));
  REQUIRE(g.factors.size() == 3);
  CHECK(g.expand() == P({-1, 0, 0, 0, 1}));
  bool has_quadratic = false;
  for (const auto& x : g.factors) has_quadratic = has_quadratic || x.poly == P({1, 0, 1});
  CHECK(has_quadratic);
}

TEST_CASE("factor_over_rationals: products of known irreducibles") {
  const IntPolynomial a = P({-1, -1, 1}), b = P({-2, 0, 0, 1}), c = P({1, 1, 0, 0, 1}), d = P({3, 1});
  IntPolynomial prod = a * a * b * c * d;
  auto f = factor_over_rationals(prod);
  CHECK(f.expand() == prod);
  CHECK(f.factors.size() == 4);
  for (const auto& x : f.factors) CHECK(is_irreducible(x.poly));
  CHECK(code_of([] { factor_over_rationals(IntPolynomial()); }) == ErrorCode::ZeroPolynomial);
}

TEST_CASE("minimal_polynomial") {
  CHECK(minimal_polynomial(AlgebraicReal(Rational(3, 2))) == P({-3, 2}));
  CHECK(minimal_polynomial(sqrt_of(5)) == P({-5, 0, 1}));
  CHECK(minimal_polynomial(golden()) == P({-1, -1, 1}));
  // 3/2 written in a quadratic field
  AlgebraicReal q(quadratic_field(Integer(7)), Rational(3, 2));
  CHECK(minimal_polynomial(q) == P({-3, 2}));
}

TEST_CASE("compare and floor") {
  CHECK(compare(sqrt_of(2), AlgebraicReal(Rational(141, 100))) == Ordering::greater);
  CHECK(compare(golden(), golden()) == Ordering::equal);
  CHECK(compare(-sqrt_of(2), AlgebraicReal(0)) == Ordering::less);
  CHECK(floor(sqrt_of(2)) == 1);
  CHECK(floor(golden()) == 1);
  CHECK(floor(-sqrt_of(2)) == -2);
  // a value extremely close to an integer
  AlgebraicReal near = sqrt_of(2) * AlgebraicReal(Integer(985)) - AlgebraicReal(Integer(1393));  // ~3.6e-4
  CHECK(floor(near) == 0);
  CHECK(near.sign() == 1);
}

TEST_CASE("field arithmetic round trips") {
  AlgebraicReal g = golden();
  CHECK(g * g == g + AlgebraicReal(1));
  CHECK(g.inverse() == g - AlgebraicReal(1));
  CHECK((g / g) == AlgebraicReal(1));
  CHECK(g.pow(10) == AlgebraicReal(Integer(55)) * g + AlgebraicReal(Integer(34)));
}

TEST_CASE("canonical text form round trips") {
  AlgebraicReal x = AlgebraicReal::parse("poly=-1,-1,1;root=1/1,2/1;coords=0,1");
  CHECK(x == golden());
  CHECK(AlgebraicReal::parse(x.to_canonical()) == x);
  CHECK(AlgebraicReal::parse(x.to_canonical()).to_canonical() == x.to_canonical());
  CHECK(code_of([] { AlgebraicReal::parse("poly=1,0,1;root=0/1,1/1;coords=0,1"); }) != ErrorCode::Internal);
  CHECK(code_of([] { AlgebraicReal::parse("garbage"); }) == ErrorCode::ParseError);
}

TEST_CASE("compositum of Q(sqrt 2) and Q(sqrt 3)") {
  auto c = compositum(quadratic_field(Integer(2)), quadratic_field(Integer(3)));
  CHECK(c.field->degree() == 4);
  CHECK(c.alpha * c.alpha == AlgebraicReal(c.field, Rational(2)));
  CHECK(c.beta * c.beta == AlgebraicReal(c.field, Rational(3)));
  CHECK(c.alpha.sign() == 1);
  CHECK(c.beta.sign() == 1);
  auto all = to_common_field({sqrt_of(2), sqrt_of(3), golden()});
  CHECK(all[0] * all[1] * all[0] * all[1] == AlgebraicReal(all[0].field(), Rational(6)));
}

TEST_CASE("compositum with a field generated twice under different polynomials") {
  // Q(sqrt 5) from x^2 - 5 and from x^2 - x - 1
  FieldPtr a = quadratic_field(Integer(5));
  FieldPtr b = RealNumberField::from_root_index(P({-1, -1, 1}), 1);
  auto all = to_common_field({AlgebraicReal::generator(a), AlgebraicReal::generator(b)});
  CHECK(all[0] == all[1] * AlgebraicReal(Integer(2)) - AlgebraicReal(1));
}

TEST_CASE("matrix charpoly, determinant, hnf") {
  CHECK(charpoly(M({{0, 1}, {1, 1}})) == P({-1, -1, 1}));
  CHECK(charpoly(M({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}})) == P({-1, -1, -1, 1}));
  CHECK(determinant(M({{2, 1}, {1, 1}})) == 1);
  IntMatrix h = hnf(M({{4, 6}, {2, 3}, {0, 5}}));
  CHECK(h.rows() >= 2);
  CHECK(integer_kernel(M({{1, 2, 3}})).rows() == 2);
}

}
