#include "helpers.hpp"
#include "oracles.hpp"

using namespace testing;

TEST_SUITE("modsym") {

TEST_CASE("genus_formula") {
  CHECK(genus_formula(11) == 1);
  CHECK(genus_formula(23) == 2);
  CHECK(genus_formula(37) == 2);
  auto g = genus_data(11);
  CHECK(g.mu == 12);
  CHECK(g.nu2 == 0);
  CHECK(g.nu3 == 0);
  CHECK(g.cusps == 2);
  for (long N = 1; N <= 60; ++N) {
    auto o = oracle::genus(N);
    auto d = genus_data(N);
    CHECK(d.mu == o.mu);
    CHECK(d.nu2 == o.nu2);
    CHECK(d.nu3 == o.nu3);
    CHECK(d.cusps == o.cusps);
    CHECK(d.genus == o.genus);
  }
}

TEST_CASE("build_space") {
  CHECK(build_space(11).genus() == 1);
  CHECK(build_space(23).genus() == 2);
  CHECK(build_space(15).genus() == 1);
  auto s = build_space(23);
  CHECK(s.manin_count() == 24);
  CHECK(s.cuspidal_dimension() == 4);
  CHECK(s.cusp_count() == 2);
  CHECK(code_of([] { build_space(0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("hecke_operator") {
  CHECK(hecke_operator(build_space(11), 2) == M({{-2}}));
  auto t2 = hecke_operator(build_space(23), 2);
  CHECK(charpoly(t2) == P({-1, 1, 1}));
  CHECK(hecke_operator(build_space(23), 1) == IntMatrix::identity(2));
}

TEST_CASE("Hecke traces match the Eichler-Selberg trace formula") {
  for (long N : {11, 14, 15, 17, 19, 20, 21, 23, 24, 26, 27, 29, 30, 31, 33, 35, 37, 39, 40, 41, 43, 45, 49}) {
    auto s = build_space(N);
    for (long n = 2; n <= 13; ++n) {
      if (std::gcd(n, N) != 1) continue;
      IntMatrix t = s.hecke(n);
      Integer tr = 0;
      for (std::size_t i = 0; i < t.rows(); ++i) tr += t(i, i);
      CAPTURE(N);
      CAPTURE(n);
      CHECK(Rational(tr) == oracle::hecke_trace(N, n));
    }
  }
}

TEST_CASE("eigen_orbits") {
  auto d23 = eigen_orbits(build_space(23));
  REQUIRE(d23.orbits.size() == 1);
  CHECK(d23.orbits[0].factor == P({-1, 1, 1}));
  CHECK(d23.orbits[0].anosov_hecke);
  CHECK(d23.orbits[0].totally_real);
  auto d11 = eigen_orbits(build_space(11));
  REQUIRE(d11.orbits.size() == 1);
  CHECK(d11.orbits[0].degree == 1);
  CHECK(d11.orbits[0].anosov_hecke);
  auto d37 = eigen_orbits(build_space(37));
  REQUIRE(d37.orbits.size() == 2);
  for (const auto& o : d37.orbits) {
    CHECK(o.degree == 1);
    CHECK_FALSE(o.anosov_hecke);
  }
}

TEST_CASE("eigenvalues match the Hecke matrices") {
  for (long N : {23, 29, 31, 37, 43}) {
    auto s = build_space(N);
    auto dec = eigen_orbits(s);
    int total = 0;
    for (const auto& o : dec.orbits) total += o.degree * o.multiplicity;
    CHECK(total == s.genus());
    for (const auto& o : dec.orbits)
      for (long n : {2L, 3L, 5L}) CHECK(evaluate(charpoly(s.hecke(n)), o.eigenvalues.at(n)).is_zero());
  }
}

TEST_CASE("oldforms at level 22 are reported") {
  auto d = eigen_orbits(build_space(22));
  bool old = false;
  for (const auto& o : d.orbits) old = old || (o.old_level && *o.old_level == 11);
  CHECK(old);
}

TEST_CASE("eigenvector_lattice") {
  auto s11 = build_space(11);
  auto d11 = eigen_orbits(s11);
  auto e11 = eigenvector_lattice(s11, d11, 0, 0);
  REQUIRE(e11.lambda.size() == 1);
  CHECK(e11.lambda[0] == AlgebraicReal(1));

  auto s = build_space(23);
  auto d = eigen_orbits(s);
  auto a = eigenvector_lattice(s, d, 0, 0);
  auto b = eigenvector_lattice(s, d, 0, 1);
  REQUIRE(a.lambda.size() == 2);
  CHECK(a.lambda[0] == AlgebraicReal(1));
  for (const auto& x : a.lambda) CHECK(x.sign() == 1);
  for (const auto& x : b.lambda) CHECK(x.sign() == 1);
  CHECK(minimal_polynomial(a.lambda[1]).degree() == 2);
  for (long n = 1; n <= 12; ++n) {
    CHECK(is_eigenvector(conjugate_by(s.hecke(n), a.basis_change), a.lambda, eigenvalue_in(d.orbits[0], n, 0)));
    CHECK(is_eigenvector(conjugate_by(s.hecke(n), b.basis_change), b.lambda, eigenvalue_in(d.orbits[0], n, 1)));
  }
  // the two embeddings give Galois conjugate raw vectors
  CHECK(a.raw[1].field()->polynomial() == b.raw[1].field()->polynomial());
  CHECK(a.raw[1].coords() == b.raw[1].coords());
  CHECK(compare(a.raw[1], AlgebraicReal(b.raw[1].field(), a.raw[1].coords())) != Ordering::equal);

  auto s37 = build_space(37);
  auto d37 = eigen_orbits(s37);
  CHECK(code_of([&] { eigenvector_lattice(s37, d37, 0, 0); }) == ErrorCode::NotAnosov);
}

}
