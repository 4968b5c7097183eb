#include <doctest.h>

#include "support.hpp"

using namespace quadlie;
using quadlie::testing::Rng;

TEST_SUITE("exactlin") {

TEST_CASE("rational parsing and printing") {
  CHECK(Rational::parse("3").str() == "3");
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK(Rational::parse("0/5").is_zero());
  CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), InputError);
  CHECK_THROWS_AS(Rational::parse("x"), InputError);
  CHECK_THROWS_AS(Rational::parse(""), InputError);
  CHECK_THROWS(Rational(1) / Rational(0));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
}

TEST_CASE("rref, rank, determinant and inverse") {
  Matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  auto r = rref(m);
  CHECK(r.rank == 2);
  CHECK(r.pivots == std::vector<size_t>{0, 1});
  CHECK(det(m).is_zero());
  CHECK_FALSE(inverse(m));
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    Matrix a = testing::random_invertible(rng, 4);
    Matrix b = testing::random_invertible(rng, 4);
    CHECK(*inverse(a) * a == Matrix::identity(4));
    CHECK(det(a * b) == det(a) * det(b));
    CHECK(det(a.transpose()) == det(a));
  }
}

TEST_CASE("solve returns a solution or nothing") {
  Rng rng(2);
  for (int t = 0; t < 50; ++t) {
    Matrix a = testing::random_matrix(rng, 4, 5);
    Matrix x = testing::random_matrix(rng, 5, 1);
    auto s = solve_all(a, a * x);
    REQUIRE(s);
    CHECK(a * s->particular == a * x);
    CHECK(s->kernel.size() == 5 - rank(a));
    for (const auto& k : s->kernel) CHECK(is_zero(a * k));
  }
  Matrix a{{1, 1}, {1, 1}};
  Matrix b{{1}, {2}};
  CHECK_FALSE(solve(a, b));
}

TEST_CASE("subspace lattice identities") {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    size_t n = 5;
    Subspace u = Subspace::row_space(testing::random_matrix(rng, testing::pick(rng, 0, 4), n, -1, 1));
    Subspace v = Subspace::row_space(testing::random_matrix(rng, testing::pick(rng, 0, 4), n, -1, 1));
    Subspace s = sum(u, v), i = intersect(u, v);
    CHECK(s.dim() + i.dim() == u.dim() + v.dim());
    CHECK(s.contains(u));
    CHECK(u.contains(i));
    CHECK(v.contains(i));
    CHECK(annihilator(annihilator(u)) == u);
    CHECK(annihilator(u).dim() + u.dim() == n);
    Subspace c = complement_in(i, u);
    CHECK(intersect(c, i).is_zero());
    CHECK(sum(c, i) == u);
    Matrix f = testing::random_matrix(rng, 4, n, -1, 1);
    Subspace img = image(f, u);
    for (const auto& b : u.basis_vectors()) CHECK(img.contains(f * b));
    Subspace pre = preimage(f, image(f, u));
    CHECK(pre.contains(u));
    CHECK(pre.contains(kernel(f)));
    for (const auto& b : u.basis_vectors()) CHECK(u.coords(b).size() == u.dim());
  }
}

TEST_CASE("equal spans have identical bases") {
  Subspace a = Subspace::span(3, {{1, 1, 0}, {0, 1, 1}});
  Subspace b = Subspace::span(3, {{1, 2, 1}, {1, 0, -1}});
  CHECK(a == b);
  CHECK(a.standard_complement().dim() == 1);
}

}
