#include <doctest.h>

#include "support.hpp"

using namespace quadlie;
using namespace quadlie::heis;
using quadlie::testing::Rng;

TEST_SUITE("heis") {

TEST_CASE("column convention round trips through cochain evaluation") {
  Rng rng(11);
  Matrix m = testing::random_matrix(rng, 4, 3);
  Cochain c = lambda_cochain(m);
  CHECK(lambda_matrix(c) == m);
  CHECK(c.evaluate({unit(3, 1), unit(3, 2)}) == m.col(0));
  CHECK(c.evaluate({unit(3, 2), unit(3, 0)}) == m.col(1));
  CHECK(c.evaluate({unit(3, 0), unit(3, 1)}) == m.col(2));
}

TEST_CASE("zero data is a valid trivial extension") {
  HeisExtension he = HeisExtension::zero(3);
  ExtensionData d = to_extension_data(he);
  CHECK(validity(d).ok());
  CHECK(from_extension_data(d) == he);
}

TEST_CASE("identity lambda with zero phi needs mu_31 = mu_32 = 0") {
  HeisExtension he = HeisExtension::zero(3);
  he.lam = lambda_template(LambdaForm::id_block, 3);
  CHECK(check(he).ok());
  he.mu(2, 1) = 1;
  auto c = check(he);
  CHECK_FALSE(c.ok());
  REQUIRE(c.failures().size() == 1);
  CHECK_THROWS_AS(to_extension_data(he), InputError);
}

TEST_CASE("scalar conditions agree with the cochain cocycle test") {
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    HeisExtension he = testing::random_heis(rng, 3);
    if (t % 2) he.mu(testing::pick(rng, 0, 2), testing::pick(rng, 0, 2)) += 1;
    if (t % 3 == 0) he.phi[2](testing::pick(rng, 0, 2), testing::pick(rng, 0, 2)) += 1;
    CHECK(check(he).ok() == validity(to_extension_data_unchecked(he)).ok());
  }
}

TEST_CASE("reduce_lambda small cases") {
  Matrix zero(4, 3);
  auto z = reduce_lambda(zero);
  CHECK(z.form == LambdaForm::zero);
  CHECK(z.h_a == Matrix::identity(4));
  CHECK(z.g == Matrix::identity(3));
  CHECK(z.tau.is_zero());

  Matrix m(3, 3);
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(2, 2) = 7;
  m(0, 2) = -3;
  CHECK(reduce_lambda(m).form == LambdaForm::id_block);

  Matrix only_w2(3, 3);
  only_w2(1, 1) = 2;
  auto e = reduce_lambda(only_w2);
  CHECK(e.form == LambdaForm::e11);
  CHECK(is_heis_automorphism(e.g));
}

TEST_CASE("catalog families instantiate to valid data") {
  auto cat = catalog();
  CHECK(cat.size() == 9);
  Rng rng(3);
  for (const auto& f : cat) {
    for (int t = 0; t < 10; ++t) {
      Params p = f.representative();
      if (f.tag == "3.1") p["mu22"] = t == 0 ? Rational(0) : Rational(t + 1);
      if (f.tag == "3.2") p["mu21"] = Rational(t + 1);
      size_t r = 3 + t % 3;
      HeisExtension he = f.instantiate(r, p, testing::random_matrix(rng, 3, r), testing::random_matrix(rng, 3, r));
      CHECK(validity(to_extension_data(he)).ok());
      CHECK(f.accepts(he));
    }
  }
  CHECK_FALSE(family("3.1").admissible({{"mu22", 1}}));
  CHECK_FALSE(family("3.2").admissible({{"mu21", 0}}));
}

TEST_CASE("family 2.1 forces the first phi1 column to vanish") {
  auto cs = family("2.1").phi_constraints({});
  REQUIRE(cs.size() == 3);
  for (size_t k = 0; k < 3; ++k) {
    REQUIRE(cs[k].terms.size() == 1);
    CHECK(cs[k].terms[0].first == PhiEntry{1, int(k) + 1, 1});
    CHECK(cs[k].constant.is_zero());
  }
  auto c24 = family("2.4").phi_constraints({});
  CHECK(c24[0].str() == "phi1[1,1] + 1 = 0");
}

TEST_CASE("classify lands in the family of the normal form") {
  Rng rng(17);
  std::map<std::string, int> seen;
  for (int t = 0; t < 300; ++t) {
    size_t r = 3 + t % 3;
    Matrix lam = testing::random_matrix(rng, r, 3, -1, 1);
    if (t % 3 == 1) lam.set_col(1, scale(testing::pick(rng, -2, 2), lam.col(0)));
    if (t % 3 == 2) {
      lam.set_col(0, Vector(r));
      lam.set_col(1, Vector(r));
    }
    HeisExtension he = testing::random_heis(rng, r, -1, 1, lam);
    REQUIRE(check(he).ok());
    Classification c = classify(he);
    ++seen[c.tag];
    CHECK(verify_witness(to_extension_data(he), to_extension_data(c.normal_form), c.witness).ok());
    if (c.tag != "unlisted" && c.rational_representative) {
      CHECK(family(c.tag).accepts(c.normal_form));
      CHECK(classify(c.normal_form).tag == c.tag);
    }
  }
  CHECK(seen.size() >= 5);
}

TEST_CASE("representatives classify to their own tag") {
  for (const auto& f : catalog()) {
    HeisExtension he = f.instantiate(4, f.representative());
    CHECK(classify(he).tag == f.tag);
  }
}

TEST_CASE("nilpotent mu block is reported unlisted") {
  HeisExtension he = HeisExtension::zero(3);
  he.mu(1, 0) = 1;
  CHECK(check(he).ok());
  CHECK(classify(he).tag == "unlisted");
}

TEST_CASE("irrational eigenvalues have no rational representative") {
  HeisExtension he = HeisExtension::zero(3);
  he.mu(0, 1) = 2;
  he.mu(1, 0) = 1;
  auto c = classify(he);
  CHECK(c.tag == "3.1");
  CHECK_FALSE(c.rational_representative);
}

TEST_CASE("the group action keeps the scalar conditions") {
  Rng rng(23);
  for (int t = 0; t < 50; ++t) {
    HeisExtension he = family("2.3").instantiate(3, {}, testing::random_matrix(rng, 3, 3),
                                                 testing::random_matrix(rng, 3, 3));
    ExtensionData d = to_extension_data(he);
    Matrix g = Matrix::identity(3);
    g.set_block(0, 0, testing::random_invertible(rng, 2));
    g(2, 2) = det(g.block(0, 0, 2, 2));
    g(2, 0) = testing::pick(rng, -2, 2);
    g(2, 1) = testing::pick(rng, -2, 2);
    IsomorphismWitness w = IsomorphismWitness::identity(d);
    w.g = g;
    w.k = inverse_or_throw(g, "g").transpose();
    w.h_a = testing::random_invertible(rng, 3);
    w.t = testing::random_matrix(rng, 3, 3);
    HeisExtension moved = from_extension_data(transport(d, w));
    CHECK(check(moved).ok());
  }
}

TEST_CASE("structure invariants separate the three lambda groups") {
  std::map<std::vector<size_t>, std::string> by_inv;
  for (const auto& tag : {"1.1", "2.1", "3.4"}) {
    auto inv = structure_invariants(build(to_extension_data(family(tag).instantiate(3, family(tag).representative()))));
    CHECK(by_inv.emplace(inv, tag).second);
  }
}

}
