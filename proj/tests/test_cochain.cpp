#include <doctest.h>

#include "support.hpp"

using namespace quadlie;
using quadlie::testing::Rng;

TEST_SUITE("cochain") {

TEST_CASE("sort_sign") {
  Tuple t{2, 0, 1};
  CHECK(sort_sign(t) == 1);
  CHECK(t == Tuple{0, 1, 2});
  Tuple u{1, 0};
  CHECK(sort_sign(u) == -1);
  Tuple w{1, 1};
  CHECK(sort_sign(w) == 0);
}

TEST_CASE("cochains are alternating") {
  Cochain c(2, 3, 1);
  c.set({2, 0}, {5});
  CHECK(c({0, 2}) == Vector{-5});
  CHECK(c.evaluate({unit(3, 2), unit(3, 0)}) == Vector{5});
  CHECK(c.evaluate({unit(3, 1), unit(3, 1)}) == Vector{0});
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    Cochain r = testing::random_cochain(rng, 2, 4, 2);
    CHECK(Cochain::unflatten(2, 4, 2, r.flatten()) == r);
  }
}

TEST_CASE("d squares to zero") {
  Rng rng(9);
  for (int t = 0; t < 60; ++t) {
    LieAlgebra h = testing::random_solvable(rng);
    Representation rho = testing::random_module(rng, h);
    for (size_t k = 0; k + 2 <= h.dim(); ++k) {
      Cochain c = testing::random_cochain(rng, k, h.dim(), rho.module_dim());
      CHECK(differential(rho, differential(rho, c)).is_zero());
    }
  }
}

TEST_CASE("coadjoint and hom_left are representations") {
  Rng rng(10);
  for (int t = 0; t < 20; ++t) {
    LieAlgebra h = testing::random_solvable(rng);
    Representation co = coadjoint(h);
    CHECK(co.homomorphism_defects().empty());
    for (size_t i = 0; i < h.dim(); ++i) CHECK(co[i] == -h.ad(i).transpose());
    CHECK(hom_left(co, 2).homomorphism_defects().empty());
  }
}

TEST_CASE("e_phi anticommutes with d") {
  Rng rng(12);
  for (int t = 0; t < 40; ++t) {
    LieAlgebra h = testing::random_solvable(rng);
    Representation rho = testing::random_module(rng, h);
    size_t dim_a = testing::pick(rng, 1, 2);
    Cochain phi = testing::random_cocycle(rng, hom_left(rho, dim_a), 1);
    Representation triv = Representation::trivial(h, dim_a);
    for (size_t k = 1; k + 2 <= h.dim(); ++k) {
      Cochain lam = testing::random_cochain(rng, k, h.dim(), dim_a);
      Cochain lhs = e_phi(phi, differential(triv, lam), rho.module_dim(), dim_a) +
                    differential(rho, e_phi(phi, lam, rho.module_dim(), dim_a));
      CHECK(lhs.is_zero());
    }
  }
}

TEST_CASE("group action is compatible with d and with composition") {
  Rng rng(13);
  LieAlgebra h = heisenberg();
  Representation co = coadjoint(h);
  auto random_aut = [&] {
    Matrix g = Matrix::identity(3);
    g.set_block(0, 0, testing::random_invertible(rng, 2));
    g(2, 2) = det(g.block(0, 0, 2, 2));
    g(2, 0) = testing::pick(rng, -2, 2);
    g(2, 1) = testing::pick(rng, -2, 2);
    return g;
  };
  for (int t = 0; t < 30; ++t) {
    Matrix g = random_aut();
    CHECK(is_automorphism(h, g));
    GroupElement a = GroupElement::automorphism(h, g, testing::random_invertible(rng, 3));
    GroupElement b = GroupElement::automorphism(h, random_aut(), testing::random_invertible(rng, 3));
    Cochain c = testing::random_cochain(rng, 1, 3, 3);
    Representation moved = act_on_representation(a, co);
    CHECK(act_on_cochain(a, differential(co, c)) == differential(moved, act_on_cochain(a, c)));
    CHECK(act_on_cochain(a * b, c) == act_on_cochain(a, act_on_cochain(b, c)));
    CHECK(act_on_cochain(a.inverse(), act_on_cochain(a, c)) == c);
  }
}

}
