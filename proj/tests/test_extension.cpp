#include <doctest.h>

#include "support.hpp"

using namespace quadlie;
using quadlie::testing::Rng;

namespace {

ExtensionData random_ext_data(Rng& rng, bool valid) {
  LieAlgebra h = testing::random_solvable(rng, 3);
  Representation rho = testing::random_module(rng, h);
  size_t dim_a = testing::pick(rng, 1, 2);
  ExtensionData d = ExtensionData::zero(h, dim_a, rho);
  d.phi = testing::random_cocycle(rng, hom_left(rho, dim_a), 1);
  d.lam = testing::random_cocycle(rng, Representation::trivial(h, dim_a), 2);
  // mu solves d mu = -e_phi(lam) when possible; otherwise keep it random.
  Cochain target = -e_phi(d.phi, d.lam, rho.module_dim(), dim_a);
  Matrix dm = testing::differential_matrix(rho, 2);
  auto sol = solve(dm, Matrix::column(target.flatten()));
  if (sol) d.mu = Cochain::unflatten(2, h.dim(), rho.module_dim(), sol->col(0));
  if (!valid || !sol) d.mu = testing::random_cochain(rng, 2, h.dim(), rho.module_dim());
  return d;
}

}  // namespace

TEST_SUITE("extension") {

TEST_CASE("zero data builds the direct sum") {
  LieAlgebra h = heisenberg();
  ExtensionData d = ExtensionData::zero(h, 2, Representation::trivial(h, 1));
  LieAlgebra g = build(d);
  CHECK(g.dim() == 6);
  CHECK(g.bracket_basis(0, 1) == Vector{0, 0, 1, 0, 0, 0});
  CHECK(center(g).dim() == 4);
  CHECK(extract(g, 3, 2, 1) == d);
}

TEST_CASE("validity names the failed condition") {
  LieAlgebra h = heisenberg();
  ExtensionData d = ExtensionData::zero(h, 3, coadjoint(h));
  d.mu.set({1, 2}, {0, 0, 1});
  auto f = validity(d).failures();
  REQUIRE(f.size() == 1);
  CHECK(f[0] == "d mu + e_phi(lambda) != 0");
  CHECK_THROWS_AS(build(d), InvalidExtension);
}

TEST_CASE("cocycle conditions match Jacobi on random data") {
  Rng rng(21);
  for (int t = 0; t < 150; ++t) {
    ExtensionData d = random_ext_data(rng, t % 2 == 0);
    bool ok = validity(d).ok();
    CHECK(ok == jacobi_defect(build_unchecked(d)).empty());
    if (ok) CHECK(extract(build(d), d.h.dim(), d.dim_a, d.dim_i) == d);
  }
}

TEST_CASE("coboundary shifts are recovered and verified two ways") {
  Rng rng(22);
  for (int t = 0; t < 60; ++t) {
    ExtensionData d = random_ext_data(rng, true);
    if (!validity(d).ok()) continue;
    size_t n = d.h.dim();
    Cochain tau = testing::random_cochain(rng, 1, n, d.dim_a);
    Cochain nu = testing::random_cochain(rng, 1, n, d.dim_i);
    auto [dl, dm] = big_d(d.phi, d.rho, tau, nu);
    ExtensionData d2 = d;
    d2.lam = d.lam + dl;
    d2.mu = d.mu + dm;
    auto w = same_class_fixed_R(d, d2);
    REQUIRE(w);
    WitnessVerdict v = verify_witness(d, d2, *w);
    CHECK(v.ok());
    CHECK(v.agree());
    CHECK(transport(d, *w) == d2);
  }
}

TEST_CASE("witness algebra") {
  Rng rng(24);
  LieAlgebra h = heisenberg();
  for (int t = 0; t < 30; ++t) {
    heis::HeisExtension he = testing::random_heis(rng, 3);
    ExtensionData d = heis::to_extension_data(he);
    IsomorphismWitness w = IsomorphismWitness::identity(d);
    w.g = Matrix::identity(3);
    w.g.set_block(0, 0, testing::random_invertible(rng, 2));
    w.g(2, 2) = det(w.g.block(0, 0, 2, 2));
    w.k = inverse_or_throw(w.g, "g").transpose();
    w.h_a = testing::random_invertible(rng, 3);
    w.t = testing::random_matrix(rng, 3, 3);
    w.tau = testing::random_cochain(rng, 1, 3, 3);
    w.nu = testing::random_cochain(rng, 1, 3, 3);
    CHECK(decompose(assemble(w), 3, 3, 3).t == w.t);
    ExtensionData d2 = transport(d, w);
    CHECK(verify_witness(d, d2, w).ok());
    CHECK(verify_witness(d2, d, inverse(w)).ok());
    IsomorphismWitness w2 = IsomorphismWitness::identity(d2);
    w2.h_a = testing::random_invertible(rng, 3);
    w2.nu = testing::random_cochain(rng, 1, 3, 3);
    CHECK(assemble(compose(w2, w)) == assemble(w2) * assemble(w));
  }
}

TEST_CASE("stabilizer of the zero extension is closed under composition") {
  Rng rng(26);
  ExtensionData d = heis::to_extension_data(heis::HeisExtension::zero(3));
  auto self = [&] {
    IsomorphismWitness w = IsomorphismWitness::identity(d);
    w.g = Matrix::identity(3);
    w.g.set_block(0, 0, testing::random_invertible(rng, 2));
    w.g(2, 2) = det(w.g.block(0, 0, 2, 2));
    w.g(2, 0) = testing::pick(rng, -1, 1);
    w.k = inverse_or_throw(w.g, "g").transpose();
    w.h_a = testing::random_invertible(rng, 3);
    w.t = testing::random_matrix(rng, 3, 3);
    w.t.set_row(2, Vector(3));
    w.tau.set({0}, testing::random_vector(rng, 3));
    w.tau.set({1}, testing::random_vector(rng, 3));
    return w;
  };
  for (int t = 0; t < 30; ++t) {
    IsomorphismWitness a = self(), b = self();
    REQUIRE(verify_witness(d, d, a).ok());
    CHECK(iso_group_check(d, a, b).ok());
  }
}

TEST_CASE("corrupted witnesses are rejected by both checks") {
  Rng rng(25);
  for (int t = 0; t < 40; ++t) {
    heis::HeisExtension he = testing::random_heis(rng, 3);
    ExtensionData d = heis::to_extension_data(he);
    IsomorphismWitness w = IsomorphismWitness::identity(d);
    w.h_a = testing::random_invertible(rng, 3);
    w.tau = testing::random_cochain(rng, 1, 3, 3);
    ExtensionData d2 = transport(d, w);
    w.nu.add({2}, unit(3, testing::pick(rng, 0, 2)));
    WitnessVerdict v = verify_witness(d, d2, w);
    CHECK_FALSE(v.ok());
    CHECK(v.agree());
  }
}

}
