#include <doctest.h>

#include "support.hpp"

using namespace quadlie;
using quadlie::testing::Rng;

namespace {

DoubleExtensionData random_double(Rng& rng, size_t m) {
  Matrix gram(m, m);
  for (size_t i = 0; i < m; ++i) gram(i, i) = testing::pick(rng, 1, 2) * (testing::pick(rng, 0, 1) ? 1 : -1);
  Matrix s(m, m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) {
      s(i, j) = testing::pick(rng, -2, 2);
      s(j, i) = -s(i, j);
    }
  return {m, BilinearForm(gram), inverse_or_throw(gram, "gram") * s};
}

}  // namespace

TEST_SUITE("quadratic") {

TEST_CASE("bilinear forms") {
  CHECK_THROWS_AS(BilinearForm(Matrix{{1, 2}, {0, 1}}), InputError);
  BilinearForm b(Matrix{{0, 1}, {1, 0}});
  CHECK(b.nondegenerate());
  CHECK(perp(b, Subspace::coordinates(2, {0})) == Subspace::coordinates(2, {0}));
  Matrix psi{{1, 1}, {0, 1}};
  CHECK(b.pullback(psi).gram() == psi.transpose() * b.gram() * psi);
}

TEST_CASE("double extensions carry invariant metrics") {
  Rng rng(31);
  for (int t = 0; t < 30; ++t) {
    QuadraticAlgebra q = double_extension(random_double(rng, testing::pick(rng, 2, 4)));
    CHECK(is_invariant(q.algebra, q.form).ok);
    SeriesReport s = series(q.algebra);
    for (size_t l = 1; l <= s.m; ++l) {
      CHECK(perp(q.form, s.lower(l)) == s.upper(l));
      CHECK(centralizer_of(q.algebra, s.lower(l - 1)) == s.upper(l));
    }
    CanonicalIdeals ci = canonical_ideals(q.algebra, s);
    CHECK(perp(q.form, ci.i) == ci.j);
    if (has_abelian_descending_ideal(q.algebra))
      CHECK(ci.i.contains(bracket_subspaces(q.algebra, Subspace::full(q.algebra.dim()), ci.j)));
  }
  DoubleExtensionData bad{2, BilinearForm::identity(2), Matrix{{1, 0}, {0, 0}}};
  CHECK_THROWS_AS(double_extension(bad), InputError);
}

TEST_CASE("witt complement post-conditions") {
  Rng rng(32);
  int used = 0;
  for (int t = 0; t < 30; ++t) {
    QuadraticAlgebra q = double_extension(random_double(rng, 3));
    WittSplit w = witt_complement(q.algebra, q.form);
    CHECK(q.form.restricted(w.h_basis).is_zero());
    CHECK(perp(q.form, w.a) == sum(w.h, w.i));
    CHECK(w.h.dim() == w.i.dim());
    used += w.i != w.j;
  }
  CHECK(used > 0);
}

TEST_CASE("metric catalog certificates") {
  for (size_t r : {3, 4}) {
    heis::MetricCatalog mc = heis::metric_catalog(r);
    REQUIRE(mc.entries.size() == 4);
    for (const auto& e : mc.entries) {
      LieAlgebra g = build(heis::to_extension_data(e.he));
      CHECK(is_invariant(g, e.certificate.pullback_metric).ok);
      CHECK(e.certificate.pullback_metric.nondegenerate());
    }
    for (const auto& rej : mc.rejections) CHECK(rej.failure != MetricFailure::precondition);
  }
}

TEST_CASE("metric_exists preconditions") {
  LieAlgebra h = heisenberg();
  ExtensionData d = ExtensionData::zero(h, 2, Representation::trivial(h, 3));
  auto r = metric_exists(d, BilinearForm::identity(2));
  CHECK_FALSE(r.certificate);
  CHECK(r.failure == MetricFailure::precondition);
}

TEST_CASE("extracted data of a quadratic extension is cyclic and dual") {
  auto mc = heis::metric_catalog(3);
  for (const auto& e : mc.entries) {
    LieAlgebra g = build(heis::to_extension_data(e.he));
    const BilinearForm& b = e.certificate.pullback_metric;
    WittSplit w = witt_complement(g, b);
    if (!is_abelian(g, w.j)) continue;
    ExtractedQuadratic x = extract_quadratic(g, b);
    CHECK_FALSE(mu_cyclic_violation(x.data));
    auto lp = lambda_phi(x.data, x.b_a);
    size_t n = x.data.h.dim();
    for (size_t a = 0; a < n; ++a)
      for (size_t c = a + 1; c < n; ++c) CHECK(lp[a * n + c] == x.data.lam({a, c}));
  }
}

}
