#pragma once

#include "quadlie/heis.hpp"

#include <random>

namespace quadlie::testing {

using Rng = std::mt19937_64;

inline long pick(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Matrix random_matrix(Rng& rng, size_t rows, size_t cols, long lo = -2, long hi = 2) {
  Matrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m(i, j) = pick(rng, lo, hi);
  return m;
}

inline Vector random_vector(Rng& rng, size_t n, long lo = -2, long hi = 2) {
  Vector v;
  for (size_t i = 0; i < n; ++i) v.push_back(pick(rng, lo, hi));
  return v;
}

inline Matrix random_invertible(Rng& rng, size_t n, long lo = -2, long hi = 2) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n, lo, hi);
    if (!det(m).is_zero()) return m;
  }
}

inline Cochain random_cochain(Rng& rng, size_t degree, size_t h_dim, size_t m, long lo = -2, long hi = 2) {
  Cochain c(degree, h_dim, m);
  for (const auto& t : Cochain::increasing_tuples(h_dim, degree)) c.set(t, random_vector(rng, m, lo, hi));
  return c;
}

inline LieAlgebra table_algebra(size_t n, std::vector<std::tuple<size_t, size_t, size_t, long>> entries) {
  BracketTable t(n);
  for (auto [i, j, k, c] : entries) t.add(i, j, k, c);
  return LieAlgebra(LieAlgebra::default_names(n), std::move(t).take());
}

// Small solvable algebras of dimension <= 4.
inline std::vector<LieAlgebra> solvable_catalog() {
  return {
      LieAlgebra::abelian(1),
      LieAlgebra::abelian(2),
      table_algebra(2, {{0, 1, 1, 1}}),
      heisenberg(),
      table_algebra(3, {{0, 1, 1, 1}, {0, 2, 2, 2}}),
      table_algebra(3, {{0, 1, 1, 1}, {0, 2, 1, 1}, {0, 2, 2, 1}}),
      table_algebra(4, {{0, 1, 2, 1}, {0, 2, 3, 1}}),
      table_algebra(4, {{0, 1, 1, 1}, {2, 3, 3, 1}}),
      table_algebra(4, {{0, 1, 2, 1}, {3, 0, 0, 1}, {3, 1, 1, -1}}),
      table_algebra(4, {{0, 1, 2, 1}}),
  };
}

inline LieAlgebra random_solvable(Rng& rng, size_t max_dim = 4) {
  static const auto cat = solvable_catalog();
  for (;;) {
    const LieAlgebra& base = cat[pick(rng, 0, long(cat.size()) - 1)];
    if (base.dim() > max_dim) continue;
    return transport(base, random_invertible(rng, base.dim(), -1, 1));
  }
}

// Matrix of the differential on flattened cochains of the given degree.
inline Matrix differential_matrix(const Representation& r, size_t degree) {
  size_t n = r.algebra().dim(), m = r.module_dim();
  Cochain probe(degree, n, m);
  size_t cols = probe.flat_size();
  Cochain image(degree + 1, n, m);
  Matrix out(image.flat_size(), cols);
  for (size_t k = 0; k < cols; ++k) {
    Cochain e = Cochain::unflatten(degree, n, m, unit(cols, k));
    out.set_col(k, differential(r, e).flatten());
  }
  return out;
}

inline Cochain random_cocycle(Rng& rng, const Representation& r, size_t degree) {
  size_t n = r.algebra().dim(), m = r.module_dim();
  Subspace z = kernel(differential_matrix(r, degree));
  Vector v(Cochain(degree, n, m).flat_size());
  for (const auto& b : z.basis_vectors()) v = add(v, scale(pick(rng, -2, 2), b));
  return Cochain::unflatten(degree, n, m, v);
}

inline Representation random_module(Rng& rng, const LieAlgebra& h) {
  switch (pick(rng, 0, 2)) {
    case 0: return Representation::trivial(h, pick(rng, 1, 2));
    case 1: return adjoint(h);
    default: return coadjoint(h);
  }
}

// Random data satisfying the three scalar conditions; every mu entry not forced stays random.
inline heis::HeisExtension random_heis(Rng& rng, size_t r, long lo = -2, long hi = 2,
                                       std::optional<Matrix> lam = std::nullopt) {
  heis::HeisExtension he = heis::HeisExtension::zero(r);
  he.phi[0] = random_matrix(rng, 3, r, lo, hi);
  he.phi[1] = random_matrix(rng, 3, r, lo, hi);
  he.lam = lam ? *lam : random_matrix(rng, r, 3, lo, hi);
  he.mu = random_matrix(rng, 3, 3, lo, hi);
  auto c = heis::check(he);
  if (!c.eq3.is_zero()) {
    for (size_t l = 0; l < r; ++l) {
      if (!he.lam(l, 0).is_zero()) {
        he.phi[0](2, l) -= c.eq3 / he.lam(l, 0);
        break;
      }
      if (!he.lam(l, 1).is_zero()) {
        he.phi[1](2, l) -= c.eq3 / he.lam(l, 1);
        break;
      }
    }
  }
  he.phi[2] = heis::phi3_from(he.phi[0], he.phi[1]);
  c = heis::check(he);
  he.mu(2, 1) -= c.eq1;
  he.mu(2, 0) += c.eq2;
  return he;
}

}  // namespace quadlie::testing
