#include "quadlie/quadratic.hpp"

namespace quadlie {

BilinearForm::BilinearForm(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square()) throw InputError("bilinear form: Gram matrix is not square");
  if (!(gram_ == gram_.transpose())) throw InputError("bilinear form: Gram matrix is not symmetric");
}

BilinearForm BilinearForm::pullback(const Matrix& psi) const {
  return BilinearForm(psi.transpose() * gram_ * psi);
}

Matrix BilinearForm::restricted(const std::vector<Vector>& basis) const {
  Matrix m(basis.size(), basis.size());
  for (size_t p = 0; p < basis.size(); ++p)
    for (size_t q = 0; q < basis.size(); ++q) m(p, q) = (*this)(basis[p], basis[q]);
  return m;
}

InvarianceVerdict is_invariant(const LieAlgebra& g, const BilinearForm& b) {
  size_t n = g.dim();
  if (b.dim() != n) throw InputError("is_invariant: dimension mismatch");
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y)
      for (size_t z = 0; z < n; ++z) {
        Rational lhs = b(g.bracket_basis(x, y), unit(n, z));
        Rational rhs = b(unit(n, x), g.bracket_basis(y, z));
        if (lhs != rhs) return {false, std::array<size_t, 3>{x, y, z}};
      }
  return {};
}

Subspace perp(const BilinearForm& b, const Subspace& s) {
  if (b.dim() != s.ambient()) throw InputError("perp: dimension mismatch");
  if (!b.nondegenerate()) throw InputError("perp: form is degenerate");
  if (s.is_zero()) return Subspace::full(s.ambient());
  return kernel(s.basis() * b.gram());
}

WittSplit witt_complement(const LieAlgebra& g, const BilinearForm& b) {
  size_t n = g.dim();
  if (b.dim() != n) throw WittHypothesisError("form dimension differs from algebra");
  if (!b.nondegenerate()) throw WittHypothesisError("form is degenerate");
  if (!is_invariant(g, b).ok) throw WittHypothesisError("form is not invariant");
  CanonicalIdeals ci = canonical_ideals(g);
  if (!ci.j.contains(ci.i)) throw WittHypothesisError("i is not contained in j");
  if (!(perp(b, ci.i) == ci.j)) throw WittHypothesisError("perp(i) differs from j");

  WittSplit w;
  w.i = ci.i;
  w.j = ci.j;
  w.a = complement_in(ci.i, ci.j);
  std::vector<Vector> ib = ci.i.basis_vectors(), ab = w.a.basis_vectors();

  // f_p with B(f_p, i_q) = delta_pq and B(f_p, a) = 0.
  std::vector<Vector> rows;
  for (const auto& v : ib) rows.push_back(b.gram() * v);
  for (const auto& v : ab) rows.push_back(b.gram() * v);
  Matrix sys = Matrix::from_rows(rows, n);
  std::vector<Vector> f;
  for (size_t p = 0; p < ib.size(); ++p) {
    Vector rhs(rows.size());
    rhs[p] = 1;
    auto sol = solve(sys, Matrix::column(rhs));
    if (!sol) throw WittHypothesisError("no dual vectors to i orthogonal to a");
    f.push_back(sol->col(0));
  }
  // Half self-pairings, pushed into i, make h isotropic.
  for (size_t p = 0; p < f.size(); ++p) {
    Vector corr(n);
    for (size_t q = 0; q < f.size(); ++q) corr = add(corr, scale(b(f[p], f[q]) / 2, ib[q]));
    w.h_basis.push_back(sub(f[p], corr));
  }
  w.h = Subspace::span(n, w.h_basis);

  if (!b.restricted(w.h_basis).is_zero()) throw std::logic_error("witt_complement: h is not isotropic");
  if (det(b.restricted(ab)).is_zero()) throw WittHypothesisError("form restricted to a is degenerate");
  if (!sum(sum(w.h, w.a), w.i).is_full() || w.h.dim() + w.a.dim() + w.i.dim() != n)
    throw std::logic_error("witt_complement: pieces do not span");
  if (!(perp(b, w.a) == sum(w.h, w.i))) throw std::logic_error("witt_complement: perp(a) differs from h + i");
  return w;
}

const char* to_string(MetricFailure f) {
  switch (f) {
    case MetricFailure::none: return "none";
    case MetricFailure::precondition: return "precondition";
    case MetricFailure::b1: return "b1";
    case MetricFailure::b2: return "b2";
  }
  return "?";
}

std::vector<Vector> lambda_phi(const ExtensionData& d, const BilinearForm& b_a) {
  size_t n = d.h.dim();
  Matrix binv = inverse_or_throw(b_a.gram(), "b_a");
  std::vector<Vector> out;
  for (size_t x = 0; x < n; ++x) {
    Matrix ph = d.phi_at(x);
    for (size_t y = 0; y < n; ++y) out.push_back(scale(-1, binv * ph.row(y)));
  }
  return out;
}

std::optional<std::array<size_t, 3>> mu_cyclic_violation(const ExtensionData& d) {
  size_t n = d.h.dim();
  if (d.dim_i != n) throw InputError("mu cyclicity needs dim i = dim h");
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y)
      for (size_t z = 0; z < n; ++z)
        if (d.mu({x, y})[z] != d.mu({y, z})[x]) return std::array<size_t, 3>{x, y, z};
  return std::nullopt;
}

namespace {

MetricResult fail(MetricFailure f, std::string msg) { return {std::nullopt, f, std::move(msg)}; }

}  // namespace

MetricResult metric_exists(const ExtensionData& d, const BilinearForm& b_a) {
  d.check_shapes();
  size_t n = d.h.dim(), A = d.dim_a;
  const auto& nm = d.h.names();
  if (d.dim_i != n) return fail(MetricFailure::precondition, "dim i differs from dim h");
  if (!(d.rho == coadjoint(d.h))) return fail(MetricFailure::precondition, "rho is not the coadjoint representation");
  if (b_a.dim() != A) return fail(MetricFailure::precondition, "b_a has the wrong dimension");
  if (!b_a.nondegenerate()) return fail(MetricFailure::precondition, "b_a is degenerate");
  if (!validity(d).ok()) return fail(MetricFailure::precondition, "extension data is not a cocycle");

  if (auto v = mu_cyclic_violation(d)) {
    auto [x, y, z] = *v;
    return fail(MetricFailure::b1, "mu is not cyclic: mu(" + nm[x] + "," + nm[y] + ")(" + nm[z] + ") != mu(" +
                                       nm[y] + "," + nm[z] + ")(" + nm[x] + ")");
  }

  std::vector<Vector> lp = lambda_phi(d, b_a);
  for (size_t x = 0; x < n; ++x)
    for (size_t y = x; y < n; ++y)
      if (lp[x * n + y] != scale(-1, lp[y * n + x]))
        return fail(MetricFailure::b2, "lambda_phi is not alternating at (" + nm[x] + "," + nm[y] + ")");

  Cochain lpc(2, n, A);
  for (size_t x = 0; x < n; ++x)
    for (size_t y = x + 1; y < n; ++y) lpc.set({x, y}, lp[x * n + y]);

  // d tau = lambda_phi - lambda and e_phi(tau) = 0.
  Representation triv = Representation::trivial(d.h, A);
  Vector rhs = (lpc - d.lam).flatten();
  size_t rows_d = rhs.size();
  size_t rows_e = Cochain(2, n, d.dim_i).flat_size();
  rhs.resize(rows_d + rows_e);
  Matrix sys(rows_d + rows_e, n * A);
  for (size_t u = 0; u < n * A; ++u) {
    Cochain t = Cochain::unflatten(1, n, A, unit(n * A, u));
    Vector col = differential(triv, t).flatten();
    Vector e = e_phi(d.phi, t, d.dim_i, A).flatten();
    col.insert(col.end(), e.begin(), e.end());
    sys.set_col(u, col);
  }
  auto sol = solve(sys, Matrix::column(rhs));
  if (!sol) return fail(MetricFailure::b2, "no tau in ker e_phi with d tau = lambda_phi - lambda");

  MetricCertificate cert;
  cert.tau = Cochain::unflatten(1, n, A, sol->col(0));
  cert.modified_data = d;
  cert.modified_data.lam = d.lam + differential(triv, cert.tau);

  size_t N = d.dim();
  Matrix gram(N, N);
  for (size_t k = 0; k < n; ++k) {
    gram(k, n + A + k) = 1;
    gram(n + A + k, k) = 1;
  }
  gram.set_block(n, n, b_a.gram());
  cert.metric = BilinearForm(gram);
  if (!is_invariant(build(cert.modified_data), cert.metric).ok)
    throw std::logic_error("metric_exists: split metric not invariant on modified data");

  IsomorphismWitness w = IsomorphismWitness::identity(d);
  w.tau = -cert.tau;
  Matrix psi = assemble(w);
  if (!verify_witness(d, cert.modified_data, w).ok())
    throw std::logic_error("metric_exists: pullback map is not an isomorphism");
  cert.pullback_metric = cert.metric.pullback(psi);
  if (!is_invariant(build(d), cert.pullback_metric).ok || !cert.pullback_metric.nondegenerate())
    throw std::logic_error("metric_exists: pullback metric not invariant");
  return {std::move(cert), MetricFailure::none, "metric found"};
}

QuadraticAlgebra double_extension(const DoubleExtensionData& dd) {
  size_t m = dd.dim_v;
  if (dd.b_v.dim() != m || dd.d_map.rows() != m || dd.d_map.cols() != m)
    throw InputError("double extension: dimension mismatch");
  const Matrix& G = dd.b_v.gram();
  const Matrix& D = dd.d_map;
  if (!(D.transpose() * G + G * D).is_zero()) throw InputError("double extension: D is not skew for B_V");
  size_t N = m + 2;
  BracketTable t(N);
  for (size_t j = 0; j < m; ++j)
    for (size_t k = 0; k < m; ++k)
      if (!D(k, j).is_zero()) t.add(0, 1 + j, 1 + k, D(k, j));
  Matrix w = D.transpose() * G;  // w(i,j) = B_V(D v_i, v_j)
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      if (!w(i, j).is_zero()) t.add(1 + i, 1 + j, N - 1, w(i, j));
  std::vector<std::string> names{"D"};
  for (size_t j = 0; j < m; ++j) names.push_back("v" + std::to_string(j + 1));
  names.push_back("c");
  LieAlgebra g(names, std::move(t).take());
  Matrix gram(N, N);
  gram.set_block(1, 1, G);
  gram(0, N - 1) = 1;
  gram(N - 1, 0) = 1;
  BilinearForm b(gram);
  if (!is_invariant(g, b).ok) throw std::logic_error("double_extension: form not invariant");
  return {std::move(g), std::move(b)};
}

std::optional<CentralSplit> orthogonal_split_central(const LieAlgebra& g, const BilinearForm& b) {
  Subspace z = center(g);
  std::vector<Vector> zb = z.basis_vectors();
  if (zb.empty()) return std::nullopt;
  Subspace coeffs = kernel(b.restricted(zb));
  std::vector<Vector> rad;
  for (const auto& c : coeffs.basis_vectors()) {
    Vector v(g.dim());
    for (size_t k = 0; k < zb.size(); ++k) v = add(v, scale(c[k], zb[k]));
    rad.push_back(v);
  }
  Subspace w = complement_in(Subspace::span(g.dim(), rad), z);
  if (w.is_zero()) return std::nullopt;
  Subspace comp = perp(b, w);
  if (!intersect(w, comp).is_zero() || !sum(w, comp).is_full() || !is_ideal(g, w) || !is_ideal(g, comp) ||
      !bracket_subspaces(g, w, comp).is_zero())
    throw std::logic_error("orthogonal_split_central: split failed verification");
  return CentralSplit{w, comp};
}

ExtractedQuadratic extract_quadratic(const LieAlgebra& g, const BilinearForm& b) {
  WittSplit w = witt_complement(g, b);
  if (!is_abelian(g, w.j)) throw InputError("extract_quadratic: j is not abelian");
  if (!w.i.contains(bracket_subspaces(g, Subspace::full(g.dim()), w.j)))
    throw InputError("extract_quadratic: [g, j] is not inside i");
  std::vector<Vector> cols = w.h_basis;
  for (const auto& v : w.a.basis_vectors()) cols.push_back(v);
  for (const auto& v : w.i.basis_vectors()) cols.push_back(v);
  Matrix p = Matrix::from_columns(cols, g.dim());
  size_t nh = w.h.dim(), na = w.a.dim(), ni = w.i.dim();
  std::vector<std::string> names = LieAlgebra::default_names(nh);
  for (size_t a = 0; a < na; ++a) names.push_back("v" + std::to_string(a + 1));
  for (size_t i = 0; i < ni; ++i) names.push_back("theta" + std::to_string(i + 1));
  LieAlgebra moved = transport(g, inverse_or_throw(p, "basis"), names);
  ExtensionData d = extract(moved, nh, na, ni);
  d.h = LieAlgebra(d.h.names(), d.h.structure());
  d.rho = Representation(d.h, ni, d.rho.matrices());
  return {std::move(d), BilinearForm(b.restricted(w.a.basis_vectors())), p};
}

}  // namespace quadlie
