#include "quadlie/extension.hpp"

namespace quadlie {

ExtensionData ExtensionData::zero(const LieAlgebra& h, size_t dim_a, const Representation& rho) {
  size_t n = h.dim(), di = rho.module_dim();
  return {h, dim_a, di, rho, Cochain(1, n, di * dim_a), Cochain(2, n, dim_a), Cochain(2, n, di)};
}

void ExtensionData::check_shapes() const {
  size_t n = h.dim();
  if (!(rho.algebra() == h)) throw InputError("extension data: rho is defined on another algebra");
  if (rho.module_dim() != dim_i) throw InputError("extension data: rho acts on a module of the wrong size");
  if (phi.degree() != 1 || phi.h_dim() != n || phi.module_dim() != dim_i * dim_a)
    throw InputError("extension data: phi has the wrong shape");
  if (lam.degree() != 2 || lam.h_dim() != n || lam.module_dim() != dim_a)
    throw InputError("extension data: lambda has the wrong shape");
  if (mu.degree() != 2 || mu.h_dim() != n || mu.module_dim() != dim_i)
    throw InputError("extension data: mu has the wrong shape");
}

std::vector<std::string> ExtensionData::basis_names() const {
  std::vector<std::string> names = h.names();
  for (size_t a = 0; a < dim_a; ++a) names.push_back("v" + std::to_string(a + 1));
  for (size_t i = 0; i < dim_i; ++i) names.push_back("theta" + std::to_string(i + 1));
  return names;
}

std::vector<std::string> ValidityReport::failures() const {
  std::vector<std::string> out;
  if (!d_lam.is_zero()) out.push_back("d lambda != 0");
  if (!mu_part.is_zero()) out.push_back("d mu + e_phi(lambda) != 0");
  if (!d_phi.is_zero()) out.push_back("d phi != 0");
  return out;
}

ValidityReport validity(const ExtensionData& d) {
  d.check_shapes();
  ValidityReport r;
  r.d_phi = differential(hom_left(d.rho, d.dim_a), d.phi);
  auto [first, second] = big_d(d.phi, d.rho, d.lam, d.mu);
  r.d_lam = first;
  r.mu_part = second;
  return r;
}

LieAlgebra build_unchecked(const ExtensionData& d) {
  d.check_shapes();
  size_t n = d.h.dim(), A = d.dim_a, I = d.dim_i, N = d.dim();
  BracketTable t(N);
  for (size_t x = 0; x < n; ++x)
    for (size_t y = x + 1; y < n; ++y) {
      Vector v(N);
      Vector hb = d.h.bracket_basis(x, y), lb = d.lam({x, y}), mb = d.mu({x, y});
      for (size_t k = 0; k < n; ++k) v[k] = hb[k];
      for (size_t k = 0; k < A; ++k) v[n + k] = lb[k];
      for (size_t k = 0; k < I; ++k) v[n + A + k] = mb[k];
      t.set(x, y, v);
    }
  for (size_t x = 0; x < n; ++x) {
    Matrix ph = d.phi_at(x);
    for (size_t a = 0; a < A; ++a)
      for (size_t k = 0; k < I; ++k)
        if (!ph(k, a).is_zero()) t.add(x, n + a, n + A + k, ph(k, a));
    const Matrix& r = d.rho[x];
    for (size_t s = 0; s < I; ++s)
      for (size_t k = 0; k < I; ++k)
        if (!r(k, s).is_zero()) t.add(x, n + A + s, n + A + k, r(k, s));
  }
  return LieAlgebra::unchecked(d.basis_names(), std::move(t).take());
}

LieAlgebra build(const ExtensionData& d) {
  ValidityReport r = validity(d);
  if (!r.ok()) {
    std::string msg = "invalid extension data:";
    for (const auto& f : r.failures()) msg += " [" + f + "]";
    throw InvalidExtension(msg, std::move(r));
  }
  LieAlgebra g = build_unchecked(d);
  if (!jacobi_defect(g).empty()) throw std::logic_error("build: valid data produced a Jacobi defect");
  return g;
}

ExtensionData extract(const LieAlgebra& g, size_t dim_h, size_t dim_a, size_t dim_i) {
  size_t n = dim_h, A = dim_a, I = dim_i;
  if (g.dim() != n + A + I) throw InputError("extract: dimensions do not add up");
  auto require_zero = [&](size_t p, size_t q, size_t from, size_t to, const char* what) {
    for (size_t k = from; k < to; ++k)
      if (!g.c(p, q, k).is_zero())
        throw InputError(std::string("extract: bracket [") + g.names()[p] + "," + g.names()[q] + "] " + what);
  };
  for (size_t p = n; p < n + A + I; ++p)
    for (size_t q = 0; q < n + A + I; ++q) {
      if (q >= n) require_zero(p, q, 0, n + A + I, "is nonzero inside the abelian ideal");
      else require_zero(p, q, 0, n + A, "leaves the i-block");
    }

  std::vector<std::string> hn(g.names().begin(), g.names().begin() + n);
  BracketTable ht(n);
  for (size_t x = 0; x < n; ++x)
    for (size_t y = x + 1; y < n; ++y) {
      Vector v(n);
      for (size_t k = 0; k < n; ++k) v[k] = g.c(x, y, k);
      ht.set(x, y, v);
    }
  LieAlgebra h = LieAlgebra::unchecked(hn, std::move(ht).take());

  std::vector<Matrix> rm;
  for (size_t x = 0; x < n; ++x) {
    Matrix m(I, I);
    for (size_t s = 0; s < I; ++s)
      for (size_t k = 0; k < I; ++k) m(k, s) = g.c(x, n + A + s, n + A + k);
    rm.push_back(m);
  }
  Representation rho = Representation::unchecked(h, I, std::move(rm));
  ExtensionData d = ExtensionData::zero(h, A, rho);
  for (size_t x = 0; x < n; ++x) {
    Matrix m(I, A);
    for (size_t a = 0; a < A; ++a)
      for (size_t k = 0; k < I; ++k) m(k, a) = g.c(x, n + a, n + A + k);
    d.phi.set_matrix({x}, m);
    for (size_t y = x + 1; y < n; ++y) {
      Vector l(A), u(I);
      for (size_t k = 0; k < A; ++k) l[k] = g.c(x, y, n + k);
      for (size_t k = 0; k < I; ++k) u[k] = g.c(x, y, n + A + k);
      d.lam.set({x, y}, l);
      d.mu.set({x, y}, u);
    }
  }
  return d;
}

IsomorphismWitness IsomorphismWitness::identity(const ExtensionData& d) {
  size_t n = d.h.dim();
  return {Matrix::identity(n), Matrix::identity(d.dim_a), Matrix::identity(d.dim_i),
          Matrix(d.dim_i, d.dim_a), Cochain(1, n, d.dim_a), Cochain(1, n, d.dim_i)};
}

Matrix assemble(const IsomorphismWitness& w) {
  size_t n = w.g.rows(), A = w.h_a.rows(), I = w.k.rows();
  Matrix psi(n + A + I, n + A + I);
  psi.set_block(0, 0, w.g);
  for (size_t x = 0; x < n; ++x) {
    Vector t = w.tau({x}), u = w.nu({x});
    for (size_t k = 0; k < A; ++k) psi(n + k, x) = t[k];
    for (size_t k = 0; k < I; ++k) psi(n + A + k, x) = u[k];
  }
  psi.set_block(n, n, w.h_a);
  psi.set_block(n + A, n, w.t);
  psi.set_block(n + A, n + A, w.k);
  return psi;
}

IsomorphismWitness decompose(const Matrix& psi, size_t n, size_t A, size_t I) {
  if (psi.rows() != n + A + I || psi.cols() != n + A + I) throw InputError("decompose: shape mismatch");
  if (!psi.block(0, n, n, A + I).is_zero() || !psi.block(n, n + A, A, I).is_zero())
    throw InputError("decompose: map does not preserve the ideal flag");
  IsomorphismWitness w{psi.block(0, 0, n, n), psi.block(n, n, A, A), psi.block(n + A, n + A, I, I),
                       psi.block(n + A, n, I, A), Cochain(1, n, A), Cochain(1, n, I)};
  for (size_t x = 0; x < n; ++x) {
    Vector t(A), u(I);
    for (size_t k = 0; k < A; ++k) t[k] = psi(n + k, x);
    for (size_t k = 0; k < I; ++k) u[k] = psi(n + A + k, x);
    w.tau.set({x}, t);
    w.nu.set({x}, u);
  }
  return w;
}

IsomorphismWitness inverse(const IsomorphismWitness& w) {
  Matrix inv = inverse_or_throw(assemble(w), "witness map");
  return decompose(inv, w.g.rows(), w.h_a.rows(), w.k.rows());
}

IsomorphismWitness compose(const IsomorphismWitness& outer, const IsomorphismWitness& inner) {
  return decompose(assemble(outer) * assemble(inner), inner.g.rows(), inner.h_a.rows(), inner.k.rows());
}

namespace {

void check_witness_shapes(const ExtensionData& d1, const ExtensionData& d2, const IsomorphismWitness& w) {
  d1.check_shapes();
  d2.check_shapes();
  if (!(d1.h == d2.h)) throw InputError("witness: the two extensions are over different algebras");
  if (d1.dim_a != d2.dim_a || d1.dim_i != d2.dim_i) throw InputError("witness: extension dimensions differ");
  size_t n = d1.h.dim();
  if (w.g.rows() != n || w.g.cols() != n || w.h_a.rows() != d1.dim_a || w.h_a.cols() != d1.dim_a ||
      w.k.rows() != d1.dim_i || w.k.cols() != d1.dim_i || w.t.rows() != d1.dim_i || w.t.cols() != d1.dim_a ||
      w.tau.degree() != 1 || w.tau.module_dim() != d1.dim_a || w.nu.degree() != 1 ||
      w.nu.module_dim() != d1.dim_i || w.tau.h_dim() != n || w.nu.h_dim() != n)
    throw InputError("witness: component shapes do not match the extensions");
  if (det(w.g).is_zero()) throw InputError("witness: g is singular");
  if (det(w.h_a).is_zero()) throw InputError("witness: h_a is singular");
  if (det(w.k).is_zero()) throw InputError("witness: k is singular");
}

Cochain phi_pushed(const ExtensionData& d1, const IsomorphismWitness& w) {
  // x -> k phi(g^-1 x) h^-1
  Matrix hinv = inverse_or_throw(w.h_a, "h_a");
  Cochain pre = precompose_inverse(w.g, d1.phi);
  Cochain out(1, d1.h.dim(), d1.dim_i * d1.dim_a);
  for (size_t x = 0; x < d1.h.dim(); ++x) out.set_matrix({x}, w.k * pre.matrix_at({x}, d1.dim_i, d1.dim_a) * hinv);
  return out;
}

Cochain d_hom0(const Representation& rho, const Matrix& s) {
  // degree-0 differential on Hom(a,i): x -> rho(x) s
  Cochain out(1, rho.algebra().dim(), s.rows() * s.cols());
  for (size_t x = 0; x < rho.algebra().dim(); ++x) out.set_matrix({x}, rho[x] * s);
  return out;
}

}  // namespace

WitnessVerdict verify_witness(const ExtensionData& d1, const ExtensionData& d2, const IsomorphismWitness& w) {
  check_witness_shapes(d1, d2, w);
  WitnessVerdict v;
  const LieAlgebra& h = d1.h;
  Matrix hinv = inverse_or_throw(w.h_a, "h_a");
  Matrix kinv = inverse_or_throw(w.k, "k");
  Matrix ginv = inverse_or_throw(w.g, "g");
  v.g_automorphism = is_automorphism(h, w.g);

  bool rho_ok = true;
  for (size_t x = 0; x < h.dim(); ++x) {
    Matrix r = w.k * d1.rho.at(ginv.col(x)) * kinv - d2.rho[x];
    rho_ok = rho_ok && r.is_zero();
    v.rho_residual.push_back(r);
  }

  v.phi_residual = phi_pushed(d1, w) - d2.phi - d_hom0(d2.rho, w.t * hinv);

  Cochain tau_g = precompose_inverse(w.g, w.tau);
  Cochain nu_g = precompose_inverse(w.g, w.nu);
  auto [dl, dm] = big_d(d2.phi, d2.rho, tau_g, nu_g);
  Cochain lam_push = w.h_a * precompose_inverse(w.g, d1.lam);
  Cochain mu_push = precompose_inverse(w.g, w.t * d1.lam + w.k * d1.mu);
  v.lam_residual = lam_push - d2.lam - dl;
  v.mu_residual = mu_push - d2.mu - dm;

  v.residuals_vanish = v.g_automorphism && rho_ok && v.phi_residual.is_zero() && v.lam_residual.is_zero() &&
                       v.mu_residual.is_zero();

  LieAlgebra g1 = build_unchecked(d1), g2 = build_unchecked(d2);
  Matrix psi = assemble(w);
  bool hom = true;
  for (size_t a = 0; a < g1.dim() && hom; ++a)
    for (size_t b = a + 1; b < g1.dim() && hom; ++b)
      hom = psi * g1.bracket_basis(a, b) == g2.bracket(psi.col(a), psi.col(b));
  v.bracket_map_ok = hom;
  return v;
}

ExtensionData transport(const ExtensionData& d1, const IsomorphismWitness& w) {
  check_witness_shapes(d1, d1, w);
  if (!is_automorphism(d1.h, w.g)) throw InputError("transport: g is not an automorphism");
  ExtensionData d2 = d1;
  GroupElement on_i{w.g, w.k};
  d2.rho = act_on_representation(on_i, d1.rho);
  Matrix hinv = inverse_or_throw(w.h_a, "h_a");
  d2.phi = phi_pushed(d1, w) - d_hom0(d2.rho, w.t * hinv);
  Cochain tau_g = precompose_inverse(w.g, w.tau);
  Cochain nu_g = precompose_inverse(w.g, w.nu);
  auto [dl, dm] = big_d(d2.phi, d2.rho, tau_g, nu_g);
  d2.lam = w.h_a * precompose_inverse(w.g, d1.lam) - dl;
  d2.mu = precompose_inverse(w.g, w.t * d1.lam + w.k * d1.mu) - dm;
  return d2;
}

std::optional<IsomorphismWitness> same_class_fixed_R(const ExtensionData& d1, const ExtensionData& d2) {
  d1.check_shapes();
  d2.check_shapes();
  if (!(d1.h == d2.h) || d1.dim_a != d2.dim_a || d1.dim_i != d2.dim_i)
    throw InputError("same_class_fixed_R: extensions have different shapes");
  if (!(d1.phi == d2.phi) || !(d1.rho == d2.rho))
    throw InputError("same_class_fixed_R: phi and rho must coincide");
  size_t n = d1.h.dim(), A = d1.dim_a, I = d1.dim_i;
  size_t nt = n * A, nn = n * I;
  Vector rhs = (d1.lam - d2.lam).flatten();
  Vector rm = (d1.mu - d2.mu).flatten();
  rhs.insert(rhs.end(), rm.begin(), rm.end());

  Matrix sys(rhs.size(), nt + nn);
  for (size_t u = 0; u < nt + nn; ++u) {
    Vector tv(nt), nv(nn);
    if (u < nt) tv[u] = 1;
    else nv[u - nt] = 1;
    auto [dl, dm] = big_d(d1.phi, d1.rho, Cochain::unflatten(1, n, A, tv), Cochain::unflatten(1, n, I, nv));
    Vector col = dl.flatten();
    Vector c2 = dm.flatten();
    col.insert(col.end(), c2.begin(), c2.end());
    sys.set_col(u, col);
  }
  auto sol = solve(sys, Matrix::column(rhs));
  if (!sol) return std::nullopt;
  Vector x = sol->col(0);
  IsomorphismWitness w = IsomorphismWitness::identity(d1);
  w.tau = Cochain::unflatten(1, n, A, Vector(x.begin(), x.begin() + nt));
  w.nu = Cochain::unflatten(1, n, I, Vector(x.begin() + nt, x.end()));
  return w;
}

IsoGroupVerdict iso_group_check(const ExtensionData& d, const IsomorphismWitness& w1,
                                const IsomorphismWitness& w2) {
  if (!verify_witness(d, d, w1).ok() || !verify_witness(d, d, w2).ok())
    throw InputError("iso_group_check: inputs are not self-witnesses");
  IsoGroupVerdict v;
  v.composite = compose(w1, w2);
  v.composite_ok = verify_witness(d, d, v.composite).ok();

  auto factors = [&](const IsomorphismWitness& w) {
    size_t n = d.h.dim(), J = d.dim_a + d.dim_i;
    Matrix psi = assemble(w);
    Matrix theta = psi.block(n, 0, J, n);
    Matrix shear = Matrix::identity(n + J);
    shear.set_block(n, 0, theta * inverse_or_throw(w.g, "g"));
    Matrix diag(n + J, n + J);
    diag.set_block(0, 0, w.g);
    diag.set_block(n, n, GroupElement::split_sigma(w.h_a, w.t, w.k));
    return shear * diag == psi;
  };
  v.factorization_ok = factors(w1) && factors(w2) && factors(v.composite);
  return v;
}

}  // namespace quadlie
