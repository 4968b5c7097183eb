#pragma once

#include "quadlie/cochain.hpp"

namespace quadlie {

// h ⊕ a ⊕ i with a a trivial module, i carrying rho, phi : h -> Hom(a, i).
struct ExtensionData {
  LieAlgebra h;
  size_t dim_a = 0, dim_i = 0;
  Representation rho;
  Cochain phi;  // degree 1, values dim_i x dim_a row-major
  Cochain lam;  // degree 2 into a
  Cochain mu;   // degree 2 into i

  static ExtensionData zero(const LieAlgebra& h, size_t dim_a, const Representation& rho);
  size_t dim() const { return h.dim() + dim_a + dim_i; }
  void check_shapes() const;
  Matrix phi_at(size_t x) const { return phi.matrix_at({x}, dim_i, dim_a); }
  std::vector<std::string> basis_names() const;

  friend bool operator==(const ExtensionData&, const ExtensionData&) = default;
};

struct ValidityReport {
  Cochain d_phi;       // w.r.t. rho acting by left multiplication on Hom(a, i)
  Cochain d_lam;
  Cochain mu_part;     // e_phi(lam) + d mu
  bool ok() const { return d_phi.is_zero() && d_lam.is_zero() && mu_part.is_zero(); }
  std::vector<std::string> failures() const;
};

ValidityReport validity(const ExtensionData& d);

struct InvalidExtension : InvalidAlgebra {
  InvalidExtension(const std::string& what, ValidityReport r) : InvalidAlgebra(what), report(std::move(r)) {}
  ValidityReport report;
};

// Basis ordered (h, a, i).
LieAlgebra build(const ExtensionData& d);
LieAlgebra build_unchecked(const ExtensionData& d);

// Reads extension data back from an algebra on an (h, a, i) basis; throws if the
// bracket does not have the extension shape.
ExtensionData extract(const LieAlgebra& g, size_t dim_h, size_t dim_a, size_t dim_i);

struct IsomorphismWitness {
  Matrix g, h_a, k, t;
  Cochain tau, nu;

  static IsomorphismWitness identity(const ExtensionData& d);
};

// Psi(x) = g x + tau(x) + nu(x), Psi(v) = h_a v + t v, Psi(theta) = k theta.
Matrix assemble(const IsomorphismWitness& w);
// Inverse of assemble; throws unless psi has the block lower-triangular shape.
IsomorphismWitness decompose(const Matrix& psi, size_t dim_h, size_t dim_a, size_t dim_i);
IsomorphismWitness inverse(const IsomorphismWitness& w);
IsomorphismWitness compose(const IsomorphismWitness& outer, const IsomorphismWitness& inner);

struct WitnessVerdict {
  bool g_automorphism = false;
  Cochain lam_residual, mu_residual, phi_residual;
  std::vector<Matrix> rho_residual;
  bool residuals_vanish = false;
  bool bracket_map_ok = false;

  bool ok() const { return residuals_vanish; }
  bool agree() const { return residuals_vanish == bracket_map_ok; }
};

WitnessVerdict verify_witness(const ExtensionData& d1, const ExtensionData& d2, const IsomorphismWitness& w);

// Data d2 with build(d2) ≅ build(d1) through w.
ExtensionData transport(const ExtensionData& d1, const IsomorphismWitness& w);

// Requires identical (h, phi, rho); solves (lam - lam', mu - mu') = D_phi(tau, nu).
std::optional<IsomorphismWitness> same_class_fixed_R(const ExtensionData& d1, const ExtensionData& d2);

struct IsoGroupVerdict {
  IsomorphismWitness composite;
  bool composite_ok = false;
  bool factorization_ok = false;
  bool ok() const { return composite_ok && factorization_ok; }
};

IsoGroupVerdict iso_group_check(const ExtensionData& d, const IsomorphismWitness& w1,
                                const IsomorphismWitness& w2);

}  // namespace quadlie
