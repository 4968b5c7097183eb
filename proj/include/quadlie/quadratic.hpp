#pragma once

#include "quadlie/extension.hpp"

#include <array>

namespace quadlie {

class BilinearForm {
 public:
  BilinearForm() = default;
  explicit BilinearForm(Matrix gram);  // must be symmetric
  static BilinearForm identity(size_t n) { return BilinearForm(Matrix::identity(n)); }

  size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  Rational operator()(const Vector& u, const Vector& v) const { return dot(u, gram_ * v); }
  bool nondegenerate() const { return !det(gram_).is_zero(); }
  // B'(u, v) = B(psi u, psi v)
  BilinearForm pullback(const Matrix& psi) const;
  Matrix restricted(const std::vector<Vector>& basis) const;

  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

 private:
  Matrix gram_;
};

struct InvarianceVerdict {
  bool ok = true;
  std::optional<std::array<size_t, 3>> violation;  // B([x,y],z) != B(x,[y,z])
};

InvarianceVerdict is_invariant(const LieAlgebra& g, const BilinearForm& b);
Subspace perp(const BilinearForm& b, const Subspace& s);

struct WittHypothesisError : InputError {
  using InputError::InputError;
};

struct WittSplit {
  Subspace h, a, i, j;
  std::vector<Vector> h_basis;  // dual to the RREF basis of i
};

WittSplit witt_complement(const LieAlgebra& g, const BilinearForm& b);

struct MetricCertificate {
  ExtensionData modified_data;  // lambda + d tau
  Cochain tau;
  BilinearForm metric;          // on h ⊕ a ⊕ h*
  BilinearForm pullback_metric; // on build(original)
};

enum class MetricFailure { none, precondition, b1, b2 };
const char* to_string(MetricFailure f);

struct MetricResult {
  std::optional<MetricCertificate> certificate;
  MetricFailure failure = MetricFailure::none;
  std::string diagnostic;
};

// (phi(x)(v))(y) = -b_a(lambda_phi(x,y), v); entry x*n + y.
std::vector<Vector> lambda_phi(const ExtensionData& d, const BilinearForm& b_a);
// First (x,y,z) with mu(x,y)(z) != mu(y,z)(x).
std::optional<std::array<size_t, 3>> mu_cyclic_violation(const ExtensionData& d);

MetricResult metric_exists(const ExtensionData& d, const BilinearForm& b_a);

struct DoubleExtensionData {
  size_t dim_v = 0;
  BilinearForm b_v;
  Matrix d_map;  // column j = D(v_j)
};

struct QuadraticAlgebra {
  LieAlgebra algebra;
  BilinearForm form;
};

// Basis (D, v1..vn, c).
QuadraticAlgebra double_extension(const DoubleExtensionData& dd);

struct CentralSplit {
  Subspace ideal, complement;
};

std::optional<CentralSplit> orthogonal_split_central(const LieAlgebra& g, const BilinearForm& b);

struct ExtractedQuadratic {
  ExtensionData data;
  BilinearForm b_a;
  Matrix basis;  // columns: new basis (h, a, i) in old coordinates
};

// Extension data read off a Witt split; needs j abelian with [g, j] ⊆ i.
ExtractedQuadratic extract_quadratic(const LieAlgebra& g, const BilinearForm& b);

}  // namespace quadlie
