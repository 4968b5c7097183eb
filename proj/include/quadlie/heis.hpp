#pragma once

#include "quadlie/quadratic.hpp"

#include <map>

namespace quadlie::heis {

// lam columns: images of (x2,x3), (x3,x1), (x1,x2); same for mu.
// phi[j] is 3 x r: entry (i, l) is the theta^i coefficient of phi(x_{j+1})(v_l).
struct HeisExtension {
  size_t r = 3;
  std::array<Matrix, 3> phi;
  Matrix lam;
  Matrix mu;

  static HeisExtension zero(size_t r);
  friend bool operator==(const HeisExtension&, const HeisExtension&) = default;
};

// phi3 forced by the 1-cocycle condition.
Matrix phi3_from(const Matrix& phi1, const Matrix& phi2);

struct HeisCheck {
  bool phi3_ok = true;
  Rational eq1, eq2, eq3;  // the three scalar cocycle conditions
  bool ok() const { return phi3_ok && eq1.is_zero() && eq2.is_zero() && eq3.is_zero(); }
  std::vector<std::string> failures() const;
};

HeisCheck check(const HeisExtension& he);

Cochain lambda_cochain(const Matrix& m);   // r x 3 -> 2-cochain on the Heisenberg algebra
Matrix lambda_matrix(const Cochain& c);    // inverse of lambda_cochain

ExtensionData to_extension_data(const HeisExtension& he);
ExtensionData to_extension_data_unchecked(const HeisExtension& he);
HeisExtension from_extension_data(const ExtensionData& d);

enum class LambdaForm { id_block, e11, zero };
const char* to_string(LambdaForm f);
Matrix lambda_template(LambdaForm f, size_t r);

struct LambdaReduction {
  LambdaForm form;
  Matrix canonical;
  Matrix h_a;
  Matrix g;
  Cochain tau;  // canonical = (g, h_a).lam + d tau
};

LambdaReduction reduce_lambda(const Matrix& lam);
size_t rank_w12(const Matrix& lam);
// (1/det g) h lam g^t computed through the cochain action, plus d tau.
Matrix apply_lambda_witness(const Matrix& lam, const Matrix& h_a, const Matrix& g, const Cochain& tau);

bool is_heis_automorphism(const Matrix& g);

struct PhiEntry {
  int j, row, col;  // 1-based, phi^j_{row,col}
  friend auto operator<=>(const PhiEntry&, const PhiEntry&) = default;
};

// sum coeff * phi-entry + constant = 0
struct LinearConstraint {
  std::vector<std::pair<PhiEntry, Rational>> terms;
  Rational constant;
  std::string str() const;
  Rational residual(const HeisExtension& he) const;
};

using Params = std::map<std::string, Rational>;

struct CanonicalFamily {
  std::string tag;
  LambdaForm lambda_form;
  std::vector<std::string> parameters;
  std::string parameter_condition;  // empty when none

  Matrix lambda(size_t r) const { return lambda_template(lambda_form, r); }
  Matrix mu(const Params& p) const;
  bool admissible(const Params& p) const;
  Params representative() const;
  std::vector<LinearConstraint> phi_constraints(const Params& p) const;
  // Free phi1/phi2 entries taken from the inputs, constrained entries solved, phi3 completed.
  HeisExtension instantiate(size_t r, const Params& p, const Matrix& phi1, const Matrix& phi2) const;
  HeisExtension instantiate(size_t r, const Params& p) const;
  bool accepts(const HeisExtension& he) const;
};

std::vector<CanonicalFamily> catalog();
const CanonicalFamily& family(const std::string& tag);

// phi matrices with which the family carries a metric (identity b_a).
std::array<Matrix, 3> metric_phi(const std::string& tag, size_t r);

struct MetricEntry {
  std::string tag;
  HeisExtension he;
  MetricCertificate certificate;
};

struct MetricRejection {
  std::string tag;
  HeisExtension he;
  MetricFailure failure;
  std::string diagnostic;
};

struct MetricCatalog {
  std::vector<MetricEntry> entries;
  std::vector<MetricRejection> rejections;
};

MetricCatalog metric_catalog(size_t r);

struct Classification {
  std::string tag;                // family tag, or "unlisted"
  bool rational_representative = true;
  std::string note;
  HeisExtension normal_form;
  IsomorphismWitness witness;     // from the input data to normal_form
};

Classification classify(const HeisExtension& he);

struct SplitReport {
  size_t max_central_dim = 0;     // dimension of the maximal nondegenerate central ideal
  Subspace central;               // the (r-3)-dimensional split ideal
  Subspace remainder;
  HeisExtension remainder_data;   // r = 3
  Classification remainder_class;
};

SplitReport split_check(const HeisExtension& he);

// Dimensions of basis-free subspaces; unequal vectors certify non-isomorphism.
std::vector<size_t> structure_invariants(const LieAlgebra& g);

}  // namespace quadlie::heis
