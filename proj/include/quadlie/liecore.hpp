#pragma once

#include "quadlie/subspace.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace quadlie {

struct InvalidAlgebra : InputError {
  using InputError::InputError;
};

struct JacobiDefect {
  std::array<size_t, 3> triple;
  Vector defect;
};

// Structure constants c[i][j][k]: [x_i, x_j] = sum_k c[i][j][k] x_k.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  // Validates antisymmetry and the Jacobi identity.
  LieAlgebra(std::vector<std::string> names, std::vector<Rational> structure);
  // Antisymmetry only; used where invalid brackets are wanted on purpose.
  static LieAlgebra unchecked(std::vector<std::string> names, std::vector<Rational> structure);
  static LieAlgebra abelian(size_t n);
  static std::vector<std::string> default_names(size_t n, const std::string& stem = "x");

  size_t dim() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<size_t> index_of(const std::string& name) const;

  const Rational& c(size_t i, size_t j, size_t k) const { return c_[(i * n_ + j) * n_ + k]; }
  Vector bracket_basis(size_t i, size_t j) const;
  Vector bracket(const Vector& x, const Vector& y) const;
  // Matrix of ad(x_i): column j holds [x_i, x_j].
  Matrix ad(size_t i) const;
  Matrix ad(const Vector& x) const;

  const std::vector<Rational>& structure() const { return c_; }
  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  size_t n_ = 0;
  std::vector<std::string> names_;
  std::vector<Rational> c_;
};

// Builder for structure tensors; sets [x_i,x_j] and [x_j,x_i] together.
class BracketTable {
 public:
  explicit BracketTable(size_t n) : n_(n), c_(n * n * n) {}
  void set(size_t i, size_t j, const Vector& v);
  void add(size_t i, size_t j, size_t k, const Rational& coeff);
  std::vector<Rational> take() && { return std::move(c_); }
  const std::vector<Rational>& data() const { return c_; }

 private:
  size_t n_;
  std::vector<Rational> c_;
};

std::vector<JacobiDefect> jacobi_defect(const LieAlgebra& g);

Subspace bracket_subspaces(const LieAlgebra& g, const Subspace& u, const Subspace& v);
Subspace center(const LieAlgebra& g);
Subspace centralizer_of(const LieAlgebra& g, const Subspace& s);
bool is_ideal(const LieAlgebra& g, const Subspace& s);
bool is_subalgebra(const LieAlgebra& g, const Subspace& s);
bool is_abelian(const LieAlgebra& g, const Subspace& s);

struct SeriesReport {
  std::vector<Subspace> descending;       // g^0 ⊇ g^1 ⊇ ... up to the first repeat
  std::vector<Subspace> derived;          // g^(0) ⊇ g^(1) ⊇ ...
  std::vector<Subspace> derived_central;  // C_1 ⊆ C_2 ⊆ ... up to the first repeat
  size_t m1 = 0, m2 = 0, m = 0;

  // Clamped lookups past the stabilization point.
  const Subspace& lower(size_t k) const;
  const Subspace& upper(size_t l) const;  // C_l for l >= 1
};

SeriesReport series(const LieAlgebra& g);
bool is_nilpotent(const SeriesReport& s);
bool is_solvable(const SeriesReport& s);

struct CanonicalIdeals {
  Subspace i, j;
};

// Throws std::logic_error if the two routes to j disagree.
CanonicalIdeals canonical_ideals(const LieAlgebra& g);
CanonicalIdeals canonical_ideals(const LieAlgebra& g, const SeriesReport& s);

std::optional<size_t> has_abelian_descending_ideal(const LieAlgebra& g);

struct Quotient {
  LieAlgebra algebra;
  Matrix projection;  // (n - dim I) x n
  Matrix section;     // n x (n - dim I)
};

Quotient quotient(const LieAlgebra& g, const Subspace& ideal);

// [x1,x2] = x3.
LieAlgebra heisenberg();

// New algebra with brackets transported along an invertible change of basis:
// column j of p is the image of the j-th old basis vector.
LieAlgebra transport(const LieAlgebra& g, const Matrix& p, std::vector<std::string> names = {});

// Restriction to a subalgebra, in the coordinates of its RREF basis.
LieAlgebra restrict_to(const LieAlgebra& g, const std::vector<Vector>& basis,
                       std::vector<std::string> names = {});

}  // namespace quadlie
