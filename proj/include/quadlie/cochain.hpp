#pragma once

#include "quadlie/liecore.hpp"

#include <map>
#include <utility>

namespace quadlie {

class Representation {
 public:
  Representation() = default;
  // Checks R([x_i,x_j]) = [R(x_i), R(x_j)].
  Representation(LieAlgebra h, size_t module_dim, std::vector<Matrix> mats);
  static Representation unchecked(LieAlgebra h, size_t module_dim, std::vector<Matrix> mats);
  static Representation trivial(const LieAlgebra& h, size_t module_dim);

  const LieAlgebra& algebra() const { return h_; }
  size_t module_dim() const { return m_; }
  const Matrix& operator[](size_t i) const { return mats_[i]; }
  const std::vector<Matrix>& matrices() const { return mats_; }
  Matrix at(const Vector& x) const;
  bool is_zero() const;

  // Basis pairs (i<j) where the homomorphism property fails.
  std::vector<std::pair<size_t, size_t>> homomorphism_defects() const;

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  LieAlgebra h_;
  size_t m_ = 0;
  std::vector<Matrix> mats_;
};

// ad*(x) = -ad(x)^t in the dual basis.
Representation coadjoint(const LieAlgebra& h);
Representation adjoint(const LieAlgebra& h);
// x -> (T -> rho(x) T) on rows x cols matrices flattened row-major, cols = dim_a.
Representation hom_left(const Representation& rho, size_t dim_a);

using Tuple = std::vector<size_t>;

// Alternating multilinear map h^n -> module, stored on strictly increasing tuples.
class Cochain {
 public:
  Cochain() = default;
  Cochain(size_t degree, size_t h_dim, size_t module_dim)
      : n_(degree), h_(h_dim), m_(module_dim) {}

  size_t degree() const { return n_; }
  size_t h_dim() const { return h_; }
  size_t module_dim() const { return m_; }

  // Any index order; sign from sorting, zero on repeats.
  Vector operator()(const Tuple& args) const;
  void set(const Tuple& args, const Vector& v);
  void add(const Tuple& args, const Vector& v);
  // Multilinear evaluation on arbitrary vectors of h.
  Vector evaluate(const std::vector<Vector>& args) const;

  // Value reshaped as a rows x cols matrix (row-major), for Hom-valued cochains.
  Matrix matrix_at(const Tuple& args, size_t rows, size_t cols) const;
  void set_matrix(const Tuple& args, const Matrix& m);

  bool is_zero() const { return c_.empty(); }
  const std::map<Tuple, Vector>& coeffs() const { return c_; }

  // Coordinates over increasing tuples in lexicographic order, module index fastest.
  Vector flatten() const;
  static Cochain unflatten(size_t degree, size_t h_dim, size_t module_dim, const Vector& v);
  static std::vector<Tuple> increasing_tuples(size_t h_dim, size_t degree);
  size_t flat_size() const;

  Cochain operator+(const Cochain& o) const;
  Cochain operator-(const Cochain& o) const;
  Cochain operator-() const;
  friend Cochain operator*(const Rational& s, const Cochain& c);
  // Pointwise linear map on values: (A c)(x) = A (c(x)).
  friend Cochain operator*(const Matrix& a, const Cochain& c);

  friend bool operator==(const Cochain&, const Cochain&) = default;

 private:
  void check_same(const Cochain& o) const;
  size_t n_ = 0, h_ = 0, m_ = 0;
  std::map<Tuple, Vector> c_;
};

// Sign of the permutation sorting `t`, 0 on repeats; t is sorted in place.
int sort_sign(Tuple& t);

Cochain differential(const Representation& r, const Cochain& c);
// phi: degree 1, values dim_i x dim_a matrices flattened; lam: values in a.
Cochain e_phi(const Cochain& phi, const Cochain& lam, size_t dim_i, size_t dim_a);
// (d lam, e_phi(lam) + d mu), with a carrying the trivial action.
std::pair<Cochain, Cochain> big_d(const Cochain& phi, const Representation& rho, const Cochain& lam,
                                  const Cochain& mu);

struct GroupElement {
  Matrix g;      // acts on h
  Matrix sigma;  // acts on the module

  static GroupElement make(Matrix g, Matrix sigma);
  // Also requires g to be an automorphism of h.
  static GroupElement automorphism(const LieAlgebra& h, Matrix g, Matrix sigma);
  // sigma = [[h_a, 0], [t, k]] on a ⊕ i.
  static Matrix split_sigma(const Matrix& h_a, const Matrix& t, const Matrix& k);
  static GroupElement identity(size_t h_dim, size_t module_dim);

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
};

bool is_automorphism(const LieAlgebra& h, const Matrix& g);

// (g,s).c = s c(g^-1 ., ..., g^-1 .)
Cochain act_on_cochain(const GroupElement& gamma, const Cochain& c);
// (g,s).R = s R(g^-1 .) s^-1
Representation act_on_representation(const GroupElement& gamma, const Representation& r);
// c(g^-1 ., ...) alone, i.e. the action with trivial sigma on any module.
Cochain precompose_inverse(const Matrix& g, const Cochain& c);

}  // namespace quadlie
