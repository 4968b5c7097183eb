#pragma once

#include "quadlie/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace quadlie {

using Vector = std::vector<Rational>;

// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, size_t rows);
  static Matrix column(const Vector& v);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  Vector row(size_t i) const;
  Vector col(size_t j) const;
  void set_row(size_t i, const Vector& v);
  void set_col(size_t j, const Vector& v);

  Matrix transpose() const;
  Matrix block(size_t r0, size_t c0, size_t nr, size_t nc) const;
  void set_block(size_t r0, size_t c0, const Matrix& b);
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  Vector operator*(const Vector& v) const;
  friend Matrix operator*(const Rational& s, const Matrix& m);

  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string str() const;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

struct Rref {
  Matrix reduced;
  size_t rank = 0;
  std::vector<size_t> pivots;
};

Rref rref(const Matrix& m);
size_t rank(const Matrix& m);
Rational det(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
Matrix inverse_or_throw(const Matrix& m, const char* what);

Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Rational& s, const Vector& v);
bool is_zero(const Vector& v);
Vector unit(size_t n, size_t i);
Rational dot(const Vector& a, const Vector& b);

class Subspace;

// One solution of a x = b, or nothing when inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

struct SolutionSet {
  Matrix particular;
  std::vector<Vector> kernel;  // RREF basis of {x : a x = 0}
};
std::optional<SolutionSet> solve_all(const Matrix& a, const Matrix& b);

}  // namespace quadlie
