#pragma once

#include "quadlie/matrix.hpp"

namespace quadlie {

// Row space kept in RREF, so equal subspaces have identical bases.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(size_t ambient) : n_(ambient), basis_(0, ambient) {}

  static Subspace span(size_t ambient, const std::vector<Vector>& vectors);
  static Subspace row_space(const Matrix& m);
  static Subspace full(size_t ambient);
  static Subspace coordinates(size_t ambient, const std::vector<size_t>& idx);

  size_t ambient() const { return n_; }
  size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == n_; }
  const Matrix& basis() const { return basis_; }
  std::vector<Vector> basis_vectors() const;
  const std::vector<size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& s) const;

  // Coordinates of v in the RREF basis; v must lie in the subspace.
  Vector coords(const Vector& v) const;

  // Standard coordinate vectors outside the pivot columns.
  Subspace standard_complement() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

  std::string str() const;

 private:
  size_t n_ = 0;
  Matrix basis_;
  std::vector<size_t> pivots_;
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
// {x : f x in v}; f maps column vectors of the source into v's ambient space.
Subspace preimage(const Matrix& f, const Subspace& v);
Subspace image(const Matrix& f, const Subspace& u);
Subspace kernel(const Matrix& f);
// Rows spanning {y : <y, s> = 0 for all s in u}.
Subspace annihilator(const Subspace& u);

// Greedy completion of `inner` to a complement inside `outer` (inner must lie in outer).
Subspace complement_in(const Subspace& inner, const Subspace& outer);

}  // namespace quadlie
