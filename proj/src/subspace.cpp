#include "quadlie/subspace.hpp"

#include <sstream>

namespace quadlie {

Subspace Subspace::row_space(const Matrix& m) {
  Rref r = rref(m);
  Subspace s(m.cols());
  s.basis_ = r.reduced.block(0, 0, r.rank, m.cols());
  s.pivots_ = r.pivots;
  return s;
}

Subspace Subspace::span(size_t ambient, const std::vector<Vector>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient) throw InputError("span: vector length differs from ambient dimension");
  return row_space(Matrix::from_rows(vectors, ambient));
}

Subspace Subspace::full(size_t ambient) { return row_space(Matrix::identity(ambient)); }

Subspace Subspace::coordinates(size_t ambient, const std::vector<size_t>& idx) {
  std::vector<Vector> vs;
  for (size_t i : idx) vs.push_back(unit(ambient, i));
  return span(ambient, vs);
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  for (size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != n_) throw InputError("contains: dimension mismatch");
  // Reduce v against the RREF rows; membership iff nothing is left.
  Vector r = v;
  for (size_t i = 0; i < dim(); ++i) {
    Rational c = r[pivots_[i]];
    if (c.is_zero()) continue;
    for (size_t j = 0; j < n_; ++j)
      if (!basis_(i, j).is_zero()) r[j] -= c * basis_(i, j);
  }
  return quadlie::is_zero(r);
}

bool Subspace::contains(const Subspace& s) const {
  if (s.n_ != n_) throw InputError("contains: dimension mismatch");
  for (size_t i = 0; i < s.dim(); ++i)
    if (!contains(s.basis_.row(i))) return false;
  return true;
}

Vector Subspace::coords(const Vector& v) const {
  if (!contains(v)) throw InputError("coords: vector outside subspace");
  Vector c(dim());
  for (size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::standard_complement() const {
  std::vector<size_t> idx;
  size_t p = 0;
  for (size_t j = 0; j < n_; ++j) {
    if (p < pivots_.size() && pivots_[p] == j) {
      ++p;
      continue;
    }
    idx.push_back(j);
  }
  return coordinates(n_, idx);
}

std::string Subspace::str() const {
  std::ostringstream os;
  os << "span" << basis_.str();
  return os.str();
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw InputError("sum: dimension mismatch");
  return Subspace::row_space(vstack(u.basis(), v.basis()));
}

Subspace kernel(const Matrix& f) {
  Rref r = rref(f);
  size_t n = f.cols();
  std::vector<bool> is_pivot(n, false);
  for (size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> vs;
  for (size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    Vector v(n);
    v[j] = 1;
    for (size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, j);
    vs.push_back(v);
  }
  return Subspace::span(n, vs);
}

Subspace annihilator(const Subspace& u) {
  if (u.dim() == 0) return Subspace::full(u.ambient());
  return kernel(u.basis());
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw InputError("intersect: dimension mismatch");
  if (u.dim() == 0 || v.dim() == 0) return Subspace(u.ambient());
  Subspace ann = annihilator(v);
  if (ann.dim() == 0) return u;
  // x = U^t a with N U^t a = 0.
  Matrix ut = u.basis().transpose();
  Subspace a = kernel(ann.basis() * ut);
  std::vector<Vector> vs;
  for (const auto& coeff : a.basis_vectors()) vs.push_back(ut * coeff);
  return Subspace::span(u.ambient(), vs);
}

Subspace preimage(const Matrix& f, const Subspace& v) {
  if (f.rows() != v.ambient()) throw InputError("preimage: dimension mismatch");
  Subspace ann = annihilator(v);
  if (ann.dim() == 0) return Subspace::full(f.cols());
  return kernel(ann.basis() * f);
}

Subspace image(const Matrix& f, const Subspace& u) {
  if (f.cols() != u.ambient()) throw InputError("image: dimension mismatch");
  std::vector<Vector> vs;
  for (const auto& b : u.basis_vectors()) vs.push_back(f * b);
  return Subspace::span(f.rows(), vs);
}

Subspace complement_in(const Subspace& inner, const Subspace& outer) {
  if (!outer.contains(inner)) throw InputError("complement_in: inner not contained in outer");
  Subspace acc = inner;
  std::vector<Vector> picked;
  for (const auto& b : outer.basis_vectors()) {
    if (acc.contains(b)) continue;
    picked.push_back(b);
    acc = sum(acc, Subspace::span(outer.ambient(), {b}));
  }
  return Subspace::span(outer.ambient(), picked);
}

}  // namespace quadlie
