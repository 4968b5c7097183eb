#include "quadlie/cochain.hpp"

#include <algorithm>

namespace quadlie {

Representation Representation::unchecked(LieAlgebra h, size_t module_dim, std::vector<Matrix> mats) {
  if (mats.size() != h.dim()) throw InputError("representation: need one matrix per basis element");
  for (const auto& m : mats)
    if (m.rows() != module_dim || m.cols() != module_dim)
      throw InputError("representation: matrix shape differs from module dimension");
  Representation r;
  r.h_ = std::move(h);
  r.m_ = module_dim;
  r.mats_ = std::move(mats);
  return r;
}

Representation::Representation(LieAlgebra h, size_t module_dim, std::vector<Matrix> mats) {
  *this = unchecked(std::move(h), module_dim, std::move(mats));
  auto bad = homomorphism_defects();
  if (!bad.empty())
    throw InputError("not a representation: fails on [" + h_.names()[bad[0].first] + "," +
                     h_.names()[bad[0].second] + "]");
}

Representation Representation::trivial(const LieAlgebra& h, size_t module_dim) {
  return unchecked(h, module_dim, std::vector<Matrix>(h.dim(), Matrix(module_dim, module_dim)));
}

Matrix Representation::at(const Vector& x) const {
  Matrix m(m_, m_);
  for (size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) m = m + x[i] * mats_[i];
  return m;
}

bool Representation::is_zero() const {
  return std::all_of(mats_.begin(), mats_.end(), [](const Matrix& m) { return m.is_zero(); });
}

std::vector<std::pair<size_t, size_t>> Representation::homomorphism_defects() const {
  std::vector<std::pair<size_t, size_t>> out;
  for (size_t i = 0; i < h_.dim(); ++i)
    for (size_t j = i + 1; j < h_.dim(); ++j) {
      Matrix lhs = at(h_.bracket_basis(i, j));
      Matrix rhs = mats_[i] * mats_[j] - mats_[j] * mats_[i];
      if (!(lhs == rhs)) out.emplace_back(i, j);
    }
  return out;
}

Representation coadjoint(const LieAlgebra& h) {
  std::vector<Matrix> mats;
  for (size_t i = 0; i < h.dim(); ++i) mats.push_back(-h.ad(i).transpose());
  return Representation(h, h.dim(), std::move(mats));
}

Representation adjoint(const LieAlgebra& h) {
  std::vector<Matrix> mats;
  for (size_t i = 0; i < h.dim(); ++i) mats.push_back(h.ad(i));
  return Representation(h, h.dim(), std::move(mats));
}

Representation hom_left(const Representation& rho, size_t dim_a) {
  size_t di = rho.module_dim();
  std::vector<Matrix> mats;
  for (const auto& r : rho.matrices()) {
    Matrix m(di * dim_a, di * dim_a);
    for (size_t p = 0; p < di; ++p)
      for (size_t s = 0; s < di; ++s)
        if (!r(p, s).is_zero())
          for (size_t q = 0; q < dim_a; ++q) m(p * dim_a + q, s * dim_a + q) = r(p, s);
    mats.push_back(m);
  }
  return Representation::unchecked(rho.algebra(), di * dim_a, std::move(mats));
}

int sort_sign(Tuple& t) {
  int sign = 1;
  for (size_t i = 1; i < t.size(); ++i)
    for (size_t j = i; j > 0 && t[j - 1] > t[j]; --j) {
      std::swap(t[j - 1], t[j]);
      sign = -sign;
    }
  for (size_t i = 1; i < t.size(); ++i)
    if (t[i - 1] == t[i]) return 0;
  return sign;
}

Vector Cochain::operator()(const Tuple& args) const {
  if (args.size() != n_) throw InputError("cochain evaluated with wrong arity");
  Tuple t = args;
  int s = sort_sign(t);
  if (s == 0) return Vector(m_);
  auto it = c_.find(t);
  if (it == c_.end()) return Vector(m_);
  return s > 0 ? it->second : scale(-1, it->second);
}

void Cochain::set(const Tuple& args, const Vector& v) {
  if (args.size() != n_ || v.size() != m_) throw InputError("cochain set: shape mismatch");
  for (size_t a : args)
    if (a >= h_) throw InputError("cochain set: index out of range");
  Tuple t = args;
  int s = sort_sign(t);
  if (s == 0) {
    if (!quadlie::is_zero(v)) throw InputError("cochain set: nonzero value on repeated arguments");
    return;
  }
  if (quadlie::is_zero(v))
    c_.erase(t);
  else
    c_[t] = s > 0 ? v : scale(-1, v);
}

void Cochain::add(const Tuple& args, const Vector& v) { set(args, quadlie::add((*this)(args), v)); }

Vector Cochain::evaluate(const std::vector<Vector>& args) const {
  if (args.size() != n_) throw InputError("cochain evaluated with wrong arity");
  Vector out(m_);
  for (const auto& [t, val] : c_) {
    // Coefficient is the determinant of the n x n minor args[k][t[l]].
    Matrix minor(n_, n_);
    for (size_t k = 0; k < n_; ++k)
      for (size_t l = 0; l < n_; ++l) minor(k, l) = args[k][t[l]];
    Rational d = n_ == 0 ? Rational(1) : det(minor);
    if (!d.is_zero()) out = quadlie::add(out, scale(d, val));
  }
  return out;
}

Matrix Cochain::matrix_at(const Tuple& args, size_t rows, size_t cols) const {
  if (rows * cols != m_) throw InputError("matrix_at: shape does not match module dimension");
  Vector v = (*this)(args);
  Matrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  return m;
}

void Cochain::set_matrix(const Tuple& args, const Matrix& m) {
  Vector v;
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  set(args, v);
}

std::vector<Tuple> Cochain::increasing_tuples(size_t h_dim, size_t degree) {
  std::vector<Tuple> out;
  if (degree > h_dim) return out;
  Tuple t(degree);
  for (size_t i = 0; i < degree; ++i) t[i] = i;
  for (;;) {
    out.push_back(t);
    size_t k = degree;
    while (k > 0 && t[k - 1] == h_dim - degree + k - 1) --k;
    if (k == 0) break;
    ++t[k - 1];
    for (size_t l = k; l < degree; ++l) t[l] = t[l - 1] + 1;
  }
  return out;
}

size_t Cochain::flat_size() const { return increasing_tuples(h_, n_).size() * m_; }

Vector Cochain::flatten() const {
  Vector out;
  for (const auto& t : increasing_tuples(h_, n_)) {
    Vector v = (*this)(t);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

Cochain Cochain::unflatten(size_t degree, size_t h_dim, size_t module_dim, const Vector& v) {
  Cochain c(degree, h_dim, module_dim);
  auto ts = increasing_tuples(h_dim, degree);
  if (v.size() != ts.size() * module_dim) throw InputError("unflatten: length mismatch");
  for (size_t a = 0; a < ts.size(); ++a)
    c.set(ts[a], Vector(v.begin() + a * module_dim, v.begin() + (a + 1) * module_dim));
  return c;
}

void Cochain::check_same(const Cochain& o) const {
  if (n_ != o.n_ || h_ != o.h_ || m_ != o.m_) throw InputError("cochain shapes differ");
}

Cochain Cochain::operator+(const Cochain& o) const {
  check_same(o);
  Cochain r = *this;
  for (const auto& [t, v] : o.c_) r.add(t, v);
  return r;
}

Cochain Cochain::operator-(const Cochain& o) const { return *this + (-o); }

Cochain Cochain::operator-() const { return Rational(-1) * *this; }

Cochain operator*(const Rational& s, const Cochain& c) {
  Cochain r(c.n_, c.h_, c.m_);
  for (const auto& [t, v] : c.c_) r.set(t, scale(s, v));
  return r;
}

Cochain operator*(const Matrix& a, const Cochain& c) {
  if (a.cols() != c.m_) throw InputError("cochain value map: shape mismatch");
  Cochain r(c.n_, c.h_, a.rows());
  for (const auto& [t, v] : c.c_) r.set(t, a * v);
  return r;
}

namespace {

Tuple drop(const Tuple& t, size_t i) {
  Tuple r;
  for (size_t k = 0; k < t.size(); ++k)
    if (k != i) r.push_back(t[k]);
  return r;
}

Tuple drop2(const Tuple& t, size_t i, size_t j) {
  Tuple r;
  for (size_t k = 0; k < t.size(); ++k)
    if (k != i && k != j) r.push_back(t[k]);
  return r;
}

}  // namespace

Cochain differential(const Representation& r, const Cochain& c) {
  const LieAlgebra& h = r.algebra();
  if (c.h_dim() != h.dim() || c.module_dim() != r.module_dim())
    throw InputError("differential: dimension mismatch");
  size_t n = c.degree();
  Cochain out(n + 1, h.dim(), c.module_dim());
  for (const auto& x : Cochain::increasing_tuples(h.dim(), n + 1)) {
    Vector acc(c.module_dim());
    for (size_t i = 0; i <= n; ++i) {
      Vector term = r[x[i]] * c(drop(x, i));
      acc = (i % 2 == 0) ? add(acc, term) : sub(acc, term);
    }
    for (size_t i = 0; i <= n; ++i)
      for (size_t j = i + 1; j <= n; ++j) {
        Tuple rest = drop2(x, i, j);
        Vector br = h.bracket_basis(x[i], x[j]);
        Vector term(c.module_dim());
        for (size_t k = 0; k < h.dim(); ++k) {
          if (br[k].is_zero()) continue;
          Tuple args{k};
          args.insert(args.end(), rest.begin(), rest.end());
          term = add(term, scale(br[k], c(args)));
        }
        acc = ((i + j) % 2 == 0) ? add(acc, term) : sub(acc, term);
      }
    out.set(x, acc);
  }
  return out;
}

Cochain e_phi(const Cochain& phi, const Cochain& lam, size_t dim_i, size_t dim_a) {
  if (phi.degree() != 1 || phi.module_dim() != dim_i * dim_a || lam.module_dim() != dim_a ||
      phi.h_dim() != lam.h_dim())
    throw InputError("e_phi: dimension mismatch");
  size_t n = lam.degree();
  Cochain out(n + 1, lam.h_dim(), dim_i);
  for (const auto& x : Cochain::increasing_tuples(lam.h_dim(), n + 1)) {
    Vector acc(dim_i);
    for (size_t i = 0; i <= n; ++i) {
      Vector term = phi.matrix_at({x[i]}, dim_i, dim_a) * lam(drop(x, i));
      acc = (i % 2 == 0) ? add(acc, term) : sub(acc, term);
    }
    out.set(x, acc);
  }
  return out;
}

std::pair<Cochain, Cochain> big_d(const Cochain& phi, const Representation& rho, const Cochain& lam,
                                  const Cochain& mu) {
  Representation triv = Representation::trivial(rho.algebra(), lam.module_dim());
  Cochain first = differential(triv, lam);
  Cochain second = e_phi(phi, lam, rho.module_dim(), lam.module_dim()) + differential(rho, mu);
  return {first, second};
}

bool is_automorphism(const LieAlgebra& h, const Matrix& g) {
  if (g.rows() != h.dim() || g.cols() != h.dim() || det(g).is_zero()) return false;
  for (size_t i = 0; i < h.dim(); ++i)
    for (size_t j = i + 1; j < h.dim(); ++j)
      if (g * h.bracket_basis(i, j) != h.bracket(g.col(i), g.col(j))) return false;
  return true;
}

GroupElement GroupElement::make(Matrix g, Matrix sigma) {
  if (!g.is_square() || det(g).is_zero()) throw InputError("group element: g is singular");
  if (!sigma.is_square() || det(sigma).is_zero()) throw InputError("group element: sigma is singular");
  return {std::move(g), std::move(sigma)};
}

GroupElement GroupElement::automorphism(const LieAlgebra& h, Matrix g, Matrix sigma) {
  GroupElement e = make(std::move(g), std::move(sigma));
  if (!is_automorphism(h, e.g)) throw InputError("group element: g is not an automorphism");
  return e;
}

Matrix GroupElement::split_sigma(const Matrix& h_a, const Matrix& t, const Matrix& k) {
  size_t a = h_a.rows(), i = k.rows();
  if (t.rows() != i || t.cols() != a) throw InputError("split sigma: T has wrong shape");
  Matrix s(a + i, a + i);
  s.set_block(0, 0, h_a);
  s.set_block(a, 0, t);
  s.set_block(a, a, k);
  return s;
}

GroupElement GroupElement::identity(size_t h_dim, size_t module_dim) {
  return {Matrix::identity(h_dim), Matrix::identity(module_dim)};
}

GroupElement GroupElement::operator*(const GroupElement& o) const { return {g * o.g, sigma * o.sigma}; }

GroupElement GroupElement::inverse() const {
  return {inverse_or_throw(g, "g"), inverse_or_throw(sigma, "sigma")};
}

Cochain precompose_inverse(const Matrix& g, const Cochain& c) {
  if (g.rows() != c.h_dim()) throw InputError("action: g has wrong size");
  Matrix ginv = inverse_or_throw(g, "g");
  Cochain out(c.degree(), c.h_dim(), c.module_dim());
  for (const auto& t : Cochain::increasing_tuples(c.h_dim(), c.degree())) {
    std::vector<Vector> args;
    for (size_t j : t) args.push_back(ginv.col(j));
    out.set(t, c.evaluate(args));
  }
  return out;
}

Cochain act_on_cochain(const GroupElement& gamma, const Cochain& c) {
  if (gamma.sigma.rows() != c.module_dim()) throw InputError("action: sigma has wrong size");
  if (det(gamma.sigma).is_zero()) throw InputError("action: sigma is singular");
  return gamma.sigma * precompose_inverse(gamma.g, c);
}

Representation act_on_representation(const GroupElement& gamma, const Representation& r) {
  Matrix ginv = inverse_or_throw(gamma.g, "g");
  Matrix sinv = inverse_or_throw(gamma.sigma, "sigma");
  if (ginv.rows() != r.algebra().dim() || sinv.rows() != r.module_dim())
    throw InputError("action: dimension mismatch");
  std::vector<Matrix> mats;
  for (size_t j = 0; j < ginv.cols(); ++j) mats.push_back(gamma.sigma * r.at(ginv.col(j)) * sinv);
  return Representation(r.algebra(), r.module_dim(), std::move(mats));
}

}  // namespace quadlie
