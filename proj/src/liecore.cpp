#include "quadlie/liecore.hpp"

#include <stdexcept>

namespace quadlie {

namespace {

void check_shape(size_t n, const std::vector<std::string>& names, const std::vector<Rational>& c) {
  if (names.size() != n) throw InputError("basis name count differs from dimension");
  if (c.size() != n * n * n) throw InputError("structure tensor has wrong size");
}

std::string triple_str(const std::vector<std::string>& names, size_t i, size_t j, size_t k) {
  return "(" + names[i] + "," + names[j] + "," + names[k] + ")";
}

}  // namespace

std::vector<std::string> LieAlgebra::default_names(size_t n, const std::string& stem) {
  std::vector<std::string> v;
  for (size_t i = 0; i < n; ++i) v.push_back(stem + std::to_string(i + 1));
  return v;
}

LieAlgebra LieAlgebra::unchecked(std::vector<std::string> names, std::vector<Rational> structure) {
  size_t n = names.size();
  check_shape(n, names, structure);
  LieAlgebra g;
  g.n_ = n;
  g.names_ = std::move(names);
  g.c_ = std::move(structure);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        if (g.c(i, j, k) != -g.c(j, i, k))
          throw InvalidAlgebra("bracket not antisymmetric at [" + g.names_[i] + "," + g.names_[j] + "]");
  return g;
}

LieAlgebra::LieAlgebra(std::vector<std::string> names, std::vector<Rational> structure) {
  *this = unchecked(std::move(names), std::move(structure));
  auto defects = jacobi_defect(*this);
  if (!defects.empty()) {
    std::string msg = "Jacobi identity fails on";
    for (const auto& d : defects) msg += " " + triple_str(names_, d.triple[0], d.triple[1], d.triple[2]);
    throw InvalidAlgebra(msg);
  }
}

LieAlgebra LieAlgebra::abelian(size_t n) {
  return LieAlgebra(default_names(n), std::vector<Rational>(n * n * n));
}

std::optional<size_t> LieAlgebra::index_of(const std::string& name) const {
  for (size_t i = 0; i < n_; ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Vector LieAlgebra::bracket_basis(size_t i, size_t j) const {
  return Vector(c_.begin() + (i * n_ + j) * n_, c_.begin() + (i * n_ + j + 1) * n_);
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != n_ || y.size() != n_) throw InputError("bracket: dimension mismatch");
  Vector r(n_);
  for (size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < n_; ++j) {
      if (y[j].is_zero() || i == j) continue;
      Rational s = x[i] * y[j];
      for (size_t k = 0; k < n_; ++k)
        if (!c(i, j, k).is_zero()) r[k] += s * c(i, j, k);
    }
  }
  return r;
}

Matrix LieAlgebra::ad(size_t i) const {
  Matrix m(n_, n_);
  for (size_t j = 0; j < n_; ++j)
    for (size_t k = 0; k < n_; ++k) m(k, j) = c(i, j, k);
  return m;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  Matrix m(n_, n_);
  for (size_t i = 0; i < n_; ++i)
    if (!x[i].is_zero()) m = m + x[i] * ad(i);
  return m;
}

void BracketTable::set(size_t i, size_t j, const Vector& v) {
  for (size_t k = 0; k < n_; ++k) {
    c_[(i * n_ + j) * n_ + k] = v[k];
    c_[(j * n_ + i) * n_ + k] = -v[k];
  }
}

void BracketTable::add(size_t i, size_t j, size_t k, const Rational& coeff) {
  if (i == j) return;
  c_[(i * n_ + j) * n_ + k] += coeff;
  c_[(j * n_ + i) * n_ + k] -= coeff;
}

std::vector<JacobiDefect> jacobi_defect(const LieAlgebra& g) {
  size_t n = g.dim();
  std::vector<JacobiDefect> out;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        Vector xi = unit(n, i), xj = unit(n, j), xk = unit(n, k);
        Vector s = g.bracket(xi, g.bracket_basis(j, k));
        s = add(s, g.bracket(xj, g.bracket_basis(k, i)));
        s = add(s, g.bracket(xk, g.bracket_basis(i, j)));
        if (!is_zero(s)) out.push_back({{i, j, k}, s});
      }
  return out;
}

Subspace bracket_subspaces(const LieAlgebra& g, const Subspace& u, const Subspace& v) {
  if (u.ambient() != g.dim() || v.ambient() != g.dim())
    throw InputError("bracket_subspaces: dimension mismatch");
  std::vector<Vector> vs;
  for (const auto& a : u.basis_vectors())
    for (const auto& b : v.basis_vectors()) vs.push_back(g.bracket(a, b));
  return Subspace::span(g.dim(), vs);
}

Subspace centralizer_of(const LieAlgebra& g, const Subspace& s) {
  size_t n = g.dim();
  if (s.ambient() != n) throw InputError("centralizer_of: dimension mismatch");
  if (s.dim() == 0) return Subspace::full(n);
  Matrix stacked(0, n);
  for (const auto& b : s.basis_vectors()) stacked = vstack(stacked, g.ad(b));
  return kernel(stacked);
}

Subspace center(const LieAlgebra& g) { return centralizer_of(g, Subspace::full(g.dim())); }

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  return s.contains(bracket_subspaces(g, Subspace::full(g.dim()), s));
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) {
  return s.contains(bracket_subspaces(g, s, s));
}

bool is_abelian(const LieAlgebra& g, const Subspace& s) {
  return bracket_subspaces(g, s, s).is_zero();
}

namespace {

// {x : [x, g] ⊆ c}
Subspace upper_step(const LieAlgebra& g, const Subspace& c) {
  size_t n = g.dim();
  Subspace ann = annihilator(c);
  if (ann.dim() == 0) return Subspace::full(n);
  Matrix stacked(0, n);
  for (size_t j = 0; j < n; ++j) stacked = vstack(stacked, ann.basis() * g.ad(j));
  return kernel(stacked);
}

}  // namespace

const Subspace& SeriesReport::lower(size_t k) const {
  return descending[std::min(k, descending.size() - 1)];
}

const Subspace& SeriesReport::upper(size_t l) const {
  if (l == 0) throw std::out_of_range("upper series index starts at 1");
  return derived_central[std::min(l, derived_central.size()) - 1];
}

SeriesReport series(const LieAlgebra& g) {
  size_t n = g.dim();
  SeriesReport s;
  Subspace full = Subspace::full(n);

  s.descending.push_back(full);
  for (;;) {
    Subspace next = bracket_subspaces(g, full, s.descending.back());
    if (next == s.descending.back()) break;
    s.descending.push_back(next);
  }
  s.m1 = s.descending.size() - 1;

  s.derived.push_back(full);
  for (;;) {
    const Subspace& cur = s.derived.back();
    Subspace next = bracket_subspaces(g, cur, cur);
    if (next == cur) break;
    s.derived.push_back(next);
  }

  s.derived_central.push_back(center(g));
  for (;;) {
    Subspace next = upper_step(g, s.derived_central.back());
    if (next == s.derived_central.back()) break;
    s.derived_central.push_back(next);
  }
  s.m2 = s.derived_central.size();
  s.m = std::max<size_t>({s.m1, s.m2, 1});
  return s;
}

bool is_nilpotent(const SeriesReport& s) { return s.descending.back().is_zero(); }
bool is_solvable(const SeriesReport& s) { return s.derived.back().is_zero(); }

CanonicalIdeals canonical_ideals(const LieAlgebra& g) { return canonical_ideals(g, series(g)); }

CanonicalIdeals canonical_ideals(const LieAlgebra& g, const SeriesReport& s) {
  size_t n = g.dim();
  size_t m = s.m;
  Subspace i(n);
  for (size_t k = 1; k <= m; ++k) i = sum(i, intersect(s.upper(k), s.lower(k)));

  Subspace j_closed = sum(s.upper(1), s.lower(m));
  for (size_t k = 1; k + 1 <= m; ++k) j_closed = sum(j_closed, intersect(s.upper(k + 1), s.lower(k)));

  Subspace j_meet = Subspace::full(n);
  for (size_t k = 1; k <= m; ++k) j_meet = intersect(j_meet, sum(s.upper(k), s.lower(k)));

  if (!(j_closed == j_meet))
    throw std::logic_error("canonical_ideals: closed form and intersection form of j differ");
  if (!j_closed.contains(i)) throw std::logic_error("canonical_ideals: i not contained in j");
  return {i, j_closed};
}

std::optional<size_t> has_abelian_descending_ideal(const LieAlgebra& g) {
  SeriesReport s = series(g);
  for (size_t l = 1; l <= std::max<size_t>(s.m1, 1); ++l)
    if (is_abelian(g, s.lower(l))) return l;
  return std::nullopt;
}

Quotient quotient(const LieAlgebra& g, const Subspace& ideal) {
  size_t n = g.dim();
  if (ideal.ambient() != n) throw InputError("quotient: dimension mismatch");
  if (!is_ideal(g, ideal)) throw InputError("quotient: subspace is not an ideal");
  Subspace comp = ideal.standard_complement();
  std::vector<size_t> qcols;
  for (const auto& b : comp.basis_vectors())
    for (size_t j = 0; j < n; ++j)
      if (!b[j].is_zero()) qcols.push_back(j);
  size_t q = qcols.size();

  // pi(x)_q = x_q - sum_p x_p (r_p)_q over RREF rows r_p of the ideal.
  Matrix proj(q, n), sec(n, q);
  const auto& piv = ideal.pivots();
  for (size_t a = 0; a < q; ++a) {
    proj(a, qcols[a]) = 1;
    sec(qcols[a], a) = 1;
    for (size_t r = 0; r < piv.size(); ++r) proj(a, piv[r]) -= ideal.basis()(r, qcols[a]);
  }

  std::vector<std::string> names;
  for (size_t a : qcols) names.push_back(g.names()[a]);
  BracketTable t(q);
  for (size_t a = 0; a < q; ++a)
    for (size_t b = a + 1; b < q; ++b) t.set(a, b, proj * g.bracket_basis(qcols[a], qcols[b]));
  return {LieAlgebra(names, std::move(t).take()), proj, sec};
}

LieAlgebra heisenberg() {
  BracketTable t(3);
  t.add(0, 1, 2, 1);
  return LieAlgebra({"x1", "x2", "x3"}, std::move(t).take());
}

LieAlgebra transport(const LieAlgebra& g, const Matrix& p, std::vector<std::string> names) {
  size_t n = g.dim();
  if (p.rows() != n || p.cols() != n) throw InputError("transport: shape mismatch");
  Matrix pinv = inverse_or_throw(p, "change of basis");
  if (names.empty()) names = g.names();
  BracketTable t(n);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b) t.set(a, b, p * g.bracket(pinv.col(a), pinv.col(b)));
  return LieAlgebra::unchecked(std::move(names), std::move(t).take());
}

LieAlgebra restrict_to(const LieAlgebra& g, const std::vector<Vector>& basis,
                       std::vector<std::string> names) {
  size_t d = basis.size();
  Matrix bt = Matrix::from_columns(basis, g.dim());
  if (rank(bt) != d) throw InputError("restrict_to: basis not independent");
  if (names.empty()) names = LieAlgebra::default_names(d, "y");
  BracketTable t(d);
  for (size_t a = 0; a < d; ++a)
    for (size_t b = a + 1; b < d; ++b) {
      auto x = solve(bt, Matrix::column(g.bracket(basis[a], basis[b])));
      if (!x) throw InputError("restrict_to: span is not a subalgebra");
      t.set(a, b, x->col(0));
    }
  return LieAlgebra::unchecked(std::move(names), std::move(t).take());
}

}  // namespace quadlie
