#include "quadlie/heis.hpp"

#include <sstream>

namespace quadlie::heis {

namespace {

Matrix phi_zero(size_t r) { return Matrix(3, r); }

IsomorphismWitness plain_witness(size_t r) {
  return {Matrix::identity(3), Matrix::identity(r), Matrix::identity(3), Matrix(3, r), Cochain(1, 3, r),
          Cochain(1, 3, 3)};
}

Matrix dual_k(const Matrix& g) { return inverse_or_throw(g, "g").transpose(); }

const LieAlgebra& heis_algebra() {
  static const LieAlgebra h = heisenberg();
  return h;
}

}  // namespace

HeisExtension HeisExtension::zero(size_t r) {
  if (r < 3) throw InputError("Heisenberg extensions need r >= 3");
  return {r, {phi_zero(r), phi_zero(r), phi_zero(r)}, Matrix(r, 3), Matrix(3, 3)};
}

Matrix phi3_from(const Matrix& phi1, const Matrix& phi2) {
  Matrix p3(3, phi1.cols());
  for (size_t l = 0; l < phi1.cols(); ++l) {
    p3(0, l) = -phi1(2, l);
    p3(1, l) = -phi2(2, l);
  }
  return p3;
}

std::vector<std::string> HeisCheck::failures() const {
  std::vector<std::string> out;
  if (!phi3_ok) out.push_back("phi3 is not determined by phi1, phi2");
  if (!eq1.is_zero()) out.push_back("(phi1 lam)_11 + (phi2 lam)_12 - (phi1 lam)_33 + mu_32 = " + eq1.str());
  if (!eq2.is_zero()) out.push_back("(phi1 lam)_21 + (phi2 lam)_22 - (phi2 lam)_33 - mu_31 = " + eq2.str());
  if (!eq3.is_zero()) out.push_back("(phi1 lam)_31 + (phi2 lam)_32 = " + eq3.str());
  return out;
}

HeisCheck check(const HeisExtension& he) {
  size_t r = he.r;
  for (const auto& p : he.phi)
    if (p.rows() != 3 || p.cols() != r) throw InputError("phi matrices must be 3 x r");
  if (he.lam.rows() != r || he.lam.cols() != 3) throw InputError("lambda must be r x 3");
  if (he.mu.rows() != 3 || he.mu.cols() != 3) throw InputError("mu must be 3 x 3");
  HeisCheck c;
  c.phi3_ok = he.phi[2] == phi3_from(he.phi[0], he.phi[1]);
  Matrix a = he.phi[0] * he.lam, b = he.phi[1] * he.lam;
  c.eq1 = a(0, 0) + b(0, 1) - a(2, 2) + he.mu(2, 1);
  c.eq2 = a(1, 0) + b(1, 1) - b(2, 2) - he.mu(2, 0);
  c.eq3 = a(2, 0) + b(2, 1);
  return c;
}

Cochain lambda_cochain(const Matrix& m) {
  if (m.cols() != 3) throw InputError("lambda_cochain: need three columns");
  Cochain c(2, 3, m.rows());
  c.set({1, 2}, m.col(0));
  c.set({2, 0}, m.col(1));
  c.set({0, 1}, m.col(2));
  return c;
}

Matrix lambda_matrix(const Cochain& c) {
  if (c.degree() != 2 || c.h_dim() != 3) throw InputError("lambda_matrix: need a 2-cochain on a 3-dim algebra");
  return Matrix::from_columns({c({1, 2}), c({2, 0}), c({0, 1})}, c.module_dim());
}

ExtensionData to_extension_data_unchecked(const HeisExtension& he) {
  const LieAlgebra& h = heis_algebra();
  ExtensionData d = ExtensionData::zero(h, he.r, coadjoint(h));
  for (size_t j = 0; j < 3; ++j) d.phi.set_matrix({j}, he.phi[j]);
  d.lam = lambda_cochain(he.lam);
  d.mu = lambda_cochain(he.mu);
  return d;
}

ExtensionData to_extension_data(const HeisExtension& he) {
  HeisCheck c = check(he);
  if (!c.ok()) {
    std::string msg = "Heisenberg extension data violates:";
    for (const auto& f : c.failures()) msg += " [" + f + "]";
    throw InputError(msg);
  }
  ExtensionData d = to_extension_data_unchecked(he);
  if (!validity(d).ok()) throw std::logic_error("to_extension_data: scalar conditions passed but cocycle test failed");
  return d;
}

HeisExtension from_extension_data(const ExtensionData& d) {
  if (d.h.dim() != 3 || d.h.structure() != heis_algebra().structure())
    throw InputError("from_extension_data: base algebra is not the Heisenberg algebra");
  if (d.dim_i != 3 || d.rho.matrices() != coadjoint(heis_algebra()).matrices())
    throw InputError("from_extension_data: module is not the coadjoint representation");
  HeisExtension he = HeisExtension::zero(d.dim_a);
  for (size_t j = 0; j < 3; ++j) he.phi[j] = d.phi_at(j);
  he.lam = lambda_matrix(d.lam);
  he.mu = lambda_matrix(d.mu);
  return he;
}

const char* to_string(LambdaForm f) {
  switch (f) {
    case LambdaForm::id_block: return "identity block";
    case LambdaForm::e11: return "E11";
    case LambdaForm::zero: return "zero";
  }
  return "?";
}

Matrix lambda_template(LambdaForm f, size_t r) {
  Matrix m(r, 3);
  if (f == LambdaForm::id_block)
    for (size_t i = 0; i < 3; ++i) m(i, i) = 1;
  else if (f == LambdaForm::e11)
    m(0, 0) = 1;
  return m;
}

size_t rank_w12(const Matrix& lam) { return rank(lam.block(0, 0, lam.rows(), 2)); }

bool is_heis_automorphism(const Matrix& g) { return is_automorphism(heis_algebra(), g); }

Matrix apply_lambda_witness(const Matrix& lam, const Matrix& h_a, const Matrix& g, const Cochain& tau) {
  Cochain moved = h_a * precompose_inverse(g, lambda_cochain(lam));
  Cochain dt = differential(Representation::trivial(heis_algebra(), lam.rows()), tau);
  return lambda_matrix(moved + dt);
}

namespace {

// h with h w_k = e_k for the given independent columns.
Matrix straighten(const std::vector<Vector>& ws, size_t r) {
  std::vector<Vector> cols = ws;
  for (size_t i = 0; i < r && cols.size() < r; ++i) {
    auto trial = cols;
    trial.push_back(unit(r, i));
    if (rank(Matrix::from_columns(trial, r)) == trial.size()) cols = trial;
  }
  return inverse_or_throw(Matrix::from_columns(cols, r), "basis completion");
}

}  // namespace

LambdaReduction reduce_lambda(const Matrix& lam) {
  size_t r = lam.rows();
  if (r < 3 || lam.cols() != 3) throw InputError("reduce_lambda: need an r x 3 matrix with r >= 3");
  Vector w1 = lam.col(0), w2 = lam.col(1);
  LambdaReduction out{LambdaForm::zero, Matrix(), Matrix::identity(r), Matrix::identity(3), Cochain(1, 3, r)};
  size_t rk = rank_w12(lam);
  if (rk == 2) {
    out.form = LambdaForm::id_block;
    out.h_a = straighten({w1, w2}, r);
  } else if (rk == 1 && !is_zero(w1)) {
    out.form = LambdaForm::e11;
    out.h_a = straighten({w1}, r);
    // w2 = alpha w1; g(x1) = x1 - alpha x2 clears the second column.
    Rational alpha;
    for (size_t i = 0; i < r; ++i)
      if (!w1[i].is_zero()) {
        alpha = w2[i] / w1[i];
        break;
      }
    out.g(1, 0) = -alpha;
  } else if (rk == 1) {
    out.form = LambdaForm::e11;
    out.h_a = straighten({w2}, r);
    out.g = Matrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 1}};
  }
  out.canonical = lambda_template(out.form, r);
  // Only the (x1,x2) column is left to fix; d tau(x1,x2) = -tau(x3).
  Matrix moved = apply_lambda_witness(lam, out.h_a, out.g, Cochain(1, 3, r));
  out.tau.set({2}, sub(moved.col(2), out.canonical.col(2)));
  if (!(apply_lambda_witness(lam, out.h_a, out.g, out.tau) == out.canonical))
    throw std::logic_error("reduce_lambda: witness does not reproduce the canonical form");
  return out;
}

std::string LinearConstraint::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rational a = c;
    if (first) {
      if (a.sign() < 0) os << "-";
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
    }
    if (a.sign() < 0) a = -a;
    if (a != Rational(1)) os << a << "*";
    os << "phi" << e.j << "[" << e.row << "," << e.col << "]";
    first = false;
  }
  if (!constant.is_zero()) os << (constant.sign() < 0 ? " - " : " + ") << (constant.sign() < 0 ? -constant : constant);
  os << " = 0";
  return os.str();
}

Rational LinearConstraint::residual(const HeisExtension& he) const {
  Rational s = constant;
  for (const auto& [e, c] : terms) s += c * he.phi[e.j - 1](e.row - 1, e.col - 1);
  return s;
}

Matrix CanonicalFamily::mu(const Params& p) const {
  auto param = [&](const char* name) {
    auto it = p.find(name);
    if (it == p.end()) throw InputError("family " + tag + " needs parameter " + name);
    return it->second;
  };
  Matrix m(3, 3);
  if (tag == "2.2") m(0, 1) = 1;
  if (tag == "2.3") m(1, 1) = 1;
  if (tag == "2.4") m(2, 1) = 1;
  if (tag == "3.1") m = Matrix{{1, 0, 0}, {0, param("mu22"), 0}, {0, 0, 1}};
  if (tag == "3.2") m = Matrix{{1, 0, 0}, {param("mu21"), 1, 0}, {0, 0, 1}};
  if (tag == "3.3") m = Matrix::identity(3);
  return m;
}

bool CanonicalFamily::admissible(const Params& p) const {
  for (const auto& name : parameters)
    if (!p.count(name)) return false;
  if (tag == "3.1") return p.at("mu22") != Rational(1);
  if (tag == "3.2") return !p.at("mu21").is_zero();
  return true;
}

Params CanonicalFamily::representative() const {
  if (tag == "3.1") return {{"mu22", 0}};
  if (tag == "3.2") return {{"mu21", 1}};
  return {};
}

std::vector<LinearConstraint> CanonicalFamily::phi_constraints(const Params& p) const {
  Matrix l = lambda(3), m = mu(p);
  // Three scalar conditions, written entrywise in phi1, phi2.
  std::vector<LinearConstraint> out;
  auto build = [&](std::vector<std::tuple<int, int, int, int>> spec, Rational constant) {
    // spec: (j, row, lambda column, sign) meaning sign * (phi^j lam)_{row, col}
    std::map<PhiEntry, Rational> acc;
    for (auto [j, row, col, sign] : spec)
      for (size_t l_ = 0; l_ < 3; ++l_)
        if (!l(l_, col - 1).is_zero()) acc[{j, row, int(l_) + 1}] += Rational(sign) * l(l_, col - 1);
    LinearConstraint c;
    for (const auto& [e, v] : acc)
      if (!v.is_zero()) c.terms.emplace_back(e, v);
    c.constant = constant;
    if (c.terms.empty()) {
      if (!constant.is_zero()) throw std::logic_error("family " + tag + " has infeasible phi constraints");
      return;
    }
    out.push_back(c);
  };
  build({{1, 1, 1, 1}, {2, 1, 2, 1}, {1, 3, 3, -1}}, m(2, 1));
  build({{1, 2, 1, 1}, {2, 2, 2, 1}, {2, 3, 3, -1}}, -m(2, 0));
  build({{1, 3, 1, 1}, {2, 3, 2, 1}}, 0);
  return out;
}

HeisExtension CanonicalFamily::instantiate(size_t r, const Params& p, const Matrix& phi1, const Matrix& phi2) const {
  if (!admissible(p)) throw InputError("family " + tag + ": parameters violate " + parameter_condition);
  HeisExtension he = HeisExtension::zero(r);
  he.phi[0] = phi1;
  he.phi[1] = phi2;
  he.lam = lambda(r);
  he.mu = mu(p);
  for (const auto& c : phi_constraints(p)) {
    // Solve for the first entry.
    const auto& [pe, coeff] = c.terms.front();
    Rational& slot = he.phi[pe.j - 1](pe.row - 1, pe.col - 1);
    slot = 0;
    slot = -c.residual(he) / coeff;
  }
  he.phi[2] = phi3_from(he.phi[0], he.phi[1]);
  if (!check(he).ok()) throw std::logic_error("family " + tag + ": instantiation violates the cocycle conditions");
  return he;
}

HeisExtension CanonicalFamily::instantiate(size_t r, const Params& p) const {
  return instantiate(r, p, phi_zero(r), phi_zero(r));
}

bool CanonicalFamily::accepts(const HeisExtension& he) const {
  if (!(he.lam == lambda(he.r))) return false;
  Params p;
  if (tag == "3.1") p["mu22"] = he.mu(1, 1);
  if (tag == "3.2") p["mu21"] = he.mu(1, 0);
  if (!admissible(p) || !(he.mu == mu(p))) return false;
  for (const auto& c : phi_constraints(p))
    if (!c.residual(he).is_zero()) return false;
  return check(he).ok();
}

std::vector<CanonicalFamily> catalog() {
  using L = LambdaForm;
  return {
      {"1.1", L::id_block, {}, ""},
      {"2.1", L::e11, {}, ""},
      {"2.2", L::e11, {}, ""},
      {"2.3", L::e11, {}, ""},
      {"2.4", L::e11, {}, ""},
      {"3.1", L::zero, {"mu22"}, "mu22 != 1"},
      {"3.2", L::zero, {"mu21"}, "mu21 != 0"},
      {"3.3", L::zero, {}, ""},
      {"3.4", L::zero, {}, ""},
  };
}

const CanonicalFamily& family(const std::string& tag) {
  static const std::vector<CanonicalFamily> all = catalog();
  for (const auto& f : all)
    if (f.tag == tag) return f;
  throw InputError("unknown family tag " + tag);
}

std::array<Matrix, 3> metric_phi(const std::string& tag, size_t r) {
  std::array<Matrix, 3> p{phi_zero(r), phi_zero(r), phi_zero(r)};
  if (tag == "1.1") {
    p[0](1, 2) = -1;
    p[0](2, 1) = 1;
    p[1](0, 2) = 1;
    p[1](2, 0) = -1;
    p[2](0, 1) = -1;
    p[2](1, 0) = 1;
  } else if (tag == "2.1") {
    p[1](2, 0) = -1;
    p[2](1, 0) = 1;
  } else if (tag != "3.3" && tag != "3.4") {
    throw InputError("family " + tag + " carries no metric");
  }
  return p;
}

MetricCatalog metric_catalog(size_t r) {
  MetricCatalog out;
  BilinearForm b_a = BilinearForm::identity(r);
  for (const auto& f : catalog()) {
    bool metric_family = f.tag == "1.1" || f.tag == "2.1" || f.tag == "3.3" || f.tag == "3.4";
    HeisExtension he = f.instantiate(r, f.representative());
    if (metric_family) {
      he.phi = metric_phi(f.tag, r);
      if (!f.accepts(he)) throw std::logic_error("metric phi for " + f.tag + " leaves the family");
    }
    MetricResult res = metric_exists(to_extension_data(he), b_a);
    if (res.certificate)
      out.entries.push_back({f.tag, he, *res.certificate});
    else
      out.rejections.push_back({f.tag, he, res.failure, res.diagnostic});
  }
  return out;
}

namespace {

// Applies witnesses one after another and keeps the composite.
struct Normalizer {
  ExtensionData start, cur;
  IsomorphismWitness total;

  explicit Normalizer(const ExtensionData& d)
      : start(d), cur(d), total(IsomorphismWitness::identity(d)) {}

  HeisExtension view() const { return from_extension_data(cur); }

  void apply(const IsomorphismWitness& w) {
    cur = transport(cur, w);
    total = compose(w, total);
  }

  // Zeroes the (x1,x2) column of mu with a coboundary, then adds `shift` to mu_33.
  void clear_mu_col3(const Rational& shift = 0) {
    HeisExtension he = view();
    IsomorphismWitness w = plain_witness(he.r);
    w.nu.set({0}, {0, 0, -he.mu(0, 2)});
    w.nu.set({1}, {0, 0, -he.mu(1, 2)});
    w.nu.set({2}, {0, 0, -he.mu(2, 2) + shift});
    apply(w);
    HeisExtension after = view();
    if (!after.mu.col(2).empty() &&
        (!after.mu(0, 2).is_zero() || !after.mu(1, 2).is_zero() || after.mu(2, 2) != shift))
      throw std::logic_error("classify: coboundary step missed the third column");
  }

  // Uses T to cancel the first three mu columns against lambda's identity rows.
  void cancel_with_t(size_t cols) {
    HeisExtension he = view();
    IsomorphismWitness w = plain_witness(he.r);
    for (size_t c = 0; c < cols; ++c)
      for (size_t i = 0; i < 3; ++i) w.t(i, c) = -he.mu(i, c);
    apply(w);
  }

  void apply_k(const Matrix& k) {
    IsomorphismWitness w = plain_witness(view().r);
    w.k = k;
    apply(w);
  }

  void apply_g(const Matrix& g) {
    IsomorphismWitness w = plain_witness(view().r);
    w.g = g;
    w.k = dual_k(g);
    apply(w);
  }
};

bool rational_sqrt(const Rational& q, Rational& out) {
  if (q.sign() < 0) return false;
  mpz_class n = q.raw().get_num(), d = q.raw().get_den();
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  if (sn * sn != n || sd * sd != d) return false;
  out = Rational(mpq_class(sn, sd));
  return true;
}

Vector eigenvector2(const Matrix& m, const Rational& e) {
  Matrix s = m - e * Matrix::identity(2);
  Subspace k = kernel(s);
  if (k.dim() == 0) throw std::logic_error("classify: eigenvalue without eigenvector");
  return k.basis().row(0);
}

}  // namespace

Classification classify(const HeisExtension& he) {
  Normalizer n(to_extension_data(he));
  Classification out;

  LambdaReduction red = reduce_lambda(he.lam);
  {
    IsomorphismWitness w = plain_witness(he.r);
    w.g = red.g;
    w.h_a = red.h_a;
    w.k = dual_k(red.g);
    w.tau = precompose_inverse(inverse_or_throw(red.g, "g"), -red.tau);
    n.apply(w);
    if (!(n.view().lam == red.canonical)) throw std::logic_error("classify: lambda reduction not reproduced");
  }

  if (red.form == LambdaForm::id_block) {
    n.cancel_with_t(3);
    out.tag = "1.1";
  } else if (red.form == LambdaForm::e11) {
    n.clear_mu_col3();
    n.cancel_with_t(1);
    Matrix mu = n.view().mu;
    if (!mu(2, 1).is_zero()) {
      Rational z = Rational(1) / mu(2, 1);
      Matrix k = z * Matrix::identity(3);
      k(0, 2) = -z * mu(0, 1) / mu(2, 1);
      k(1, 2) = -z * mu(1, 1) / mu(2, 1);
      n.apply_k(k);
      out.tag = "2.4";
    } else if (!mu(0, 1).is_zero()) {
      // x2 -> x2 + s x1 trades mu_22 against mu_12.
      Matrix g = Matrix::identity(3);
      g(0, 1) = mu(1, 1) / mu(0, 1);
      n.apply_g(g);
      n.cancel_with_t(1);
      n.apply_k((Rational(1) / n.view().mu(0, 1)) * Matrix::identity(3));
      out.tag = "2.2";
    } else if (!mu(1, 1).is_zero()) {
      n.apply_k((Rational(1) / mu(1, 1)) * Matrix::identity(3));
      out.tag = "2.3";
    } else {
      out.tag = "2.1";
    }
  } else {
    n.clear_mu_col3();
    Matrix m = n.view().mu.block(0, 0, 2, 2);
    Rational tr = m(0, 0) + m(1, 1), dt = det(m);
    Rational disc = tr * tr - 4 * dt;
    std::optional<Matrix> p;  // columns: Jordan basis
    if (m.is_zero()) {
      out.tag = "3.4";
    } else if (disc.is_zero()) {
      Rational e = tr / 2;
      if (m == e * Matrix::identity(2)) {
        out.tag = "3.3";
        p = Matrix::identity(2);
      } else if (e.is_zero()) {
        out.tag = "unlisted";
        out.rational_representative = false;
        out.note = "mu block is nilpotent and nonzero; no listed family has this Jordan type";
      } else {
        out.tag = "3.2";
        Matrix s = m - e * Matrix::identity(2);
        Vector p1 = is_zero(s.col(0)) ? unit(2, 1) : unit(2, 0);
        Vector p2 = scale(Rational(2) / e, s * p1);
        p = Matrix::from_columns({p1, p2}, 2);
      }
    } else {
      out.tag = "3.1";
      Rational root;
      if (!rational_sqrt(disc, root)) {
        out.rational_representative = false;
        out.note = "eigenvalues of the mu block lie outside Q; the representative needs a field extension";
      } else {
        Rational e1 = (tr + root) / 2, e2 = (tr - root) / 2;
        if (e1.is_zero()) std::swap(e1, e2);
        p = Matrix::from_columns({eigenvector2(m, e1), eigenvector2(m, e2)}, 2);
      }
    }
    if (p) {
      Matrix a = p->transpose();
      Matrix g = Matrix::identity(3);
      g.set_block(0, 0, a);
      g(2, 2) = det(a);
      n.apply_g(g);
      Rational lead = n.view().mu(0, 0);
      n.apply_k((Rational(2) / lead) * Matrix::identity(3));
      n.clear_mu_col3(1);
    }
  }

  out.normal_form = n.view();
  out.witness = n.total;
  if (!verify_witness(n.start, n.cur, n.total).ok())
    throw std::logic_error("classify: composite witness failed verification");
  if (out.tag != "unlisted" && out.rational_representative && !family(out.tag).accepts(out.normal_form))
    throw std::logic_error("classify: normal form not in family " + out.tag);
  return out;
}

SplitReport split_check(const HeisExtension& he) {
  size_t r = he.r;
  ExtensionData d = to_extension_data(he);
  MetricResult m = metric_exists(d, BilinearForm::identity(r));
  if (!m.certificate) throw InputError("split_check: extension carries no metric (" + m.diagnostic + ")");
  LieAlgebra g = build(d);
  const BilinearForm& b = m.certificate->pullback_metric;

  SplitReport rep;
  auto maximal = orthogonal_split_central(g, b);
  rep.max_central_dim = maximal ? maximal->ideal.dim() : 0;

  std::vector<size_t> tail, keep;
  for (size_t k = 0; k < g.dim(); ++k) {
    bool extra = k >= 6 && k < 3 + r;
    (extra ? tail : keep).push_back(k);
  }
  rep.central = Subspace::coordinates(g.dim(), tail);
  if (!center(g).contains(rep.central)) throw InputError("split_check: v4..vr are not central");
  if (!tail.empty() && det(b.restricted(rep.central.basis_vectors())).is_zero())
    throw InputError("split_check: metric degenerates on v4..vr");
  rep.remainder = perp(b, rep.central);
  if (!(rep.remainder == Subspace::coordinates(g.dim(), keep)))
    throw std::logic_error("split_check: remainder is not spanned by x, v1..v3, theta");

  std::vector<std::string> names;
  for (size_t k : keep) names.push_back(g.names()[k]);
  LieAlgebra rest = restrict_to(g, rep.remainder.basis_vectors(), names);
  rep.remainder_data = from_extension_data(extract(rest, 3, 3, 3));
  rep.remainder_class = classify(rep.remainder_data);
  return rep;
}

std::vector<size_t> structure_invariants(const LieAlgebra& g) {
  SeriesReport s = series(g);
  CanonicalIdeals ci = canonical_ideals(g, s);
  std::vector<size_t> v{g.dim()};
  auto push_chain = [&](const std::vector<Subspace>& c) {
    v.push_back(c.size());
    for (const auto& x : c) v.push_back(x.dim());
  };
  push_chain(s.descending);
  push_chain(s.derived);
  push_chain(s.derived_central);
  v.push_back(ci.i.dim());
  v.push_back(ci.j.dim());
  Subspace z = center(g);
  for (size_t k = 1; k < s.descending.size(); ++k) {
    v.push_back(intersect(z, s.descending[k]).dim());
    v.push_back(centralizer_of(g, s.descending[k]).dim());
    v.push_back(bracket_subspaces(g, s.descending[k], s.descending[k]).dim());
  }
  v.push_back(centralizer_of(g, ci.j).dim());
  v.push_back(bracket_subspaces(g, ci.j, Subspace::full(g.dim())).dim());
  return v;
}

}  // namespace quadlie::heis
