#include "quadlie/document.hpp"
#include "quadlie/heis.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace quadlie;

namespace {

using Rows = std::vector<std::vector<std::string>>;

Matrix to_matrix(const Rows& rows) {
  std::vector<Vector> out;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  for (const auto& r : rows) {
    if (r.size() != cols) throw InputError("ragged matrix");
    Vector v;
    for (const auto& s : r) v.push_back(Rational::parse(s));
    out.push_back(v);
  }
  return Matrix::from_rows(out, cols);
}

Rows from_matrix(const Matrix& m) {
  Rows out(m.rows());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j).str());
  return out;
}

heis::HeisExtension to_heis(const Rows& phi1, const Rows& phi2, const Rows& lam, const Rows& mu) {
  Matrix l = to_matrix(lam);
  heis::HeisExtension he = heis::HeisExtension::zero(l.rows());
  he.phi[0] = to_matrix(phi1);
  he.phi[1] = to_matrix(phi2);
  he.phi[2] = heis::phi3_from(he.phi[0], he.phi[1]);
  he.lam = l;
  he.mu = to_matrix(mu);
  return he;
}

py::dict heis_dict(const heis::HeisExtension& he) {
  py::dict d;
  d["phi1"] = from_matrix(he.phi[0]);
  d["phi2"] = from_matrix(he.phi[1]);
  d["phi3"] = from_matrix(he.phi[2]);
  d["lambda"] = from_matrix(he.lam);
  d["mu"] = from_matrix(he.mu);
  return d;
}

std::string analyze(const std::string& text) {
  AlgebraDocument doc = parse_algebra(parse_text(text));
  const LieAlgebra& g = doc.algebra;
  if (!jacobi_defect(g).empty()) throw InvalidAlgebra("Jacobi identity fails");
  SeriesReport s = series(g);
  CanonicalIdeals ci = canonical_ideals(g, s);
  Json m = Json::object();
  auto dims = [](const std::vector<Subspace>& c) {
    Json a = Json::array();
    for (const auto& x : c) a.push_back(x.dim());
    return a;
  };
  m["nilpotent"] = is_nilpotent(s);
  m["solvable"] = is_solvable(s);
  m["descending_dims"] = dims(s.descending);
  m["derived_dims"] = dims(s.derived);
  m["derived_central_dims"] = dims(s.derived_central);
  m["m"] = s.m;
  m["center"] = subspace_json(center(g), g.names());
  m["i"] = subspace_json(ci.i, g.names());
  m["j"] = subspace_json(ci.j, g.names());
  auto ell = has_abelian_descending_ideal(g);
  m["abelian_descending_ideal"] = ell ? Json(*ell) : Json(nullptr);
  if (doc.form) m["invariant"] = is_invariant(g, *doc.form).ok;
  return m.dump();
}

std::string extend(const std::string& text) {
  ExtensionDocument doc = parse_extension(parse_text(text));
  ValidityReport v = validity(doc.data);
  Json m = Json::object();
  m["failures"] = v.failures();
  if (v.ok()) {
    LieAlgebra g(doc.data.basis_names(), build(doc.data).structure());
    m["algebra"] = to_json(AlgebraDocument{doc.name + "-extension", g, std::nullopt});
  }
  return m.dump();
}

std::string check_metric(const std::string& text) {
  ExtensionDocument doc = parse_extension(parse_text(text));
  MetricResult r = metric_exists(doc.data, doc.b_a ? *doc.b_a : BilinearForm::identity(doc.data.dim_a));
  Json m = Json::object();
  m["metric"] = r.certificate.has_value();
  m["failure"] = to_string(r.failure);
  m["diagnostic"] = r.diagnostic;
  if (r.certificate) m["pullback_gram"] = matrix_json(r.certificate->pullback_metric.gram());
  return m.dump();
}

std::string double_extension_doc(const std::string& text) {
  DoubleExtensionDocument doc = parse_double_extension(parse_text(text));
  QuadraticAlgebra q = double_extension(doc.data);
  return to_json(AlgebraDocument{doc.name, q.algebra, q.form}).dump();
}

}  // namespace

PYBIND11_MODULE(_quadlie, m) {
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  m.def("analyze", &analyze, "Series, centre and canonical ideals of an algebra document (JSON text).");
  m.def("extend", &extend, "Validity failures and, when valid, the built algebra document.");
  m.def("check_metric", &check_metric);
  m.def("double_extension", &double_extension_doc);

  m.def("reduce_lambda", [](const Rows& lam) {
    heis::LambdaReduction red = heis::reduce_lambda(to_matrix(lam));
    py::dict d;
    d["form"] = heis::to_string(red.form);
    d["canonical"] = from_matrix(red.canonical);
    d["h_a"] = from_matrix(red.h_a);
    d["g"] = from_matrix(red.g);
    Rows tau;
    for (size_t x = 0; x < 3; ++x) {
      std::vector<std::string> row;
      for (const auto& q : red.tau({x})) row.push_back(q.str());
      tau.push_back(row);
    }
    d["tau"] = tau;
    return d;
  });

  m.def("check", [](const Rows& phi1, const Rows& phi2, const Rows& lam, const Rows& mu) {
    return heis::check(to_heis(phi1, phi2, lam, mu)).failures();
  });

  m.def("classify", [](const Rows& phi1, const Rows& phi2, const Rows& lam, const Rows& mu) {
    heis::Classification c = heis::classify(to_heis(phi1, phi2, lam, mu));
    py::dict d;
    d["tag"] = c.tag;
    d["rational_representative"] = c.rational_representative;
    d["note"] = c.note;
    d["normal_form"] = heis_dict(c.normal_form);
    d["witness"] = from_matrix(assemble(c.witness));
    return d;
  });

  m.def("catalog", [] {
    py::list out;
    for (const auto& f : heis::catalog()) {
      py::dict d;
      d["tag"] = f.tag;
      d["lambda_form"] = heis::to_string(f.lambda_form);
      d["parameters"] = f.parameters;
      d["condition"] = f.parameter_condition;
      std::vector<std::string> cs;
      for (const auto& c : f.phi_constraints(f.representative())) cs.push_back(c.str());
      d["phi_constraints"] = cs;
      d["representative"] = heis_dict(f.instantiate(3, f.representative()));
      out.append(d);
    }
    return out;
  });

  m.def("metric_catalog", [](size_t r) {
    heis::MetricCatalog mc = heis::metric_catalog(r);
    py::dict d;
    std::vector<std::string> tags;
    for (const auto& e : mc.entries) tags.push_back(e.tag);
    d["metric"] = tags;
    py::dict rej;
    for (const auto& x : mc.rejections) rej[py::str(x.tag)] = py::make_tuple(to_string(x.failure), x.diagnostic);
    d["rejected"] = rej;
    return d;
  });

  m.def("split_check", [](const std::string& tag, size_t r) {
    heis::MetricCatalog mc = heis::metric_catalog(r);
    for (const auto& e : mc.entries)
      if (e.tag == tag) {
        heis::SplitReport s = heis::split_check(e.he);
        py::dict d;
        d["split_dim"] = s.central.dim();
        d["max_central_dim"] = s.max_central_dim;
        d["remainder_tag"] = s.remainder_class.tag;
        return d;
      }
    throw InputError("family " + tag + " carries no metric");
  });
}
