#include "quadlie/document.hpp"
#include "quadlie/heis.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace quadlie;

namespace {

enum Exit { ok = 0, other = 1, parse_error = 2, invalid_algebra = 3, failed_check = 4 };

struct Options {
  std::string input, output, b_a, tag;
  bool metric = false;
  size_t r = 3;
  bool machine = false;
};

std::string slurp(const std::string& path) {
  if (path.empty()) throw InputError("--input is required");
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Prose goes to stdout unless --machine; the machine section always closes the report.
struct Report {
  const Options& opt;
  std::ostringstream prose;
  Json machine = Json::object();

  void flush() const {
    if (!opt.machine) std::cout << prose.str() << "\n--- machine ---\n";
    std::cout << emit(machine);
  }
};

void write_document(const Options& opt, const Json& doc) {
  if (opt.output.empty()) return;
  std::ofstream out(opt.output);
  if (!out) throw std::runtime_error("cannot write " + opt.output);
  out << emit(doc);
}

std::string span_text(const Subspace& s, const std::vector<std::string>& names) {
  std::ostringstream os;
  os << "span{";
  auto basis = s.basis_vectors();
  for (size_t b = 0; b < basis.size(); ++b) {
    if (b) os << ", ";
    bool lead = true;
    for (size_t k = 0; k < names.size(); ++k) {
      const Rational& c = basis[b][k];
      if (c.is_zero()) continue;
      if (!lead && c.sign() > 0) os << "+";
      if (c == Rational(-1)) os << "-";
      else if (c != Rational(1)) os << c << "*";
      os << names[k];
      lead = false;
    }
  }
  os << "}";
  return os.str();
}

Json dims_json(const std::vector<Subspace>& chain) {
  Json a = Json::array();
  for (const auto& s : chain) a.push_back(s.dim());
  return a;
}

void require_jacobi(const LieAlgebra& g) {
  auto defects = jacobi_defect(g);
  if (defects.empty()) return;
  std::ostringstream os;
  os << "Jacobi identity fails at";
  for (const auto& d : defects) {
    auto [a, b, c] = d.triple;
    os << " (" << g.names()[a] << "," << g.names()[b] << "," << g.names()[c] << ")";
  }
  throw InvalidAlgebra(os.str());
}

int cmd_analyze(const Options& opt) {
  AlgebraDocument doc = parse_algebra(parse_text(slurp(opt.input)));
  const LieAlgebra& g = doc.algebra;
  require_jacobi(g);
  const auto& names = g.names();
  SeriesReport s = series(g);
  CanonicalIdeals ci = canonical_ideals(g, s);
  auto ell = has_abelian_descending_ideal(g);

  Report rep{opt};
  auto& p = rep.prose;
  p << "algebra " << doc.name << ", dimension " << g.dim() << "\n";
  p << "Jacobi identity holds\n";
  p << (is_nilpotent(s) ? "nilpotent" : is_solvable(s) ? "solvable, not nilpotent" : "not solvable") << "\n";
  p << "descending central series:";
  for (const auto& x : s.descending) p << " " << x.dim();
  p << "\nderived series:";
  for (const auto& x : s.derived) p << " " << x.dim();
  p << "\nderived central series:";
  for (const auto& x : s.derived_central) p << " " << x.dim();
  p << "\nm1 = " << s.m1 << ", m2 = " << s.m2 << ", m = " << s.m << "\n";
  p << "center = " << span_text(center(g), names) << "\n";
  p << "i = " << span_text(ci.i, names) << "\n";
  p << "j = " << span_text(ci.j, names) << "\n";
  p << "abelian descending central ideal: " << (ell ? "g^" + std::to_string(*ell) : std::string("none")) << "\n";

  Json& m = rep.machine;
  m["name"] = doc.name;
  m["dim"] = g.dim();
  m["jacobi"] = true;
  m["nilpotent"] = is_nilpotent(s);
  m["solvable"] = is_solvable(s);
  m["descending_dims"] = dims_json(s.descending);
  m["derived_dims"] = dims_json(s.derived);
  m["derived_central_dims"] = dims_json(s.derived_central);
  m["m1"] = s.m1;
  m["m2"] = s.m2;
  m["m"] = s.m;
  m["center"] = subspace_json(center(g), names);
  m["i"] = subspace_json(ci.i, names);
  m["j"] = subspace_json(ci.j, names);
  m["abelian_descending_ideal"] = ell ? Json(*ell) : Json(nullptr);

  if (doc.form) {
    const BilinearForm& b = *doc.form;
    InvarianceVerdict inv = is_invariant(g, b);
    Json f = Json::object();
    f["nondegenerate"] = b.nondegenerate();
    f["invariant"] = inv.ok;
    p << "form: " << (b.nondegenerate() ? "nondegenerate" : "degenerate") << ", "
      << (inv.ok ? "invariant" : "not invariant") << "\n";
    if (inv.violation) {
      auto [x, y, z] = *inv.violation;
      p << "  B([" << names[x] << "," << names[y] << "]," << names[z] << ") != B(" << names[x] << ",[" << names[y]
        << "," << names[z] << "])\n";
    }
    if (inv.ok && b.nondegenerate()) {
      bool perp_ok = true;
      for (size_t l = 1; l <= s.m + 1; ++l)
        perp_ok = perp_ok && perp(b, s.lower(l)) == s.upper(l) && centralizer_of(g, s.lower(l - 1)) == s.upper(l);
      f["perp_series"] = perp_ok;
      p << "perp(g^l) = C_l = centralizer(g^(l-1)) for all l: " << (perp_ok ? "yes" : "no") << "\n";
      bool j_abelian = is_abelian(g, ci.j);
      f["j_abelian"] = j_abelian;
      if (j_abelian) {
        bool perp_i = perp(b, ci.i) == ci.j;
        bool inside = ci.i.contains(bracket_subspaces(g, Subspace::full(g.dim()), ci.j));
        f["perp_i_is_j"] = perp_i;
        f["bracket_g_j_in_i"] = inside;
        p << "j abelian; perp(i) = j: " << (perp_i ? "yes" : "no") << ", [g,j] in i: " << (inside ? "yes" : "no")
          << "\n";
      } else {
        p << "j is not abelian\n";
      }
    }
    m["form"] = f;
  }
  rep.flush();
  return ok;
}

int cmd_extend(const Options& opt) {
  ExtensionDocument doc = parse_extension(parse_text(slurp(opt.input)));
  if (!doc.coadjoint) {
    auto defects = doc.data.rho.homomorphism_defects();
    if (!defects.empty()) throw InvalidAlgebra("rho is not a representation");
  }
  require_jacobi(doc.data.h);
  ValidityReport v = validity(doc.data);
  Report rep{opt};
  rep.machine["valid"] = v.ok();
  rep.machine["failures"] = v.failures();
  if (!v.ok()) {
    rep.prose << "extension data is not valid:\n";
    for (const auto& f : v.failures()) rep.prose << "  " << f << "\n";
    rep.flush();
    return failed_check;
  }
  LieAlgebra g = build(doc.data);
  g = LieAlgebra(doc.data.basis_names(), g.structure());
  Json out = to_json(AlgebraDocument{doc.name + "-extension", g, std::nullopt});
  write_document(opt, out);
  rep.prose << "extension data is valid; built a " << g.dim() << "-dimensional algebra\n";
  rep.machine["algebra"] = out;
  rep.flush();
  return ok;
}

BilinearForm read_b_a(const Options& opt, const ExtensionDocument& doc) {
  if (opt.b_a.empty()) return doc.b_a ? *doc.b_a : BilinearForm::identity(doc.data.dim_a);
  if (opt.b_a == "identity") return BilinearForm::identity(doc.data.dim_a);
  Json j = parse_text(slurp(opt.b_a));
  Matrix m = parse_matrix(j, "b_a", doc.data.dim_a, doc.data.dim_a);
  if (!(m == m.transpose())) throw InputError("b_a: Gram matrix is not symmetric");
  return BilinearForm(m);
}

int cmd_check_metric(const Options& opt) {
  ExtensionDocument doc = parse_extension(parse_text(slurp(opt.input)));
  BilinearForm b_a = read_b_a(opt, doc);
  MetricResult res = metric_exists(doc.data, b_a);
  Report rep{opt};
  rep.machine["metric"] = res.certificate.has_value();
  rep.machine["failure"] = to_string(res.failure);
  rep.machine["diagnostic"] = res.diagnostic;
  if (!res.certificate) {
    rep.prose << "no invariant metric (" << to_string(res.failure) << "): " << res.diagnostic << "\n";
    rep.flush();
    return failed_check;
  }
  const MetricCertificate& c = *res.certificate;
  size_t n = doc.data.h.dim();
  Json tau = Json::array();
  for (size_t x = 0; x < n; ++x) tau.push_back(vector_json(c.tau({x})));
  rep.machine["tau"] = tau;
  rep.machine["metric_gram"] = matrix_json(c.metric.gram());
  rep.machine["pullback_gram"] = matrix_json(c.pullback_metric.gram());
  rep.prose << "invariant metric found";
  rep.prose << (c.tau.is_zero() ? " on the data as given\n" : " after the coboundary shift lambda + d tau\n");
  rep.flush();
  return ok;
}

std::string matrix_text(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
  }
  os << "]";
  return os.str();
}

Json heis_json(const heis::HeisExtension& he) {
  Json j = Json::object();
  j["r"] = he.r;
  j["phi1"] = matrix_json(he.phi[0]);
  j["phi2"] = matrix_json(he.phi[1]);
  j["phi3"] = matrix_json(he.phi[2]);
  j["lambda"] = matrix_json(he.lam);
  j["mu"] = matrix_json(he.mu);
  return j;
}

void family_table(Report& rep, size_t r) {
  Json fams = Json::array();
  rep.prose << "families (r = " << r << "):\n";
  for (const auto& f : heis::catalog()) {
    heis::Params p = f.representative();
    rep.prose << "  " << f.tag << "  lambda " << heis::to_string(f.lambda_form) << ", mu " << matrix_text(f.mu(p));
    if (!f.parameter_condition.empty()) rep.prose << ", " << f.parameter_condition;
    Json cs = Json::array();
    for (const auto& c : f.phi_constraints(p)) {
      rep.prose << "; " << c.str();
      cs.push_back(c.str());
    }
    rep.prose << "\n";
    Json params = Json::object();
    for (const auto& [k, v] : p) params[k] = v.str();
    fams.push_back(Json{{"tag", f.tag},
                        {"lambda_form", heis::to_string(f.lambda_form)},
                        {"parameters", f.parameters},
                        {"representative", params},
                        {"phi_constraints", cs}});
  }
  rep.machine["families"] = fams;
}

void metric_table(Report& rep, size_t r) {
  heis::MetricCatalog mc = heis::metric_catalog(r);
  Json ent = Json::array(), rej = Json::array();
  rep.prose << "families with an invariant metric:\n";
  for (const auto& e : mc.entries) {
    rep.prose << "  " << e.tag << "\n";
    ent.push_back(Json{{"tag", e.tag}, {"data", heis_json(e.he)}});
  }
  rep.prose << "families without one:\n";
  for (const auto& x : mc.rejections) {
    rep.prose << "  " << x.tag << "  (" << to_string(x.failure) << ") " << x.diagnostic << "\n";
    rej.push_back(Json{{"tag", x.tag}, {"failure", to_string(x.failure)}, {"diagnostic", x.diagnostic}});
  }
  rep.machine["metric_families"] = ent;
  rep.machine["rejected"] = rej;

  if (r <= 3) return;
  Json splits = Json::array();
  rep.prose << "orthogonal splitting:\n";
  for (const auto& e : mc.entries) {
    heis::SplitReport s = heis::split_check(e.he);
    rep.prose << "  " << e.tag << "  splits off " << s.central.dim() << " central dims (maximal "
              << s.max_central_dim << "), remainder classifies as " << s.remainder_class.tag << "\n";
    splits.push_back(Json{{"tag", e.tag},
                          {"split_dim", s.central.dim()},
                          {"max_central_dim", s.max_central_dim},
                          {"remainder_tag", s.remainder_class.tag}});
  }
  rep.machine["splits"] = splits;
}

int cmd_classify(const Options& opt) {
  if (opt.r < 3) throw InputError("--r must be at least 3");
  Report rep{opt};
  if (!opt.input.empty()) {
    ExtensionDocument doc = parse_extension(parse_text(slurp(opt.input)));
    heis::HeisExtension he = heis::from_extension_data(doc.data);
    heis::Classification c = heis::classify(he);
    rep.prose << "input classifies as " << c.tag;
    if (!c.rational_representative) rep.prose << " (" << c.note << ")";
    rep.prose << "\nnormal form: lambda " << matrix_text(c.normal_form.lam) << ", mu " << matrix_text(c.normal_form.mu)
              << "\n";
    rep.machine["tag"] = c.tag;
    rep.machine["rational_representative"] = c.rational_representative;
    rep.machine["note"] = c.note;
    rep.machine["normal_form"] = heis_json(c.normal_form);
    rep.machine["witness"] = matrix_json(assemble(c.witness));
    rep.flush();
    return ok;
  }
  family_table(rep, opt.r);
  metric_table(rep, opt.r);
  rep.flush();
  return ok;
}

int cmd_metric_catalog(const Options& opt) {
  if (opt.r < 3) throw InputError("--r must be at least 3");
  Report rep{opt};
  metric_table(rep, opt.r);
  rep.flush();
  return ok;
}

int cmd_double_extension(const Options& opt) {
  DoubleExtensionDocument doc = parse_double_extension(parse_text(slurp(opt.input)));
  QuadraticAlgebra q = double_extension(doc.data);
  Json out = to_json(AlgebraDocument{doc.name, q.algebra, q.form});
  write_document(opt, out);
  Report rep{opt};
  rep.prose << "double extension of dimension " << q.algebra.dim() << " with invariant metric\n";
  rep.machine["algebra"] = out;
  rep.flush();
  return ok;
}

int cmd_template(const Options& opt) {
  const heis::CanonicalFamily& f = heis::family(opt.tag);
  heis::HeisExtension he = f.instantiate(opt.r, f.representative());
  if (opt.metric) he.phi = heis::metric_phi(opt.tag, opt.r);
  ExtensionData d = heis::to_extension_data(he);
  ExtensionDocument doc{"heisenberg", d, true, BilinearForm::identity(opt.r)};
  Json out = to_json(doc);
  write_document(opt, out);
  Report rep{opt};
  rep.prose << "family " << f.tag << " at r = " << opt.r << (opt.metric ? " with metric phi" : "") << "\n";
  rep.machine["extension"] = out;
  rep.flush();
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with extensions and quadratic Lie algebras"};
  app.require_subcommand(1);
  Options opt;
  auto add = [&](const char* name, const char* help, bool with_input, bool with_r = false) {
    CLI::App* c = app.add_subcommand(name, help);
    if (with_input) c->add_option("--input", opt.input, "input document");
    c->add_option("--output", opt.output, "write the produced document here");
    c->add_flag("--machine", opt.machine, "print only the machine section");
    if (with_r) c->add_option("--r", opt.r, "dimension of a");
    return c;
  };
  auto analyze = add("analyze", "series, canonical ideals and form checks", true);
  auto extend = add("extend", "build the algebra of extension data", true);
  auto check = add("check-metric", "look for an invariant metric on extension data", true);
  check->add_option("--b-a", opt.b_a, "identity or a file with Gram rows for a");
  auto classify = add("classify", "family tables, or the class of one Heisenberg extension", true, true);
  auto catalog = add("metric-catalog", "families carrying an invariant metric", false, true);
  auto dext = add("double-extension", "double extension of (V, B_V, D)", true);
  auto tmpl = add("template", "extension document for a family representative", false, true);
  tmpl->add_option("--tag", opt.tag, "family tag")->required();
  tmpl->add_flag("--metric", opt.metric, "use the phi that carries a metric");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : parse_error;
  }

  try {
    if (*analyze) return cmd_analyze(opt);
    if (*extend) return cmd_extend(opt);
    if (*check) return cmd_check_metric(opt);
    if (*classify) return cmd_classify(opt);
    if (*catalog) return cmd_metric_catalog(opt);
    if (*dext) return cmd_double_extension(opt);
    if (*tmpl) return cmd_template(opt);
  } catch (const InvalidAlgebra& e) {
    std::cerr << "invalid algebra: " << e.what() << "\n";
    return invalid_algebra;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return parse_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return other;
  }
  return other;
}
