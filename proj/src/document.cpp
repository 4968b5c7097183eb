#include "quadlie/document.hpp"

#include <set>

namespace quadlie {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

Rational parse_rational(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const InputError& e) {
      fail(where, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  fail(where, "expected a rational string \"p\" or \"p/q\"");
}

size_t parse_count(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned()) fail(where, "expected a nonnegative integer");
  return j.get<size_t>();
}

Vector parse_vector(const Json& j, const std::string& where, size_t n) {
  if (!j.is_array() || j.size() != n) fail(where, "expected a list of " + std::to_string(n) + " rationals");
  Vector v;
  for (size_t k = 0; k < n; ++k) v.push_back(parse_rational(j[k], where + "[" + std::to_string(k) + "]"));
  return v;
}

BilinearForm parse_form(const Json& j, const std::string& where, size_t n) {
  Matrix m = parse_matrix(j, where, n, n);
  if (!(m == m.transpose())) fail(where, "Gram matrix is not symmetric");
  return BilinearForm(m);
}

}  // namespace

Matrix parse_matrix(const Json& j, const std::string& where, size_t rows, size_t cols) {
  if (!j.is_array() || j.size() != rows) fail(where, "expected " + std::to_string(rows) + " rows");
  std::vector<Vector> r;
  for (size_t i = 0; i < rows; ++i) r.push_back(parse_vector(j[i], where + "[" + std::to_string(i) + "]", cols));
  return Matrix::from_rows(r, cols);
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string emit(const Json& j) { return j.dump(2) + "\n"; }

Json rational_json(const Rational& q) { return q.str(); }

Json vector_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(q.str());
  return a;
}

Json matrix_json(const Matrix& m) {
  Json a = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) a.push_back(vector_json(m.row(i)));
  return a;
}

Json subspace_json(const Subspace& s, const std::vector<std::string>& names) {
  Json a = Json::array();
  for (const auto& v : s.basis_vectors()) {
    Json o = Json::object();
    for (size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) o[names[k]] = v[k].str();
    a.push_back(o);
  }
  return a;
}

AlgebraDocument parse_algebra(const Json& j) {
  AlgebraDocument doc;
  const Json& name = field(j, "name", "algebra");
  if (!name.is_string()) fail("name", "expected a string");
  doc.name = name.get<std::string>();
  size_t n = parse_count(field(j, "dim", "algebra"), "dim");
  const Json& basis = field(j, "basis", "algebra");
  if (!basis.is_array() || basis.size() != n) fail("basis", "expected " + std::to_string(n) + " identifiers");
  std::vector<std::string> names;
  std::map<std::string, size_t> index;
  for (size_t k = 0; k < n; ++k) {
    if (!basis[k].is_string()) fail("basis[" + std::to_string(k) + "]", "expected an identifier");
    names.push_back(basis[k].get<std::string>());
    if (!index.emplace(names.back(), k).second) fail("basis", "duplicate identifier " + names.back());
  }
  auto lookup = [&](const Json& id, const std::string& where) {
    if (!id.is_string()) fail(where, "expected an identifier");
    auto it = index.find(id.get<std::string>());
    if (it == index.end()) fail(where, "unknown identifier " + id.get<std::string>());
    return it->second;
  };

  std::map<std::pair<size_t, size_t>, Vector> seen;
  BracketTable table(n);
  const Json& br = field(j, "brackets", "algebra");
  if (!br.is_array()) fail("brackets", "expected a list");
  for (size_t b = 0; b < br.size(); ++b) {
    std::string where = "brackets[" + std::to_string(b) + "]";
    size_t l = lookup(field(br[b], "left", where), where + ".left");
    size_t r = lookup(field(br[b], "right", where), where + ".right");
    const Json& res = field(br[b], "result", where);
    if (!res.is_object()) fail(where + ".result", "expected a map identifier -> rational");
    Vector v(n);
    for (const auto& [key, val] : res.items())
      v[lookup(Json(key), where + ".result")] = parse_rational(val, where + ".result." + key);
    if (l == r) {
      if (!is_zero(v)) fail(where, "[" + names[l] + "," + names[l] + "] must vanish");
      continue;
    }
    auto key = l < r ? std::pair{l, r} : std::pair{r, l};
    Vector oriented = l < r ? v : scale(-1, v);
    auto [it, fresh] = seen.emplace(key, oriented);
    if (!fresh) {
      if (!(it->second == oriented)) fail(where, "conflicts with an earlier entry for the same pair");
      continue;
    }
    table.set(key.first, key.second, oriented);
  }
  doc.algebra = LieAlgebra::unchecked(names, std::move(table).take());
  if (j.contains("form")) doc.form = parse_form(j["form"], "form", n);
  return doc;
}

Json to_json(const AlgebraDocument& doc) {
  const LieAlgebra& g = doc.algebra;
  size_t n = g.dim();
  Json j = Json::object();
  j["name"] = doc.name;
  j["dim"] = n;
  j["basis"] = g.names();
  Json br = Json::array();
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b) {
      Vector v = g.bracket_basis(a, b);
      if (is_zero(v)) continue;
      Json res = Json::object();
      for (size_t k = 0; k < n; ++k)
        if (!v[k].is_zero()) res[g.names()[k]] = v[k].str();
      br.push_back(Json{{"left", g.names()[a]}, {"right", g.names()[b]}, {"result", res}});
    }
  j["brackets"] = br;
  if (doc.form) j["form"] = matrix_json(doc.form->gram());
  return j;
}

ExtensionDocument parse_extension(const Json& j) {
  ExtensionDocument doc;
  AlgebraDocument h = parse_algebra(field(j, "h", "extension"));
  doc.name = h.name;
  size_t n = h.algebra.dim();
  size_t dim_a = parse_count(field(j, "dim_a", "extension"), "dim_a");
  size_t dim_i = parse_count(field(j, "dim_i", "extension"), "dim_i");

  const Json& rj = field(j, "rho", "extension");
  Representation rho;
  if (rj.is_string()) {
    if (rj.get<std::string>() != "coadjoint") fail("rho", "expected \"coadjoint\" or a list of matrices");
    if (dim_i != n) fail("rho", "\"coadjoint\" needs dim_i = dim h");
    rho = coadjoint(h.algebra);
    doc.coadjoint = true;
  } else {
    if (!rj.is_array() || rj.size() != n) fail("rho", "expected " + std::to_string(n) + " matrices");
    std::vector<Matrix> mats;
    for (size_t k = 0; k < n; ++k)
      mats.push_back(parse_matrix(rj[k], "rho[" + std::to_string(k) + "]", dim_i, dim_i));
    rho = Representation::unchecked(h.algebra, dim_i, mats);
  }

  ExtensionData d = ExtensionData::zero(h.algebra, dim_a, rho);
  const Json& pj = field(j, "phi", "extension");
  if (!pj.is_array() || pj.size() != n) fail("phi", "expected " + std::to_string(n) + " matrices");
  for (size_t k = 0; k < n; ++k)
    d.phi.set_matrix({k}, parse_matrix(pj[k], "phi[" + std::to_string(k) + "]", dim_i, dim_a));

  auto pairs = Cochain::increasing_tuples(n, 2);
  auto read_pairs = [&](const char* key, size_t m) {
    const Json& a = field(j, key, "extension");
    if (!a.is_array() || a.size() != pairs.size())
      fail(key, "expected one vector per increasing pair (" + std::to_string(pairs.size()) + ")");
    Cochain c(2, n, m);
    for (size_t p = 0; p < pairs.size(); ++p)
      c.set(pairs[p], parse_vector(a[p], std::string(key) + "[" + std::to_string(p) + "]", m));
    return c;
  };
  d.lam = read_pairs("lambda", dim_a);
  d.mu = read_pairs("mu", dim_i);
  if (j.contains("b_a")) doc.b_a = parse_form(j["b_a"], "b_a", dim_a);
  doc.data = std::move(d);
  return doc;
}

Json to_json(const ExtensionDocument& doc) {
  const ExtensionData& d = doc.data;
  size_t n = d.h.dim();
  Json j = Json::object();
  j["h"] = to_json(AlgebraDocument{doc.name, d.h, std::nullopt});
  j["dim_a"] = d.dim_a;
  j["dim_i"] = d.dim_i;
  if (doc.coadjoint) {
    j["rho"] = "coadjoint";
  } else {
    Json r = Json::array();
    for (size_t k = 0; k < n; ++k) r.push_back(matrix_json(d.rho[k]));
    j["rho"] = r;
  }
  Json p = Json::array();
  for (size_t k = 0; k < n; ++k) p.push_back(matrix_json(d.phi_at(k)));
  j["phi"] = p;
  Json lam = Json::array(), mu = Json::array();
  for (const auto& t : Cochain::increasing_tuples(n, 2)) {
    lam.push_back(vector_json(d.lam(t)));
    mu.push_back(vector_json(d.mu(t)));
  }
  j["lambda"] = lam;
  j["mu"] = mu;
  if (doc.b_a) j["b_a"] = matrix_json(doc.b_a->gram());
  return j;
}

DoubleExtensionDocument parse_double_extension(const Json& j) {
  DoubleExtensionDocument doc;
  const Json& name = field(j, "name", "double extension");
  if (!name.is_string()) fail("name", "expected a string");
  doc.name = name.get<std::string>();
  size_t m = parse_count(field(j, "dim_v", "double extension"), "dim_v");
  doc.data.dim_v = m;
  doc.data.b_v = parse_form(field(j, "b_v", "double extension"), "b_v", m);
  doc.data.d_map = parse_matrix(field(j, "d", "double extension"), "d", m, m);
  return doc;
}

Json to_json(const DoubleExtensionDocument& doc) {
  Json j = Json::object();
  j["name"] = doc.name;
  j["dim_v"] = doc.data.dim_v;
  j["b_v"] = matrix_json(doc.data.b_v.gram());
  j["d"] = matrix_json(doc.data.d_map);
  return j;
}

}  // namespace quadlie
