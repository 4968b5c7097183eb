#pragma once

#include "quadlie/quadratic.hpp"

#include <json.hpp>

namespace quadlie {

using Json = nlohmann::ordered_json;

// Antisymmetry is enforced while reading; Jacobi is left to the caller.
struct AlgebraDocument {
  std::string name;
  LieAlgebra algebra;
  std::optional<BilinearForm> form;
};

struct ExtensionDocument {
  std::string name;
  ExtensionData data;
  bool coadjoint = false;
  std::optional<BilinearForm> b_a;
};

// Input of the double-extension command: b_v Gram rows, d with column j = D(v_j).
struct DoubleExtensionDocument {
  std::string name;
  DoubleExtensionData data;
};

AlgebraDocument parse_algebra(const Json& j);
DoubleExtensionDocument parse_double_extension(const Json& j);
Json to_json(const DoubleExtensionDocument& doc);
ExtensionDocument parse_extension(const Json& j);
Json to_json(const AlgebraDocument& doc);
Json to_json(const ExtensionDocument& doc);

Json parse_text(const std::string& text);  // InputError carries the byte offset
std::string emit(const Json& j);            // dump(2) plus newline

Json rational_json(const Rational& q);
Json vector_json(const Vector& v);
Json matrix_json(const Matrix& m);
Json subspace_json(const Subspace& s, const std::vector<std::string>& names);
Matrix parse_matrix(const Json& j, const std::string& where, size_t rows, size_t cols);

}  // namespace quadlie
