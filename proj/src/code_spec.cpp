#include "apc/code_spec.hpp"

#include "apc/text_io.hpp"

#include <stdexcept>
#include <string>

namespace apc {

namespace {

FieldSpec parse_field(const nlohmann::json& j) {
  if (!j.contains("field")) return FieldSpec(2);
  const auto& f = j.at("field");
  if (!f.is_object() || !f.contains("p"))
    throw std::invalid_argument("field spec must be an object {\"p\": <prime>}");
  return FieldSpec(f.at("p").get<std::uint32_t>());
}

int require_int(const nlohmann::json& j, const char* key) {
  if (!j.contains(key))
    throw std::invalid_argument(std::string("code spec missing \"") + key + "\"");
  return j.at(key).get<int>();
}

}  // namespace

LinearCode parse_code_spec(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("code spec must be an object");
  const FieldSpec field = parse_field(j);
  if (j.contains("generator")) {
    const FieldMatrix g = parse_matrix(j.at("generator").get<std::string>(), field);
    return LinearCode(g);
  }
  if (!j.contains("family"))
    throw std::invalid_argument("code spec needs \"family\" or \"generator\"");
  const std::string family = j.at("family").get<std::string>();
  if (family == "even_weight") return even_weight_code(require_int(j, "n"), field);
  if (family == "repetition") return repetition_code(require_int(j, "n"), field);
  if (family == "full_space") return full_space_code(require_int(j, "n"), field);
  if (family == "reed_muller_1") {
    if (field.p() != 2)
      throw std::invalid_argument("reed_muller_1 is a binary family");
    return reed_muller_1_code(require_int(j, "r"));
  }
  throw std::invalid_argument("unknown code family \"" + family + "\"");
}

ProductCode parse_product_spec(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("product spec must be an object");
  if (j.contains("construction")) {
    const std::string c = j.at("construction").get<std::string>();
    if (c != "IA")
      throw std::invalid_argument("unknown construction \"" + c + "\"");
    return ProductCode::construction_ia(
        parse_code_spec(j.at("c1")), parse_code_spec(j.at("c2")),
        parse_code_spec(j.at("d1")), parse_code_spec(j.at("d2")));
  }
  if (!j.contains("row") || !j.contains("col"))
    throw std::invalid_argument("product spec needs \"row\" and \"col\"");
  LinearCode row = parse_code_spec(j.at("row"));
  LinearCode col = parse_code_spec(j.at("col"));
  Vec u(size_t(row.length()), 0);
  Vec v(size_t(col.length()), 0);
  if (j.contains("row_rep"))
    u = parse_vec(j.at("row_rep").get<std::string>(), row.field());
  if (j.contains("col_rep"))
    v = parse_vec(j.at("col_rep").get<std::string>(), col.field());
  if (static_cast<int>(u.size()) != row.length())
    throw std::invalid_argument("row_rep length must equal the row code length");
  if (static_cast<int>(v.size()) != col.length())
    throw std::invalid_argument("col_rep length must equal the column code length");
  if (is_zero_vec(u) && is_zero_vec(v))
    return ProductCode::classical(std::move(row), std::move(col));
  return ProductCode::construction_i(AffineCode(std::move(row), u),
                                     AffineCode(std::move(col), v));
}

IrregularSpec parse_irregular_spec(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols"))
    throw std::invalid_argument("irregular spec needs \"rows\" and \"cols\"");
  std::vector<LinearCode> rows, cols;
  for (const auto& e : j.at("rows")) rows.push_back(parse_code_spec(e));
  for (const auto& e : j.at("cols")) cols.push_back(parse_code_spec(e));
  if (rows.empty() || cols.empty())
    throw std::invalid_argument("irregular spec needs nonempty code lists");
  const FieldSpec field = rows.front().field();
  Vec u(cols.size(), 0);  // length n
  Vec v(rows.size(), 0);  // length m
  if (j.contains("row_rep")) u = parse_vec(j.at("row_rep").get<std::string>(), field);
  if (j.contains("col_rep")) v = parse_vec(j.at("col_rep").get<std::string>(), field);
  return IrregularSpec(std::move(rows), std::move(cols), std::move(u), std::move(v));
}

bool looks_like_product_spec(const nlohmann::json& j) {
  return j.is_object() &&
         ((j.contains("row") && j.contains("col")) || j.contains("construction"));
}

bool looks_like_irregular_spec(const nlohmann::json& j) {
  return j.is_object() && j.contains("rows") && j.contains("cols");
}

}  // namespace apc
