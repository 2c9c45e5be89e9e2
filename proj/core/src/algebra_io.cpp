#include "antiassoc/algebra_io.hpp"

#include <fstream>
#include <sstream>

#include "antiassoc/errors.hpp"

namespace antiassoc {

using nlohmann::json;

nlohmann::json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(format_rational(x));
  return out;
}

Vector vector_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals");
  Vector v;
  v.reserve(j.size());
  for (const auto& x : j) {
    if (x.is_string()) {
      v.push_back(parse_rational(x.get<std::string>()));
    } else if (x.is_number_integer()) {
      v.push_back(parse_rational(x.dump()));
    } else {
      throw InputError("rationals must be strings \"p/q\" or integers, got " + x.dump());
    }
  }
  return v;
}

nlohmann::json algebra_to_json(const Algebra& a) {
  json table = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(vector_to_json(a.product(i, j)));
    table.push_back(std::move(row));
  }
  return json{{"basis", a.basis_names()}, {"dim", a.dim()}, {"table", std::move(table)}};
}

Algebra algebra_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("algebra file must hold a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_unsigned()) {
    throw InputError("algebra file needs a non-negative integer \"dim\"");
  }
  const auto n = j["dim"].get<std::size_t>();
  std::vector<std::string> names;
  if (j.contains("basis")) {
    if (!j["basis"].is_array()) throw InputError("\"basis\" must be an array of strings");
    for (const auto& name : j["basis"]) {
      if (!name.is_string()) throw InputError("\"basis\" must be an array of strings");
      names.push_back(name.get<std::string>());
    }
    if (names.size() != n) throw InputError("\"basis\" length does not match \"dim\"");
  } else {
    names = Algebra::default_names(n);
  }
  if (!j.contains("table") || !j["table"].is_array() || j["table"].size() != n) {
    throw InputError("\"table\" must be a dim x dim array of coefficient vectors");
  }
  StructureTable table;
  for (const auto& row : j["table"]) {
    if (!row.is_array() || row.size() != n) {
      throw InputError("\"table\" must be a dim x dim array of coefficient vectors");
    }
    std::vector<Vector> out_row;
    for (const auto& entry : row) {
      Vector v = vector_from_json(entry);
      if (v.size() != n) throw InputError("structure constant vector length does not match \"dim\"");
      out_row.push_back(std::move(v));
    }
    table.push_back(std::move(out_row));
  }
  return Algebra(std::move(names), std::move(table));
}

std::string write_algebra(const Algebra& a) { return algebra_to_json(a).dump() + "\n"; }

Algebra read_algebra(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return algebra_from_json(j);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Algebra load_algebra(const std::filesystem::path& path) {
  try {
    return read_algebra(read_text_file(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void save_algebra(const Algebra& a, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << write_algebra(a);
}

}  // namespace antiassoc
