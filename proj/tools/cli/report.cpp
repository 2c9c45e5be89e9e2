#include "report.hpp"

#include <array>
#include <cstdlib>
#include <sstream>

#include <openssl/evp.h>

#include "antiassoc/algebra_io.hpp"
#include "antiassoc/errors.hpp"

namespace antiassoc::cli {

nlohmann::json Report::to_json() const {
  return {{"command", command}, {"inputs", inputs}, {"results", results}, {"warnings", warnings}};
}

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

nlohmann::json file_digest(const std::string& path) {
  return {{"path", path}, {"sha256", sha256_hex(read_text_file(path))}};
}

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("ANTIASSOC_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
      return std::filesystem::path(dir) / p;
    }
  }
  return p;
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_rational(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_combination(const std::vector<std::string>& names, const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    const bool negative = sgn(v[i]) < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = abs(v[i]);
    if (magnitude != 1) out += format_rational(magnitude) + " ";
    out += names.at(i);
  }
  return out.empty() ? "0" : out;
}

nlohmann::json witness_to_json(const std::vector<std::string>& names, const IdentityReport& r) {
  nlohmann::json j{{"holds", r.holds}};
  if (r.witness) {
    nlohmann::json at = nlohmann::json::array();
    for (std::size_t i : r.witness->indices) at.push_back(names.at(i));
    j["witness"] = {{"at", at},
                    {"clause", r.witness->clause},
                    {"defect", format_combination(names, r.witness->defect)}};
  }
  return j;
}

std::string human_summary(const Report& r) {
  std::ostringstream out;
  out << "command: " << r.command << "\n";
  for (const auto& [key, value] : r.results.items()) {
    if (value.is_primitive()) out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  return out.str();
}

}  // namespace antiassoc::cli
