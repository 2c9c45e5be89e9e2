#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "antiassoc/algebra.hpp"
#include "antiassoc/identities.hpp"
#include "antiassoc/matrix.hpp"

namespace antiassoc::cli {

/// What every subcommand prints. Keys are sorted and rationals are canonical
/// strings, so equal inputs give byte-identical output.
struct Report {
  explicit Report(std::string name) : command(std::move(name)) {}

  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  std::vector<std::string> warnings;

  nlohmann::json to_json() const;
};

std::string sha256_hex(const std::string& bytes);

/// {"path": ..., "sha256": ...}; InputError when unreadable.
nlohmann::json file_digest(const std::string& path);

/// Relative paths are taken inside ANTIASSOC_OUTPUT_DIR when it is set.
std::filesystem::path resolve_output(const std::string& path);

nlohmann::json matrix_to_json(const Matrix& m);

/// "2 e1 - 1/2 e3"; "0" for the zero vector.
std::string format_combination(const std::vector<std::string>& names, const Vector& v);

nlohmann::json witness_to_json(const std::vector<std::string>& names, const IdentityReport& r);

/// Rendered summary for --human: scalar results, then warnings.
std::string human_summary(const Report& r);

}  // namespace antiassoc::cli
