#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "antiassoc/algebra.hpp"

namespace antiassoc {

/// {"basis": [...], "dim": n, "table": [[["p/q", ...], ...], ...]}
nlohmann::json algebra_to_json(const Algebra& a);
/// Throws InputError on any structural or numeric problem.
Algebra algebra_from_json(const nlohmann::json& j);

/// Canonical text: compact JSON with sorted keys, followed by a newline.
std::string write_algebra(const Algebra& a);
Algebra read_algebra(const std::string& text);

Algebra load_algebra(const std::filesystem::path& path);
void save_algebra(const Algebra& a, const std::filesystem::path& path);

nlohmann::json vector_to_json(const Vector& v);
Vector vector_from_json(const nlohmann::json& j);

/// Reads a whole file; throws InputError when it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace antiassoc
