#pragma once

#include <string>
#include <vector>

#include "antiassoc/algebra.hpp"

namespace antiassoc {

struct Fixture {
  std::string name;         // file stem, e.g. "faa1"
  std::string source;       // where the table comes from
  std::string description;  // short human summary; mentions parameter choices
  Algebra algebra;
};

/// Every bundled multiplication table, in a fixed order.
const std::vector<Fixture>& fixtures();

/// Throws InputError for unknown names.
const Fixture& fixture(const std::string& name);

}  // namespace antiassoc
