#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "report.hpp"

namespace antiassoc::cli {

/// Parsed flags of every subcommand; each command reads its own.
struct Options {
  std::string file;
  std::vector<std::string> identities;
  std::size_t generators = 0;
  std::size_t degree = 0;
  bool anti = false;
  bool inner = false;
  std::vector<std::string> phis;
  std::size_t order = 0;
  std::string psi;
  std::string rho;
  std::string convention = "symmetric";
  bool jj = false;
  std::string preset;
  std::string relations;
  std::size_t max_arity = 5;
  std::string coeffs;
  std::string export_dir;
};

Report cmd_check(const Options& o);
Report cmd_free_aa(const Options& o);
Report cmd_free_comm(const Options& o);
Report cmd_free_anticomm(const Options& o);
Report cmd_free_jj_dim(const Options& o);
Report cmd_derivations(const Options& o);
Report cmd_polarize(const Options& o);
Report cmd_deform(const Options& o);
Report cmd_anti_poisson(const Options& o);
Report cmd_homology(const Options& o);
Report cmd_cohomology(const Options& o);
Report cmd_operad(const Options& o);
Report cmd_koszul(const Options& o);
Report cmd_series_invert(const Options& o);
Report cmd_catalog(const Options& o);

}  // namespace antiassoc::cli
