#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>

#include <CLI11.hpp>

#include "antiassoc/errors.hpp"
#include "commands.hpp"

namespace antiassoc::cli {

namespace {

using Handler = std::function<Report(const Options&)>;

void print_error(std::ostream& out, std::ostream& err, const std::string& command, const std::string& kind,
                 const std::string& message) {
  const nlohmann::json j{{"command", command}, {"error", {{"kind", kind}, {"message", message}}}};
  out << j.dump(2) << "\n";
  err << "antiassoc " << command << ": " << message << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for anti-associative algebras, Jacobi-Jordan algebras and their operads",
               "antiassoc"};
  app.require_subcommand(1);
  Options o;
  bool human = false;
  std::string out_file;
  app.add_flag("--human", human, "append a readable summary after the JSON report");
  app.add_option("--out", out_file, "also write the report to this file (relative to $ANTIASSOC_OUTPUT_DIR)");

  std::map<CLI::App*, std::pair<std::string, Handler>> handlers;
  auto sub = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* s = app.add_subcommand(name, help);
    handlers[s] = {name, std::move(h)};
    return s;
  };
  auto file_arg = [&o](CLI::App* s) { s->add_option("file", o.file, "algebra file (JSON)")->required(); };

  auto* check = sub("check", "check identities and the nilindex of an algebra", cmd_check);
  file_arg(check);
  check->add_option("--identity", o.identities, "identity to check (repeatable; default all)");

  auto* free_aa = sub("free-aa", "free anti-associative algebra on k generators", cmd_free_aa);
  free_aa->add_option("-k", o.generators, "number of generators")->required();
  auto* free_comm = sub("free-comm", "free commutative anti-associative algebra", cmd_free_comm);
  free_comm->add_option("-p", o.generators, "number of generators")->required();
  auto* free_anticomm = sub("free-anticomm", "free anticommutative anti-associative algebra", cmd_free_anticomm);
  free_anticomm->add_option("-p", o.generators, "number of generators")->required();
  auto* free_jj = sub("free-jj-dim", "component dimension of the free Jacobi-Jordan algebra", cmd_free_jj_dim);
  free_jj->add_option("-p", o.generators, "number of generators")->required();
  free_jj->add_option("-d", o.degree, "total degree")->required();

  auto* derivations = sub("derivations", "derivations, anti-derivations or inner anti-derivations", cmd_derivations);
  file_arg(derivations);
  derivations->add_flag("--anti", o.anti, "anti-derivations f(xy) + x f(y) + f(x) y = 0");
  derivations->add_flag("--inner", o.inner, "inner anti-derivations L_x + R_x");

  auto* pol = sub("polarize", "symmetric and antisymmetric parts of the product", cmd_polarize);
  file_arg(pol);

  auto* deform = sub("deform", "residuals of a truncated formal deformation", cmd_deform);
  file_arg(deform);
  deform->add_option("--phi", o.phis, "bilinear map file phi_1, phi_2, ... (in order)");
  deform->add_option("--order", o.order, "truncation order")->required();

  auto* ap = sub("anti-poisson", "check an anti-Poisson triple", cmd_anti_poisson);
  ap->add_option("--psi", o.psi, "antisymmetric bilinear map file")->required();
  ap->add_option("--rho", o.rho, "symmetric bilinear map file")->required();

  auto* hom = sub("homology", "chain complex dimensions in low degree", cmd_homology);
  file_arg(hom);
  hom->add_option("--degree", o.degree, "degree q")->required();
  hom->add_option("--convention", o.convention, "symmetric | twisted");

  auto* coh = sub("cohomology", "standard or Jacobi-Jordan cohomology dimensions", cmd_cohomology);
  file_arg(coh);
  coh->add_flag("--jj", o.jj, "Jacobi-Jordan complex on symmetric cochains");
  coh->add_option("--degree", o.degree, "1, 2: list cocycles; 3: evaluate delta3 o delta2");

  auto* operad = sub("operad", "component dimensions and quadratic dual of a binary quadratic operad", cmd_operad);
  operad->add_option("--preset", o.preset, "aass | jajo | jajo-dual | free");
  operad->add_option("--relations", o.relations, "presentation file (JSON)");
  operad->add_option("--max-arity", o.max_arity, "highest arity (<= 5)");

  auto* koszul = sub("koszul", "generating-series sign test for Koszulness", cmd_koszul);
  koszul->add_option("--preset", o.preset, "aass | jajo | jajo-dual | free");
  koszul->add_option("--relations", o.relations, "presentation file (JSON)");
  koszul->add_option("--order", o.order, "series order")->required();

  auto* inv = sub("series-invert", "compositional inverse of a power series", cmd_series_invert);
  inv->add_option("--coeffs", o.coeffs, "comma-separated coefficients of t, t^2, ... (higher ones are zero)")->required();
  inv->add_option("--order", o.order, "truncation order (default: number of coefficients)");

  auto* catalog = sub("catalog", "list the bundled multiplication tables", cmd_catalog);
  catalog->add_option("--export", o.export_dir, "write every table as DIR/<name>.alg");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "antiassoc: " << e.what() << "\n";
    return 2;
  }

  const auto selected = app.get_subcommands();
  const auto& [name, handler] = handlers.at(selected.front());
  try {
    const Report report = handler(o);
    const std::string text = report.to_json().dump(2) + "\n";
    out << text;
    if (human) out << human_summary(report);
    if (!out_file.empty()) {
      const auto path = resolve_output(out_file);
      std::ofstream file(path, std::ios::binary);
      if (!(file << text)) throw InputError("cannot write " + path.string());
    }
    return 0;
  } catch (const InputError& e) {
    print_error(out, err, name, "input-error", e.what());
    return 2;
  } catch (const DomainError& e) {
    print_error(out, err, name, "domain-error", e.what());
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    print_error(out, err, name, "input-error", e.what());
    return 2;
  } catch (const Error& e) {
    print_error(out, err, name, "error", e.what());
    return 1;
  }
}

}  // namespace antiassoc::cli
