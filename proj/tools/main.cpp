#include <string>
#include <vector>

#include "CLI11.hpp"

#include "commands.hpp"

namespace {

// "k=v,k=v" parameter lists
std::map<std::string, double> parse_params(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--params entries look like key=value");
    out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectra and isoperimetric constants of weighted graphs"};
  app.require_subcommand(1);

  graphspec::cli::RunConfig cfg;
  std::vector<std::string> params;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--graph", cfg.graph_file, "graph json file");
    sub->add_option("--family", cfg.family, "built-in family name");
    sub->add_option("--params", params, "family parameters key=value")->delimiter(',');
    sub->add_option("--omega", cfg.omega, "ids:0,1,2 | ball:<x0|base>,<r> | canonical:<n> | named:<key>");
    sub->add_option("--seed", cfg.seed, "seed for randomized corpora");
    sub->add_option("--out", cfg.out_path, "output file (default stdout)");
    sub->add_option("--format", cfg.format, "json | csv | table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--cap-cheeger", cfg.caps.cheeger, "exact Cheeger enumeration cap");
    sub->add_option("--cap-dual", cfg.caps.dual_cheeger, "exact dual enumeration cap");
    sub->add_option("--cap-maxcut", cfg.caps.max_cut, "max cut enumeration cap");
    sub->add_option("--cap-eig", cfg.caps.eigensolver, "dense eigensolver cap");
  };

  add_common(app.add_subcommand("spectrum", "Dirichlet spectrum of omega"));
  add_common(app.add_subcommand("isoperimetry", "Cheeger pair with witnesses and inequalities"));
  add_common(app.add_subcommand("compare", "half-line comparison bounds for a ball"));
  auto* sweep = app.add_subcommand("sweep", "exhaustion and at-infinity estimation");
  add_common(sweep);
  sweep->add_option("--nmax", cfg.n_max, "largest exhaustion index");
  sweep->add_option("--kmax", cfg.k_max, "largest deleted-ball radius");
  sweep->add_flag("--infinity", cfg.at_infinity, "deleted-ball probes instead of exhaustion");
  double eps0 = 0.0;
  auto* eps_opt = sweep->add_option("--eps0", eps0, "dual-Cheeger certificate 1 - hbar");
  add_common(app.add_subcommand("verify", "run the full verification battery"));

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.params = parse_params(params);
  } catch (const std::exception& ex) {
    std::cerr << ex.what() << "\n";
    return graphspec::cli::kInputError;
  }
  if (eps_opt->count() > 0) cfg.eps0 = eps0;
  cfg.command = app.get_subcommands().front()->get_name();
  return graphspec::cli::run_command(cfg);
}
