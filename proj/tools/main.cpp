#include <iostream>

#include <CLI11.hpp>

#include "bohrlab/errors.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace bohrlab::cli;

  CLI::App app{"bohrlab: Bohr neighborhoods inside A+B-B on finite abelian groups"};
  app.require_subcommand(1);

  std::size_t cap = 0;
  try {
    cap = enumeration_cap_from_env();
  } catch (const bohrlab::Error& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  }

  ExtractArgs ex;
  ex.cap = cap;
  auto* extract = app.add_subcommand("extract", "extract and self-verify a certificate");
  extract->add_option("--group", ex.group, "group spec, e.g. 8 or 4x3")->required();
  extract->add_option("--set-a", ex.set_a, "set file for A")->required();
  extract->add_option("--set-b", ex.set_b, "set file for B")->required();
  extract->add_option("--out", ex.out, "certificate output path")->required();

  VerifyArgs ve;
  ve.cap = cap;
  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify", "re-check a certificate by brute force");
  verify->add_option("--cert", ve.cert, "certificate JSON")->required();
  verify->add_option("--set-a", ve.set_a, "set file for A")->required();
  verify->add_option("--set-b", ve.set_b, "set file for B")->required();
  verify->add_option("--group", ve.group, "expected group spec");
  verify->add_option("--format", verify_format, "report format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  SweepArgs sw;
  sw.cap = cap;
  std::string sweep_format = "csv";
  auto* sweep = app.add_subcommand("sweep", "randomized extraction sweep over Z_N");
  sweep->add_option("--n", sw.n_list, "group orders")->delimiter(',')->required();
  sweep->add_option("--delta", sw.delta_list, "target densities")->delimiter(',')->required();
  sweep->add_option("--trials", sw.trials, "trials per (N, delta)")->required();
  sweep->add_option("--seed", sw.seed, "master seed");
  sweep->add_option("--out", sw.out, "output path (default stdout)");
  sweep->add_option("--format", sweep_format, "row format")->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--threads", sw.threads, "worker threads (0 = all cores)");

  IdentitiesArgs id;
  auto* identities = app.add_subcommand("identities", "Fourier identity suite on random tables");
  identities->add_option("--group", id.group, "group spec")->required();
  identities->add_option("--trials", id.trials, "random table pairs")->required();
  identities->add_option("--seed", id.seed, "master seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  if (*extract) return cmd_extract(ex, std::cout, std::cerr);
  if (*verify) {
    ve.format = verify_format == "json"  ? OutputFormat::json
                : verify_format == "csv" ? OutputFormat::csv
                                         : OutputFormat::text;
    return cmd_verify(ve, std::cout, std::cerr);
  }
  if (*sweep) {
    sw.format = sweep_format == "json" ? OutputFormat::json : OutputFormat::csv;
    return cmd_sweep(sw, std::cout, std::cerr);
  }
  return cmd_identities(id, std::cout, std::cerr);
}
