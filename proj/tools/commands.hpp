#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bohrlab/errors.hpp"
#include "bohrlab/group.hpp"

namespace bohrlab::cli {

// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kInvariantBreach = 3,
};

enum class OutputFormat { json, csv, text };

struct ExtractArgs {
  std::string group;
  std::string set_a;
  std::string set_b;
  std::string out;
  std::size_t cap = kDefaultEnumerationCap;
};

struct VerifyArgs {
  std::string cert;
  std::string set_a;
  std::string set_b;
  std::optional<std::string> group;  // when given, must match the certificate
  OutputFormat format = OutputFormat::text;
  std::size_t cap = kDefaultEnumerationCap;
};

struct SweepArgs {
  std::vector<std::uint64_t> n_list;
  std::vector<double> delta_list;
  int trials = 0;
  std::uint64_t seed = 0;
  std::string out;  // empty: write to the output stream
  OutputFormat format = OutputFormat::csv;
  unsigned threads = 0;  // 0: hardware concurrency
  std::size_t cap = kDefaultEnumerationCap;
};

struct IdentitiesArgs {
  std::string group;
  int trials = 0;
  std::uint64_t seed = 0;
};

int cmd_extract(const ExtractArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err);
int cmd_identities(const IdentitiesArgs& args, std::ostream& out, std::ostream& err);

// Rendered sweep table; exposed so tests can check determinism in-process.
struct SweepRow {
  std::uint64_t n = 0;
  double delta = 0;
  int trial = 0;
  double delta_eff = 0;
  std::size_t k = 0;
  double s1_bound = 0;
  double c = 0;
  double eta = 0;
  double h_at_a0 = 0;
  double good_shift_fraction = 0;
  bool pass = false;
  std::string error;
};

std::vector<SweepRow> run_sweep(const SweepArgs& args);
std::string format_sweep_csv(const std::vector<SweepRow>& rows);
std::string format_sweep_json(const std::vector<SweepRow>& rows);

// Internal invariant breaches (including ambiguous Bohr boundaries) map to 3,
// every other library error is an input problem and maps to 2.
int exit_code_for(const Error& e);

// Reads BOHRLAB_ENUM_CAP, falling back to the library default.
std::size_t enumeration_cap_from_env();

}  // namespace bohrlab::cli
