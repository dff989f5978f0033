#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <ostream>
#include <thread>
#include <tuple>

#include "bohrlab/errors.hpp"
#include "bohrlab/extractor.hpp"
#include "bohrlab/setlab.hpp"
#include "bohrlab/verify.hpp"
#include "io.hpp"

namespace bohrlab::cli {

namespace {

std::string num(double v) {
  if (std::isnan(v)) return "";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string();
}

// Runs `body` and maps library errors onto exit codes.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    const int code = exit_code_for(e);
    if (dynamic_cast<const EmptyInputError*>(&e) != nullptr) {
      err << "EmptyInputError: ";
    } else if (code == kInvariantBreach) {
      err << "internal invariant breach: ";
    } else {
      err << "input error: ";
    }
    err << e.what() << "\n";
    return code;
  }
}

void print_report(const VerificationReport& rep, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::json) {
    out << rep.to_json().dump(2) << "\n";
    return;
  }
  if (format == OutputFormat::csv) {
    out << "check,passed,witness,detail\n";
    for (const auto& c : rep.checks) {
      std::string detail = c.detail;
      std::replace(detail.begin(), detail.end(), ',', ';');
      std::string witness = c.witness ? format_elem(*c.witness) : "";
      std::replace(witness.begin(), witness.end(), ',', ' ');
      out << c.name << "," << (c.passed ? 1 : 0) << "," << witness << "," << detail << "\n";
    }
    return;
  }
  for (const auto& c : rep.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  }
  out << (rep.passed() ? "certificate verified" : "certificate REJECTED") << "\n";
}

}  // namespace

int exit_code_for(const Error& e) {
  if (dynamic_cast<const InvariantBreach*>(&e) != nullptr ||
      dynamic_cast<const AmbiguousBoundary*>(&e) != nullptr) {
    return kInvariantBreach;
  }
  return kInputError;
}

std::size_t enumeration_cap_from_env() {
  const char* v = std::getenv("BOHRLAB_ENUM_CAP");
  if (v == nullptr || *v == '\0') return kDefaultEnumerationCap;
  std::size_t cap = 0;
  const std::string_view s(v);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
  if (ec != std::errc{} || ptr != s.data() + s.size() || cap == 0) {
    throw ParseError("BOHRLAB_ENUM_CAP must be a positive integer");
  }
  return cap;
}

int cmd_extract(const ExtractArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const GroupSpec g = GroupSpec::parse(args.group);
    const GroupSubset a = io::read_set_file(g, args.set_a);
    const GroupSubset b = io::read_set_file(g, args.set_b);
    if (a.size() == 0 || b.size() == 0) {
      throw EmptyInputError(std::string("set ") + (a.size() == 0 ? "A" : "B") + " is empty");
    }
    ExtractOptions opts;
    opts.enumeration_cap = args.cap;
    const Certificate cert = extract(a.indicator(), b.indicator(), opts);
    io::write_text_file(args.out, io::certificate_to_json(cert).dump(2) + "\n");
    const VerificationReport rep = verify_certificate(cert, a, b, args.cap);
    out << "group " << g.to_string() << ": delta=" << num(cert.delta) << " a0="
        << format_elem(cert.a0) << " k=" << cert.k << " c=" << num(cert.c)
        << " eta=" << io::radius_string(cert.bohr_torus_form.radius()) << "\n";
    if (!rep.passed()) {
      const CheckResult* f = rep.first_failure();
      err << "self-verification failed: " << f->name << ": " << f->detail << "\n";
      return static_cast<int>(kVerificationFailed);
    }
    return static_cast<int>(kOk);
  });
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(io::read_text_file(args.cert));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("certificate is not valid JSON: ") + e.what());
    }
    const Certificate cert = io::certificate_from_json(j);
    if (args.group && !(GroupSpec::parse(*args.group) == cert.group)) {
      throw ShapeError("certificate is for group " + cert.group.to_string() + ", not " +
                       *args.group);
    }
    const GroupSubset a = io::read_set_file(cert.group, args.set_a);
    const GroupSubset b = io::read_set_file(cert.group, args.set_b);
    const VerificationReport rep = verify_certificate(cert, a, b, args.cap);
    print_report(rep, args.format, out);
    for (const auto& c : rep.checks) {
      if (c.passed) continue;
      err << "check '" << c.name << "' failed";
      if (c.witness) err << " at element " << format_elem(*c.witness);
      err << ": " << c.detail << "\n";
    }
    return static_cast<int>(rep.passed() ? kOk : kVerificationFailed);
  });
}

std::vector<SweepRow> run_sweep(const SweepArgs& args) {
  if (args.trials < 1) throw DomainError("sweep needs trials >= 1");
  if (args.n_list.empty() || args.delta_list.empty()) {
    throw DomainError("sweep needs at least one group order and one density");
  }
  for (double d : args.delta_list) {
    if (!(d > 0.0 && d <= 1.0)) throw DomainError("sweep densities must lie in (0, 1]");
  }
  for (std::uint64_t n : args.n_list) {
    if (n == 0 || n > args.cap) throw DomainError("sweep group order out of range");
  }

  std::vector<SweepRow> rows;
  for (std::uint64_t n : args.n_list) {
    for (double d : args.delta_list) {
      for (int t = 0; t < args.trials; ++t) {
        SweepRow row;
        row.n = n;
        row.delta = d;
        row.trial = t;
        rows.push_back(std::move(row));
      }
    }
  }
  // Sorted by (N, delta, trial) before any work is scheduled, so completion
  // order never leaks into the output.
  std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& x, const SweepRow& y) {
    return std::tie(x.n, x.delta, x.trial) < std::tie(y.n, y.delta, y.trial);
  });

  auto run_one = [&](SweepRow& row) {
    std::uint64_t delta_bits = 0;
    static_assert(sizeof delta_bits == sizeof row.delta);
    std::memcpy(&delta_bits, &row.delta, sizeof delta_bits);
    const std::uint64_t s = derive_seed(args.seed, {row.n, delta_bits,
                                                    static_cast<std::uint64_t>(row.trial)});
    const double nan = std::nan("");
    row.delta_eff = row.s1_bound = row.c = row.eta = row.h_at_a0 = row.good_shift_fraction = nan;
    try {
      const GroupSpec g = GroupSpec::cyclic(row.n);
      const GroupSubset a = random_subset(g, row.delta, derive_seed(s, {0}));
      const GroupSubset b = random_subset(g, row.delta, derive_seed(s, {1}));
      ExtractOptions opts;
      opts.enumeration_cap = args.cap;
      const Certificate cert = extract(a.indicator(), b.indicator(), opts);
      const VerificationReport rep = verify_certificate(cert, a, b, args.cap);
      const GroupSubset good = good_shift_set(a, b, cert.bohr_char_form, args.cap);
      row.delta_eff = cert.delta;
      row.k = cert.k;
      row.s1_bound = cert.bounds.s1_bound;
      row.c = cert.c;
      row.eta = cert.bohr_torus_form.radius();
      row.h_at_a0 = cert.h_at_a0;
      row.good_shift_fraction =
          static_cast<double>(good.size()) / static_cast<double>(a.size());
      row.pass = rep.passed() && good.contains(cert.a0);
      if (!rep.passed()) row.error = "check " + rep.first_failure()->name + " failed";
    } catch (const Error& e) {
      row.pass = false;
      row.error = e.what();
    }
    std::replace(row.error.begin(), row.error.end(), ',', ';');
    std::replace(row.error.begin(), row.error.end(), '\n', ' ');
  };

  unsigned threads = args.threads ? args.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(rows.size()));
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) run_one(rows[i]);
      });
    }
  }
  return rows;
}

std::string format_sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "N,delta,trial,delta_eff,k,s1_bound,c,eta,h_a0,good_shift_fraction,pass,error\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + num(r.delta) + "," + std::to_string(r.trial) + "," +
           num(r.delta_eff) + "," + std::to_string(r.k) + "," + num(r.s1_bound) + "," +
           num(r.c) + "," + num(r.eta) + "," + num(r.h_at_a0) + "," +
           num(r.good_shift_fraction) + "," + (r.pass ? "1" : "0") + "," + r.error + "\n";
  }
  return out;
}

std::string format_sweep_json(const std::vector<SweepRow>& rows) {
  auto arr = nlohmann::ordered_json::array();
  auto val = [](double v) { return std::isnan(v) ? nlohmann::ordered_json() : nlohmann::ordered_json(v); };
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["N"] = r.n;
    j["delta"] = r.delta;
    j["trial"] = r.trial;
    j["delta_eff"] = val(r.delta_eff);
    j["k"] = r.k;
    j["s1_bound"] = val(r.s1_bound);
    j["c"] = val(r.c);
    j["eta"] = val(r.eta);
    j["h_a0"] = val(r.h_at_a0);
    j["good_shift_fraction"] = val(r.good_shift_fraction);
    j["pass"] = r.pass;
    j["error"] = r.error;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto rows = run_sweep(args);
    const std::string text =
        args.format == OutputFormat::json ? format_sweep_json(rows) : format_sweep_csv(rows);
    if (args.out.empty()) {
      out << text;
    } else {
      io::write_text_file(args.out, text);
    }
    const auto failed = std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return !r.pass; });
    err << rows.size() << " rows, " << failed << " failed\n";
    return static_cast<int>(failed == 0 ? kOk : kVerificationFailed);
  });
}

int cmd_identities(const IdentitiesArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const GroupSpec g = GroupSpec::parse(args.group);
    const SuiteReport rep = fourier_identity_suite(g, args.trials, args.seed);
    out << rep.to_json().dump(2) << "\n";
    return static_cast<int>(rep.passed ? kOk : kVerificationFailed);
  });
}

}  // namespace bohrlab::cli
