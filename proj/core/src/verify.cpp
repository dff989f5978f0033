#include "bohrlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "bohrlab/errors.hpp"

namespace bohrlab {

namespace {

constexpr double kValueTol = 1e-9;
constexpr double kThresholdBand = 1e-12;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

CheckResult make(std::string name, bool ok, std::string detail,
                 std::optional<Elem> witness = std::nullopt) {
  return {std::move(name), ok, std::move(detail), std::move(witness)};
}

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerificationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["group"] = group;
  j["passed"] = passed();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    e["detail"] = c.detail;
    e["witness"] = c.witness ? nlohmann::ordered_json(c.witness->coords) : nlohmann::ordered_json();
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  return j;
}

VerificationReport verify_certificate(const Certificate& cert, const GroupSubset& a,
                                      const GroupSubset& b, std::size_t cap) {
  const GroupSpec& g = cert.group;
  if (!(a.group() == g) || !(b.group() == g)) {
    throw ShapeError("certificate group " + g.to_string() + " does not match the input sets");
  }
  if (g.order() > cap) {
    throw CapacityError("group order " + std::to_string(g.order()) +
                        " exceeds enumeration cap " + std::to_string(cap));
  }
  VerificationReport report;
  report.group = g.to_string();
  auto& out = report.checks;
  const std::size_t n = g.order();

  // Mean normalization, redone from the raw sets.
  const double da = a.density();
  const double db = b.density();
  if (!(da > 0.0) || !(db > 0.0)) {
    out.push_back(make("nonempty_inputs", false, "A or B is empty"));
    return report;
  }
  const double delta = std::min(da, db);
  const DensityFn f = a.indicator().scaled(delta / da);
  const DensityFn gf = b.indicator().scaled(delta / db);
  const double d4 = std::pow(delta, 4);

  out.push_back(make("delta_matches", std::abs(delta - cert.delta) <= 1e-12,
                     "recomputed " + fmt(delta) + ", certificate " + fmt(cert.delta)));

  bool a0_valid = true;
  try {
    g.check(cert.a0);
  } catch (const ShapeError&) {
    a0_valid = false;
  }
  out.push_back(make("witness_in_A", a0_valid && a.contains(cert.a0),
                     "a0 = " + format_elem(cert.a0), cert.a0));
  if (!a0_valid) return report;
  const Index a0 = g.index_of(cert.a0);

  // Spectra by definitional sums.
  const Spectrum f_hat = dft(f, TransformPath::definitional);
  const Spectrum g_hat = dft(gf, TransformPath::definitional);
  const Spectrum h_hat = triple_spectrum(f_hat, g_hat);

  const double threshold = 0.25 * delta * delta * delta;
  std::vector<bool> in_s1(n, false);
  for (const Char& t : cert.s1) in_s1[g.index_of(t)] = true;
  std::optional<Elem> s1_bad;
  for (Index t = 0; t < n && !s1_bad; ++t) {
    const double m = std::abs(f_hat[t]);
    if (std::abs(m - threshold) <= kThresholdBand) continue;
    if ((m >= threshold) != in_s1[t]) s1_bad = g.elem_at(t);
  }
  out.push_back(make("s1_matches", !s1_bad,
                     s1_bad ? "character " + format_elem(*s1_bad) + " misclassified"
                            : std::to_string(cert.s1.size()) + " characters",
                     s1_bad));

  double coeff_err = cert.p_coeffs.size() == cert.s1.size() ? 0.0 : INFINITY;
  for (std::size_t i = 0; i < cert.s1.size() && i < cert.p_coeffs.size(); ++i) {
    coeff_err = std::max(coeff_err, std::abs(h_hat.at(cert.s1[i]) - cert.p_coeffs[i]));
  }
  out.push_back(make("p_coeffs_match", coeff_err <= kValueTol, "max error " + fmt(coeff_err)));

  // h by direct spatial convolution.
  const DensityFn h = triple_convolve(f, gf, TransformPath::definitional);
  out.push_back(make("h_at_a0_matches", std::abs(h[a0] - cert.h_at_a0) <= kValueTol,
                     "recomputed " + fmt(h[a0]) + ", certificate " + fmt(cert.h_at_a0)));

  const RootTable roots(g.exponent());
  std::complex<double> p_a0{0.0, 0.0};
  for (const Char& t : cert.s1) p_a0 += h_hat.at(t) * roots[g.phase(g.index_of(t), a0)];
  const double c = p_a0.real() - 0.25 * d4;
  out.push_back(make("c_matches", std::abs(c - cert.c) <= kValueTol,
                     "recomputed " + fmt(c) + ", certificate " + fmt(cert.c)));

  const double k = static_cast<double>(cert.s1.size());
  const auto& cf = cert.bohr_char_form;
  const auto& tf = cert.bohr_torus_form;
  const double want_char = cert.c / k;
  const double want_torus = cert.c / (2.0 * std::numbers::pi * k);
  const bool shape_ok = cert.k == cert.s1.size() && cf.freqs() == cert.s1 &&
                        tf.freqs() == cert.s1 && cf.form() == RadiusForm::character_distance &&
                        tf.form() == RadiusForm::torus_norm && cf.center() == cert.a0;
  const bool radius_ok = std::abs(cf.radius() - want_char) <= 1e-12 * want_char &&
                         std::abs(tf.radius() - want_torus) <= 1e-12 * want_torus;
  out.push_back(make("radius_consistent", shape_ok && radius_ok,
                     "char radius " + fmt(cf.radius()) + " (expected " + fmt(want_char) +
                         "), torus radius " + fmt(tf.radius()) + " (expected " +
                         fmt(want_torus) + ")"));

  // Containment of a0 + U in A + B - B, element by element.
  const GroupSubset sumset = sumset_ABmB(a, b, cap);
  const auto char_mask = bohr_member_mask(cf, cap);
  std::optional<Elem> escaped;
  std::size_t members = 0;
  for (Index x = 0; x < n; ++x) {
    if (!char_mask[x]) continue;
    ++members;
    const Index z = g.add(a0, x);
    if (!sumset.contains(z)) {
      escaped = g.elem_at(z);
      break;
    }
  }
  out.push_back(make("containment", !escaped,
                     escaped ? "a0 + U leaves A+B-B at " + format_elem(*escaped)
                             : std::to_string(members) + " members inside A+B-B",
                     escaped));

  const auto torus_mask = bohr_member_mask(tf, cap);
  std::optional<Elem> torus_bad;
  for (Index x = 0; x < n && !torus_bad; ++x) {
    if (torus_mask[x] && !char_mask[x]) torus_bad = g.elem_at(x);
  }
  out.push_back(make("torus_inside_char", !torus_bad,
                     torus_bad ? "torus-form member " + format_elem(*torus_bad) +
                                     " outside character-distance set"
                               : "ok",
                     torus_bad));

  const double s1_bound = 16.0 / std::pow(delta, 5);
  out.push_back(make("s1_bound", k <= s1_bound,
                     "k = " + std::to_string(cert.s1.size()) + ", 16 delta^-5 = " + fmt(s1_bound)));
  out.push_back(make("h_bound", h[a0] >= d4 - kBoundSlack,
                     "h(a0) = " + fmt(h[a0]) + ", delta^4 = " + fmt(d4)));
  out.push_back(make("c_bound", c >= 0.5 * d4 - kBoundSlack,
                     "c = " + fmt(c) + ", delta^4/2 = " + fmt(0.5 * d4)));
  const double eta_floor = std::pow(delta, 9) / (64.0 * std::numbers::pi);
  out.push_back(make("eta_bound", tf.radius() >= eta_floor - 1e-12,
                     "eta = " + fmt(tf.radius()) + ", delta^9/(64 pi) = " + fmt(eta_floor)));

  std::vector<std::complex<double>> rest(h_hat.coeffs().begin(), h_hat.coeffs().end());
  for (Index t = 0; t < n; ++t) {
    if (in_s1[t]) rest[t] = {0.0, 0.0};
  }
  const ComplexFn r = idft(Spectrum(g, std::move(rest)), TransformPath::definitional);
  double r_max = 0.0;
  for (const auto& v : r.values()) r_max = std::max(r_max, std::abs(v));
  out.push_back(make("remainder_bound", r_max <= 0.25 * d4 + kBoundSlack,
                     "max |r| = " + fmt(r_max) + ", delta^4/4 = " + fmt(0.25 * d4)));
  return report;
}

GroupSubset good_shift_set(const GroupSubset& a, const GroupSubset& b, const BohrSpec& bohr,
                           std::size_t cap) {
  const GroupSpec& g = a.group();
  if (!(bohr.group() == g)) throw ShapeError("good_shift_set: Bohr set on a different group");
  const GroupSubset sumset = sumset_ABmB(a, b, cap);
  const auto mask = bohr_member_mask(halve_radius(bohr), cap);
  std::vector<Index> members;
  for (Index x = 0; x < mask.size(); ++x) {
    if (mask[x]) members.push_back(x);
  }
  std::vector<bool> good(g.order(), false);
  for (Index s : a.indices()) {
    good[s] = std::all_of(members.begin(), members.end(),
                          [&](Index x) { return sumset.contains(g.add(s, x)); });
  }
  return GroupSubset(g, std::move(good));
}

IdentityErrors identity_errors(const DensityFn& f, const DensityFn& g) {
  const GroupSpec& grp = f.group();
  const std::size_t n = grp.order();
  const Spectrum fh = dft(f);
  const Spectrum gh = dft(g);
  IdentityErrors e;
  e.plancherel = std::abs(plancherel_pairing(f, g) - spectral_pairing(fh, gh));
  e.parseval = std::abs(plancherel_pairing(f, f).real() - spectral_pairing(fh, fh).real());
  const Spectrum conv_hat = dft(convolve(f, g, TransformPath::definitional));
  const Spectrum refl_hat = dft(reflect(g));
  for (Index t = 0; t < n; ++t) {
    e.convolution = std::max(e.convolution, std::abs(conv_hat[t] - fh[t] * gh[t]));
    e.reflection = std::max(e.reflection, std::abs(refl_hat[t] - std::conj(gh[t])));
  }
  return e;
}

double fast_path_error(const DensityFn& f) {
  const Spectrum fast = dft(f, TransformPath::fast);
  const Spectrum slow = dft(f, TransformPath::definitional);
  double m = 0.0;
  for (Index t = 0; t < f.group().order(); ++t) m = std::max(m, std::abs(fast[t] - slow[t]));
  return m;
}

nlohmann::ordered_json SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["group"] = group;
  j["trials"] = trials;
  j["seed"] = seed;
  j["tolerance"] = tolerance;
  j["plancherel_max_error"] = max_errors.plancherel;
  j["parseval_max_error"] = max_errors.parseval;
  j["convolution_max_error"] = max_errors.convolution;
  j["reflection_max_error"] = max_errors.reflection;
  j["fast_path_max_error"] =
      fast_path_max_error ? nlohmann::ordered_json(*fast_path_max_error) : nlohmann::ordered_json();
  j["passed"] = passed;
  return j;
}

SuiteReport fourier_identity_suite(const GroupSpec& g, int trials, std::uint64_t seed,
                                   double tolerance) {
  if (trials < 1) throw DomainError("fourier_identity_suite: trials must be >= 1");
  SuiteReport rep;
  rep.group = g.to_string();
  rep.trials = trials;
  rep.seed = seed;
  rep.tolerance = tolerance;
  const bool check_fast = g.order() <= 512;
  if (check_fast) rep.fast_path_max_error = 0.0;
  auto draw = [&](std::mt19937_64& rng) {
    std::vector<double> v(g.order());
    for (double& x : v) x = unit_uniform(rng());
    return DensityFn(g, std::move(v));
  };
  for (int i = 0; i < trials; ++i) {
    std::mt19937_64 rng(derive_seed(seed, {static_cast<std::uint64_t>(i)}));
    const DensityFn f = draw(rng);
    const DensityFn h = draw(rng);
    const IdentityErrors e = identity_errors(f, h);
    auto& m = rep.max_errors;
    m.plancherel = std::max(m.plancherel, e.plancherel);
    m.parseval = std::max(m.parseval, e.parseval);
    m.convolution = std::max(m.convolution, e.convolution);
    m.reflection = std::max(m.reflection, e.reflection);
    if (check_fast) {
      rep.fast_path_max_error = std::max({*rep.fast_path_max_error, fast_path_error(f),
                                          fast_path_error(h)});
    }
  }
  const auto& m = rep.max_errors;
  rep.passed = m.plancherel <= tolerance && m.parseval <= tolerance &&
               m.convolution <= tolerance && m.reflection <= tolerance &&
               (!rep.fast_path_max_error || *rep.fast_path_max_error <= tolerance);
  return rep;
}

}  // namespace bohrlab
