#include "bohrlab/extractor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bohrlab/errors.hpp"

namespace bohrlab {

TrigPoly::TrigPoly(GroupSpec group, std::vector<TrigTerm> terms, double constant_shift)
    : group_(std::move(group)), terms_(std::move(terms)), constant_shift_(constant_shift) {
  freq_index_.reserve(terms_.size());
  for (const TrigTerm& t : terms_) freq_index_.push_back(group_.index_of(t.freq));
}

std::complex<double> TrigPoly::evaluate(Index x) const {
  const std::uint64_t period = group_.exponent();
  std::complex<double> acc{constant_shift_, 0.0};
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    acc += terms_[i].coeff * unit_root(group_.phase(freq_index_[i], x), period);
  }
  return acc;
}

std::complex<double> TrigPoly::evaluate(const Elem& x) const {
  return evaluate(group_.index_of(x));
}

bool TrigPoly::coefficients_bounded() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const TrigTerm& t) { return std::abs(t.coeff) <= 1.0; });
}

BohrSpec bohr_from_trigpoly(const TrigPoly& p, const Elem& a, double c) {
  if (!(c > 0.0)) throw DomainError("bohr_from_trigpoly: c must be positive");
  if (p.terms().empty()) throw PreconditionError("bohr_from_trigpoly: polynomial has no terms");
  if (!p.coefficients_bounded()) {
    throw PreconditionError("bohr_from_trigpoly: a coefficient has modulus above 1");
  }
  if (p.evaluate(a).real() < c) {
    throw PreconditionError("bohr_from_trigpoly: Re p(a) is below c");
  }
  std::vector<Char> freqs;
  freqs.reserve(p.terms().size());
  for (const TrigTerm& t : p.terms()) freqs.push_back(t.freq);
  const double radius = c / static_cast<double>(freqs.size());
  return BohrSpec(p.group(), std::move(freqs), radius, RadiusForm::character_distance, a);
}

NormalizedPair normalize_means(const DensityFn& f, const DensityFn& g) {
  if (!(f.group() == g.group())) throw ShapeError("normalize_means: group mismatch");
  if (!f.in_unit_range() || !g.in_unit_range()) {
    throw DomainError("normalize_means: values must lie in [0, 1]");
  }
  const double mf = f.mean();
  const double mg = g.mean();
  if (!(mf > 0.0) || !(mg > 0.0)) throw EmptyInputError("normalize_means: input has zero mean");
  if (mf == mg) return {f, g, mf, 1.0, 1.0};
  if (mf > mg) {
    const double s = mg / mf;
    return {f.scaled(s), g, mg, s, 1.0};
  }
  const double s = mf / mg;
  return {f, g.scaled(s), mf, 1.0, s};
}

std::vector<Char> large_spectrum(const Spectrum& f_hat, double threshold) {
  if (!(threshold > 0.0)) throw DomainError("large_spectrum: threshold must be positive");
  std::vector<Char> out;
  for (Index t = 0; t < f_hat.group().order(); ++t) {
    if (std::abs(f_hat[t]) >= threshold) out.push_back(f_hat.group().char_at(t));
  }
  return out;
}

std::vector<Char> large_spectrum(const DensityFn& f, double threshold) {
  return large_spectrum(dft(f), threshold);
}

Witness find_witness(const DensityFn& h, const DensityFn& f) {
  if (!(h.group() == f.group())) throw ShapeError("find_witness: group mismatch");
  const std::size_t n = f.group().order();
  double best = -std::numeric_limits<double>::infinity();
  bool any = false;
  for (Index z = 0; z < n; ++z) {
    if (f[z] > 0.0) {
      any = true;
      best = std::max(best, h[z]);
    }
  }
  if (!any) throw EmptyInputError("find_witness: f has empty support");
  const double tie = 1e-11 * std::abs(best);
  Index chosen = 0;
  for (Index z = 0; z < n; ++z) {
    if (f[z] > 0.0 && h[z] >= best - tie) {
      chosen = z;
      break;
    }
  }
  const double delta = f.mean();
  const double floor = std::pow(delta, 4);
  if (h[chosen] < floor - kBoundSlack) {
    throw InvariantBreach("find_witness: max of h on supp f is " + std::to_string(h[chosen]) +
                          ", below delta^4 = " + std::to_string(floor));
  }
  return {f.group().elem_at(chosen), h[chosen]};
}

namespace {

double remainder_max(const Spectrum& h_hat, const std::vector<Char>& s1) {
  std::vector<std::complex<double>> rest(h_hat.coeffs().begin(), h_hat.coeffs().end());
  for (const Char& t : s1) rest[h_hat.group().index_of(t)] = {0.0, 0.0};
  const ComplexFn r = idft(Spectrum(h_hat.group(), std::move(rest)));
  double m = 0.0;
  for (const auto& v : r.values()) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

double remainder_bound_check(const DensityFn& f, const DensityFn& g, const std::vector<Char>& s1) {
  const double delta = std::min(f.mean(), g.mean());
  const double m = remainder_max(triple_spectrum(dft(f), dft(g)), s1);
  const double cap = 0.25 * std::pow(delta, 4);
  if (m > cap + kBoundSlack) {
    throw InvariantBreach("remainder " + std::to_string(m) + " exceeds delta^4/4 = " +
                          std::to_string(cap));
  }
  return m;
}

std::optional<Elem> find_containment_violation(const Certificate& cert, const DensityFn& h,
                                               std::size_t cap) {
  const GroupSpec& g = cert.group;
  const auto mask = bohr_member_mask(cert.bohr_char_form, cap);
  const Index a0 = g.index_of(cert.a0);
  for (Index x = 0; x < mask.size(); ++x) {
    if (!mask[x]) continue;
    const Index z = g.add(a0, x);
    if (!(h[z] > 0.0)) return g.elem_at(z);
  }
  return std::nullopt;
}

Certificate extract(const DensityFn& f, const DensityFn& g, const ExtractOptions& options) {
  NormalizedPair np = normalize_means(f, g);
  const GroupSpec& grp = np.f.group();
  const double delta = np.delta;
  const double d4 = std::pow(delta, 4);

  const Spectrum f_hat = dft(np.f, options.path);
  const Spectrum g_hat = dft(np.g, options.path);
  Spectrum h_hat = triple_spectrum(f_hat, g_hat);
  if (options.fault) {
    grp.check_index(options.fault->index);
    std::vector<std::complex<double>> c(h_hat.coeffs().begin(), h_hat.coeffs().end());
    c[options.fault->index] += options.fault->delta;
    h_hat = Spectrum(grp, std::move(c));
  }
  const DensityFn h = idft(h_hat, options.path).real_part();

  std::vector<Char> s1 = large_spectrum(f_hat, 0.25 * delta * delta * delta);
  const Witness w = find_witness(h, np.f);

  std::vector<TrigTerm> terms;
  std::vector<std::complex<double>> p_coeffs;
  terms.reserve(s1.size());
  for (const Char& t : s1) {
    const auto& coeff = h_hat.at(t);
    terms.push_back({t, coeff});
    p_coeffs.push_back(coeff);
  }
  const TrigPoly q(grp, std::move(terms), -0.25 * d4);
  const double c = q.evaluate(w.a0).real();
  if (!(c > 0.0)) {
    throw InvariantBreach("Re q(a0) = " + std::to_string(c) + " is not positive");
  }
  BohrSpec char_form = bohr_from_trigpoly(q, w.a0, c);
  BohrSpec torus_form = char_form_to_torus_form(char_form);
  const std::size_t k = s1.size();

  BoundChecks b;
  b.s1_bound = 16.0 / std::pow(delta, 5);
  b.h_floor = d4;
  b.c_floor = 0.5 * d4;
  b.eta_floor = std::pow(delta, 9) / (64.0 * std::numbers::pi);
  b.remainder_cap = 0.25 * d4;
  b.remainder_max = remainder_max(h_hat, s1);
  b.s1_ok = static_cast<double>(k) <= b.s1_bound;
  b.h_ok = w.h_at_a0 >= b.h_floor - kBoundSlack;
  b.c_ok = c >= b.c_floor - kBoundSlack;
  b.eta_ok = torus_form.radius() >= b.eta_floor - 1e-12;
  b.remainder_ok = b.remainder_max <= b.remainder_cap + kBoundSlack;
  if (!b.all()) {
    throw InvariantBreach("extraction violated a quantitative bound (k=" + std::to_string(k) +
                          ", h(a0)=" + std::to_string(w.h_at_a0) + ", c=" + std::to_string(c) +
                          ", remainder=" + std::to_string(b.remainder_max) + ")");
  }

  Certificate cert{grp,
                   delta,
                   np.f_scale,
                   np.g_scale,
                   w.a0,
                   std::move(s1),
                   std::move(p_coeffs),
                   c,
                   std::move(char_form),
                   std::move(torus_form),
                   w.h_at_a0,
                   k,
                   b};
  if (options.check_containment) {
    if (auto bad = find_containment_violation(cert, h, options.enumeration_cap)) {
      throw InvariantBreach("Bohr neighborhood leaves {h > 0} at " + format_elem(*bad));
    }
  }
  return cert;
}

}  // namespace bohrlab
