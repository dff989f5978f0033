#include "bohrlab/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "bohrlab/errors.hpp"
#include "fft.hpp"

namespace bohrlab {

namespace {

void require_same_group(const GroupSpec& a, const GroupSpec& b) {
  if (!(a == b)) {
    throw ShapeError("group mismatch: " + a.to_string() + " vs " + b.to_string());
  }
}

template <typename T>
void require_size(const GroupSpec& g, const std::vector<T>& v) {
  if (v.size() != g.order()) {
    throw ShapeError("table of size " + std::to_string(v.size()) + " for group of order " +
                     std::to_string(g.order()));
  }
}

// sum_z x(z) chi_t(z)^sign for every t, by direct evaluation of the pairing.
std::vector<std::complex<double>> definitional_sum(
    const GroupSpec& g, std::span<const std::complex<double>> input, bool conjugate) {
  const std::size_t n = g.order();
  const RootTable roots(g.exponent());
  std::vector<std::complex<double>> out(n);
  for (Index t = 0; t < n; ++t) {
    std::complex<double> acc{0.0, 0.0};
    for (Index z = 0; z < n; ++z) {
      if (input[z] == std::complex<double>{}) continue;
      const auto& w = roots[g.phase(t, z)];
      acc += input[z] * (conjugate ? std::conj(w) : w);
    }
    out[t] = acc;
  }
  return out;
}

}  // namespace

DensityFn::DensityFn(GroupSpec group, std::vector<double> values)
    : group_(std::move(group)), values_(std::move(values)) {
  require_size(group_, values_);
  for (double v : values_) {
    if (!std::isfinite(v)) throw DomainError("density table contains a non-finite value");
  }
}

DensityFn DensityFn::constant(const GroupSpec& group, double value) {
  return DensityFn(group, std::vector<double>(group.order(), value));
}

double DensityFn::mean() const {
  double acc = 0.0;
  for (double v : values_) acc += v;
  return acc / static_cast<double>(values_.size());
}

bool DensityFn::in_unit_range() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v >= 0.0 && v <= 1.0; });
}

DensityFn DensityFn::scaled(double factor) const {
  std::vector<double> out(values_);
  for (double& v : out) v *= factor;
  return DensityFn(group_, std::move(out));
}

Spectrum::Spectrum(GroupSpec group, std::vector<std::complex<double>> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
  require_size(group_, coeffs_);
}

ComplexFn::ComplexFn(GroupSpec group, std::vector<std::complex<double>> values)
    : group_(std::move(group)), values_(std::move(values)) {
  require_size(group_, values_);
}

DensityFn ComplexFn::real_part() const {
  std::vector<double> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(),
                 [](const std::complex<double>& v) { return v.real(); });
  return DensityFn(group_, std::move(out));
}

double ComplexFn::max_abs_imag() const {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v.imag()));
  return m;
}

Spectrum dft(const DensityFn& f, TransformPath path) {
  const GroupSpec& g = f.group();
  std::vector<std::complex<double>> data(f.values().begin(), f.values().end());
  if (path == TransformPath::fast) {
    detail::transform_axes(g, data, /*inverse=*/false);
  } else {
    data = definitional_sum(g, data, /*conjugate=*/true);
  }
  const double scale = 1.0 / static_cast<double>(g.order());
  for (auto& c : data) c *= scale;
  return Spectrum(g, std::move(data));
}

ComplexFn idft(const Spectrum& spectrum, TransformPath path) {
  const GroupSpec& g = spectrum.group();
  std::vector<std::complex<double>> data(spectrum.coeffs().begin(), spectrum.coeffs().end());
  if (path == TransformPath::fast) {
    detail::transform_axes(g, data, /*inverse=*/true);
  } else {
    data = definitional_sum(g, data, /*conjugate=*/false);
  }
  return ComplexFn(g, std::move(data));
}

DensityFn convolve(const DensityFn& f, const DensityFn& g, TransformPath path) {
  require_same_group(f.group(), g.group());
  const GroupSpec& grp = f.group();
  const std::size_t n = grp.order();
  if (path == TransformPath::fast) {
    const Spectrum fh = dft(f);
    const Spectrum gh = dft(g);
    std::vector<std::complex<double>> prod(n);
    for (Index i = 0; i < n; ++i) prod[i] = fh[i] * gh[i];
    return idft(Spectrum(grp, std::move(prod))).real_part();
  }
  std::vector<double> out(n, 0.0);
  for (Index t = 0; t < n; ++t) {
    const double gt = g[t];
    if (gt == 0.0) continue;
    for (Index z = 0; z < n; ++z) out[z] += f[grp.sub(z, t)] * gt;
  }
  const double scale = 1.0 / static_cast<double>(n);
  for (double& v : out) v *= scale;
  return DensityFn(grp, std::move(out));
}

DensityFn reflect(const DensityFn& g) {
  const GroupSpec& grp = g.group();
  std::vector<double> out(grp.order());
  for (Index z = 0; z < grp.order(); ++z) out[z] = g[grp.neg(z)];
  return DensityFn(grp, std::move(out));
}

Spectrum triple_spectrum(const Spectrum& f_hat, const Spectrum& g_hat) {
  require_same_group(f_hat.group(), g_hat.group());
  std::vector<std::complex<double>> out(f_hat.group().order());
  for (Index i = 0; i < out.size(); ++i) out[i] = f_hat[i] * std::norm(g_hat[i]);
  return Spectrum(f_hat.group(), std::move(out));
}

DensityFn triple_convolve(const DensityFn& f, const DensityFn& g, TransformPath path) {
  require_same_group(f.group(), g.group());
  if (path == TransformPath::fast) {
    return idft(triple_spectrum(dft(f), dft(g))).real_part();
  }
  return convolve(convolve(f, g, path), reflect(g), path);
}

std::complex<double> plancherel_pairing(const DensityFn& f, const DensityFn& g) {
  require_same_group(f.group(), g.group());
  double acc = 0.0;
  for (Index i = 0; i < f.group().order(); ++i) acc += f[i] * g[i];
  return {acc / static_cast<double>(f.group().order()), 0.0};
}

std::complex<double> spectral_pairing(const Spectrum& f_hat, const Spectrum& g_hat) {
  require_same_group(f_hat.group(), g_hat.group());
  std::complex<double> acc{0.0, 0.0};
  for (Index i = 0; i < f_hat.group().order(); ++i) acc += f_hat[i] * std::conj(g_hat[i]);
  return acc;
}

}  // namespace bohrlab
