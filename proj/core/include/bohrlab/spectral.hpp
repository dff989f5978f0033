#pragma once

#include <complex>
#include <span>
#include <vector>

#include "bohrlab/group.hpp"

namespace bohrlab {

// Which route a transform or convolution takes. `definitional` evaluates the
// defining O(N^2) sums and serves as the oracle for `fast`.
enum class TransformPath { fast, definitional };

// Real-valued table over a group, indexed in canonical element order.
// Means are taken against normalized Haar measure, i.e. (1/N) sum_z f(z).
class DensityFn {
 public:
  DensityFn(GroupSpec group, std::vector<double> values);

  static DensityFn constant(const GroupSpec& group, double value);

  const GroupSpec& group() const { return group_; }
  std::span<const double> values() const { return values_; }
  double operator[](Index i) const { return values_[i]; }
  double at(const Elem& z) const { return values_[group_.index_of(z)]; }

  double mean() const;
  // True when every value lies in [0, 1].
  bool in_unit_range() const;
  DensityFn scaled(double factor) const;

 private:
  GroupSpec group_;
  std::vector<double> values_;
};

// Complex table over the dual group, indexed in canonical character order.
class Spectrum {
 public:
  Spectrum(GroupSpec group, std::vector<std::complex<double>> coeffs);

  const GroupSpec& group() const { return group_; }
  std::span<const std::complex<double>> coeffs() const { return coeffs_; }
  const std::complex<double>& operator[](Index i) const { return coeffs_[i]; }
  const std::complex<double>& at(const Char& t) const { return coeffs_[group_.index_of(t)]; }

 private:
  GroupSpec group_;
  std::vector<std::complex<double>> coeffs_;
};

// Complex table over the group (synthesis output).
class ComplexFn {
 public:
  ComplexFn(GroupSpec group, std::vector<std::complex<double>> values);

  const GroupSpec& group() const { return group_; }
  std::span<const std::complex<double>> values() const { return values_; }
  const std::complex<double>& operator[](Index i) const { return values_[i]; }

  DensityFn real_part() const;
  double max_abs_imag() const;

 private:
  GroupSpec group_;
  std::vector<std::complex<double>> values_;
};

// fhat(chi) = (1/N) sum_z f(z) conj(chi(z)).
Spectrum dft(const DensityFn& f, TransformPath path = TransformPath::fast);

// f(z) = sum_chi F(chi) chi(z).
ComplexFn idft(const Spectrum& spectrum, TransformPath path = TransformPath::fast);

// (f*g)(z) = (1/N) sum_t f(z - t) g(t). The definitional path is the direct
// spatial sum and never touches a transform.
DensityFn convolve(const DensityFn& f, const DensityFn& g,
                   TransformPath path = TransformPath::fast);

// g_-(z) = g(-z).
DensityFn reflect(const DensityFn& g);

// fhat * |ghat|^2, the spectrum of f*g*g_-.
Spectrum triple_spectrum(const Spectrum& f_hat, const Spectrum& g_hat);

// h = f*g*g_-.
DensityFn triple_convolve(const DensityFn& f, const DensityFn& g,
                          TransformPath path = TransformPath::fast);

// Spatial side of Plancherel: (1/N) sum_z f(z) conj(g(z)).
std::complex<double> plancherel_pairing(const DensityFn& f, const DensityFn& g);

// Spectral side of Plancherel: sum_chi F(chi) conj(G(chi)).
std::complex<double> spectral_pairing(const Spectrum& f_hat, const Spectrum& g_hat);

}  // namespace bohrlab
