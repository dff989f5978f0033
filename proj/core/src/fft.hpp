#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "bohrlab/group.hpp"

namespace bohrlab::detail {

// Unnormalized length-n DFT, X[k] = sum_j x[j] exp(-2 pi i jk/n) (forward) or
// with exp(+2 pi i jk/n) (inverse). Powers of two run radix-2; other lengths
// go through Bluestein's chirp-z reduction onto a power-of-two transform.
class CyclicFft {
 public:
  explicit CyclicFft(std::size_t n);

  std::size_t size() const { return n_; }
  void forward(std::span<std::complex<double>> data) const;
  void inverse(std::span<std::complex<double>> data) const;

 private:
  void radix2(std::span<std::complex<double>> data, bool inverse) const;
  void bluestein(std::span<std::complex<double>> data) const;

  std::size_t n_;
  std::size_t m_;  // radix-2 working length
  std::vector<std::complex<double>> twiddle_;  // exp(-2 pi i k / m_), k < m_/2
  std::vector<std::complex<double>> chirp_;    // exp(-pi i k^2 / n_)
  std::vector<std::complex<double>> chirp_hat_;  // FFT of the conjugate chirp kernel
};

// Applies a cyclic transform along every axis of a mixed-radix table laid out
// in canonical order.
void transform_axes(const GroupSpec& g, std::vector<std::complex<double>>& data, bool inverse);

}  // namespace bohrlab::detail
