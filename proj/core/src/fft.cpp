#include "fft.hpp"

#include <bit>

namespace bohrlab::detail {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

CyclicFft::CyclicFft(std::size_t n) : n_(n) {
  m_ = is_pow2(n) ? n : std::bit_ceil(2 * n - 1);
  twiddle_.resize(m_ / 2);
  for (std::size_t k = 0; k < m_ / 2; ++k) twiddle_[k] = std::conj(unit_root(k, m_));
  if (is_pow2(n)) return;

  chirp_.resize(n);
  const std::uint64_t period = 2 * static_cast<std::uint64_t>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t sq = (static_cast<std::uint64_t>(k) * k) % period;
    chirp_[k] = std::conj(unit_root(sq, period));
  }
  chirp_hat_.assign(m_, {0.0, 0.0});
  chirp_hat_[0] = std::conj(chirp_[0]);
  for (std::size_t k = 1; k < n; ++k) {
    chirp_hat_[k] = std::conj(chirp_[k]);
    chirp_hat_[m_ - k] = std::conj(chirp_[k]);
  }
  radix2(chirp_hat_, false);
}

void CyclicFft::radix2(std::span<std::complex<double>> a, bool inverse) const {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t step = m_ / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < half; ++k) {
        std::complex<double> w = twiddle_[k * step];
        if (inverse) w = std::conj(w);
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + half] * w;
        a[i + k] = u + v;
        a[i + k + half] = u - v;
      }
    }
  }
}

void CyclicFft::bluestein(std::span<std::complex<double>> data) const {
  std::vector<std::complex<double>> work(m_, {0.0, 0.0});
  for (std::size_t k = 0; k < n_; ++k) work[k] = data[k] * chirp_[k];
  radix2(work, false);
  for (std::size_t k = 0; k < m_; ++k) work[k] *= chirp_hat_[k];
  radix2(work, true);
  const double scale = 1.0 / static_cast<double>(m_);
  for (std::size_t k = 0; k < n_; ++k) data[k] = work[k] * scale * chirp_[k];
}

void CyclicFft::forward(std::span<std::complex<double>> data) const {
  if (n_ <= 1) return;
  if (is_pow2(n_)) {
    radix2(data, false);
  } else {
    bluestein(data);
  }
}

void CyclicFft::inverse(std::span<std::complex<double>> data) const {
  if (n_ <= 1) return;
  if (is_pow2(n_)) {
    radix2(data, true);
    return;
  }
  for (auto& x : data) x = std::conj(x);
  bluestein(data);
  for (auto& x : data) x = std::conj(x);
}

void transform_axes(const GroupSpec& g, std::vector<std::complex<double>>& data, bool inverse) {
  const auto& factors = g.factors();
  std::size_t stride = g.order();
  for (std::size_t axis = 0; axis < factors.size(); ++axis) {
    const std::size_t n = factors[axis];
    stride /= n;
    if (n == 1) continue;
    const CyclicFft plan(n);
    if (stride == 1 && factors.size() == 1) {
      if (inverse) {
        plan.inverse(data);
      } else {
        plan.forward(data);
      }
      continue;
    }
    std::vector<std::complex<double>> line(n);
    const std::size_t block = n * stride;
    for (std::size_t base = 0; base < data.size(); base += block) {
      for (std::size_t off = 0; off < stride; ++off) {
        for (std::size_t k = 0; k < n; ++k) line[k] = data[base + off + k * stride];
        if (inverse) {
          plan.inverse(line);
        } else {
          plan.forward(line);
        }
        for (std::size_t k = 0; k < n; ++k) data[base + off + k * stride] = line[k];
      }
    }
  }
}

}  // namespace bohrlab::detail
