#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "bohrlab/bohr.hpp"
#include "bohrlab/group.hpp"
#include "bohrlab/spectral.hpp"

namespace bohrlab {

// Additive slack on every quantitative inequality the extraction asserts.
inline constexpr double kBoundSlack = 1e-9;

struct TrigTerm {
  Char freq;
  std::complex<double> coeff;
};

// constant_shift + sum_chi c_chi chi(x).
class TrigPoly {
 public:
  TrigPoly(GroupSpec group, std::vector<TrigTerm> terms, double constant_shift = 0.0);

  const GroupSpec& group() const { return group_; }
  const std::vector<TrigTerm>& terms() const { return terms_; }
  double constant_shift() const { return constant_shift_; }

  std::complex<double> evaluate(const Elem& x) const;
  std::complex<double> evaluate(Index x) const;
  // max_chi |c_chi| <= 1.
  bool coefficients_bounded() const;

 private:
  GroupSpec group_;
  std::vector<TrigTerm> terms_;
  std::vector<Index> freq_index_;
  double constant_shift_;
};

// Given Re p(a) >= c > 0 and |c_chi| <= 1, returns the character-distance set
// U = {x : |chi(x) - 1| < c / |S|} centered at a, where S is the frequency
// support of p. Re p > 0 on all of a + U.
BohrSpec bohr_from_trigpoly(const TrigPoly& p, const Elem& a, double c);

struct NormalizedPair {
  DensityFn f;
  DensityFn g;
  double delta;    // common mean after scaling
  double f_scale;  // factor applied to f (1 unless f had the larger mean)
  double g_scale;
};

// Scales whichever input has the larger mean down to the smaller one.
NormalizedPair normalize_means(const DensityFn& f, const DensityFn& g);

// Characters with |fhat(chi)| >= threshold, in canonical order.
std::vector<Char> large_spectrum(const Spectrum& f_hat, double threshold);
std::vector<Char> large_spectrum(const DensityFn& f, double threshold);

struct Witness {
  Elem a0;
  double h_at_a0;
};

// Maximizer of h over supp f. Values within a relative 1e-11 of the maximum
// count as ties and resolve to the earliest element in canonical order.
// Raises InvariantBreach if the maximum falls below mean(f)^4 - kBoundSlack.
Witness find_witness(const DensityFn& h, const DensityFn& f);

// max_x |sum_{chi not in S1} hhat(chi) chi(x)| for h = f*g*g_-. Raises
// InvariantBreach when it exceeds delta^4 / 4 + kBoundSlack, delta being the
// smaller of the two means.
double remainder_bound_check(const DensityFn& f, const DensityFn& g, const std::vector<Char>& s1);

struct BoundChecks {
  double s1_bound = 0;       // 16 delta^-5
  double h_floor = 0;        // delta^4
  double c_floor = 0;        // delta^4 / 2
  double eta_floor = 0;      // delta^9 / (64 pi)
  double remainder_cap = 0;  // delta^4 / 4
  double remainder_max = 0;
  bool s1_ok = false;
  bool h_ok = false;
  bool c_ok = false;
  bool eta_ok = false;
  bool remainder_ok = false;

  bool all() const { return s1_ok && h_ok && c_ok && eta_ok && remainder_ok; }
  friend bool operator==(const BoundChecks&, const BoundChecks&) = default;
};

// Everything the extraction asserts about {h > 0} where h = f*g*g_-.
struct Certificate {
  GroupSpec group;
  double delta;
  double f_scale;
  double g_scale;
  Elem a0;
  std::vector<Char> s1;
  std::vector<std::complex<double>> p_coeffs;  // hhat on s1, same order
  double c;                                    // Re q(a0), q = p - delta^4/4
  BohrSpec bohr_char_form;                     // radius c / k
  BohrSpec bohr_torus_form;                    // radius c / (2 pi k)
  double h_at_a0;
  std::size_t k;
  BoundChecks bounds;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Adds `delta` to one coefficient of hhat before anything downstream reads it.
// Used to prove the verifier notices corrupted spectra.
struct SpectrumFault {
  Index index;
  std::complex<double> delta;
};

struct ExtractOptions {
  TransformPath path = TransformPath::fast;
  // Re-check a0 + U inside {h > 0} pointwise before returning.
  bool check_containment = true;
  std::size_t enumeration_cap = kDefaultEnumerationCap;
  std::optional<SpectrumFault> fault;
};

Certificate extract(const DensityFn& f, const DensityFn& g, const ExtractOptions& options = {});

// First x in a0 + U (canonical order of x) with h(x) <= 0, if any.
std::optional<Elem> find_containment_violation(const Certificate& cert, const DensityFn& h,
                                               std::size_t cap = kDefaultEnumerationCap);

}  // namespace bohrlab
