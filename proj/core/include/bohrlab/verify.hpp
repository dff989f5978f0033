#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bohrlab/bohr.hpp"
#include "bohrlab/extractor.hpp"
#include "bohrlab/setlab.hpp"

namespace bohrlab {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  std::optional<Elem> witness;  // offending element, when there is one
};

struct VerificationReport {
  std::string group;
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* first_failure() const;
  const CheckResult* find(const std::string& name) const;
  nlohmann::ordered_json to_json() const;
};

// Re-derives every claim of `cert` from the sets A and B alone. Spectra come
// from the definitional O(N^2) transform and h from direct spatial
// convolution, so no fast-path code is shared with the extraction. Failed
// checks are reported, never thrown; only a group mismatch raises ShapeError.
VerificationReport verify_certificate(const Certificate& cert, const GroupSubset& a,
                                      const GroupSubset& b,
                                      std::size_t cap = kDefaultEnumerationCap);

// {a in A : a + U' is inside A + B - B}, where U' is `bohr` with half the
// radius. The center of `bohr` is ignored.
GroupSubset good_shift_set(const GroupSubset& a, const GroupSubset& b, const BohrSpec& bohr,
                           std::size_t cap = kDefaultEnumerationCap);

// Absolute errors of the four Fourier identities on one table pair.
struct IdentityErrors {
  double plancherel = 0;   // |<f,g> - <fhat,ghat>|
  double parseval = 0;     // |(1/N) sum |f|^2 - sum |fhat|^2|
  double convolution = 0;  // max |(f*g)^ - fhat ghat|, f*g by direct sum
  double reflection = 0;   // max |(g_-)^ - conj(ghat)|
};

IdentityErrors identity_errors(const DensityFn& f, const DensityFn& g);

// max |fast dft - definitional dft| over the characters.
double fast_path_error(const DensityFn& f);

struct SuiteReport {
  std::string group;
  int trials = 0;
  std::uint64_t seed = 0;
  double tolerance = 0;
  IdentityErrors max_errors;
  std::optional<double> fast_path_max_error;  // only computed for N <= 512
  bool passed = false;

  nlohmann::ordered_json to_json() const;
};

// Runs the identities on `trials` seeded random pairs with values in [0, 1].
// Trial i draws from derive_seed(seed, {i}).
SuiteReport fourier_identity_suite(const GroupSpec& g, int trials, std::uint64_t seed,
                                   double tolerance = 1e-9);

}  // namespace bohrlab
