#pragma once

#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bohrlab {

// Position of an element (or character) in canonical lexicographic order.
using Index = std::size_t;

inline constexpr std::size_t kDefaultEnumerationCap = std::size_t{1} << 16;

// Group element as a coordinate tuple, 0 <= coords[j] < n_j.
struct Elem {
  std::vector<std::uint64_t> coords;

  friend bool operator==(const Elem&, const Elem&) = default;
  friend auto operator<=>(const Elem&, const Elem&) = default;
};

// Character chi_t(z) = exp(2 pi i sum_j t_j z_j / n_j), named by its frequency
// tuple t.
struct Char {
  std::vector<std::uint64_t> freq;

  friend bool operator==(const Char&, const Char&) = default;
  friend auto operator<=>(const Char&, const Char&) = default;
};

// A point of T = R/Z, stored as its representative in [0, 1).
struct TorusValue {
  double value = 0.0;

  // Reduces an arbitrary real modulo 1.
  static TorusValue from_real(double x);
};

// Finite abelian group Z_{n_1} x ... x Z_{n_d}, of order at most 2^32.
//
// Elements and characters share one index space: index i corresponds to the
// coordinate tuple obtained by writing i in mixed radix with the last factor
// varying fastest. That ordering is lexicographic on tuples.
class GroupSpec {
 public:
  explicit GroupSpec(std::vector<std::uint64_t> factors);

  static GroupSpec cyclic(std::uint64_t n) { return GroupSpec({n}); }

  // Parses "8", "4x3", "2x2x2".
  static GroupSpec parse(std::string_view text);

  const std::vector<std::uint64_t>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::uint64_t order() const { return order_; }
  // lcm of the factors; every pairing value is a multiple of 1/exponent().
  std::uint64_t exponent() const { return exponent_; }
  bool is_cyclic() const { return factors_.size() == 1; }
  std::string to_string() const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.factors_ == b.factors_;
  }

  void check(const Elem& z) const;
  void check(const Char& t) const;
  void check_index(Index i) const;

  Index index_of(const Elem& z) const;
  Index index_of(const Char& t) const;
  Elem elem_at(Index i) const;
  Char char_at(Index i) const;

  Index add(Index a, Index b) const;
  Index sub(Index a, Index b) const;
  Index neg(Index a) const;

  // Numerator p of the pairing value p / exponent() in [0, 1), i.e.
  // sum_j t_j z_j / n_j mod 1.
  std::uint64_t phase(Index t, Index z) const;
  std::uint64_t phase(const Char& t, const Elem& z) const;

 private:
  std::vector<std::uint64_t> factors_;
  std::vector<std::uint64_t> strides_;
  std::vector<std::uint64_t> weights_;  // exponent / n_j
  std::uint64_t order_ = 1;
  std::uint64_t exponent_ = 1;
};

// exp(2 pi i num / den). Quarter turns are returned exactly.
std::complex<double> unit_root(std::uint64_t num, std::uint64_t den);

// Precomputed exp(2 pi i p / L) for p in [0, L). Every entry is evaluated
// directly from its angle.
class RootTable {
 public:
  explicit RootTable(std::uint64_t period);

  std::uint64_t period() const { return roots_.size(); }
  const std::complex<double>& operator[](std::uint64_t p) const { return roots_[p]; }

 private:
  std::vector<std::complex<double>> roots_;
};

Elem elem_add(const GroupSpec& g, const Elem& a, const Elem& b);
Elem elem_neg(const GroupSpec& g, const Elem& a);
std::complex<double> char_eval(const GroupSpec& g, const Char& t, const Elem& z);

// Distance from x to the nearest integer, in [0, 1/2].
double torus_norm(TorusValue x);

// Exact torus norm of the pairing value phase / period.
double torus_norm_of_phase(std::uint64_t phase, std::uint64_t period);

// All elements in canonical order. Throws CapacityError when order() > cap.
std::vector<Elem> enumerate_elems(const GroupSpec& g,
                                  std::size_t cap = kDefaultEnumerationCap);

std::string format_elem(const Elem& z);

}  // namespace bohrlab
