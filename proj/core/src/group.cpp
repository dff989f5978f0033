#include "bohrlab/group.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "bohrlab/errors.hpp"

namespace bohrlab {

TorusValue TorusValue::from_real(double x) {
  double r = x - std::floor(x);
  if (r >= 1.0) r = 0.0;
  return TorusValue{r};
}

GroupSpec::GroupSpec(std::vector<std::uint64_t> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) {
    throw DomainError("group needs at least one cyclic factor");
  }
  for (std::uint64_t n : factors_) {
    if (n < 1) throw DomainError("cycle length must be >= 1");
    if (order_ > (std::uint64_t{1} << 32) / n) {
      throw CapacityError("group order too large");
    }
    order_ *= n;
    exponent_ = std::lcm(exponent_, n);
  }
  strides_.assign(factors_.size(), 1);
  for (std::size_t j = factors_.size() - 1; j > 0; --j) {
    strides_[j - 1] = strides_[j] * factors_[j];
  }
  weights_.reserve(factors_.size());
  for (std::uint64_t n : factors_) weights_.push_back(exponent_ / n);
}

GroupSpec GroupSpec::parse(std::string_view text) {
  std::vector<std::uint64_t> factors;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = text.find('x', pos);
    std::string_view part = text.substr(pos, next == std::string_view::npos ? next : next - pos);
    std::uint64_t n = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), n);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
      throw ParseError("invalid group spec '" + std::string(text) + "'");
    }
    factors.push_back(n);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  try {
    return GroupSpec(std::move(factors));
  } catch (const DomainError& e) {
    throw ParseError("invalid group spec '" + std::string(text) + "': " + e.what());
  }
}

std::string GroupSpec::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (j) out += 'x';
    out += std::to_string(factors_[j]);
  }
  return out;
}

void GroupSpec::check(const Elem& z) const {
  if (z.coords.size() != factors_.size()) {
    throw ShapeError("element " + format_elem(z) + " has wrong arity for group " + to_string());
  }
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (z.coords[j] >= factors_[j]) {
      throw ShapeError("element " + format_elem(z) + " out of range for group " + to_string());
    }
  }
}

void GroupSpec::check(const Char& t) const { check(Elem{t.freq}); }

void GroupSpec::check_index(Index i) const {
  if (i >= order_) {
    throw ShapeError("index " + std::to_string(i) + " out of range for group " + to_string());
  }
}

Index GroupSpec::index_of(const Elem& z) const {
  check(z);
  Index i = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) i += z.coords[j] * strides_[j];
  return i;
}

Index GroupSpec::index_of(const Char& t) const { return index_of(Elem{t.freq}); }

Elem GroupSpec::elem_at(Index i) const {
  check_index(i);
  Elem z;
  z.coords.resize(factors_.size());
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    z.coords[j] = (i / strides_[j]) % factors_[j];
  }
  return z;
}

Char GroupSpec::char_at(Index i) const { return Char{elem_at(i).coords}; }

Index GroupSpec::add(Index a, Index b) const {
  if (factors_.size() == 1) {
    Index s = a + b;
    return s >= order_ ? s - order_ : s;
  }
  Index out = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    std::uint64_t s = (a / strides_[j]) % factors_[j] + (b / strides_[j]) % factors_[j];
    if (s >= factors_[j]) s -= factors_[j];
    out += s * strides_[j];
  }
  return out;
}

Index GroupSpec::neg(Index a) const {
  if (factors_.size() == 1) return a == 0 ? 0 : order_ - a;
  Index out = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    std::uint64_t d = (a / strides_[j]) % factors_[j];
    out += (d == 0 ? 0 : factors_[j] - d) * strides_[j];
  }
  return out;
}

Index GroupSpec::sub(Index a, Index b) const { return add(a, neg(b)); }

std::uint64_t GroupSpec::phase(Index t, Index z) const {
  if (factors_.size() == 1) {
    return (static_cast<std::uint64_t>(t) * z) % order_;
  }
  std::uint64_t acc = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    std::uint64_t tj = (t / strides_[j]) % factors_[j];
    std::uint64_t zj = (z / strides_[j]) % factors_[j];
    acc += (tj * zj % factors_[j]) * weights_[j];
  }
  return acc % exponent_;
}

std::uint64_t GroupSpec::phase(const Char& t, const Elem& z) const {
  return phase(index_of(t), index_of(z));
}

std::complex<double> unit_root(std::uint64_t num, std::uint64_t den) {
  num %= den;
  if ((4 * num) % den == 0) {
    switch ((4 * num) / den) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  // Fold into [0, 1/2] so the argument passed to sin/cos stays small.
  const bool upper = 2 * num > den;
  const std::uint64_t m = upper ? den - num : num;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(den);
  const double s = std::sin(angle);
  return {std::cos(angle), upper ? -s : s};
}

RootTable::RootTable(std::uint64_t period) : roots_(period) {
  for (std::uint64_t p = 0; p < period; ++p) roots_[p] = unit_root(p, period);
}

Elem elem_add(const GroupSpec& g, const Elem& a, const Elem& b) {
  return g.elem_at(g.add(g.index_of(a), g.index_of(b)));
}

Elem elem_neg(const GroupSpec& g, const Elem& a) { return g.elem_at(g.neg(g.index_of(a))); }

std::complex<double> char_eval(const GroupSpec& g, const Char& t, const Elem& z) {
  return unit_root(g.phase(t, z), g.exponent());
}

double torus_norm(TorusValue x) { return std::min(x.value, 1.0 - x.value); }

double torus_norm_of_phase(std::uint64_t phase, std::uint64_t period) {
  phase %= period;
  const std::uint64_t m = std::min(phase, period - phase);
  return static_cast<double>(m) / static_cast<double>(period);
}

std::vector<Elem> enumerate_elems(const GroupSpec& g, std::size_t cap) {
  if (g.order() > cap) {
    throw CapacityError("group order " + std::to_string(g.order()) +
                        " exceeds enumeration cap " + std::to_string(cap));
  }
  std::vector<Elem> out;
  out.reserve(g.order());
  for (Index i = 0; i < g.order(); ++i) out.push_back(g.elem_at(i));
  return out;
}

std::string format_elem(const Elem& z) {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < z.coords.size(); ++j) {
    if (j) os << ',';
    os << z.coords[j];
  }
  os << ')';
  return os.str();
}

}  // namespace bohrlab
