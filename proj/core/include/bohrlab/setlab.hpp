#pragma once

#include <cstdint>
#include <initializer_list>
#include <variant>
#include <vector>

#include "bohrlab/bohr.hpp"
#include "bohrlab/group.hpp"
#include "bohrlab/spectral.hpp"

namespace bohrlab {

// Subset of a finite group stored as a membership bitmap in canonical order.
class GroupSubset {
 public:
  GroupSubset(GroupSpec group, std::vector<bool> members);

  static GroupSubset empty(const GroupSpec& g);
  static GroupSubset full(const GroupSpec& g);
  static GroupSubset from_indices(const GroupSpec& g, const std::vector<Index>& indices);
  static GroupSubset from_elems(const GroupSpec& g, const std::vector<Elem>& elems);

  const GroupSpec& group() const { return group_; }
  const std::vector<bool>& members() const { return members_; }
  bool contains(Index i) const { return members_[i]; }
  bool contains(const Elem& z) const { return members_[group_.index_of(z)]; }

  std::size_t size() const;
  // |members| / N, the counting stand-in for upper Banach density.
  double density() const;
  std::vector<Index> indices() const;
  std::vector<Elem> elems() const;
  bool is_subset_of(const GroupSubset& other) const;

  // 1_A as a table with values in {0, 1}.
  DensityFn indicator() const;

  friend bool operator==(const GroupSubset&, const GroupSubset&) = default;

 private:
  GroupSpec group_;
  std::vector<bool> members_;
};

// {b - c : b, c in B}.
GroupSubset difference_set(const GroupSubset& b, std::size_t cap = kDefaultEnumerationCap);

// {a + b - c : a in A; b, c in B}, computed by brute force as A + (B - B).
GroupSubset sumset_ABmB(const GroupSubset& a, const GroupSubset& b,
                        std::size_t cap = kDefaultEnumerationCap);

// Mixes a master seed with coordinates (trial index, size, ...) into an
// independent stream seed. Order of the parts matters.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> parts);

// Uniform double in [0, 1) from 53 random bits; identical on every platform.
double unit_uniform(std::uint64_t bits);

// Includes every element independently with probability `density`. A draw is
// rejected and redrawn when it is empty or its empirical density misses the
// target by more than 5 sqrt(density (1 - density) / N).
GroupSubset random_subset(const GroupSpec& g, double density, std::uint64_t seed,
                          int max_retries = 64);

// {z : d_j divides z_j for every j}; divisors[j] must divide n_j.
struct SubgroupParams {
  std::vector<std::uint64_t> divisors;
};

// {start, start + step, ..., start + (length - 1) step}.
struct ProgressionParams {
  Elem start;
  Elem step;
  std::size_t length = 0;
};

struct BohrSetParams {
  BohrSpec spec;
};

// Union of base + s over the shifts s.
struct UnionShiftParams {
  std::vector<Elem> base;
  std::vector<Elem> shifts;
};

using StructuredParams =
    std::variant<SubgroupParams, ProgressionParams, BohrSetParams, UnionShiftParams>;

GroupSubset structured_subset(const GroupSpec& g, const StructuredParams& params);

}  // namespace bohrlab
