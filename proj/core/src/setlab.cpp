#include "bohrlab/setlab.hpp"

#include <cmath>
#include <random>

#include "bohrlab/errors.hpp"

namespace bohrlab {

namespace {

void require_cap(const GroupSpec& g, std::size_t cap) {
  if (g.order() > cap) {
    throw CapacityError("group order " + std::to_string(g.order()) +
                        " exceeds enumeration cap " + std::to_string(cap));
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

GroupSubset::GroupSubset(GroupSpec group, std::vector<bool> members)
    : group_(std::move(group)), members_(std::move(members)) {
  if (members_.size() != group_.order()) {
    throw ShapeError("membership bitmap of size " + std::to_string(members_.size()) +
                     " for group of order " + std::to_string(group_.order()));
  }
}

GroupSubset GroupSubset::empty(const GroupSpec& g) {
  return GroupSubset(g, std::vector<bool>(g.order(), false));
}

GroupSubset GroupSubset::full(const GroupSpec& g) {
  return GroupSubset(g, std::vector<bool>(g.order(), true));
}

GroupSubset GroupSubset::from_indices(const GroupSpec& g, const std::vector<Index>& indices) {
  std::vector<bool> m(g.order(), false);
  for (Index i : indices) {
    g.check_index(i);
    m[i] = true;
  }
  return GroupSubset(g, std::move(m));
}

GroupSubset GroupSubset::from_elems(const GroupSpec& g, const std::vector<Elem>& elems) {
  std::vector<bool> m(g.order(), false);
  for (const Elem& z : elems) m[g.index_of(z)] = true;
  return GroupSubset(g, std::move(m));
}

std::size_t GroupSubset::size() const {
  std::size_t n = 0;
  for (bool b : members_) n += b;
  return n;
}

double GroupSubset::density() const {
  return static_cast<double>(size()) / static_cast<double>(group_.order());
}

std::vector<Index> GroupSubset::indices() const {
  std::vector<Index> out;
  for (Index i = 0; i < members_.size(); ++i) {
    if (members_[i]) out.push_back(i);
  }
  return out;
}

std::vector<Elem> GroupSubset::elems() const {
  std::vector<Elem> out;
  for (Index i : indices()) out.push_back(group_.elem_at(i));
  return out;
}

bool GroupSubset::is_subset_of(const GroupSubset& other) const {
  if (!(group_ == other.group_)) throw ShapeError("subsets of different groups");
  for (Index i = 0; i < members_.size(); ++i) {
    if (members_[i] && !other.members_[i]) return false;
  }
  return true;
}

DensityFn GroupSubset::indicator() const {
  std::vector<double> v(members_.size());
  for (Index i = 0; i < members_.size(); ++i) v[i] = members_[i] ? 1.0 : 0.0;
  return DensityFn(group_, std::move(v));
}

GroupSubset difference_set(const GroupSubset& b, std::size_t cap) {
  const GroupSpec& g = b.group();
  require_cap(g, cap);
  const auto idx = b.indices();
  std::vector<bool> d(g.order(), false);
  std::size_t count = 0;
  for (Index x : idx) {
    for (Index y : idx) {
      const Index s = g.sub(x, y);
      if (!d[s]) {
        d[s] = true;
        ++count;
      }
    }
    if (count == g.order()) break;
  }
  return GroupSubset(g, std::move(d));
}

GroupSubset sumset_ABmB(const GroupSubset& a, const GroupSubset& b, std::size_t cap) {
  if (!(a.group() == b.group())) {
    throw ShapeError("sumset of subsets of different groups");
  }
  const GroupSpec& g = a.group();
  require_cap(g, cap);
  const auto diffs = difference_set(b, cap).indices();
  std::vector<bool> s(g.order(), false);
  std::size_t count = 0;
  for (Index x : a.indices()) {
    for (Index d : diffs) {
      const Index z = g.add(x, d);
      if (!s[z]) {
        s[z] = true;
        ++count;
      }
    }
    if (count == g.order()) break;
  }
  return GroupSubset(g, std::move(s));
}

std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = splitmix64(master);
  for (std::uint64_t p : parts) h = splitmix64(h ^ splitmix64(p + 0x632be59bd9b4e019ULL));
  return h;
}

double unit_uniform(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

GroupSubset random_subset(const GroupSpec& g, double density, std::uint64_t seed,
                          int max_retries) {
  if (!(density > 0.0 && density <= 1.0)) {
    throw DomainError("random_subset density must lie in (0, 1]");
  }
  const double n = static_cast<double>(g.order());
  const double band = 5.0 * std::sqrt(density * (1.0 - density) / n);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::mt19937_64 rng(derive_seed(seed, {static_cast<std::uint64_t>(attempt)}));
    std::vector<bool> m(g.order());
    std::size_t count = 0;
    for (Index i = 0; i < g.order(); ++i) {
      m[i] = unit_uniform(rng()) < density;
      count += m[i];
    }
    const double emp = static_cast<double>(count) / n;
    if (count > 0 && std::abs(emp - density) <= band) return GroupSubset(g, std::move(m));
  }
  throw RetryExhausted("random_subset: no admissible draw after " + std::to_string(max_retries) +
                       " attempts");
}

GroupSubset structured_subset(const GroupSpec& g, const StructuredParams& params) {
  return std::visit(
      Overloaded{
          [&](const SubgroupParams& p) {
            if (p.divisors.size() != g.rank()) {
              throw DomainError("subgroup needs one divisor per cyclic factor");
            }
            for (std::size_t j = 0; j < g.rank(); ++j) {
              if (p.divisors[j] == 0 || g.factors()[j] % p.divisors[j] != 0) {
                throw DomainError("subgroup divisor " + std::to_string(p.divisors[j]) +
                                  " does not divide " + std::to_string(g.factors()[j]));
              }
            }
            std::vector<bool> m(g.order());
            for (Index i = 0; i < g.order(); ++i) {
              const Elem z = g.elem_at(i);
              bool in = true;
              for (std::size_t j = 0; j < g.rank() && in; ++j) in = z.coords[j] % p.divisors[j] == 0;
              m[i] = in;
            }
            return GroupSubset(g, std::move(m));
          },
          [&](const ProgressionParams& p) {
            if (p.length == 0) throw DomainError("progression length must be positive");
            Index cur = g.index_of(p.start);
            const Index step = g.index_of(p.step);
            std::vector<bool> m(g.order(), false);
            for (std::size_t r = 0; r < p.length; ++r) {
              m[cur] = true;
              cur = g.add(cur, step);
            }
            return GroupSubset(g, std::move(m));
          },
          [&](const BohrSetParams& p) {
            if (!(p.spec.group() == g)) throw DomainError("Bohr set lives on a different group");
            return GroupSubset(g, bohr_member_mask(p.spec));
          },
          [&](const UnionShiftParams& p) {
            if (p.base.empty() || p.shifts.empty()) {
              throw DomainError("union-shift needs a nonempty base and shift list");
            }
            std::vector<bool> m(g.order(), false);
            for (const Elem& s : p.shifts) {
              const Index si = g.index_of(s);
              for (const Elem& x : p.base) m[g.add(g.index_of(x), si)] = true;
            }
            return GroupSubset(g, std::move(m));
          },
      },
      params);
}

}  // namespace bohrlab
