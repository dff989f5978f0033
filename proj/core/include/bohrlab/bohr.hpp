#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bohrlab/group.hpp"

namespace bohrlab {

enum class RadiusForm {
  torus_norm,          // max_t ||<t, z>|| < radius
  character_distance,  // max_t |chi_t(z) - 1| < radius
};

std::string to_string(RadiusForm form);
RadiusForm radius_form_from_string(const std::string& tag);

// Distances within this band of the radius raise AmbiguousBoundary.
inline constexpr double kDefaultGuardBand = 1e-12;

// Bohr set U = {z : max_{t in freqs} dist_t(z) < radius}, optionally tagged
// with a center a so that it also describes the neighborhood a + U.
// Membership always refers to U itself; use bohr_neighborhood_member for a + U.
class BohrSpec {
 public:
  BohrSpec(GroupSpec group, std::vector<Char> freqs, double radius, RadiusForm form,
           std::optional<Elem> center = std::nullopt);

  const GroupSpec& group() const { return group_; }
  const std::vector<Char>& freqs() const { return freqs_; }
  double radius() const { return radius_; }
  RadiusForm form() const { return form_; }
  const std::optional<Elem>& center() const { return center_; }
  std::size_t dimension() const { return freqs_.size(); }

  BohrSpec with_radius(double radius) const;

  friend bool operator==(const BohrSpec&, const BohrSpec&) = default;

 private:
  GroupSpec group_;
  std::vector<Char> freqs_;
  double radius_;
  RadiusForm form_;
  std::optional<Elem> center_;
};

// Homomorphism between finite groups, fixed by the images of the standard
// generators e_j of the domain. Well defined iff n_j * image_j = 0.
class Hom {
 public:
  Hom(GroupSpec domain, GroupSpec codomain, std::vector<Elem> images);

  static Hom identity(const GroupSpec& g);
  static Hom zero(const GroupSpec& domain, const GroupSpec& codomain);

  const GroupSpec& domain() const { return domain_; }
  const GroupSpec& codomain() const { return codomain_; }
  const std::vector<Elem>& images() const { return images_; }

  Elem apply(const Elem& z) const;

 private:
  GroupSpec domain_;
  GroupSpec codomain_;
  std::vector<Elem> images_;
};

// Distance of z under frequency t in the given form, computed from the exact
// rational pairing value.
double bohr_distance(const GroupSpec& g, RadiusForm form, Index t, Index z);

bool bohr_member(const BohrSpec& b, const Elem& z, double guard = kDefaultGuardBand);

// Membership of z in center + U.
bool bohr_neighborhood_member(const BohrSpec& b, const Elem& z,
                              double guard = kDefaultGuardBand);

// Membership flags of U for every element in canonical order.
std::vector<bool> bohr_member_mask(const BohrSpec& b, std::size_t cap = kDefaultEnumerationCap,
                                   double guard = kDefaultGuardBand);

std::vector<Elem> bohr_enumerate(const BohrSpec& b, std::size_t cap = kDefaultEnumerationCap,
                                 double guard = kDefaultGuardBand);

// {z : |chi(z) - 1| < eta} contains the torus-norm set of radius eta / (2 pi)
// on the same frequencies, because |e(x) - 1| = 2|sin(pi x)| <= 2 pi ||x||.
BohrSpec char_form_to_torus_form(const BohrSpec& b);

// Pulls b back along h by composing each frequency with h. Membership of z in
// the result equals membership of h(z) in b.
BohrSpec pullback(const BohrSpec& b, const Hom& h);

// Same frequencies, half the radius. If x and y lie in the result then x + y
// lies in b.
BohrSpec halve_radius(const BohrSpec& b);

}  // namespace bohrlab
