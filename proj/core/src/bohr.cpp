#include "bohrlab/bohr.hpp"

#include <cmath>
#include <numbers>

#include "bohrlab/errors.hpp"

namespace bohrlab {

std::string to_string(RadiusForm form) {
  return form == RadiusForm::torus_norm ? "torus-norm" : "character-distance";
}

RadiusForm radius_form_from_string(const std::string& tag) {
  if (tag == "torus-norm") return RadiusForm::torus_norm;
  if (tag == "character-distance") return RadiusForm::character_distance;
  throw ParseError("unknown radius form '" + tag + "'");
}

BohrSpec::BohrSpec(GroupSpec group, std::vector<Char> freqs, double radius, RadiusForm form,
                   std::optional<Elem> center)
    : group_(std::move(group)),
      freqs_(std::move(freqs)),
      radius_(radius),
      form_(form),
      center_(std::move(center)) {
  if (!(radius_ > 0.0) || !std::isfinite(radius_)) {
    throw DomainError("Bohr radius must be positive and finite");
  }
  for (const Char& t : freqs_) group_.check(t);
  if (center_) group_.check(*center_);
}

BohrSpec BohrSpec::with_radius(double radius) const {
  return BohrSpec(group_, freqs_, radius, form_, center_);
}

Hom::Hom(GroupSpec domain, GroupSpec codomain, std::vector<Elem> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (images_.size() != domain_.rank()) {
    throw ShapeError("homomorphism needs one image per domain generator");
  }
  for (std::size_t j = 0; j < images_.size(); ++j) {
    codomain_.check(images_[j]);
    // n_j * image_j must vanish.
    const Index img = codomain_.index_of(images_[j]);
    Index acc = 0;
    for (std::uint64_t r = 0; r < domain_.factors()[j]; ++r) acc = codomain_.add(acc, img);
    if (acc != 0) {
      throw ShapeError("image of generator " + std::to_string(j) + " has order not dividing " +
                       std::to_string(domain_.factors()[j]));
    }
  }
}

Hom Hom::identity(const GroupSpec& g) {
  std::vector<Elem> images;
  for (std::size_t j = 0; j < g.rank(); ++j) {
    Elem e{std::vector<std::uint64_t>(g.rank(), 0)};
    e.coords[j] = g.factors()[j] > 1 ? 1 : 0;
    images.push_back(std::move(e));
  }
  return Hom(g, g, std::move(images));
}

Hom Hom::zero(const GroupSpec& domain, const GroupSpec& codomain) {
  std::vector<Elem> images(domain.rank(), Elem{std::vector<std::uint64_t>(codomain.rank(), 0)});
  return Hom(domain, codomain, std::move(images));
}

Elem Hom::apply(const Elem& z) const {
  domain_.check(z);
  Index acc = 0;
  for (std::size_t j = 0; j < images_.size(); ++j) {
    const Index img = codomain_.index_of(images_[j]);
    // z_j * image_j by doubling.
    Index term = 0;
    Index base = img;
    for (std::uint64_t m = z.coords[j]; m > 0; m >>= 1) {
      if (m & 1) term = codomain_.add(term, base);
      base = codomain_.add(base, base);
    }
    acc = codomain_.add(acc, term);
  }
  return codomain_.elem_at(acc);
}

double bohr_distance(const GroupSpec& g, RadiusForm form, Index t, Index z) {
  const std::uint64_t period = g.exponent();
  const double tn = torus_norm_of_phase(g.phase(t, z), period);
  if (form == RadiusForm::torus_norm) return tn;
  // |e(x) - 1| = 2 sin(pi ||x||)
  return 2.0 * std::sin(std::numbers::pi * tn);
}

namespace {

std::vector<Index> freq_indices(const BohrSpec& b) {
  std::vector<Index> out;
  out.reserve(b.freqs().size());
  for (const Char& t : b.freqs()) out.push_back(b.group().index_of(t));
  return out;
}

bool member_index(const BohrSpec& b, const std::vector<Index>& freqs, Index z, double guard) {
  for (Index t : freqs) {
    const double d = bohr_distance(b.group(), b.form(), t, z);
    if (std::abs(d - b.radius()) < guard) {
      throw AmbiguousBoundary("distance of " + format_elem(b.group().elem_at(z)) +
                              " under frequency " + format_elem(b.group().elem_at(t)) +
                              " is within the guard band of radius " + std::to_string(b.radius()));
    }
    if (d >= b.radius()) return false;
  }
  return true;
}

}  // namespace

bool bohr_member(const BohrSpec& b, const Elem& z, double guard) {
  const Index zi = b.group().index_of(z);
  return member_index(b, freq_indices(b), zi, guard);
}

bool bohr_neighborhood_member(const BohrSpec& b, const Elem& z, double guard) {
  const GroupSpec& g = b.group();
  Index zi = g.index_of(z);
  if (b.center()) zi = g.sub(zi, g.index_of(*b.center()));
  return member_index(b, freq_indices(b), zi, guard);
}

std::vector<bool> bohr_member_mask(const BohrSpec& b, std::size_t cap, double guard) {
  const GroupSpec& g = b.group();
  if (g.order() > cap) {
    throw CapacityError("group order " + std::to_string(g.order()) +
                        " exceeds enumeration cap " + std::to_string(cap));
  }
  const auto freqs = freq_indices(b);
  std::vector<bool> mask(g.order());
  for (Index z = 0; z < g.order(); ++z) mask[z] = member_index(b, freqs, z, guard);
  return mask;
}

std::vector<Elem> bohr_enumerate(const BohrSpec& b, std::size_t cap, double guard) {
  const auto mask = bohr_member_mask(b, cap, guard);
  std::vector<Elem> out;
  for (Index z = 0; z < mask.size(); ++z) {
    if (mask[z]) out.push_back(b.group().elem_at(z));
  }
  return out;
}

BohrSpec char_form_to_torus_form(const BohrSpec& b) {
  if (b.form() != RadiusForm::character_distance) {
    throw PreconditionError("expected a character-distance Bohr set");
  }
  return BohrSpec(b.group(), b.freqs(), b.radius() / (2.0 * std::numbers::pi),
                  RadiusForm::torus_norm, b.center());
}

BohrSpec pullback(const BohrSpec& b, const Hom& h) {
  if (!(b.group() == h.codomain())) {
    throw ShapeError("pullback: Bohr set lives on " + b.group().to_string() +
                     " but the homomorphism maps into " + h.codomain().to_string());
  }
  const GroupSpec& dom = h.domain();
  const GroupSpec& cod = h.codomain();
  std::vector<Char> composed;
  composed.reserve(b.freqs().size());
  for (const Char& t : b.freqs()) {
    // chi_t(h(e_j)) = e(p_j / L); since n_j h(e_j) = 0, p_j n_j / L is an
    // integer s_j and the composite is chi_s on the domain.
    Char s{std::vector<std::uint64_t>(dom.rank(), 0)};
    for (std::size_t j = 0; j < dom.rank(); ++j) {
      const std::uint64_t p = cod.phase(t, h.images()[j]);
      const std::uint64_t num = p * dom.factors()[j];
      s.freq[j] = (num / cod.exponent()) % dom.factors()[j];
    }
    composed.push_back(std::move(s));
  }
  std::optional<Elem> center;
  return BohrSpec(dom, std::move(composed), b.radius(), b.form(), center);
}

BohrSpec halve_radius(const BohrSpec& b) { return b.with_radius(b.radius() / 2.0); }

}  // namespace bohrlab
