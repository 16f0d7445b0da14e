#pragma once

#include <optional>
#include <span>
#include <vector>

#include "toricres/cone.hpp"

namespace toricres {

// A facet of conv({0} u generators) away from the origin: the hull lies in
// outward . x <= level with level > 0. The outward normal lies in the span
// of the cone.
struct BoundaryFacet {
  LatticeVector outward;
  Integer level;

  Hyperplane plane() const { return Hyperplane(outward, level); }
  friend bool operator==(const BoundaryFacet&, const BoundaryFacet&) = default;
};

// The bounded hull of the origin and the extremal generators of a cone.
class Profile {
 public:
  explicit Profile(Cone base);

  const Cone& base() const noexcept { return base_; }
  // The origin followed by the generators.
  std::vector<LatticeVector> hull_vertices() const;
  const std::vector<BoundaryFacet>& boundary_facets() const noexcept { return facets_; }
  // Canonically signed boundary hyperplanes.
  std::vector<Hyperplane> boundary() const;

  // Boundary-inclusive membership in the hull.
  bool contains(const LatticeVector& q) const;

 private:
  Cone base_;
  std::vector<BoundaryFacet> facets_;
};

Profile profile_of(const Cone& c);

// Nonzero integer points of the hull, sorted lexicographically.
std::vector<LatticeVector> lattice_points(const Profile& p);

// Members of s that are not a + b for a, b in s other than the member itself
// (a = b allowed). Sorted lexicographically.
std::vector<LatticeVector> irreducible_elements(std::span<const LatticeVector> s);

// The boundary hyperplane carrying every point, when the boundary is a
// single facet and all points lie on it.
std::optional<BoundaryFacet> coplanar_boundary(const Profile& p, std::span<const LatticeVector> points);

}  // namespace toricres
