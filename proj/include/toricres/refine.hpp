#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toricres/cone.hpp"
#include "toricres/fan.hpp"
#include "toricres/gfan.hpp"
#include "toricres/profile.hpp"

namespace toricres {

// Integer coordinates on the lattice {x in Z^n : normal . x = offset}:
// every such x is base + sum c_i basis_i for a unique integer vector c.
struct AffineChart {
  LatticeVector base;
  std::vector<LatticeVector> basis;

  LatticeVector lift(std::span<const Integer> coords) const;
  // Throws InvalidArgument when p is off the plane.
  std::vector<Integer> coordinates(const LatticeVector& p) const;
};

AffineChart slice_coordinates(const Hyperplane& h);
// Raw form: throws NoLatticePoints when the content of normal does not
// divide offset, ZeroVector for a zero normal.
AffineChart slice_coordinates(const LatticeVector& normal, const Integer& offset);

// Triangulates c using every given point as a ray. The points must lie on
// the single boundary facet of the profile of c; each returned cone has
// determinant one. Throws NonCoplanar when the boundary is not one facet or
// a point is off it, NotUnimodular if a triangle fails the certificate.
std::vector<Cone> triangulate_cone(const Cone& c, std::span<const LatticeVector> points);

// Stellar subdivision of c at candidates until every part is regular. At
// each step the first non-regular part is split at the lexicographically
// smallest candidate that lies in it and is not already one of its rays.
// A non-simplicial part with no candidate is first pulled at its smallest
// ray. Throws Stuck when a simplicial non-regular part has no candidate.
std::vector<Cone> stellar_refine(const Cone& c, std::span<const LatticeVector> candidates);

// Same rule applied to a set of maximal cones of a fan: every cone that
// contains the chosen candidate is subdivided, so the result stays a fan.
std::vector<Cone> stellar_refine(std::vector<Cone> cones, std::span<const LatticeVector> candidates);

// Auxiliary rays come from the stellar fallback when the profile points do
// not suffice; they are never profile points.
enum class RayOrigin { FanGenerator, ProfilePoint, Auxiliary };

struct RefinedRay {
  LatticeVector vector;
  RayOrigin origin;
  friend bool operator==(const RefinedRay&, const RefinedRay&) = default;
};

struct RefinedCone {
  Cone cone;
  std::size_t parent;
  friend bool operator==(const RefinedCone&, const RefinedCone&) = default;
};

enum class RefineMethod { SliceTriangulation, Stellar };

// A subdivision of the maximal cones of a Gröbner fan. Parents keep their
// profile lattice points; rays are tagged by whether they generate a parent.
class RefinedFan {
 public:
  RefinedFan(std::vector<Cone> parents, std::vector<std::vector<LatticeVector>> profile_points,
             std::vector<RefinedCone> cones, RefineMethod method = RefineMethod::SliceTriangulation);

  const std::vector<Cone>& parents() const noexcept { return parents_; }
  const std::vector<std::vector<LatticeVector>>& profile_points() const noexcept { return points_; }
  // Sorted by parent, then canonically.
  const std::vector<RefinedCone>& cones() const noexcept { return cones_; }
  // Sorted lexicographically by vector.
  const std::vector<RefinedRay>& rays() const noexcept { return rays_; }
  RefineMethod method() const noexcept { return method_; }

  // The refined maximal cones with all their faces.
  Fan to_fan() const;

  friend bool operator==(const RefinedFan& a, const RefinedFan& b) {
    return a.parents_ == b.parents_ && a.points_ == b.points_ && a.cones_ == b.cones_ && a.method_ == b.method_;
  }

 private:
  std::vector<Cone> parents_;
  std::vector<std::vector<LatticeVector>> points_;
  std::vector<RefinedCone> cones_;
  std::vector<RefinedRay> rays_;
  RefineMethod method_;
};

// Triangulates each maximal cone on its profile points and glues the parts.
// Falls back to a global stellar subdivision when some profile is not
// coplanar; that fallback inserts parallelepiped points when the profile
// points run out, and verification then reports the extra rays. Throws IncompatibleSharedFace when two parents subdivide a
// common 2D face differently.
RefinedFan refine_fan(const GroebnerFan& g);

struct ParentVerdict {
  std::size_t parent;
  bool irreducible;
  bool volume_conserved;
  bool contained;
};

struct RefinementReport {
  bool all_regular = true;
  std::string irregular;  // first failing cone with its determinant
  bool fan_axioms = true;
  std::string fan_diagnostic;
  bool coverage = true;
  std::size_t samples = 0;
  std::size_t coverage_failures = 0;
  bool rays_match = true;
  std::vector<LatticeVector> missing_rays;  // profile points that are not rays
  std::vector<LatticeVector> extra_rays;    // rays that are not profile points
  std::vector<ParentVerdict> parents;

  bool irreducible() const;
  bool volume_conserved() const;
  bool contained() const;
  bool ok() const;
  // First failing check, empty when ok.
  std::string first_failure() const;
};

// Coverage draws `samples` weights in [1,1000]^3 from a fixed seed; each must
// lie in the interior of exactly one maximal cone or on the boundary of some.
RefinementReport verify_refinement(const RefinedFan& r, std::size_t samples = 1000);

}  // namespace toricres
