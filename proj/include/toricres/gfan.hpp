#pragma once

#include <optional>
#include <vector>

#include "toricres/fan.hpp"
#include "toricres/polynomial.hpp"

namespace toricres {

// Closure of a set of weights sharing one initial form.
struct GroebnerCone {
  Cone cone;
  Polynomial initial;

  std::size_t dim() const noexcept { return cone.dim(); }
  friend bool operator==(const GroebnerCone&, const GroebnerCone&) = default;
};

// The Gröbner fan of a hypersurface restricted to the first orthant. The
// stored cones are the closures of the initial-form classes, one per class,
// in canonical order. to_fan() adds every face.
class GroebnerFan {
 public:
  GroebnerFan(Polynomial f, std::vector<GroebnerCone> cones);

  const Polynomial& polynomial() const noexcept { return f_; }
  const std::vector<GroebnerCone>& cones() const noexcept { return cones_; }
  std::size_t ambient_dim() const noexcept { return f_.nvars(); }

  std::optional<std::size_t> find(const Cone& c) const;

  // Class cones together with all their faces.
  Fan to_fan() const;
  // Every member of to_fan(), labeled by the initial form at its interior point.
  std::vector<GroebnerCone> all_cones() const;

 private:
  Polynomial f_;
  std::vector<GroebnerCone> cones_;
};

// Closure of {w' >= 0 : In_w'(f) = In_w(f)}. Requires w >= 0.
GroebnerCone groebner_cone_of_weight(const Polynomial& f, const LatticeVector& w);

// One cone per nonempty initial-form class. Throws Unsupported unless f has
// three variables and ZeroPolynomial for f = 0.
GroebnerFan enumerate_fan(const Polynomial& f);

// Cones of full dimension.
std::vector<GroebnerCone> maximal_cones(const GroebnerFan& g);

// Class cones of dimension below n. Throws SkeletonMismatch if one of them
// has a monomial initial form or a full-dimensional one does not.
std::vector<GroebnerCone> skeleton(const GroebnerFan& g);

struct NewtonFacet {
  LatticeVector normal;  // primitive, nonnegative
  Integer level;         // min over the polyhedron of normal . x
};

// conv(support) + nonnegative orthant.
struct NewtonPolyhedron {
  std::vector<ExponentVector> vertices;
  std::vector<NewtonFacet> facets;
};

NewtonPolyhedron newton_polyhedron(const Polynomial& f);

// Normal fan of the Newton polyhedron, intersected with the first orthant
// and coarsened to one cone per initial form. Built only from the polyhedron,
// so it serves as an independent route to enumerate_fan.
std::vector<GroebnerCone> dual_newton_cones(const Polynomial& f);

}  // namespace toricres
