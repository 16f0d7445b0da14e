#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toricres/lattice.hpp"

namespace toricres {

// A strongly convex rational polyhedral cone, stored by its primitive
// extremal generators (lexicographically sorted) together with an exact
// H-description: u.x >= 0 for every facet normal u and e.x = 0 for every
// equality e. Ambient dimension is limited to n <= 3.
class Cone {
 public:
  // Generators are made primitive, deduplicated and reduced to the extremal
  // ones. Throws ZeroVector, NotPointed, Unsupported (n > 3) or Empty.
  explicit Cone(std::vector<LatticeVector> generators);

  static Cone orthant(std::size_t n);

  const std::vector<LatticeVector>& generators() const noexcept { return gens_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t ambient_dim() const noexcept { return gens_.front().dim(); }
  bool is_simplicial() const noexcept { return gens_.size() == dim_; }
  bool is_full_dimensional() const noexcept { return dim_ == ambient_dim(); }

  const std::vector<LatticeVector>& facet_normals() const noexcept { return facets_; }
  const std::vector<LatticeVector>& equalities() const noexcept { return equalities_; }

  bool contains(const LatticeVector& v) const;
  bool contains(const Cone& other) const;
  bool contains_in_relative_interior(const LatticeVector& v) const;
  bool has_ray(const LatticeVector& v) const;

  // Sum of the generators: a lattice point of the relative interior.
  LatticeVector interior_point() const;

  // "<(1,0,0),(0,1,0)>"
  std::string to_string() const;

  friend bool operator==(const Cone& a, const Cone& b) { return a.gens_ == b.gens_; }
  friend bool operator!=(const Cone& a, const Cone& b) { return !(a == b); }

 private:
  std::vector<LatticeVector> gens_;
  std::size_t dim_ = 0;
  std::vector<LatticeVector> facets_;
  std::vector<LatticeVector> equalities_;
};

// Orders by dimension, then by generator list.
bool canonical_less(const Cone& a, const Cone& b);

// gcd of the r x r minors of the n x r generator matrix.
Integer cone_determinant(const Cone& c);
// Raw form: throws RankDeficient for dependent generators, Unsupported when
// there are more generators than coordinates.
Integer cone_determinant(std::span<const LatticeVector> generators);

// Determinant one. Non-simplicial cones are never regular.
bool is_regular(const Cone& c);

// The cone {x : a.x >= 0 for a in inequalities, e.x = 0 for e in equalities}
// in R^n, n <= 3. Throws NotPointed if it contains a line, Empty if it is {0}.
Cone extreme_rays(std::span<const LatticeVector> inequalities,
                  std::span<const LatticeVector> equalities, std::size_t n);

// nullopt when the intersection is {0}.
std::optional<Cone> intersect(const Cone& a, const Cone& b);

bool is_face_of(const Cone& face, const Cone& c);

// All nonzero faces of c, c included, in canonical order.
std::vector<Cone> faces(const Cone& c);

}  // namespace toricres
