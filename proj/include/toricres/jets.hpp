#pragma once

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toricres/lattice.hpp"
#include "toricres/resgraph.hpp"

namespace toricres {

// The jet coordinate name_level, e.g. x1 or z0.
struct JetVariable {
  char name;
  int level;
  auto operator<=>(const JetVariable&) const = default;
  std::string to_string() const { return std::string(1, name) + std::to_string(level); }
};

// An ideal generated by jet coordinates, standing for the coordinate
// subspace where they vanish. Ordered by level, then name.
struct CoordinateIdeal {
  std::set<JetVariable> vars;
  // "⟨x0,y0,z0,x1⟩"
  std::string to_string() const;
  friend bool operator==(const CoordinateIdeal&, const CoordinateIdeal&) = default;
};

// I^i for i = 1..n at jet order m = n: the level-zero coordinates, x_1 up to
// x_{n-i} and y_1 up to y_{i-1}.
std::vector<CoordinateIdeal> an_components(int n);

// Intersection of the subspaces: the union of the coordinate sets.
CoordinateIdeal variety_intersection(const CoordinateIdeal& a, const CoordinateIdeal& b);

// Whether the intersection of components i and j lies inside that of k and l
// (1-based, at most n). Containment of subspaces is reverse containment of
// their variable sets.
bool inclusion_holds(int i, int j, int k, int l, int n);

struct JetGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // 1-based, i < j, sorted
  friend bool operator==(const JetGraph&, const JetGraph&) = default;
};

// Vertices 1..n; an edge joins i < j when their intersection is maximal
// under inclusion among the intersections of distinct components.
JetGraph build_jet_graph(int n);

// The ray (n-i+1, i, 1) attached to component i.
LatticeVector correspondence(int i, int n);

// The jet graph maps onto g under correspondence: vertex sets and edge sets
// agree.
bool isomorphic_under_correspondence(const JetGraph& jets, const ResolutionGraph& g);

}  // namespace toricres
