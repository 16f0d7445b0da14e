#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "toricres/gfan.hpp"
#include "toricres/refine.hpp"

namespace toricres {

// The refinement rays on a 2D skeleton cone, ordered along the segment
// between its generators. The walk starts at the colex-smaller generator.
struct ChainSegment {
  GroebnerCone parent;
  std::vector<LatticeVector> rays;

  // Entries strictly between the two ends.
  std::vector<LatticeVector> interior() const;
  // Entries with every coordinate positive.
  std::size_t positive_count() const;
  friend bool operator==(const ChainSegment&, const ChainSegment&) = default;
};

std::vector<ChainSegment> chain_segments(const GroebnerFan& g, const RefinedFan& r);

// -s for the integer s with s * v equal to the sum of the neighbours. Throws
// NoIntegerSolution when the sum is not an integer multiple of v,
// InvalidArgument when v is not primitive.
long self_intersection(std::span<const LatticeVector> neighbours, const LatticeVector& v);
long self_intersection(const LatticeVector& prev, const LatticeVector& v, const LatticeVector& next);

struct GraphVertex {
  LatticeVector ray;
  std::optional<long> self_intersection;
  friend bool operator==(const GraphVertex&, const GraphVertex&) = default;
};

// Simple undirected graph; edges are stored as (i, j) with i < j, sorted.
struct ResolutionGraph {
  std::vector<GraphVertex> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  friend bool operator==(const ResolutionGraph&, const ResolutionGraph&) = default;
};

// Path on the interior vertices of the single A_n skeleton chain, with
// self-intersections from the chain rule (ends use the extremal rays).
ResolutionGraph build_graph_An(int n);

// No vertex with self-intersection -1.
bool is_minimal(const ResolutionGraph& g);

// Chain self-intersections for every interior vertex of a segment.
std::vector<GraphVertex> chain_vertices(const ChainSegment& s);

// A skeleton ray where several chains meet, with the chain entries next to
// it. The self-intersection is set when the chain rule has a solution.
struct JunctionReport {
  LatticeVector center;
  std::vector<LatticeVector> neighbours;
  std::optional<long> self_intersection;
  bool resolved() const { return self_intersection.has_value(); }
};

std::vector<JunctionReport> junctions(const GroebnerFan& g, std::span<const ChainSegment> chains);

enum class SolveStatus { Found, Absent, BudgetExceeded };

struct DynkinSolution {
  SolveStatus status = SolveStatus::Absent;
  ResolutionGraph graph;  // set when Found; every vertex is -2
  std::size_t trees_examined = 0;
};

// Searches k-subsets of the candidates (lexicographic) and labeled trees on
// them (Prüfer order) for one where 2v minus the neighbour sum is a sum of
// distinct boundary rays at every vertex. Stops after `budget` trees.
DynkinSolution dynkin_solve(std::span<const LatticeVector> candidates, std::span<const LatticeVector> boundary,
                            std::size_t k, std::size_t budget = 5000000);

}  // namespace toricres
