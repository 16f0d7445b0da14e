#include "toricres/resgraph.hpp"

#include <algorithm>
#include <set>

#include "toricres/catalog.hpp"

namespace toricres {

namespace {

using V = LatticeVector;

bool dominated(const V& a, const V& bound) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a[i] > bound[i]) return false;
  return true;
}

// Labeled tree on k vertices from a Prüfer sequence of length k - 2.
std::vector<std::pair<std::size_t, std::size_t>> prufer_tree(const std::vector<std::size_t>& seq, std::size_t k) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (k < 2) return edges;
  std::vector<std::size_t> degree(k, 1);
  for (auto s : seq) ++degree[s];
  for (auto s : seq) {
    std::size_t leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
    --degree[leaf];
    --degree[s];
  }
  std::size_t u = k, w = k;
  for (std::size_t i = 0; i < k; ++i) {
    if (degree[i] != 1) continue;
    (u == k ? u : w) = i;
  }
  edges.emplace_back(u, w);
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

std::vector<LatticeVector> ChainSegment::interior() const {
  if (rays.size() < 2) return {};
  return {rays.begin() + 1, rays.end() - 1};
}

std::size_t ChainSegment::positive_count() const {
  return static_cast<std::size_t>(std::count_if(rays.begin(), rays.end(), [](const V& v) { return v.is_positive(); }));
}

std::vector<ChainSegment> chain_segments(const GroebnerFan& g, const RefinedFan& r) {
  std::vector<ChainSegment> out;
  for (const auto& s : skeleton(g)) {
    if (s.dim() != 2) continue;
    const auto& gens = s.cone.generators();
    const V& start = colex_less(gens[0], gens[1]) ? gens[0] : gens[1];
    const V& end = start == gens[0] ? gens[1] : gens[0];
    const std::vector<V> basis{start, end};
    std::vector<std::pair<Rational, V>> along;
    for (const auto& ray : r.rays()) {
      if (!s.cone.contains(ray.vector)) continue;
      const auto x = linalg::solve_columns(basis, ray.vector);
      along.emplace_back((*x)[1] / ((*x)[0] + (*x)[1]), ray.vector);
    }
    std::sort(along.begin(), along.end());
    ChainSegment seg{s, {}};
    for (auto& [t, v] : along) seg.rays.push_back(std::move(v));
    out.push_back(std::move(seg));
  }
  return out;
}

long self_intersection(std::span<const LatticeVector> neighbours, const LatticeVector& v) {
  if (v.is_zero()) throw Error(ErrorKind::ZeroVector, "self-intersection at the zero vector");
  if (!v.is_primitive()) throw Error(ErrorKind::InvalidArgument, v.to_string() + " is not primitive");
  V sum = V::zero(v.dim());
  for (const auto& u : neighbours) sum += u;
  // v is primitive, so s is fixed by any nonzero coordinate of v.
  std::size_t i = 0;
  while (v[i] == 0) ++i;
  const Integer s = sum[i] / v[i];
  if (s * v != sum || s <= 0) {
    throw Error(ErrorKind::NoIntegerSolution, "sum " + sum.to_string() + " is not a positive multiple of " + v.to_string());
  }
  return -to_long(s);
}

long self_intersection(const LatticeVector& prev, const LatticeVector& v, const LatticeVector& next) {
  const V nb[2] = {prev, next};
  return self_intersection(nb, v);
}

std::vector<GraphVertex> chain_vertices(const ChainSegment& s) {
  std::vector<GraphVertex> out;
  for (std::size_t i = 1; i + 1 < s.rays.size(); ++i) {
    GraphVertex gv{s.rays[i], std::nullopt};
    try {
      gv.self_intersection = self_intersection(s.rays[i - 1], s.rays[i], s.rays[i + 1]);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoIntegerSolution) throw;
    }
    out.push_back(std::move(gv));
  }
  return out;
}

ResolutionGraph build_graph_An(int n) {
  const auto g = enumerate_fan(ade_polynomial(make_family(Family::A, n)));
  const auto chains = chain_segments(g, refine_fan(g));
  if (chains.size() != 1) throw Error(ErrorKind::SkeletonMismatch, "A_n skeleton should be one 2D cone");
  ResolutionGraph graph;
  graph.vertices = chain_vertices(chains.front());
  for (std::size_t i = 0; i + 1 < graph.vertices.size(); ++i) graph.edges.emplace_back(i, i + 1);
  return graph;
}

bool is_minimal(const ResolutionGraph& g) {
  return std::none_of(g.vertices.begin(), g.vertices.end(),
                      [](const GraphVertex& v) { return v.self_intersection && *v.self_intersection == -1; });
}

std::vector<JunctionReport> junctions(const GroebnerFan& g, std::span<const ChainSegment> chains) {
  std::vector<JunctionReport> out;
  for (const auto& s : skeleton(g)) {
    if (s.dim() != 1) continue;
    JunctionReport rep{s.cone.generators().front(), {}, std::nullopt};
    for (const auto& c : chains) {
      if (c.rays.size() < 2) continue;
      if (c.rays.front() == rep.center) rep.neighbours.push_back(c.rays[1]);
      if (c.rays.back() == rep.center) rep.neighbours.push_back(c.rays[c.rays.size() - 2]);
    }
    std::sort(rep.neighbours.begin(), rep.neighbours.end());
    try {
      rep.self_intersection = self_intersection(rep.neighbours, rep.center);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoIntegerSolution) throw;
    }
    out.push_back(std::move(rep));
  }
  return out;
}

DynkinSolution dynkin_solve(std::span<const LatticeVector> candidates, std::span<const LatticeVector> boundary,
                            std::size_t k, std::size_t budget) {
  std::vector<V> cand(candidates.begin(), candidates.end());
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<V> bnd(boundary.begin(), boundary.end());
  std::sort(bnd.begin(), bnd.end());
  bnd.erase(std::unique(bnd.begin(), bnd.end()), bnd.end());

  DynkinSolution sol;
  if (k == 0 || k > cand.size()) return sol;
  const std::size_t n = cand.front().dim();

  // Sums of distinct boundary rays, capped by the largest 2v any vertex needs.
  V bound = V::zero(n);
  for (const auto& v : cand) {
    std::vector<Integer> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = std::max(bound[i], Integer(2 * v[i]));
    bound = V(std::move(c));
  }
  std::set<V> sums{V::zero(n)};
  for (const auto& b : bnd) {
    std::vector<V> add;
    for (const auto& s : sums) {
      V t = s + b;
      if (dominated(t, bound)) add.push_back(std::move(t));
    }
    sums.insert(add.begin(), add.end());
  }

  bool stop = false;
  for_each_subset(cand.size(), k, [&](std::span<const std::size_t> idx) {
    std::vector<std::size_t> seq(k >= 2 ? k - 2 : 0, 0);
    while (true) {
      if (sol.trees_examined == budget) {
        sol.status = SolveStatus::BudgetExceeded;
        stop = true;
        return false;
      }
      ++sol.trees_examined;
      const auto edges = prufer_tree(seq, k);
      std::vector<V> residual;
      for (std::size_t i = 0; i < k; ++i) residual.push_back(Integer(2) * cand[idx[i]]);
      for (const auto& [a, b] : edges) {
        residual[a] -= cand[idx[b]];
        residual[b] -= cand[idx[a]];
      }
      const bool ok = std::all_of(residual.begin(), residual.end(), [&](const V& r) { return sums.count(r) > 0; });
      if (ok) {
        sol.status = SolveStatus::Found;
        for (std::size_t i = 0; i < k; ++i) sol.graph.vertices.push_back({cand[idx[i]], -2});
        sol.graph.edges = edges;
        stop = true;
        return false;
      }
      // next Prüfer sequence in lexicographic order
      std::size_t p = seq.size();
      while (p > 0 && seq[p - 1] == k - 1) seq[--p] = 0;
      if (p == 0) break;
      ++seq[p - 1];
    }
    return true;
  });
  if (!stop) sol.status = SolveStatus::Absent;
  return sol;
}

}  // namespace toricres
