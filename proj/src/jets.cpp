#include "toricres/jets.hpp"

#include <algorithm>
#include <map>

#include "toricres/arith.hpp"

namespace toricres {

namespace {

void check_index(int i, int n) {
  if (n < 1 || i < 1 || i > n) {
    throw Error(ErrorKind::BadParameter, "component index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
}

CoordinateIdeal component(int i, int n) {
  check_index(i, n);
  CoordinateIdeal c;
  for (char v : {'x', 'y', 'z'}) c.vars.insert({v, 0});
  for (int l = 1; l <= n - i; ++l) c.vars.insert({'x', l});
  for (int l = 1; l <= i - 1; ++l) c.vars.insert({'y', l});
  return c;
}

std::set<JetVariable> meet_vars(int i, int j, int n) {
  return variety_intersection(component(i, n), component(j, n)).vars;
}

}  // namespace

std::string CoordinateIdeal::to_string() const {
  std::vector<JetVariable> order(vars.begin(), vars.end());
  std::sort(order.begin(), order.end(), [](const JetVariable& a, const JetVariable& b) {
    return a.level != b.level ? a.level < b.level : a.name < b.name;
  });
  std::string s = "⟨";
  for (std::size_t i = 0; i < order.size(); ++i) s += (i ? "," : "") + order[i].to_string();
  return s + "⟩";
}

std::vector<CoordinateIdeal> an_components(int n) {
  if (n < 1) throw Error(ErrorKind::BadParameter, "A_n needs n >= 1");
  std::vector<CoordinateIdeal> out;
  for (int i = 1; i <= n; ++i) out.push_back(component(i, n));
  return out;
}

CoordinateIdeal variety_intersection(const CoordinateIdeal& a, const CoordinateIdeal& b) {
  CoordinateIdeal c = a;
  c.vars.insert(b.vars.begin(), b.vars.end());
  return c;
}

bool inclusion_holds(int i, int j, int k, int l, int n) {
  const auto small = meet_vars(i, j, n);
  const auto big = meet_vars(k, l, n);
  return std::includes(small.begin(), small.end(), big.begin(), big.end());
}

JetGraph build_jet_graph(int n) {
  if (n < 1) throw Error(ErrorKind::BadParameter, "A_n needs n >= 1");
  std::map<std::pair<int, int>, std::set<JetVariable>> meets;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) meets[{i, j}] = meet_vars(i, j, n);
  JetGraph g{n, {}};
  for (const auto& [p, vars] : meets) {
    // maximal subspace: no other intersection has strictly fewer equations
    const bool maximal = std::none_of(meets.begin(), meets.end(), [&](const auto& other) {
      return other.second.size() < vars.size() &&
             std::includes(vars.begin(), vars.end(), other.second.begin(), other.second.end());
    });
    if (maximal) g.edges.push_back(p);
  }
  return g;
}

LatticeVector correspondence(int i, int n) {
  check_index(i, n);
  return LatticeVector{n - i + 1, i, 1};
}

bool isomorphic_under_correspondence(const JetGraph& jets, const ResolutionGraph& g) {
  if (static_cast<std::size_t>(jets.n) != g.vertices.size()) return false;
  std::map<LatticeVector, std::size_t> index;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) index[g.vertices[v].ray] = v;
  std::vector<std::size_t> image;
  for (int i = 1; i <= jets.n; ++i) {
    auto it = index.find(correspondence(i, jets.n));
    if (it == index.end()) return false;
    image.push_back(it->second);
  }
  std::set<std::pair<std::size_t, std::size_t>> mapped, target(g.edges.begin(), g.edges.end());
  for (const auto& [a, b] : jets.edges) {
    const auto u = image[a - 1], w = image[b - 1];
    mapped.insert({std::min(u, w), std::max(u, w)});
  }
  return mapped == target;
}

}  // namespace toricres
