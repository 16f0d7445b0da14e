#include "toricres/profile.hpp"

#include <algorithm>
#include <set>

namespace toricres {

namespace {

// Integer vector u in span(s) with u . s_i equal for all i, scaled to be
// primitive with positive value on s. Requires s independent.
LatticeVector equal_height_normal(std::span<const LatticeVector> s) {
  const std::size_t d = s.size();
  std::vector<LatticeVector> gram_cols;
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Integer> col;
    for (std::size_t i = 0; i < d; ++i) col.push_back(dot(s[i], s[j]));
    gram_cols.emplace_back(std::move(col));
  }
  std::vector<Integer> ones(d, Integer(1));
  auto mu = linalg::solve_columns(gram_cols, LatticeVector(ones));
  if (!mu) throw Error(ErrorKind::RankDeficient, "boundary normal system is inconsistent");
  Integer den = 1;
  for (const auto& q : *mu) den = lcm(den, Integer(q.get_den()));
  LatticeVector u = LatticeVector::zero(s.front().dim());
  for (std::size_t j = 0; j < d; ++j) {
    Rational scaled = (*mu)[j] * den;
    u += Integer(scaled.get_num()) * s[j];
  }
  return make_primitive(u);
}

}  // namespace

Profile::Profile(Cone base) : base_(std::move(base)) {
  const auto& g = base_.generators();
  const std::size_t d = base_.dim();
  std::set<std::pair<LatticeVector, Integer>> seen;
  for_each_subset(g.size(), d, [&](std::span<const std::size_t> idx) {
    std::vector<LatticeVector> s;
    for (auto i : idx) s.push_back(g[i]);
    if (linalg::rank(s, base_.ambient_dim()) < d) return true;
    LatticeVector u = equal_height_normal(s);
    const Integer level = dot(u, s.front());
    for (const auto& v : g)
      if (dot(u, v) > level) return true;
    if (seen.emplace(u, level).second) facets_.push_back({u, level});
    return true;
  });
  std::sort(facets_.begin(), facets_.end(), [](const BoundaryFacet& a, const BoundaryFacet& b) {
    return a.outward < b.outward || (a.outward == b.outward && a.level < b.level);
  });
}

std::vector<LatticeVector> Profile::hull_vertices() const {
  std::vector<LatticeVector> v{LatticeVector::zero(base_.ambient_dim())};
  v.insert(v.end(), base_.generators().begin(), base_.generators().end());
  return v;
}

std::vector<Hyperplane> Profile::boundary() const {
  std::vector<Hyperplane> h;
  for (const auto& f : facets_) h.push_back(f.plane());
  return h;
}

bool Profile::contains(const LatticeVector& q) const {
  if (!base_.contains(q)) return false;
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const BoundaryFacet& f) { return dot(f.outward, q) <= f.level; });
}

Profile profile_of(const Cone& c) { return Profile(c); }

std::vector<LatticeVector> lattice_points(const Profile& p) {
  const std::size_t n = p.base().ambient_dim();
  const auto verts = p.hull_vertices();
  std::vector<Integer> lo(n, Integer(0)), hi(n, Integer(0));
  for (const auto& v : verts) {
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] < lo[i]) lo[i] = v[i];
      if (v[i] > hi[i]) hi[i] = v[i];
    }
  }
  std::vector<LatticeVector> out;
  std::vector<Integer> q(lo);
  while (true) {
    LatticeVector v(q);
    if (!v.is_zero() && p.contains(v)) out.push_back(v);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (q[i] < hi[i]) {
        q[i] += 1;
        for (std::size_t j = i + 1; j < n; ++j) q[j] = lo[j];
        break;
      }
      if (i == 0) return out;
    }
  }
}

std::vector<LatticeVector> irreducible_elements(std::span<const LatticeVector> s) {
  std::set<LatticeVector> members(s.begin(), s.end());
  std::vector<LatticeVector> out;
  for (const auto& u : members) {
    bool reducible = false;
    for (const auto& a : members) {
      if (a == u) continue;
      LatticeVector b = u - a;
      if (b != u && members.count(b)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(u);
  }
  return out;
}

std::optional<BoundaryFacet> coplanar_boundary(const Profile& p, std::span<const LatticeVector> points) {
  if (p.boundary_facets().size() != 1) return std::nullopt;
  const auto& f = p.boundary_facets().front();
  for (const auto& q : points)
    if (dot(f.outward, q) != f.level) return std::nullopt;
  return f;
}

}  // namespace toricres
