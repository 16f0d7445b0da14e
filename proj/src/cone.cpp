#include "toricres/cone.hpp"

#include <algorithm>
#include <set>

namespace toricres {

namespace {

constexpr std::size_t kMaxAmbient = 3;

void sort_unique(std::vector<LatticeVector>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Picks a maximal independent subset of rows, in order.
std::vector<LatticeVector> independent_rows(std::span<const LatticeVector> rows, std::size_t n) {
  std::vector<LatticeVector> out;
  for (const auto& r : rows) {
    out.push_back(r);
    if (linalg::rank(out, n) < out.size()) out.pop_back();
    if (out.size() == n) break;
  }
  return out;
}

}  // namespace

Cone::Cone(std::vector<LatticeVector> generators) {
  if (generators.empty()) throw Error(ErrorKind::Empty, "cone needs at least one generator");
  const std::size_t n = generators.front().dim();
  if (n == 0 || n > kMaxAmbient) {
    throw Error(ErrorKind::Unsupported, "cones are supported in dimension 1..3, got " + std::to_string(n));
  }
  for (auto& g : generators) {
    if (g.dim() != n) throw Error(ErrorKind::InvalidArgument, "generator dimension mismatch");
    g = make_primitive(g);
  }
  sort_unique(generators);

  dim_ = linalg::rank(generators, n);
  equalities_ = linalg::nullspace(generators, n);

  // Facet normals lie in the span of the cone: they are orthogonal to the
  // equalities and vanish on dim-1 independent generators.
  std::vector<LatticeVector> rows(equalities_);
  for_each_subset(generators.size(), dim_ - 1, [&](std::span<const std::size_t> idx) {
    rows.resize(equalities_.size());
    for (auto i : idx) rows.push_back(generators[i]);
    LatticeVector u = linalg::kernel_vector(rows);
    if (u.is_zero()) return true;
    bool pos = false, neg = false;
    for (const auto& g : generators) {
      int s = sign(dot(u, g));
      pos |= s > 0;
      neg |= s < 0;
    }
    if (pos && neg) return true;
    facets_.push_back(make_primitive(neg ? -u : u));
    return true;
  });
  sort_unique(facets_);

  std::vector<LatticeVector> all(equalities_);
  all.insert(all.end(), facets_.begin(), facets_.end());
  if (linalg::rank(all, n) < n) throw Error(ErrorKind::NotPointed, "generators span a cone containing a line");

  for (const auto& g : generators) {
    std::vector<LatticeVector> tight(equalities_);
    for (const auto& u : facets_)
      if (dot(u, g) == 0) tight.push_back(u);
    if (linalg::rank(tight, n) == n - 1) gens_.push_back(g);
  }
}

Cone Cone::orthant(std::size_t n) {
  std::vector<LatticeVector> g;
  for (std::size_t i = 0; i < n; ++i) g.push_back(LatticeVector::unit(n, i));
  return Cone(std::move(g));
}

bool Cone::contains(const LatticeVector& v) const {
  if (v.dim() != ambient_dim()) return false;
  for (const auto& e : equalities_)
    if (dot(e, v) != 0) return false;
  for (const auto& u : facets_)
    if (dot(u, v) < 0) return false;
  return true;
}

bool Cone::contains(const Cone& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const LatticeVector& g) { return contains(g); });
}

bool Cone::contains_in_relative_interior(const LatticeVector& v) const {
  if (v.dim() != ambient_dim()) return false;
  for (const auto& e : equalities_)
    if (dot(e, v) != 0) return false;
  for (const auto& u : facets_)
    if (dot(u, v) <= 0) return false;
  return !v.is_zero();
}

bool Cone::has_ray(const LatticeVector& v) const {
  return std::binary_search(gens_.begin(), gens_.end(), v);
}

LatticeVector Cone::interior_point() const {
  LatticeVector s = LatticeVector::zero(ambient_dim());
  for (const auto& g : gens_) s += g;
  return s;
}

std::string Cone::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ",";
    s += gens_[i].to_string();
  }
  return s + ">";
}

bool canonical_less(const Cone& a, const Cone& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.generators() < b.generators();
}

Integer cone_determinant(std::span<const LatticeVector> generators) {
  if (generators.empty()) throw Error(ErrorKind::Empty, "determinant of an empty generator list");
  const std::size_t n = generators.front().dim();
  const std::size_t r = generators.size();
  if (r > n) {
    throw Error(ErrorKind::Unsupported,
                "determinant needs r <= n generators (cone is not simplicial)");
  }
  Integer g = 0;
  for_each_subset(n, r, [&](std::span<const std::size_t> coords) {
    std::vector<LatticeVector> minor;
    minor.reserve(r);
    for (const auto& v : generators) {
      std::vector<Integer> row;
      row.reserve(r);
      for (auto c : coords) row.push_back(v[c]);
      minor.emplace_back(std::move(row));
    }
    g = gcd(g, linalg::determinant(minor));
    return true;
  });
  if (g == 0) throw Error(ErrorKind::RankDeficient, "generators are linearly dependent");
  return g;
}

Integer cone_determinant(const Cone& c) { return cone_determinant(std::span(c.generators())); }

bool is_regular(const Cone& c) {
  if (!c.is_simplicial()) return false;
  return cone_determinant(c) == 1;
}

Cone extreme_rays(std::span<const LatticeVector> inequalities,
                  std::span<const LatticeVector> equalities, std::size_t n) {
  if (n == 0 || n > kMaxAmbient) {
    throw Error(ErrorKind::Unsupported, "extreme_rays is implemented for n <= 3, got " + std::to_string(n));
  }
  std::vector<LatticeVector> all(equalities.begin(), equalities.end());
  all.insert(all.end(), inequalities.begin(), inequalities.end());
  for (const auto& a : all)
    if (a.dim() != n) throw Error(ErrorKind::InvalidArgument, "constraint dimension mismatch");
  if (linalg::rank(all, n) < n) throw Error(ErrorKind::NotPointed, "constraint region contains a line");

  const auto eq = independent_rows(equalities, n);
  if (eq.size() == n) throw Error(ErrorKind::Empty, "equalities leave only the origin");
  const std::size_t k = n - 1 - eq.size();

  auto feasible = [&](const LatticeVector& r) {
    for (const auto& a : inequalities)
      if (dot(a, r) < 0) return false;
    return true;
  };

  std::vector<LatticeVector> rays;
  std::vector<LatticeVector> rows(eq);
  for_each_subset(inequalities.size(), k, [&](std::span<const std::size_t> idx) {
    rows.resize(eq.size());
    for (auto i : idx) rows.push_back(inequalities[i]);
    LatticeVector r = linalg::kernel_vector(rows);
    if (r.is_zero()) return true;
    r = make_primitive(r);
    if (feasible(r)) rays.push_back(r);
    LatticeVector m = -r;
    if (feasible(m)) rays.push_back(m);
    return true;
  });
  if (rays.empty()) throw Error(ErrorKind::Empty, "constraint region is {0}");
  return Cone(std::move(rays));
}

std::optional<Cone> intersect(const Cone& a, const Cone& b) {
  std::vector<LatticeVector> ineq(a.facet_normals());
  ineq.insert(ineq.end(), b.facet_normals().begin(), b.facet_normals().end());
  std::vector<LatticeVector> eq(a.equalities());
  eq.insert(eq.end(), b.equalities().begin(), b.equalities().end());
  try {
    return extreme_rays(ineq, eq, a.ambient_dim());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Empty) return std::nullopt;
    throw;
  }
}

bool is_face_of(const Cone& face, const Cone& c) {
  if (face.ambient_dim() != c.ambient_dim() || !c.contains(face)) return false;
  const LatticeVector p = face.interior_point();
  std::vector<LatticeVector> minimal;
  for (const auto& g : c.generators()) {
    bool on_all = true;
    for (const auto& u : c.facet_normals()) {
      if (dot(u, p) == 0 && dot(u, g) != 0) {
        on_all = false;
        break;
      }
    }
    if (on_all) minimal.push_back(g);
  }
  return minimal == face.generators();
}

std::vector<Cone> faces(const Cone& c) {
  const auto& facets = c.facet_normals();
  const auto& gens = c.generators();
  std::set<std::vector<LatticeVector>> seen;
  std::vector<Cone> out;
  const std::size_t m = facets.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<LatticeVector> g;
    for (const auto& v : gens) {
      bool keep = true;
      for (std::size_t i = 0; i < m && keep; ++i)
        if ((mask >> i & 1) && dot(facets[i], v) != 0) keep = false;
      if (keep) g.push_back(v);
    }
    if (g.empty() || !seen.insert(g).second) continue;
    out.emplace_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace toricres
