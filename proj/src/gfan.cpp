#include "toricres/gfan.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toricres {

namespace {

bool gcone_less(const GroebnerCone& a, const GroebnerCone& b) { return canonical_less(a.cone, b.cone); }

std::vector<LatticeVector> orthant_rows(std::size_t n) {
  std::vector<LatticeVector> r;
  for (std::size_t i = 0; i < n; ++i) r.push_back(LatticeVector::unit(n, i));
  return r;
}

// Closure of the weights whose argmin over the support is exactly `tight`.
std::optional<Cone> class_closure(const std::vector<ExponentVector>& supp, const std::vector<bool>& tight) {
  const std::size_t n = supp.front().dim();
  std::size_t anchor = 0;
  while (!tight[anchor]) ++anchor;
  const LatticeVector a0 = supp[anchor].to_lattice();
  std::vector<LatticeVector> eq;
  std::vector<LatticeVector> ineq = orthant_rows(n);
  for (std::size_t i = 0; i < supp.size(); ++i) {
    if (i == anchor) continue;
    LatticeVector d = supp[i].to_lattice() - a0;
    (tight[i] ? eq : ineq).push_back(d);
  }
  try {
    return extreme_rays(ineq, eq, n);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Empty) return std::nullopt;
    throw;
  }
}

std::vector<bool> argmin_mask(const LatticeVector& w, const std::vector<ExponentVector>& supp) {
  std::vector<Integer> d;
  for (const auto& a : supp) d.push_back(dot(w, a));
  const Integer m = *std::min_element(d.begin(), d.end());
  std::vector<bool> mask;
  for (const auto& x : d) mask.push_back(x == m);
  return mask;
}

}  // namespace

GroebnerFan::GroebnerFan(Polynomial f, std::vector<GroebnerCone> cones) : f_(std::move(f)), cones_(std::move(cones)) {
  std::sort(cones_.begin(), cones_.end(), gcone_less);
}

std::optional<std::size_t> GroebnerFan::find(const Cone& c) const {
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i].cone == c) return i;
  return std::nullopt;
}

Fan GroebnerFan::to_fan() const {
  std::vector<Cone> cs;
  for (const auto& g : cones_) cs.push_back(g.cone);
  return Fan::with_all_faces(cs);
}

std::vector<GroebnerCone> GroebnerFan::all_cones() const {
  std::vector<GroebnerCone> out;
  const Fan fan = to_fan();
  for (const auto& c : fan.cones()) out.push_back({c, initial_form(c.interior_point(), f_)});
  return out;
}

GroebnerCone groebner_cone_of_weight(const Polynomial& f, const LatticeVector& w) {
  const Polynomial in = initial_form(w, f);
  const auto supp = support(f);
  auto c = class_closure(supp, argmin_mask(w, supp));
  // The class contains w, so the closure is nonzero unless w = 0 is the only member.
  if (!c) throw Error(ErrorKind::Empty, "weight " + w.to_string() + " has a trivial class");
  return {*c, in};
}

GroebnerFan enumerate_fan(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Gröbner fan of the zero polynomial");
  if (f.nvars() != 3) {
    throw Error(ErrorKind::Unsupported, "Gröbner fans are computed for 3 variables, got " + std::to_string(f.nvars()));
  }
  const auto supp = support(f);
  if (supp.size() > 20) throw Error(ErrorKind::Unsupported, "support too large for subset enumeration");
  std::vector<GroebnerCone> out;
  std::set<std::vector<LatticeVector>> seen;
  const std::size_t m = supp.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    std::vector<bool> tight(m);
    for (std::size_t i = 0; i < m; ++i) tight[i] = mask >> i & 1;
    auto c = class_closure(supp, tight);
    if (!c) continue;
    // The class is nonempty exactly when its closure's interior point keeps the same argmin.
    if (argmin_mask(c->interior_point(), supp) != tight) continue;
    if (!seen.insert(c->generators()).second) continue;
    out.push_back({*c, initial_form(c->interior_point(), f)});
  }
  return GroebnerFan(f, std::move(out));
}

std::vector<GroebnerCone> maximal_cones(const GroebnerFan& g) {
  std::vector<GroebnerCone> out;
  for (const auto& c : g.cones())
    if (c.dim() == g.ambient_dim()) out.push_back(c);
  return out;
}

std::vector<GroebnerCone> skeleton(const GroebnerFan& g) {
  std::vector<GroebnerCone> out;
  for (const auto& c : g.cones()) {
    const bool lower = c.dim() < g.ambient_dim();
    if (lower == c.initial.is_monomial()) {
      throw Error(ErrorKind::SkeletonMismatch, "cone " + c.cone.to_string() + " of dimension " +
                                                   std::to_string(c.dim()) + " has initial form " +
                                                   c.initial.to_string());
    }
    if (lower) out.push_back(c);
  }
  return out;
}

NewtonPolyhedron newton_polyhedron(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Newton polyhedron of the zero polynomial");
  const std::size_t n = f.nvars();
  if (n > 3) throw Error(ErrorKind::Unsupported, "Newton polyhedra are computed for at most 3 variables");
  const auto supp = support(f);
  std::vector<LatticeVector> pts;
  for (const auto& a : supp) pts.push_back(a.to_lattice());

  // Facet normals are orthogonal to n-1 independent edge or recession directions.
  std::vector<LatticeVector> dirs = orthant_rows(n);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) dirs.push_back(pts[j] - pts[i]);

  NewtonPolyhedron np;
  std::set<LatticeVector> normals;
  for_each_subset(dirs.size(), n - 1, [&](std::span<const std::size_t> idx) {
    std::vector<LatticeVector> rows;
    for (auto i : idx) rows.push_back(dirs[i]);
    LatticeVector u = linalg::kernel_vector(rows);
    if (u.is_zero()) return true;
    if (!u.is_nonnegative()) u = -u;
    if (!u.is_nonnegative()) return true;
    u = make_primitive(u);
    if (normals.count(u)) return true;
    Integer level = dot(u, pts.front());
    for (const auto& p : pts) level = std::min(level, dot(u, p));
    std::vector<LatticeVector> span_dirs;
    const LatticeVector* base = nullptr;
    for (const auto& p : pts) {
      if (dot(u, p) != level) continue;
      if (!base) base = &p;
      else span_dirs.push_back(p - *base);
    }
    for (std::size_t i = 0; i < n; ++i)
      if (u[i] == 0) span_dirs.push_back(LatticeVector::unit(n, i));
    if (linalg::rank(span_dirs, n) == n - 1) {
      normals.insert(u);
      np.facets.push_back({u, level});
    }
    return true;
  });
  std::sort(np.facets.begin(), np.facets.end(),
            [](const NewtonFacet& a, const NewtonFacet& b) { return a.normal < b.normal; });

  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<LatticeVector> tight;
    for (const auto& fc : np.facets)
      if (dot(fc.normal, pts[i]) == fc.level) tight.push_back(fc.normal);
    if (linalg::rank(tight, n) == n) np.vertices.push_back(supp[i]);
  }
  return np;
}

std::vector<GroebnerCone> dual_newton_cones(const Polynomial& f) {
  const NewtonPolyhedron np = newton_polyhedron(f);
  const std::size_t n = f.nvars();
  const auto supp = support(f);
  const auto& facets = np.facets;

  // A face is determined by its support points and its recession directions.
  using FaceKey = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;
  std::set<FaceKey> seen;
  std::map<std::vector<std::size_t>, std::vector<Cone>> by_label;
  const std::size_t m = facets.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    FaceKey key;
    for (std::size_t a = 0; a < supp.size(); ++a) {
      bool on = true;
      for (std::size_t j = 0; j < m && on; ++j)
        if ((mask >> j & 1) && dot(facets[j].normal, supp[a]) != facets[j].level) on = false;
      if (on) key.first.push_back(a);
    }
    if (key.first.empty()) continue;
    for (std::size_t i = 0; i < n; ++i) {
      bool on = true;
      for (std::size_t j = 0; j < m && on; ++j)
        if ((mask >> j & 1) && facets[j].normal[i] != 0) on = false;
      if (on) key.second.push_back(i);
    }
    if (!seen.insert(key).second) continue;
    // Normal cone: every facet containing the face.
    std::vector<LatticeVector> normals;
    for (const auto& fc : facets) {
      bool contains = std::all_of(key.first.begin(), key.first.end(),
                                  [&](std::size_t a) { return dot(fc.normal, supp[a]) == fc.level; }) &&
                      std::all_of(key.second.begin(), key.second.end(),
                                  [&](std::size_t i) { return fc.normal[i] == 0; });
      if (contains) normals.push_back(fc.normal);
    }
    by_label[key.first].emplace_back(std::move(normals));
  }

  std::vector<GroebnerCone> out;
  for (const auto& [label, cones] : by_label) {
    const Cone* best = &cones.front();
    for (const auto& c : cones)
      if (c.contains(*best)) best = &c;
    for (const auto& c : cones) {
      if (!best->contains(c)) {
        throw Error(ErrorKind::SkeletonMismatch, "normal cones with one label have no largest member: " +
                                                     best->to_string() + " vs " + c.to_string());
      }
    }
    std::vector<ExponentVector> face;
    for (auto a : label) face.push_back(supp[a]);
    out.push_back({*best, restrict_to_face(f, face)});
  }
  std::sort(out.begin(), out.end(), gcone_less);
  return out;
}

}  // namespace toricres
