#include "toricres/refine.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>

namespace toricres {

namespace {

using V = LatticeVector;

std::vector<Cone> facets_of(const Cone& c) {
  std::vector<Cone> out;
  for (auto& f : faces(c))
    if (f.dim() + 1 == c.dim()) out.push_back(std::move(f));
  return out;
}

// Sum of determinants over the cones joining the first generator to the
// facets that miss it. For the hull of the origin and the generators this is
// the normalized volume.
Integer normalized_volume(const Cone& c) {
  if (c.is_simplicial()) return cone_determinant(c);
  const V& apex = c.generators().front();
  Integer sum = 0;
  for (const auto& f : facets_of(c)) {
    if (f.has_ray(apex)) continue;
    auto gens = f.generators();
    gens.push_back(apex);
    sum += cone_determinant(std::span<const V>(gens));
  }
  return sum;
}

std::vector<V> sorted_unique(std::span<const V> pts) {
  std::vector<V> out(pts.begin(), pts.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

using Point2 = std::array<Integer, 2>;

Integer orient(const Point2& a, const Point2& b, const Point2& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

// Placing triangulation: points arrive in an order where each one lies
// outside the hull of its predecessors, and each visible hull edge is
// coned to the new point. Triangles come out counterclockwise.
std::vector<std::array<std::size_t, 3>> placing_triangulation(const std::vector<Point2>& pts) {
  std::vector<std::array<std::size_t, 3>> tris;
  if (pts.size() < 3) return tris;
  std::size_t q = 2;
  while (q < pts.size() && orient(pts[0], pts[1], pts[q]) == 0) ++q;
  if (q == pts.size()) return tris;

  std::set<std::pair<std::size_t, std::size_t>> boundary;  // directed, interior on the left
  auto add = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (orient(pts[a], pts[b], pts[c]) < 0) std::swap(a, b);
    tris.push_back({a, b, c});
    for (auto [u, v] : {std::pair{a, b}, std::pair{b, c}, std::pair{c, a}}) {
      if (!boundary.erase({v, u})) boundary.insert({u, v});
    }
  };
  // The collinear prefix is ordered along its line.
  for (std::size_t i = 0; i + 1 < q; ++i) add(i, i + 1, q);
  for (std::size_t r = q + 1; r < pts.size(); ++r) {
    std::vector<std::pair<std::size_t, std::size_t>> visible;
    for (const auto& [a, b] : boundary)
      if (orient(pts[a], pts[b], pts[r]) < 0) visible.emplace_back(a, b);
    if (visible.empty()) throw Error(ErrorKind::NotUnimodular, "insertion point inside the current hull");
    for (const auto& [a, b] : visible) add(a, r, b);
  }
  return tris;
}

Cone regular_or_throw(std::vector<V> gens) {
  Cone c(std::move(gens));
  if (!is_regular(c)) throw Error(ErrorKind::NotUnimodular, "triangle " + c.to_string() + " is not unimodular");
  return c;
}

void check_on_boundary(const Cone& c, const BoundaryFacet& f, std::span<const V> pts) {
  for (const auto& p : pts) {
    if (!c.contains(p) || dot(f.outward, p) != f.level) {
      throw Error(ErrorKind::NonCoplanar, "point " + p.to_string() + " is off the boundary of " + c.to_string());
    }
  }
  for (const auto& g : c.generators()) {
    if (!std::binary_search(pts.begin(), pts.end(), g)) {
      throw Error(ErrorKind::InvalidArgument, "generator " + g.to_string() + " missing from the points");
    }
  }
}

// A nonzero lattice point sum l_i g_i with 0 <= l_i < 1 for a full-dimensional
// simplicial cone of determinant d > 1, minimizing sum l_i. Such points form
// the group Z^n / (g_i Z), walked here through the residues of d l mod d.
std::optional<V> parallelepiped_point(const Cone& c) {
  const auto& g = c.generators();
  const std::size_t n = c.ambient_dim();
  if (!c.is_simplicial() || !c.is_full_dimensional()) return std::nullopt;
  const Integer d = abs(linalg::determinant(g));
  if (d <= 1 || d > 1000000) return std::nullopt;
  std::vector<std::vector<Integer>> step;  // d * coordinates of each unit vector
  for (std::size_t j = 0; j < n; ++j) {
    auto x = linalg::solve_columns(g, V::unit(n, j));
    std::vector<Integer> r;
    for (const auto& q : *x) r.push_back(Integer(q * d) % d);
    step.push_back(std::move(r));
  }
  auto reduce = [&](std::vector<Integer>& r) {
    for (auto& v : r) {
      v %= d;
      if (v < 0) v += d;
    }
  };
  std::set<std::vector<Integer>> seen{std::vector<Integer>(n, 0)};
  std::vector<std::vector<Integer>> frontier{std::vector<Integer>(n, 0)};
  std::optional<std::pair<Integer, V>> best;
  while (!frontier.empty()) {
    std::vector<std::vector<Integer>> next;
    for (const auto& r : frontier) {
      for (const auto& st : step) {
        std::vector<Integer> t(n);
        for (std::size_t i = 0; i < n; ++i) t[i] = r[i] + st[i];
        reduce(t);
        if (!seen.insert(t).second) continue;
        next.push_back(t);
        Integer weight = 0;
        V scaled = V::zero(n);
        for (std::size_t i = 0; i < n; ++i) {
          weight += t[i];
          scaled += t[i] * g[i];
        }
        if (weight == 0) continue;
        std::vector<Integer> q(scaled.coords().begin(), scaled.coords().end());
        for (auto& e : q) e /= d;  // exact: the residues describe a lattice point
        const V p(std::move(q));
        if (!best || weight < best->first || (weight == best->first && p < best->second)) best.emplace(weight, p);
      }
    }
    frontier = std::move(next);
  }
  if (!best) return std::nullopt;
  return make_primitive(best->second);
}

std::vector<Cone> stellar_loop(std::vector<Cone> cones, std::span<const LatticeVector> candidates, bool extend);

}  // namespace

LatticeVector AffineChart::lift(std::span<const Integer> coords) const {
  if (coords.size() != basis.size()) throw Error(ErrorKind::InvalidArgument, "chart coordinate count mismatch");
  V p = base;
  for (std::size_t i = 0; i < coords.size(); ++i) p += coords[i] * basis[i];
  return p;
}

std::vector<Integer> AffineChart::coordinates(const LatticeVector& p) const {
  const V d = p - base;
  if (basis.empty()) {
    if (!d.is_zero()) throw Error(ErrorKind::InvalidArgument, p.to_string() + " is off the chart");
    return {};
  }
  auto x = linalg::solve_columns(basis, d);
  if (!x) throw Error(ErrorKind::InvalidArgument, p.to_string() + " is off the chart");
  std::vector<Integer> out;
  for (const auto& q : *x) {
    if (q.get_den() != 1) throw Error(ErrorKind::InvalidArgument, p.to_string() + " is off the chart lattice");
    out.push_back(q.get_num());
  }
  return out;
}

AffineChart slice_coordinates(const Hyperplane& h) { return slice_coordinates(h.normal(), h.offset()); }

AffineChart slice_coordinates(const LatticeVector& normal, const Integer& offset) {
  const Integer g = normal.content();
  if (g == 0) throw Error(ErrorKind::ZeroVector, "slice normal is zero");
  if (offset % g != 0) {
    throw Error(ErrorKind::NoLatticePoints, "no lattice points on " + normal.to_string() + ".x = " + offset.get_str());
  }
  const std::size_t n = normal.dim();
  // Unimodular column operations reduce the row normal^T to (g,0,...,0);
  // the columns then split Z^n into a coset representative and a kernel basis.
  std::vector<Integer> row(normal.coords().begin(), normal.coords().end());
  std::vector<V> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(V::unit(n, i));
  while (true) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (row[i] != 0 && (piv == n || abs(row[i]) < abs(row[piv]))) piv = i;
    bool done = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == piv || row[j] == 0) continue;
      const Integer q = floor_div(row[j], row[piv]);
      row[j] -= q * row[piv];
      cols[j] -= q * cols[piv];
      if (row[j] != 0) done = false;
    }
    if (done) {
      // Pivot column first; the rest keep their order.
      std::rotate(row.begin(), row.begin() + piv, row.begin() + piv + 1);
      std::rotate(cols.begin(), cols.begin() + piv, cols.begin() + piv + 1);
      break;
    }
  }
  if (row[0] < 0) cols[0] = -cols[0];
  AffineChart chart;
  chart.base = Integer(offset / g) * cols[0];
  chart.basis.assign(cols.begin() + 1, cols.end());
  return chart;
}

std::vector<Cone> triangulate_cone(const Cone& c, std::span<const LatticeVector> points) {
  const auto pts = sorted_unique(points);
  if (c.dim() == 1) {
    if (pts != c.generators()) throw Error(ErrorKind::NonCoplanar, "ray " + c.to_string() + " with extra points");
    return {c};
  }
  const Profile prof(c);
  if (prof.boundary_facets().size() != 1) {
    throw Error(ErrorKind::NonCoplanar, c.to_string() + " has " + std::to_string(prof.boundary_facets().size()) +
                                            " boundary facets");
  }
  const BoundaryFacet& facet = prof.boundary_facets().front();
  check_on_boundary(c, facet, pts);

  std::vector<Cone> out;
  if (c.dim() == 2) {
    const auto& g = c.generators();
    std::vector<std::pair<Rational, V>> along;
    for (const auto& p : pts) {
      auto x = linalg::solve_columns(g, p);
      along.emplace_back((*x)[1] / ((*x)[0] + (*x)[1]), p);
    }
    std::sort(along.begin(), along.end());
    for (std::size_t i = 0; i + 1 < along.size(); ++i) out.push_back(regular_or_throw({along[i].second, along[i + 1].second}));
  } else {
    if (!c.is_full_dimensional() || c.dim() != 3) throw Error(ErrorKind::Unsupported, "triangulation needs a 3D cone");
    const AffineChart chart = slice_coordinates(facet.outward, facet.level);
    std::vector<Point2> flat;
    for (const auto& p : pts) {
      const auto xy = chart.coordinates(p);
      flat.push_back({xy[0], xy[1]});
    }
    for (const auto& t : placing_triangulation(flat)) out.push_back(regular_or_throw({pts[t[0]], pts[t[1]], pts[t[2]]}));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Cone> stellar_refine(const Cone& c, std::span<const LatticeVector> candidates) {
  return stellar_refine(std::vector<Cone>{c}, candidates);
}

std::vector<Cone> stellar_refine(std::vector<Cone> cones, std::span<const LatticeVector> candidates) {
  return stellar_loop(std::move(cones), candidates, false);
}

namespace {

std::vector<Cone> stellar_loop(std::vector<Cone> cones, std::span<const LatticeVector> candidates, bool extend) {
  // Rays are primitive, so a multiple of an existing ray would make no progress.
  std::vector<V> prim;
  for (const auto& v : candidates)
    if (!v.is_zero()) prim.push_back(make_primitive(v));
  const auto cand = sorted_unique(prim);
  while (true) {
    auto bad = std::find_if(cones.begin(), cones.end(), [](const Cone& c) { return !is_regular(c); });
    if (bad == cones.end()) break;
    // A point of a cone that is not one of its rays cannot be a ray of any
    // other member, so every such candidate is still unused.
    auto p = std::find_if(cand.begin(), cand.end(), [&](const V& v) { return bad->contains(v) && !bad->has_ray(v); });
    auto cone_over = [](const Cone& s, const V& apex, std::vector<Cone>& out) {
      for (const auto& f : facets_of(s)) {
        if (f.contains(apex)) continue;
        auto gens = f.generators();
        gens.push_back(apex);
        out.emplace_back(std::move(gens));
      }
    };
    std::vector<Cone> next;
    if (p == cand.end()) {
      // Without a new point a non-simplicial cone is pulled at its smallest
      // ray. Its facets have at most two rays up to dimension three, so the
      // neighbours stay untouched.
      if (bad->is_simplicial() || bad->dim() > 3) {
        std::optional<V> q;
        if (extend) q = parallelepiped_point(*bad);
        if (!q) throw Error(ErrorKind::Stuck, "no candidate subdivides " + bad->to_string());
        for (const auto& s : cones) {
          if (!s.contains(*q) || s.has_ray(*q))
            next.push_back(s);
          else
            cone_over(s, *q, next);
        }
        cones = std::move(next);
        continue;
      }
      for (const auto& s : cones) {
        if (s == *bad)
          cone_over(s, s.generators().front(), next);
        else
          next.push_back(s);
      }
      cones = std::move(next);
      continue;
    }
    for (const auto& s : cones) {
      if (!s.contains(*p) || s.has_ray(*p))
        next.push_back(s);
      else
        cone_over(s, *p, next);
    }
    cones = std::move(next);
  }
  std::sort(cones.begin(), cones.end(), canonical_less);
  return cones;
}

}  // namespace

RefinedFan::RefinedFan(std::vector<Cone> parents, std::vector<std::vector<LatticeVector>> profile_points,
                       std::vector<RefinedCone> cones, RefineMethod method)
    : parents_(std::move(parents)), points_(std::move(profile_points)), cones_(std::move(cones)), method_(method) {
  if (points_.size() != parents_.size()) throw Error(ErrorKind::InvalidArgument, "one point list per parent");
  for (auto& pts : points_) pts = sorted_unique(pts);
  for (const auto& c : cones_)
    if (c.parent >= parents_.size()) throw Error(ErrorKind::InvalidArgument, "parent index out of range");
  std::sort(cones_.begin(), cones_.end(), [](const RefinedCone& a, const RefinedCone& b) {
    if (a.parent != b.parent) return a.parent < b.parent;
    return canonical_less(a.cone, b.cone);
  });
  std::set<V> rays;
  for (const auto& c : cones_) rays.insert(c.cone.generators().begin(), c.cone.generators().end());
  for (const auto& r : rays) {
    const bool gen = std::any_of(parents_.begin(), parents_.end(), [&](const Cone& p) { return p.has_ray(r); });
    const bool listed = std::any_of(points_.begin(), points_.end(),
                                    [&](const std::vector<V>& pts) { return std::binary_search(pts.begin(), pts.end(), r); });
    rays_.push_back({r, gen ? RayOrigin::FanGenerator : listed ? RayOrigin::ProfilePoint : RayOrigin::Auxiliary});
  }
}

Fan RefinedFan::to_fan() const {
  std::vector<Cone> cs;
  for (const auto& c : cones_) cs.push_back(c.cone);
  return Fan::with_all_faces(cs);
}

RefinedFan refine_fan(const GroebnerFan& g) {
  std::vector<Cone> parents;
  std::vector<std::vector<V>> points;
  for (const auto& m : maximal_cones(g)) {
    parents.push_back(m.cone);
    points.push_back(lattice_points(profile_of(m.cone)));
  }
  std::vector<RefinedCone> cones;
  bool coplanar = true;
  for (std::size_t i = 0; i < parents.size() && coplanar; ++i) {
    try {
      for (auto& c : triangulate_cone(parents[i], points[i])) cones.push_back({std::move(c), i});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonCoplanar) throw;
      coplanar = false;
    }
  }
  if (!coplanar) {
    std::vector<V> cand;
    for (const auto& p : points) cand.insert(cand.end(), p.begin(), p.end());
    cones.clear();
    for (auto& c : stellar_loop(parents, cand, true)) {
      auto it = std::find_if(parents.begin(), parents.end(), [&](const Cone& p) { return p.contains(c); });
      cones.push_back({std::move(c), static_cast<std::size_t>(it - parents.begin())});
    }
    return RefinedFan(std::move(parents), std::move(points), std::move(cones), RefineMethod::Stellar);
  }

  // Both sides of a shared codimension-one face must cut it identically.
  auto sides = [&](std::size_t i, const Cone& face) {
    std::set<std::vector<V>> out;
    for (const auto& c : cones) {
      if (c.parent != i) continue;
      for (const auto& f : facets_of(c.cone))
        if (face.contains(f)) out.insert(f.generators());
    }
    return out;
  };
  for (std::size_t i = 0; i < parents.size(); ++i) {
    for (std::size_t j = i + 1; j < parents.size(); ++j) {
      auto meet = intersect(parents[i], parents[j]);
      if (!meet || meet->dim() + 1 != parents[i].dim()) continue;
      if (sides(i, *meet) != sides(j, *meet)) {
        throw Error(ErrorKind::IncompatibleSharedFace, "shared face " + meet->to_string() + " is cut differently");
      }
    }
  }
  return RefinedFan(std::move(parents), std::move(points), std::move(cones));
}

bool RefinementReport::irreducible() const {
  return std::all_of(parents.begin(), parents.end(), [](const ParentVerdict& p) { return p.irreducible; });
}

bool RefinementReport::volume_conserved() const {
  return std::all_of(parents.begin(), parents.end(), [](const ParentVerdict& p) { return p.volume_conserved; });
}

bool RefinementReport::contained() const {
  return std::all_of(parents.begin(), parents.end(), [](const ParentVerdict& p) { return p.contained; });
}

bool RefinementReport::ok() const { return first_failure().empty(); }

std::string RefinementReport::first_failure() const {
  if (!all_regular) return "regularity: " + irregular;
  if (!fan_axioms) return "fan axioms: " + fan_diagnostic;
  if (!coverage) return "coverage: " + std::to_string(coverage_failures) + " of " + std::to_string(samples) + " samples";
  if (!rays_match) {
    std::string s = "ray set:";
    auto list = [&](const char* what, const std::vector<LatticeVector>& vs) {
      if (vs.empty()) return;
      s += std::string(" ") + std::to_string(vs.size()) + " " + what;
      for (std::size_t i = 0; i < vs.size() && i < 5; ++i) s += " " + vs[i].to_string();
      if (vs.size() > 5) s += " ...";
    };
    list("missing", missing_rays);
    list("extra", extra_rays);
    return s;
  }
  for (const auto& p : parents) {
    const std::string where = " in parent " + std::to_string(p.parent);
    if (!p.irreducible) return "irreducibility" + where;
    if (!p.contained) return "containment" + where;
    if (!p.volume_conserved) return "volume" + where;
  }
  return {};
}

RefinementReport verify_refinement(const RefinedFan& r, std::size_t samples) {
  RefinementReport rep;
  for (const auto& c : r.cones()) {
    if (is_regular(c.cone)) continue;
    rep.all_regular = false;
    rep.irregular = c.cone.to_string() +
                    (c.cone.is_simplicial() ? " has determinant " + cone_determinant(c.cone).get_str() : " is not simplicial");
    break;
  }

  const auto check = validate_fan(r.to_fan());
  rep.fan_axioms = check.ok;
  rep.fan_diagnostic = check.diagnostic;

  if (!r.parents().empty()) {
    const std::size_t n = r.parents().front().ambient_dim();
    std::mt19937_64 rng(0x70a1c5eedULL);
    std::uniform_int_distribution<long> coord(1, 1000);
    rep.samples = samples;
    for (std::size_t t = 0; t < samples; ++t) {
      std::vector<Integer> w;
      for (std::size_t i = 0; i < n; ++i) w.emplace_back(coord(rng));
      const V wt(std::move(w));
      std::size_t inside = 0;
      bool closed = false;
      for (const auto& c : r.cones()) {
        if (c.cone.is_full_dimensional() && c.cone.contains_in_relative_interior(wt)) ++inside;
        if (c.cone.contains(wt)) closed = true;
      }
      if (!(inside == 1 || (inside == 0 && closed))) ++rep.coverage_failures;
    }
    rep.coverage = rep.coverage_failures == 0;
  }

  std::set<V> expected, actual;
  for (const auto& pts : r.profile_points()) expected.insert(pts.begin(), pts.end());
  for (const auto& ray : r.rays()) actual.insert(ray.vector);
  std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(), std::back_inserter(rep.missing_rays));
  std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(), std::back_inserter(rep.extra_rays));
  rep.rays_match = rep.missing_rays.empty() && rep.extra_rays.empty();

  for (std::size_t i = 0; i < r.parents().size(); ++i) {
    const Cone& parent = r.parents()[i];
    const auto& pts = r.profile_points()[i];
    ParentVerdict v{i, irreducible_elements(pts) == pts, true, true};
    Integer volume = 0;
    for (const auto& c : r.cones()) {
      if (c.parent != i) continue;
      if (!parent.contains(c.cone)) v.contained = false;
      volume += normalized_volume(c.cone);
    }
    // Volumes of the hulls agree only when every ray sits on one slice.
    if (r.method() == RefineMethod::SliceTriangulation) v.volume_conserved = volume == normalized_volume(parent);
    rep.parents.push_back(v);
  }
  return rep;
}

}  // namespace toricres
