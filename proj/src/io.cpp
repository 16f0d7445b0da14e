#include "toricres/io.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

namespace toricres {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::InvalidArgument, "malformed JSON: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) malformed(std::string("field \"") + key + "\" is not an array");
  return a;
}

std::size_t index_from_json(const Json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) malformed("expected an index");
  return j.get<std::size_t>();
}

Json vectors(std::span<const LatticeVector> vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

std::vector<LatticeVector> vectors_from_json(const Json& j) {
  if (!j.is_array()) malformed("expected a list of vectors");
  std::vector<LatticeVector> out;
  for (const auto& v : j) out.push_back(vector_from_json(v));
  return out;
}

const char* method_name(RefineMethod m) { return m == RefineMethod::Stellar ? "stellar" : "slice"; }

const char* origin_name(RayOrigin o) {
  switch (o) {
    case RayOrigin::FanGenerator:
      return "generator";
    case RayOrigin::ProfilePoint:
      return "profile";
    case RayOrigin::Auxiliary:
      return "auxiliary";
  }
  return "auxiliary";
}

Json edges_json(const auto& edges) {
  Json a = Json::array();
  for (const auto& [u, w] : edges) a.push_back(Json::array({u, w}));
  return a;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

Json errata_json(const Errata& e) {
  return Json{{"spurious", vectors(e.spurious)},
              {"missing", vectors(e.missing)},
              {"duplicates", vectors(e.duplicates)},
              {"garbled", e.garbled}};
}

Json listed_item_json(const ListedItem& it) {
  if (!it.second) return Json{{"point", to_json(it.first)}};
  return Json{{"first", to_json(it.first)},
              {"second", to_json(*it.second)},
              {"last", it.last ? to_json(*it.last) : Json(nullptr)}};
}

}  // namespace

Json to_json(const Integer& a) {
  if (a.fits_slong_p()) return Json(a.get_si());
  return Json(a.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer a;
    if (a.set_str(j.get<std::string>(), 10) != 0) malformed("bad integer string \"" + j.get<std::string>() + "\"");
    return a;
  }
  malformed("expected an integer");
}

Json to_json(const LatticeVector& v) {
  Json a = Json::array();
  for (const auto& c : v.coords()) a.push_back(to_json(c));
  return a;
}

LatticeVector vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) malformed("expected a nonempty integer array");
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(integer_from_json(x));
  return LatticeVector(std::move(c));
}

Json to_json(const Polynomial& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(Json{{"coeff", to_json(c)}, {"exps", e.exps()}});
  return Json{{"nvars", f.nvars()}, {"text", f.to_string()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const Json& j) {
  const std::size_t n = index_from_json(field(j, "nvars"));
  std::vector<std::pair<ExponentVector, Integer>> terms;
  for (const auto& t : array_field(j, "terms")) {
    const Json& e = field(t, "exps");
    if (!e.is_array() || e.size() != n) malformed("exponent vector of the wrong length");
    std::vector<long> exps;
    for (const auto& x : e) {
      if (!x.is_number_integer() || x.get<long>() < 0) malformed("negative or non-integer exponent");
      exps.push_back(x.get<long>());
    }
    terms.emplace_back(ExponentVector(std::move(exps)), integer_from_json(field(t, "coeff")));
  }
  Polynomial f(n, terms);
  if (f.size() != terms.size()) malformed("repeated or zero terms");
  return f;
}

Json to_json(const Cone& c) { return Json{{"dim", c.dim()}, {"generators", vectors(c.generators())}}; }

Cone cone_from_json(const Json& j) {
  Cone c(vectors_from_json(field(j, "generators")));
  if (c.generators() != vectors_from_json(field(j, "generators"))) malformed("generators not canonical");
  return c;
}

Json to_json(const GroebnerFan& g) {
  Json cones = Json::array();
  for (const auto& c : g.cones()) {
    Json e = to_json(c.cone);
    e["maximal"] = c.cone.is_full_dimensional();
    e["initial"] = to_json(c.initial);
    cones.push_back(std::move(e));
  }
  return Json{{"polynomial", to_json(g.polynomial())}, {"cones", cones}};
}

GroebnerFan fan_from_json(const Json& j) {
  std::vector<GroebnerCone> cones;
  for (const auto& c : array_field(j, "cones")) cones.push_back({cone_from_json(c), polynomial_from_json(field(c, "initial"))});
  return GroebnerFan(polynomial_from_json(field(j, "polynomial")), std::move(cones));
}

Json to_json(const Profile& p) {
  Json boundary = Json::array();
  for (const auto& h : p.boundary()) boundary.push_back(h.to_string());
  return Json{{"cone", to_json(p.base())}, {"boundary", boundary}, {"lattice_points", vectors(lattice_points(p))}};
}

Profile profile_from_json(const Json& j) { return Profile(cone_from_json(field(j, "cone"))); }

Json to_json(const RefinedFan& r) {
  Json parents = Json::array();
  for (std::size_t i = 0; i < r.parents().size(); ++i) {
    Json p = to_json(r.parents()[i]);
    p["profile_points"] = vectors(r.profile_points()[i]);
    parents.push_back(std::move(p));
  }
  Json cones = Json::array();
  for (const auto& c : r.cones()) {
    Json e = to_json(c.cone);
    e["parent"] = c.parent;
    cones.push_back(std::move(e));
  }
  Json rays = Json::array();
  for (const auto& ray : r.rays()) rays.push_back(Json{{"vector", to_json(ray.vector)}, {"origin", origin_name(ray.origin)}});
  return Json{{"method", method_name(r.method())}, {"parents", parents}, {"cones", cones}, {"rays", rays}};
}

RefinedFan refined_from_json(const Json& j) {
  const Json& m = field(j, "method");
  if (m != "slice" && m != "stellar") malformed("unknown refinement method");
  std::vector<Cone> parents;
  std::vector<std::vector<LatticeVector>> points;
  for (const auto& p : array_field(j, "parents")) {
    parents.push_back(cone_from_json(p));
    points.push_back(vectors_from_json(field(p, "profile_points")));
  }
  std::vector<RefinedCone> cones;
  for (const auto& c : array_field(j, "cones")) {
    const std::size_t parent = index_from_json(field(c, "parent"));
    if (parent >= parents.size()) malformed("parent index out of range");
    cones.push_back({cone_from_json(c), parent});
  }
  return RefinedFan(std::move(parents), std::move(points), std::move(cones),
                    m == "stellar" ? RefineMethod::Stellar : RefineMethod::SliceTriangulation);
}

Json to_json(const RefinementReport& rep) {
  Json parents = Json::array();
  for (const auto& p : rep.parents) {
    parents.push_back(Json{{"parent", p.parent},
                           {"irreducible", p.irreducible},
                           {"volume_conserved", p.volume_conserved},
                           {"contained", p.contained}});
  }
  return Json{{"ok", rep.ok()},
              {"first_failure", rep.first_failure()},
              {"all_regular", rep.all_regular},
              {"fan_axioms", rep.fan_axioms},
              {"coverage", rep.coverage},
              {"samples", rep.samples},
              {"coverage_failures", rep.coverage_failures},
              {"rays_match", rep.rays_match},
              {"missing_rays", vectors(rep.missing_rays)},
              {"extra_rays", vectors(rep.extra_rays)},
              {"parents", parents}};
}

Json to_json(const ResolutionGraph& g) {
  Json vs = Json::array();
  for (const auto& v : g.vertices) {
    vs.push_back(Json{{"ray", to_json(v.ray)},
                      {"self_intersection", v.self_intersection ? Json(*v.self_intersection) : Json(nullptr)}});
  }
  return Json{{"vertices", vs}, {"edges", edges_json(g.edges)}};
}

ResolutionGraph graph_from_json(const Json& j) {
  ResolutionGraph g;
  for (const auto& v : array_field(j, "vertices")) {
    const Json& s = field(v, "self_intersection");
    if (!s.is_null() && !s.is_number_integer()) malformed("self_intersection must be an integer or null");
    g.vertices.push_back({vector_from_json(field(v, "ray")), s.is_null() ? std::nullopt : std::optional<long>(s.get<long>())});
  }
  for (const auto& e : array_field(j, "edges")) {
    if (!e.is_array() || e.size() != 2) malformed("edge must be a pair");
    const auto u = index_from_json(e[0]), w = index_from_json(e[1]);
    if (u >= w || w >= g.vertices.size()) malformed("edge indices must satisfy i < j < vertex count");
    g.edges.emplace_back(u, w);
  }
  if (!std::is_sorted(g.edges.begin(), g.edges.end()) ||
      std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end()) {
    malformed("edges must be sorted and distinct");
  }
  return g;
}

Json to_json(const JetGraph& g) {
  Json ideals = Json::array();
  Json corr = Json::array();
  if (g.n >= 1) {
    for (const auto& c : an_components(g.n)) ideals.push_back(c.to_string());
    for (int i = 1; i <= g.n; ++i) corr.push_back(to_json(correspondence(i, g.n)));
  }
  return Json{{"n", g.n}, {"ideals", ideals}, {"edges", edges_json(g.edges)}, {"correspondence", corr}};
}

JetGraph jet_graph_from_json(const Json& j) {
  JetGraph g;
  const Json& n = field(j, "n");
  if (!n.is_number_integer() || n.get<int>() < 1) malformed("n must be a positive integer");
  g.n = n.get<int>();
  for (const auto& e : array_field(j, "edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      malformed("edge must be a pair of integers");
    }
    const int u = e[0].get<int>(), w = e[1].get<int>();
    if (u < 1 || u >= w || w > g.n) malformed("edge indices must satisfy 1 <= i < j <= n");
    g.edges.emplace_back(u, w);
  }
  return g;
}

Json to_json(const NdgReport& rep) {
  Json faces = Json::array();
  for (const auto& c : rep.faces) {
    Json face = Json::array();
    for (const auto& e : c.face) face.push_back(e.exps());
    faces.push_back(Json{{"face", face},
                         {"verdict", c.verdict == Verdict::Certified ? "certified" : "indeterminate"},
                         {"witness", vectors(c.witness)}});
  }
  return Json{{"certified", rep.certified()}, {"faces", faces}};
}

std::string to_dot(const ResolutionGraph& g) {
  std::ostringstream out;
  out << "graph resolution {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& v = g.vertices[i];
    const std::string label = v.ray.to_string() + " : " + (v.self_intersection ? std::to_string(*v.self_intersection) : "?");
    out << "  v" << i << " [label=\"" << dot_escape(label) << "\"];\n";
  }
  for (const auto& [u, w] : g.edges) out << "  v" << u << " -- v" << w << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const JetGraph& g) {
  std::ostringstream out;
  out << "graph jets {\n";
  if (g.n >= 1) {
    const auto ideals = an_components(g.n);
    for (int i = 1; i <= g.n; ++i) {
      out << "  j" << i << " [label=\"J" << i << " " << dot_escape(ideals[i - 1].to_string()) << "\"];\n";
    }
  }
  for (const auto& [u, w] : g.edges) out << "  j" << u << " -- j" << w << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_svg(const Fan& f) {
  // corners of the triangle for e1, e2, e3
  constexpr double ax = 40, ay = 440, bx = 440, by = 440, cx = 240, cy = 93.59;
  auto project = [&](const LatticeVector& p) {
    if (p.dim() != 3 || !p.is_nonnegative() || p.is_zero()) {
      throw Error(ErrorKind::Unsupported, "only nonzero vectors of the first orthant in R^3 can be drawn");
    }
    const double s = Integer(p[0] + p[1] + p[2]).get_d();
    const double u = p[0].get_d() / s, v = p[1].get_d() / s, w = p[2].get_d() / s;
    return std::pair<double, double>{u * ax + v * bx + w * cx, u * ay + v * by + w * cy};
  };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" viewBox=\"0 0 480 480\">\n";
  out << "  <polygon points=\"" << fixed(ax) << "," << fixed(ay) << " " << fixed(bx) << "," << fixed(by) << " "
      << fixed(cx) << "," << fixed(cy) << "\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";
  for (const auto& c : f.cones()) {
    if (c.dim() != 2) continue;
    const auto [x1, y1] = project(c.generators()[0]);
    const auto [x2, y2] = project(c.generators()[1]);
    out << "  <line x1=\"" << fixed(x1) << "\" y1=\"" << fixed(y1) << "\" x2=\"" << fixed(x2) << "\" y2=\"" << fixed(y2)
        << "\" stroke=\"black\"/>\n";
  }
  for (const auto& c : f.cones()) {
    if (c.dim() != 1) continue;
    const auto& r = c.generators().front();
    const auto [x, y] = project(r);
    out << "  <circle cx=\"" << fixed(x) << "\" cy=\"" << fixed(y) << "\" r=\"3\" fill=\"black\"/>\n";
    out << "  <text x=\"" << fixed(x + 5) << "\" y=\"" << fixed(y - 5) << "\" font-size=\"10\">" << r.to_string()
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

Json catalog_entry(const FamilyId& id) {
  const auto counts = expected_component_count(id);
  Json cones = Json::array();
  for (const auto& c : expected_cones(id)) {
    Json e{{"id", c.id}, {"generators", vectors(c.cone.generators())}, {"initial", to_json(c.initial)}};
    e["boundary"] = c.boundary ? Json(c.boundary->to_string()) : Json(nullptr);
    cones.push_back(std::move(e));
  }
  Json profiles = Json::array();
  for (const auto& l : expected_profile_listings(id)) {
    Json printed = Json::array();
    for (const auto& it : l.printed) printed.push_back(listed_item_json(it));
    profiles.push_back(Json{{"cone", l.cone_id},
                            {"printed", printed},
                            {"verbatim", vectors(l.verbatim)},
                            {"corrected", vectors(l.corrected)},
                            {"errata", errata_json(l.errata)}});
  }
  return Json{{"name", id.name()},
              {"n", id.n},
              {"polynomial", to_json(ade_polynomial(id))},
              {"components", counts.components},
              {"jet_threshold", counts.jet_threshold},
              {"cones", cones},
              {"profiles", profiles}};
}

Json catalog_to_json(int max_n) {
  Json families = Json::array();
  for (const auto& id : catalog_families(max_n)) families.push_back(catalog_entry(id));
  return Json{{"format", "toricres-catalog"}, {"version", 1}, {"max_n", max_n}, {"families", families}};
}

}  // namespace toricres
