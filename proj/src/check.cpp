#include "toricres/check.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toricres {

namespace {

using V = LatticeVector;

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed catalog entry: missing \"") + key + "\"");
  }
  return j.at(key);
}

std::string join(const std::vector<V>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + vs[i].to_string();
  return "{" + s + "}";
}

struct ListedCone {
  std::string id;
  Cone cone;
  Polynomial initial;
  std::optional<std::string> boundary;
};

std::vector<ListedCone> listed_cones(const Json& entry) {
  std::vector<ListedCone> out;
  for (const auto& e : need(entry, "cones")) {
    const Json& b = need(e, "boundary");
    out.push_back({need(e, "id").get<std::string>(), cone_from_json(e), polynomial_from_json(need(e, "initial")),
                   b.is_null() ? std::nullopt : std::optional<std::string>(b.get<std::string>())});
  }
  return out;
}

CheckItem fan_check(const GroebnerFan& g, const std::vector<ListedCone>& listed) {
  std::map<Cone, Polynomial, decltype(&canonical_less)> computed(&canonical_less);
  for (const auto& c : g.cones()) computed.emplace(c.cone, c.initial);
  for (const auto& l : listed) {
    auto it = computed.find(l.cone);
    if (it == computed.end()) return {"fan", false, l.id + " " + l.cone.to_string() + " is not a cone of the computed fan"};
    if (it->second != l.initial) {
      return {"fan", false, l.id + " " + l.cone.to_string() + ": catalog initial " + l.initial.to_string() +
                                ", computed " + it->second.to_string()};
    }
    computed.erase(it);
  }
  if (!computed.empty()) {
    const auto& [c, in] = *computed.begin();
    return {"fan", false, "computed cone " + c.to_string() + " with initial " + in.to_string() + " is not in the catalog"};
  }
  return {"fan", true, std::to_string(g.cones().size()) + " cones"};
}

CheckItem dual_check(const GroebnerFan& g) {
  auto a = g.cones();
  auto b = dual_newton_cones(g.polynomial());
  auto less = [](const GroebnerCone& x, const GroebnerCone& y) { return canonical_less(x.cone, y.cone); };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  if (a != b) return {"dual-newton", false, "normal fan of the Newton polyhedron differs from the Gröbner fan"};
  return {"dual-newton", true, ""};
}

CheckItem boundary_check(const std::vector<ListedCone>& listed) {
  std::size_t n = 0;
  for (const auto& l : listed) {
    if (!l.boundary) continue;
    ++n;
    const auto planes = profile_of(l.cone).boundary();
    if (planes.size() != 1 || planes.front().to_string() != *l.boundary) {
      std::string got;
      for (const auto& h : planes) got += (got.empty() ? "" : ", ") + h.to_string();
      return {"boundary", false, l.id + ": catalog " + *l.boundary + ", computed " + got};
    }
  }
  return {"boundary", true, std::to_string(n) + " boundary planes"};
}

const ListedCone* find_listed(const std::vector<ListedCone>& listed, const std::string& id) {
  for (const auto& l : listed)
    if (l.id == id) return &l;
  return nullptr;
}

}  // namespace

bool CheckReport::ok() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.passed; });
}

std::optional<CheckItem> CheckReport::first_failure() const {
  for (const auto& c : items)
    if (!c.passed) return c;
  return std::nullopt;
}

CheckReport run_checks(const Json& entry) {
  const FamilyId id = parse_family(need(entry, "name").get<std::string>(), need(entry, "n").get<int>());
  CheckReport rep{id.name(), {}};
  auto add = [&](CheckItem c) { rep.items.push_back(std::move(c)); };

  const Polynomial f = polynomial_from_json(need(entry, "polynomial"));
  const Polynomial expected_f = ade_polynomial(id);
  add({"polynomial", f == expected_f,
       f == expected_f ? f.to_string() : "catalog " + f.to_string() + ", expected " + expected_f.to_string()});

  const auto listed = listed_cones(entry);
  const GroebnerFan g = enumerate_fan(expected_f);
  add(fan_check(g, listed));
  add(dual_check(g));
  add(boundary_check(listed));

  // profile points against the corrected lists
  {
    CheckItem item{"profile", true, ""};
    std::size_t flagged = 0, count = 0;
    for (const auto& p : need(entry, "profiles")) {
      const std::string cid = need(p, "cone").get<std::string>();
      const ListedCone* l = find_listed(listed, cid);
      if (!l) throw Error(ErrorKind::InvalidArgument, "malformed catalog entry: profile of unknown cone " + cid);
      std::vector<V> corrected;
      for (const auto& v : need(p, "corrected")) corrected.push_back(vector_from_json(v));
      const auto computed = lattice_points(profile_of(l->cone));
      ++count;
      const Json& err = need(p, "errata");
      flagged += !need(err, "spurious").empty() || !need(err, "missing").empty() || !need(err, "duplicates").empty() ||
                 need(err, "garbled").get<bool>();
      if (computed != corrected) {
        item = {"profile", false, cid + ": catalog " + join(corrected) + ", computed " + join(computed)};
        break;
      }
    }
    if (item.passed) item.detail = std::to_string(count) + " lists, " + std::to_string(flagged) + " with errata";
    add(item);
  }

  const RefinedFan r = refine_fan(g);
  {
    const auto v = verify_refinement(r);
    add({"refinement", v.ok(),
         v.ok() ? std::to_string(r.parents().size()) + " maximal cones regularized into " + std::to_string(r.cones().size()) +
                      " regular cones"
                : v.first_failure()});
  }

  {
    CheckItem item{"irreducible", true, ""};
    for (const auto& pts : r.profile_points()) {
      const auto irr = irreducible_elements(pts);
      if (irr.size() != pts.size()) {
        item = {"irreducible", false, "reducible points in " + join(pts)};
        break;
      }
    }
    add(item);
  }

  const auto chains = chain_segments(g, r);
  {
    CheckItem item{"chains", true, ""};
    std::size_t vertices = 0;
    for (const auto& c : chains) {
      for (const auto& gv : chain_vertices(c)) {
        ++vertices;
        if (gv.self_intersection != -2) {
          item = {"chains", false, "chain vertex " + gv.ray.to_string() + " is not -2"};
          break;
        }
      }
      if (!item.passed) break;
    }
    if (item.passed) item.detail = std::to_string(vertices) + " chain vertices, all -2";
    add(item);
  }

  {
    const auto nd = certify_all(expected_f);
    CheckItem item{"ndg", nd.certified(), std::to_string(nd.faces.size()) + " faces certified"};
    for (const auto& c : nd.faces) {
      if (c.verdict == Verdict::Certified) continue;
      std::string face;
      for (const auto& e : c.face) face += (face.empty() ? "" : ",") + e.to_string();
      item.detail = "face {" + face + "} indeterminate";
      break;
    }
    add(item);
  }

  {
    const auto counts = expected_component_count(id);
    const int comp = need(entry, "components").get<int>();
    const int thr = need(entry, "jet_threshold").get<int>();
    CheckItem item{"counts", true, std::to_string(comp) + " components, jet order " + std::to_string(thr)};
    if (comp != counts.components || thr != counts.jet_threshold) {
      item = {"counts", false, "catalog (" + std::to_string(comp) + "," + std::to_string(thr) + "), expected (" +
                                   std::to_string(counts.components) + "," + std::to_string(counts.jet_threshold) + ")"};
    } else if (id.family == Family::A) {
      const auto graph = build_graph_An(id.n);
      if (graph.vertices.size() != static_cast<std::size_t>(id.n) || !is_minimal(graph) ||
          !isomorphic_under_correspondence(build_jet_graph(id.n), graph)) {
        item = {"counts", false, "A_n graph is not the minimal path matching the jet graph"};
      }
    } else if (id.family == Family::D) {
      const V a{2, 0, 1}, b{2, id.n - 2, id.n - 1};
      auto it = std::find_if(chains.begin(), chains.end(),
                             [&](const ChainSegment& c) { return c.rays.front() == a && c.rays.back() == b; });
      if (it == chains.end() || it->positive_count() != static_cast<std::size_t>(id.n - 2)) {
        item = {"counts", false, "chain on <(2,0,1),(2,n-2,n-1)> does not have n-2 positive vertices"};
      }
    }
    add(item);
  }
  return rep;
}

}  // namespace toricres
