// Command-line front end. Exit codes: 0 pass, 1 verification failure,
// 2 input error.
#include <unistd.h>

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "toricres/check.hpp"

using namespace toricres;

namespace {

constexpr int kPass = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInputError = 2;

struct RunConfig {
  std::string family;
  std::optional<int> n;
  std::string poly;
  std::size_t nvars = 3;
  std::string format = "text";
  std::string output;
  bool verbose = false;
  bool all = false;
  int max_n = 12;
  std::string catalog;
  std::size_t budget = 200000;
};

// An input problem: reported with exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool color_enabled(const RunConfig& cfg) {
  return cfg.output.empty() && std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout));
}

std::string verdict(bool pass, bool color) {
  if (!color) return pass ? "PASS" : "FAIL";
  return pass ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw InputError("cannot write " + cfg.output);
  out << text;
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  std::string list;
  for (const char* f : allowed) list += (list.empty() ? "" : ", ") + std::string(f);
  throw InputError("format " + cfg.format + " is not available here (use " + list + ")");
}

std::optional<FamilyId> family_of(const RunConfig& cfg) {
  if (cfg.family.empty()) return std::nullopt;
  return parse_family(cfg.family, cfg.n);
}

Polynomial input_polynomial(const RunConfig& cfg) {
  const bool has_family = !cfg.family.empty(), has_poly = !cfg.poly.empty();
  if (has_family == has_poly) throw InputError("give exactly one of --family or --poly");
  if (has_family) return ade_polynomial(*family_of(cfg));
  return parse_polynomial(cfg.poly, cfg.nvars);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string fan_text(const GroebnerFan& g) {
  std::ostringstream out;
  out << "polynomial: " << g.polynomial().to_string() << "\n";
  for (const auto& c : g.cones()) {
    out << (c.cone.is_full_dimensional() ? "maximal  " : "skeleton ") << "dim " << c.dim() << " " << c.cone.to_string()
        << "  initial " << c.initial.to_string() << "\n";
  }
  return out.str();
}

int cmd_fan(const RunConfig& cfg) {
  require_format(cfg, {"text", "json", "svg"});
  const auto g = enumerate_fan(input_polynomial(cfg));
  if (cfg.format == "json") emit(cfg, dump(to_json(g)));
  else if (cfg.format == "svg") emit(cfg, to_svg(g.to_fan()));
  else emit(cfg, fan_text(g));
  return kPass;
}

std::string report_text(const RefinementReport& rep, bool color) {
  std::ostringstream out;
  out << verdict(rep.all_regular, color) << " regular" << (rep.all_regular ? "" : ": " + rep.irregular) << "\n";
  out << verdict(rep.fan_axioms, color) << " fan axioms" << (rep.fan_axioms ? "" : ": " + rep.fan_diagnostic) << "\n";
  out << verdict(rep.coverage, color) << " coverage " << rep.samples - rep.coverage_failures << "/" << rep.samples << "\n";
  out << verdict(rep.rays_match, color) << " rays = profile points";
  if (!rep.rays_match) out << " (" << rep.missing_rays.size() << " missing, " << rep.extra_rays.size() << " extra)";
  out << "\n";
  out << verdict(rep.irreducible(), color) << " irreducible\n";
  out << verdict(rep.contained(), color) << " contained in parents\n";
  out << verdict(rep.volume_conserved(), color) << " volume conserved\n";
  return out.str();
}

int cmd_refine(const RunConfig& cfg) {
  require_format(cfg, {"text", "json", "svg"});
  const auto g = enumerate_fan(input_polynomial(cfg));
  const auto r = refine_fan(g);
  const auto rep = verify_refinement(r);
  if (cfg.format == "json") {
    emit(cfg, dump(Json{{"refinement", to_json(r)}, {"report", to_json(rep)}}));
  } else if (cfg.format == "svg") {
    emit(cfg, to_svg(r.to_fan()));
  } else {
    std::ostringstream out;
    out << "polynomial: " << g.polynomial().to_string() << "\n";
    out << r.parents().size() << " maximal cones, " << r.cones().size() << " regular cones, " << r.rays().size()
        << " rays (" << (r.method() == RefineMethod::Stellar ? "stellar" : "slice triangulation") << ")\n";
    for (std::size_t i = 0; i < r.parents().size(); ++i) {
      out << "parent " << r.parents()[i].to_string() << " profile points:";
      for (const auto& p : r.profile_points()[i]) out << " " << p.to_string();
      out << "\n";
    }
    if (cfg.verbose)
      for (const auto& c : r.cones()) out << "  cone " << c.cone.to_string() << " in parent " << c.parent << "\n";
    out << report_text(rep, color_enabled(cfg));
    emit(cfg, out.str());
  }
  if (!rep.ok()) {
    std::cerr << "verification failed: " << rep.first_failure() << "\n";
    return kVerificationFailure;
  }
  return kPass;
}

std::string graph_text(const ResolutionGraph& g) {
  std::ostringstream out;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& v = g.vertices[i];
    out << "vertex " << i << " " << v.ray.to_string() << " : "
        << (v.self_intersection ? std::to_string(*v.self_intersection) : "?") << "\n";
  }
  for (const auto& [u, w] : g.edges) out << "edge " << u << " -- " << w << "\n";
  return out.str();
}

// Chain vertices of every 2D skeleton cone, joined along the chains. Ends
// are included only where a chain meets another one.
ResolutionGraph chain_graph(const std::vector<ChainSegment>& chains, const std::vector<JunctionReport>& js) {
  ResolutionGraph g;
  std::map<LatticeVector, std::size_t> index;
  auto vertex = [&](const LatticeVector& v, std::optional<long> s) {
    auto [it, fresh] = index.emplace(v, g.vertices.size());
    if (fresh) g.vertices.push_back({v, s});
    return it->second;
  };
  std::map<LatticeVector, std::optional<long>> centers;
  for (const auto& j : js)
    if (j.center.is_positive()) centers[j.center] = j.self_intersection;
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& c : chains) {
    const auto inner = chain_vertices(c);
    std::vector<std::size_t> path;
    if (centers.count(c.rays.front())) path.push_back(vertex(c.rays.front(), centers[c.rays.front()]));
    for (const auto& gv : inner) path.push_back(vertex(gv.ray, gv.self_intersection));
    if (centers.count(c.rays.back())) path.push_back(vertex(c.rays.back(), centers[c.rays.back()]));
    for (std::size_t i = 0; i + 1 < path.size(); ++i) edges.insert({std::min(path[i], path[i + 1]), std::max(path[i], path[i + 1])});
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Found:
      return "found";
    case SolveStatus::Absent:
      return "absent";
    case SolveStatus::BudgetExceeded:
      return "budget exceeded";
  }
  return "absent";
}

int cmd_graph(const RunConfig& cfg) {
  require_format(cfg, {"text", "json", "dot"});
  if (cfg.family.empty()) throw InputError("graph needs --family");
  const FamilyId id = *family_of(cfg);
  if (id.family == Family::A) {
    const auto g = build_graph_An(id.n);
    if (cfg.format == "json") emit(cfg, dump(to_json(g)));
    else if (cfg.format == "dot") emit(cfg, to_dot(g));
    else emit(cfg, graph_text(g) + "minimal: " + (is_minimal(g) ? "true" : "false") + "\n");
    return kPass;
  }

  const auto gf = enumerate_fan(ade_polynomial(id));
  const auto r = refine_fan(gf);
  const auto chains = chain_segments(gf, r);
  const auto js = junctions(gf, chains);
  const auto g = chain_graph(chains, js);

  // candidates: positive rays on skeleton cones; the rest of the skeleton
  // rays act as boundary augments
  std::set<LatticeVector> skeleton_rays, boundary;
  for (const auto& c : chains)
    for (const auto& v : c.rays) (v.is_positive() ? skeleton_rays : boundary).insert(v);
  const std::size_t k = static_cast<std::size_t>(expected_component_count(id).components);
  std::vector<LatticeVector> candidates(skeleton_rays.begin(), skeleton_rays.end());
  if (candidates.size() < k) {
    for (const auto& ray : r.rays())
      if (ray.vector.is_positive() && !skeleton_rays.count(ray.vector)) candidates.push_back(ray.vector);
  }
  std::vector<LatticeVector> bnd(boundary.begin(), boundary.end());
  for (const auto& ray : r.rays())
    if (!ray.vector.is_positive()) bnd.push_back(ray.vector);
  const auto sol = dynkin_solve(candidates, bnd, k, cfg.budget);

  if (cfg.format == "dot") {
    emit(cfg, to_dot(g));
  } else if (cfg.format == "json") {
    Json jc = Json::array();
    for (const auto& c : chains) {
      Json vs = Json::array();
      for (const auto& gv : chain_vertices(c)) {
        vs.push_back(Json{{"ray", to_json(gv.ray)},
                          {"self_intersection", gv.self_intersection ? Json(*gv.self_intersection) : Json(nullptr)}});
      }
      Json rays = Json::array();
      for (const auto& v : c.rays) rays.push_back(to_json(v));
      jc.push_back(Json{{"parent", to_json(c.parent.cone)}, {"rays", rays}, {"vertices", vs}});
    }
    Json jj = Json::array();
    for (const auto& j : js) {
      Json nb = Json::array();
      for (const auto& v : j.neighbours) nb.push_back(to_json(v));
      jj.push_back(Json{{"center", to_json(j.center)},
                        {"neighbours", nb},
                        {"self_intersection", j.self_intersection ? Json(*j.self_intersection) : Json(nullptr)}});
    }
    Json ds{{"status", status_name(sol.status)}, {"k", k}, {"trees_examined", sol.trees_examined}};
    if (sol.status == SolveStatus::Found) ds["graph"] = to_json(sol.graph);
    emit(cfg, dump(Json{{"family", id.name()}, {"chains", jc}, {"junctions", jj}, {"graph", to_json(g)}, {"dynkin", ds}}));
  } else {
    std::ostringstream out;
    out << id.name() << ": " << chains.size() << " chains\n";
    for (const auto& c : chains) {
      out << "chain on " << c.parent.cone.to_string() << ":";
      for (const auto& v : c.rays) out << " " << v.to_string();
      out << "\n";
      for (const auto& gv : chain_vertices(c)) {
        out << "  " << gv.ray.to_string() << " : " << (gv.self_intersection ? std::to_string(*gv.self_intersection) : "?")
            << "\n";
      }
    }
    for (const auto& j : js) {
      out << "junction " << j.center.to_string() << " neighbours";
      for (const auto& v : j.neighbours) out << " " << v.to_string();
      if (j.resolved()) out << " : " << *j.self_intersection << "\n";
      else out << " : junction unresolved (neighbour sum is not a multiple of the center)\n";
    }
    out << "dynkin search over " << candidates.size() << " candidates, k = " << k << ": " << status_name(sol.status)
        << " after " << sol.trees_examined << " trees\n";
    if (sol.status == SolveStatus::Found) out << graph_text(sol.graph);
    emit(cfg, out.str());
  }
  return kPass;
}

int cmd_jets(const RunConfig& cfg) {
  require_format(cfg, {"text", "json", "dot"});
  if (!cfg.family.empty() && family_of(cfg)->family != Family::A) {
    throw InputError("not implemented: only A_n jet components are supported");
  }
  if (!cfg.n) throw InputError("jets needs --n");
  const int n = *cfg.n;
  if (n < 1) throw Error(ErrorKind::BadParameter, "A_n needs n >= 1");
  const auto jg = build_jet_graph(n);
  const bool iso = isomorphic_under_correspondence(jg, build_graph_An(n));
  if (cfg.format == "json") {
    Json j = to_json(jg);
    j["isomorphic"] = iso;
    emit(cfg, dump(j));
  } else if (cfg.format == "dot") {
    emit(cfg, to_dot(jg));
  } else {
    std::ostringstream out;
    const auto ideals = an_components(n);
    for (int i = 1; i <= n; ++i) {
      out << "I" << i << " = " << ideals[i - 1].to_string() << "  ->  " << correspondence(i, n).to_string() << "\n";
    }
    out << "edges:";
    for (const auto& [a, b] : jg.edges) out << " (" << a << "," << b << ")";
    out << "\nisomorphic: " << (iso ? "true" : "false") << "\n";
    emit(cfg, out.str());
  }
  return iso ? kPass : kVerificationFailure;
}

Json load_catalog(const RunConfig& cfg) {
  if (cfg.catalog.empty()) return catalog_to_json(std::max(cfg.max_n, cfg.n.value_or(0)));
  std::ifstream in(cfg.catalog);
  if (!in) throw InputError("cannot read " + cfg.catalog);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(cfg.catalog + ": " + e.what());
  }
}

int cmd_check(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  if (cfg.all == !cfg.family.empty()) throw InputError("give exactly one of --family or --all");
  std::vector<FamilyId> ids;
  if (cfg.all) ids = catalog_families(cfg.max_n);
  else ids.push_back(*family_of(cfg));

  const Json catalog = load_catalog(cfg);
  if (!catalog.is_object() || !catalog.contains("families") || !catalog["families"].is_array()) {
    throw InputError("catalog has no \"families\" list");
  }
  const bool color = color_enabled(cfg);
  std::ostringstream out;
  Json reports = Json::array();
  std::optional<std::string> failure;
  for (const auto& id : ids) {
    const Json* entry = nullptr;
    for (const auto& e : catalog["families"])
      if (e.is_object() && e.value("name", "") == id.name()) entry = &e;
    if (!entry) throw InputError("catalog has no entry for " + id.name());
    const auto rep = run_checks(*entry);
    Json items = Json::array();
    for (const auto& c : rep.items) {
      if (cfg.verbose || !c.passed || cfg.format == "text")
        out << verdict(c.passed, color) << " " << rep.family << " " << c.name << (c.detail.empty() ? "" : ": " + c.detail)
            << "\n";
      items.push_back(Json{{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    reports.push_back(Json{{"family", rep.family}, {"ok", rep.ok()}, {"checks", items}});
    if (!rep.ok() && !failure) {
      const auto f = *rep.first_failure();
      failure = rep.family + " " + f.name + ": " + f.detail;
    }
  }
  if (cfg.format == "json") emit(cfg, dump(Json{{"ok", !failure}, {"families", reports}}));
  else emit(cfg, out.str() + (failure ? "first failure: " + *failure + "\n" : "all checks passed\n"));
  if (failure) {
    std::cerr << "check failed: " << *failure << "\n";
    return kVerificationFailure;
  }
  return kPass;
}

int cmd_catalog(const RunConfig& cfg) {
  require_format(cfg, {"json"});
  emit(cfg, dump(catalog_to_json(cfg.max_n)));
  return kPass;
}

bool verification_kind(ErrorKind k) {
  return k == ErrorKind::Stuck || k == ErrorKind::NotUnimodular || k == ErrorKind::IncompatibleSharedFace ||
         k == ErrorKind::SkeletonMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gröbner fans, regular refinements and resolution data for ADE surface singularities"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "A, D, E6, E7 or E8 (also D_5, E_6)");
    sub->add_option("--n", cfg.n, "family parameter");
    sub->add_option("--format", cfg.format, "text, json, dot or svg");
    sub->add_option("--output,-o", cfg.output, "write to this file instead of stdout");
    sub->add_flag("--verbose,-v", cfg.verbose, "more detail");
  };
  auto* fan = app.add_subcommand("fan", "Gröbner fan of a polynomial or family");
  auto* refine = app.add_subcommand("refine", "regular refinement with its verification report");
  for (auto* sub : {fan, refine}) {
    common(sub);
    sub->add_option("--poly", cfg.poly, "polynomial in x, y, z (or x1..xn)");
    sub->add_option("--nvars", cfg.nvars, "number of variables of --poly")->check(CLI::PositiveNumber);
  }
  auto* graph = app.add_subcommand("graph", "resolution graph (A_n) or chain data (D, E)");
  common(graph);
  graph->add_option("--budget", cfg.budget, "tree budget of the Dynkin search");
  auto* jets = app.add_subcommand("jets", "A_n jet components and their graph");
  common(jets);
  auto* check = app.add_subcommand("check", "recompute and compare against the catalog");
  common(check);
  check->add_flag("--all", cfg.all, "every catalog family up to --max-n");
  check->add_option("--max-n", cfg.max_n, "largest A_n and D_n parameter")->check(CLI::Range(4, 40));
  check->add_option("--catalog", cfg.catalog, "catalog JSON fixture (default: built in)");
  auto* catalog = app.add_subcommand("catalog", "write the built-in catalog as JSON");
  catalog->add_option("--max-n", cfg.max_n, "largest A_n and D_n parameter")->check(CLI::Range(4, 40));
  catalog->add_option("--output,-o", cfg.output, "write to this file instead of stdout");
  cfg.format = "text";
  catalog->callback([&] { cfg.format = "json"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (fan->parsed()) return cmd_fan(cfg);
    if (refine->parsed()) return cmd_refine(cfg);
    if (graph->parsed()) return cmd_graph(cfg);
    if (jets->parsed()) return cmd_jets(cfg);
    if (check->parsed()) return cmd_check(cfg);
    return cmd_catalog(cfg);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return verification_kind(e.kind()) ? kVerificationFailure : kInputError;
  }
}
