#pragma once

#include <json.hpp>
#include <string>

#include "toricres/catalog.hpp"
#include "toricres/jets.hpp"
#include "toricres/ndg.hpp"
#include "toricres/refine.hpp"
#include "toricres/resgraph.hpp"

namespace toricres {

using Json = nlohmann::ordered_json;

// Integers are JSON numbers when they fit in 64 bits, decimal strings
// otherwise; parsers accept both. Malformed documents raise InvalidArgument
// naming the offending field.
Json to_json(const Integer& a);
Json to_json(const LatticeVector& v);
Json to_json(const Polynomial& f);
Json to_json(const Cone& c);
Json to_json(const GroebnerFan& g);
Json to_json(const Profile& p);
Json to_json(const RefinedFan& r);
Json to_json(const RefinementReport& rep);
Json to_json(const ResolutionGraph& g);
Json to_json(const JetGraph& g);
Json to_json(const NdgReport& rep);

Integer integer_from_json(const Json& j);
LatticeVector vector_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j);
Cone cone_from_json(const Json& j);
GroebnerFan fan_from_json(const Json& j);
Profile profile_from_json(const Json& j);
RefinedFan refined_from_json(const Json& j);
ResolutionGraph graph_from_json(const Json& j);
JetGraph jet_graph_from_json(const Json& j);

// Vertex labels "(a,b,c) : -s"; "?" when the chain rule has no solution.
std::string to_dot(const ResolutionGraph& g);
std::string to_dot(const JetGraph& g);

// Cross-section with x + y + z = 1 drawn in the triangle spanned by the
// unit vectors. Every ray of the fan is a labelled dot, every 2D cone an
// edge.
std::string to_svg(const Fan& f);

// The published data of every family up to max_n.
Json catalog_to_json(int max_n);
// The entry of one family, as in catalog_to_json.
Json catalog_entry(const FamilyId& id);

}  // namespace toricres
