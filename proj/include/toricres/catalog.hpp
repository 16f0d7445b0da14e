#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toricres/cone.hpp"
#include "toricres/polynomial.hpp"

namespace toricres {

enum class Family { A, D, E6, E7, E8 };

// A family with its parameter; for E6, E7, E8 the parameter is 6, 7, 8.
struct FamilyId {
  Family family;
  int n;

  // "A_3", "D_5", "E_6"
  std::string name() const;
  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

// Throws BadParameter: A needs n >= 1, D needs n >= 4. n is ignored for E.
FamilyId make_family(Family f, int n = 0);
// Accepts "A", "D", "E6", "E7", "E8" (case-insensitive) and "E" with n in 6..8.
FamilyId parse_family(std::string_view name, std::optional<int> n);

// Families checked by the catalog: A_1..A_max, D_4..D_max, E_6, E_7, E_8.
std::vector<FamilyId> catalog_families(int max_n);

// xy - z^(n+1), z^2 - xy^2 - x^(n-1), z^2 + y^3 + x^4, x^2 + y^3 + yz^3, z^2 + y^3 + x^5.
Polynomial ade_polynomial(const FamilyId& id);

struct ComponentCount {
  int components;
  int jet_threshold;
  friend bool operator==(const ComponentCount&, const ComponentCount&) = default;
};

ComponentCount expected_component_count(const FamilyId& id);

// A Gröbner cone as published, with its profile boundary for maximal cones.
struct ExpectedCone {
  std::string id;  // "C1".."C7"
  Cone cone;
  Polynomial initial;
  std::optional<Hyperplane> boundary;
};

// A_n lists C1..C3, the other families C1..C7.
std::vector<ExpectedCone> expected_cones(const FamilyId& id);

// One entry of a printed point list: a single point, or an arithmetic
// progression given by its first two printed terms and its last term. A
// progression whose last term is illegible has no last.
struct ListedItem {
  LatticeVector first;
  std::optional<LatticeVector> second;
  std::optional<LatticeVector> last;
  bool garbled = false;

  static ListedItem point(LatticeVector p) { return {std::move(p), std::nullopt, std::nullopt, false}; }
  static ListedItem progression(LatticeVector a, LatticeVector b, std::optional<LatticeVector> end) {
    const bool g = !end;
    return {std::move(a), std::move(b), std::move(end), g};
  }
  friend bool operator==(const ListedItem&, const ListedItem&) = default;
};

// Points in printed order, duplicates kept. Garbled progressions contribute
// only their printed terms.
std::vector<LatticeVector> materialize(const std::vector<ListedItem>& items);

struct Errata {
  std::vector<LatticeVector> spurious;    // printed but not a profile point
  std::vector<LatticeVector> missing;     // profile point not printed
  std::vector<LatticeVector> duplicates;  // printed more than once
  bool garbled = false;

  bool flagged() const { return garbled || !spurious.empty() || !missing.empty() || !duplicates.empty(); }
  friend bool operator==(const Errata&, const Errata&) = default;
};

Errata compare_listing(const std::vector<ListedItem>& printed, const std::vector<LatticeVector>& corrected);

struct ProfileListing {
  std::string cone_id;
  std::vector<ListedItem> printed;
  std::vector<LatticeVector> verbatim;   // materialized printed list
  std::vector<LatticeVector> corrected;  // sorted
  Errata errata;
};

// Throws InvalidArgument for a cone id without a printed list.
ProfileListing expected_profile_points(const FamilyId& id, std::string_view cone_id);

// One listing per maximal cone, in cone id order.
std::vector<ProfileListing> expected_profile_listings(const FamilyId& id);

}  // namespace toricres
