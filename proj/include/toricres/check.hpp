#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricres/io.hpp"

namespace toricres {

struct CheckItem {
  std::string name;
  bool passed;
  std::string detail;
};

struct CheckReport {
  std::string family;
  std::vector<CheckItem> items;

  bool ok() const;
  std::optional<CheckItem> first_failure() const;
};

// Recomputes everything for the family of a catalog entry (the format of
// catalog_entry) and compares against the entry: polynomial, fan, dual
// Newton fan, profile boundaries, profile points, refinement, irreducibility,
// chain self-intersections, non-degeneracy and counts. A malformed entry
// raises InvalidArgument.
CheckReport run_checks(const Json& entry);

}  // namespace toricres
