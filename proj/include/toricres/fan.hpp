#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toricres/cone.hpp"

namespace toricres {

// A finite set of cones in canonical order (dimension, then generators)
// with the face relation among members precomputed. Construction does not
// enforce the fan axioms; validate_fan checks them.
class Fan {
 public:
  Fan() = default;
  explicit Fan(std::vector<Cone> cones);

  // The given cones together with all their faces.
  static Fan with_all_faces(std::span<const Cone> cones);

  const std::vector<Cone>& cones() const noexcept { return cones_; }
  std::size_t size() const noexcept { return cones_.size(); }
  bool empty() const noexcept { return cones_.empty(); }

  // Indices of members that are faces of member i, i included.
  const std::vector<std::size_t>& faces_of(std::size_t i) const { return faces_[i]; }

  std::optional<std::size_t> find(const Cone& c) const;
  // Members that are not a proper face of another member.
  std::vector<std::size_t> maximal() const;

 private:
  std::vector<Cone> cones_;
  std::vector<std::vector<std::size_t>> faces_;
};

struct FanCheck {
  bool ok = true;
  std::string diagnostic;
  explicit operator bool() const noexcept { return ok; }
};

// Face closure and pairwise intersection axioms, checked exactly.
FanCheck validate_fan(const Fan& f);

}  // namespace toricres
