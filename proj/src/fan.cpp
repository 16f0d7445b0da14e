#include "toricres/fan.hpp"

#include <algorithm>

namespace toricres {

namespace {

bool generator_subset(const Cone& a, const Cone& b) {
  return std::includes(b.generators().begin(), b.generators().end(), a.generators().begin(),
                       a.generators().end());
}

}  // namespace

Fan::Fan(std::vector<Cone> cones) : cones_(std::move(cones)) {
  std::sort(cones_.begin(), cones_.end(), canonical_less);
  cones_.erase(std::unique(cones_.begin(), cones_.end()), cones_.end());
  faces_.resize(cones_.size());
  for (std::size_t i = 0; i < cones_.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      // Faces are spanned by subsets of the generators.
      if (cones_[j].dim() > cones_[i].dim() || !generator_subset(cones_[j], cones_[i])) continue;
      if (is_face_of(cones_[j], cones_[i])) faces_[i].push_back(j);
    }
  }
}

Fan Fan::with_all_faces(std::span<const Cone> cones) {
  std::vector<Cone> all;
  for (const auto& c : cones) {
    auto fs = faces(c);
    all.insert(all.end(), fs.begin(), fs.end());
  }
  return Fan(std::move(all));
}

std::optional<std::size_t> Fan::find(const Cone& c) const {
  auto it = std::lower_bound(cones_.begin(), cones_.end(), c, canonical_less);
  if (it != cones_.end() && *it == c) return static_cast<std::size_t>(it - cones_.begin());
  return std::nullopt;
}

std::vector<std::size_t> Fan::maximal() const {
  std::vector<bool> proper_face(cones_.size(), false);
  for (std::size_t i = 0; i < cones_.size(); ++i)
    for (auto j : faces_[i])
      if (j != i) proper_face[j] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (!proper_face[i]) out.push_back(i);
  return out;
}

FanCheck validate_fan(const Fan& f) {
  const auto& cs = f.cones();
  for (const auto& c : cs) {
    for (const auto& face : faces(c)) {
      if (!f.find(face)) {
        return {false, "face " + face.to_string() + " of " + c.to_string() + " is not a member"};
      }
    }
  }
  // With face closure in place it suffices to compare maximal members: the
  // meet of two faces is cut out of the meet of the maximal cones above them.
  const auto mx = f.maximal();
  for (std::size_t a = 0; a < mx.size(); ++a) {
    for (std::size_t b = a + 1; b < mx.size(); ++b) {
      const Cone& ci = cs[mx[a]];
      const Cone& cj = cs[mx[b]];
      if (ci.ambient_dim() != cj.ambient_dim()) {
        return {false, "cones " + ci.to_string() + " and " + cj.to_string() + " live in different dimensions"};
      }
      auto meet = intersect(ci, cj);
      if (!meet) continue;
      if (!is_face_of(*meet, ci) || !is_face_of(*meet, cj)) {
        return {false, "intersection " + meet->to_string() + " of " + ci.to_string() + " and " + cj.to_string() +
                           " is not a face of both"};
      }
    }
  }
  return {};
}

}  // namespace toricres
