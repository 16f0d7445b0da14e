#include "toricres/ndg.hpp"

#include <algorithm>
#include <set>

#include "toricres/gfan.hpp"

namespace toricres {

std::vector<std::vector<ExponentVector>> newton_faces(const Polynomial& f) {
  std::set<std::vector<ExponentVector>> seen;
  for (const auto& c : enumerate_fan(f).all_cones()) seen.insert(support(c.initial));
  std::vector<std::vector<ExponentVector>> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

FaceCertificate certify_face(const Polynomial& f, std::span<const ExponentVector> face) {
  if (face.empty()) throw Error(ErrorKind::InvalidArgument, "empty face");
  FaceCertificate cert;
  cert.face.assign(face.begin(), face.end());
  std::sort(cert.face.begin(), cert.face.end());
  cert.face.erase(std::unique(cert.face.begin(), cert.face.end()), cert.face.end());
  for (const auto& e : cert.face) {
    if (e.dim() != f.nvars() || f.coefficient(e) == 0) {
      throw Error(ErrorKind::InvalidArgument, "exponent " + e.to_string() + " is not in the support");
    }
  }
  const std::size_t m = cert.face.size();
  std::vector<LatticeVector> rows{LatticeVector(std::vector<Integer>(m, Integer(1)))};
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    std::vector<Integer> r;
    for (const auto& e : cert.face) r.emplace_back(e[i]);
    rows.emplace_back(std::move(r));
  }
  const auto kernel = linalg::nullspace(rows, m);
  if (!kernel.empty()) {
    cert.verdict = Verdict::Indeterminate;
    for (const auto& k : kernel) cert.witness.push_back(canonical_direction(k));
  }
  return cert;
}

bool NdgReport::certified() const {
  return std::all_of(faces.begin(), faces.end(), [](const FaceCertificate& c) { return c.verdict == Verdict::Certified; });
}

NdgReport certify_all(const Polynomial& f) {
  NdgReport rep;
  for (const auto& face : newton_faces(f)) rep.faces.push_back(certify_face(f, face));
  return rep;
}

}  // namespace toricres
