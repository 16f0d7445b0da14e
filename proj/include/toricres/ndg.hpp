#pragma once

#include <span>
#include <vector>

#include "toricres/polynomial.hpp"

namespace toricres {

enum class Verdict { Certified, Indeterminate };

// Exponent-only test for one face F: the matrix with a column (1, alpha)
// per alpha in F. A trivial kernel rules out torus zeros of f|_F where all
// x_i d/dx_i f|_F vanish as well, whatever the coefficients. A nontrivial
// kernel decides nothing; its basis is kept as the witness.
struct FaceCertificate {
  std::vector<ExponentVector> face;  // ascending
  Verdict verdict = Verdict::Certified;
  std::vector<LatticeVector> witness;
  friend bool operator==(const FaceCertificate&, const FaceCertificate&) = default;
};

// Supports of the initial forms over all Gröbner cones, ordered by size,
// then lexicographically. Needs three variables.
std::vector<std::vector<ExponentVector>> newton_faces(const Polynomial& f);

// Throws InvalidArgument for an empty face or one outside the support.
FaceCertificate certify_face(const Polynomial& f, std::span<const ExponentVector> face);

struct NdgReport {
  std::vector<FaceCertificate> faces;
  bool certified() const;
};

NdgReport certify_all(const Polynomial& f);

}  // namespace toricres
