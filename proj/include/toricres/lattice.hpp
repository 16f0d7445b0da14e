#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toricres/arith.hpp"

namespace toricres {

// An integer vector in Z^n. Weights, cone generators and hyperplane normals
// all use this type.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<Integer> coords);
  LatticeVector(std::initializer_list<long> coords);

  static LatticeVector zero(std::size_t n);
  static LatticeVector unit(std::size_t n, std::size_t i);

  std::size_t dim() const noexcept { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Integer> coords() const noexcept { return coords_; }

  bool is_zero() const;
  bool is_primitive() const;
  // every entry >= 0
  bool is_nonnegative() const;
  // every entry > 0
  bool is_positive() const;

  // gcd of the absolute entries; 0 for the zero vector.
  Integer content() const;

  LatticeVector operator-() const;
  LatticeVector& operator+=(const LatticeVector& other);
  LatticeVector& operator-=(const LatticeVector& other);

  // "(a,b,c)"
  std::string to_string() const;

  friend bool operator==(const LatticeVector& a, const LatticeVector& b);
  friend bool operator<(const LatticeVector& a, const LatticeVector& b);
  friend bool operator!=(const LatticeVector& a, const LatticeVector& b) { return !(a == b); }
  friend bool operator>(const LatticeVector& a, const LatticeVector& b) { return b < a; }

 private:
  std::vector<Integer> coords_;
};

LatticeVector operator+(LatticeVector a, const LatticeVector& b);
LatticeVector operator-(LatticeVector a, const LatticeVector& b);
LatticeVector operator*(const Integer& s, const LatticeVector& v);

Integer dot(const LatticeVector& a, const LatticeVector& b);

// Compares from the last coordinate backwards.
bool colex_less(const LatticeVector& a, const LatticeVector& b);

// Divides by the content; orientation is preserved. Throws ZeroVector.
LatticeVector make_primitive(const LatticeVector& v);

// Primitive vector with its first nonzero entry positive.
LatticeVector canonical_direction(const LatticeVector& v);

// normal . x = offset, with primitive normal whose leading nonzero entry is
// positive. Construction normalizes, so two equal planes compare equal.
class Hyperplane {
 public:
  Hyperplane(const LatticeVector& normal, const Integer& offset);

  const LatticeVector& normal() const noexcept { return normal_; }
  const Integer& offset() const noexcept { return offset_; }
  Integer evaluate(const LatticeVector& x) const { return dot(normal_, x) - offset_; }
  bool contains(const LatticeVector& x) const { return evaluate(x) == 0; }

  // "x+y-3z-1=0" (n=3) or "x1-x2+1=0"
  std::string to_string() const;

  friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
    return a.normal_ == b.normal_ && a.offset_ == b.offset_;
  }
  friend bool operator<(const Hyperplane& a, const Hyperplane& b) {
    return a.normal_ < b.normal_ || (a.normal_ == b.normal_ && a.offset_ < b.offset_);
  }

 private:
  LatticeVector normal_;
  Integer offset_;
};

namespace linalg {

// Rank of the matrix whose rows are the given vectors (all of dimension n).
std::size_t rank(std::span<const LatticeVector> rows, std::size_t n);

// Basis of {x in Q^n : r.x = 0 for all rows r}, each vector scaled to a
// primitive integer vector.
std::vector<LatticeVector> nullspace(std::span<const LatticeVector> rows, std::size_t n);

// Determinant of a square integer matrix given by rows.
Integer determinant(std::span<const LatticeVector> rows);

// For exactly n-1 rows in Z^n: the vector of signed maximal minors, which
// spans the kernel when the rows are independent and is zero otherwise.
LatticeVector kernel_vector(std::span<const LatticeVector> rows);

// Solves sum_i lambda_i columns[i] = target exactly; nullopt if the system
// is inconsistent. Columns must be linearly independent.
std::optional<std::vector<Rational>> solve_columns(std::span<const LatticeVector> columns,
                                                   const LatticeVector& target);

}  // namespace linalg

// Calls fn(indices) for every k-subset of {0..n-1} in lexicographic order;
// stops early when fn returns false.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(std::span<const std::size_t>(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace toricres
