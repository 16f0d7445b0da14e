#include "toricres/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace toricres {

LatticeVector::LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}

LatticeVector::LatticeVector(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

LatticeVector LatticeVector::zero(std::size_t n) { return LatticeVector(std::vector<Integer>(n, 0)); }

LatticeVector LatticeVector::unit(std::size_t n, std::size_t i) {
  std::vector<Integer> c(n, 0);
  c.at(i) = 1;
  return LatticeVector(std::move(c));
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

bool LatticeVector::is_primitive() const { return content() == 1; }

bool LatticeVector::is_nonnegative() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c >= 0; });
}

bool LatticeVector::is_positive() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c > 0; });
}

Integer LatticeVector::content() const {
  Integer g = 0;
  for (const auto& c : coords_) g = gcd(g, c);
  return g;
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& other) {
  if (other.dim() != dim()) throw Error(ErrorKind::InvalidArgument, "dimension mismatch in vector sum");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& other) {
  if (other.dim() != dim()) throw Error(ErrorKind::InvalidArgument, "dimension mismatch in vector difference");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

std::string LatticeVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += coords_[i].get_str();
  }
  return s + ")";
}

bool operator==(const LatticeVector& a, const LatticeVector& b) { return a.coords_ == b.coords_; }

bool operator<(const LatticeVector& a, const LatticeVector& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }

LatticeVector operator*(const Integer& s, const LatticeVector& v) {
  std::vector<Integer> c(v.coords().begin(), v.coords().end());
  for (auto& x : c) x *= s;
  return LatticeVector(std::move(c));
}

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::InvalidArgument, "dimension mismatch in dot product");
  Integer s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

bool colex_less(const LatticeVector& a, const LatticeVector& b) {
  for (std::size_t i = a.dim(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

LatticeVector make_primitive(const LatticeVector& v) {
  Integer g = v.content();
  if (g == 0) throw Error(ErrorKind::ZeroVector, "cannot make the zero vector primitive");
  if (g == 1) return v;
  std::vector<Integer> c(v.coords().begin(), v.coords().end());
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return LatticeVector(std::move(c));
}

LatticeVector canonical_direction(const LatticeVector& v) {
  LatticeVector p = make_primitive(v);
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (p[i] != 0) return p[i] < 0 ? -p : p;
  }
  return p;
}

Hyperplane::Hyperplane(const LatticeVector& normal, const Integer& offset) {
  Integer g = normal.content();
  if (g == 0) throw Error(ErrorKind::ZeroVector, "hyperplane normal is zero");
  if (offset % g != 0) {
    throw Error(ErrorKind::NoLatticePoints,
                "offset " + offset.get_str() + " not divisible by normal content " + g.get_str());
  }
  normal_ = make_primitive(normal);
  offset_ = offset / g;
  for (std::size_t i = 0; i < normal_.dim(); ++i) {
    if (normal_[i] != 0) {
      if (normal_[i] < 0) {
        normal_ = -normal_;
        offset_ = -offset_;
      }
      break;
    }
  }
}

namespace {

std::string variable_name(std::size_t i, std::size_t n) {
  if (n <= 3) return std::string(1, "xyz"[i]);
  return "x" + std::to_string(i + 1);
}

}  // namespace

std::string Hyperplane::to_string() const {
  std::string s;
  const std::size_t n = normal_.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& c = normal_[i];
    if (c == 0) continue;
    if (c < 0) s += "-";
    else if (!s.empty()) s += "+";
    Integer a = toricres::abs(c);
    if (a != 1) s += a.get_str();
    s += variable_name(i, n);
  }
  if (offset_ > 0) s += "-" + offset_.get_str();
  else if (offset_ < 0) s += "+" + Integer(-offset_).get_str();
  return s + "=0";
}

namespace linalg {

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix to_rational(std::span<const LatticeVector> rows, std::size_t n) {
  RationalMatrix m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.dim() != n) throw Error(ErrorKind::InvalidArgument, "row dimension mismatch");
    std::vector<Rational> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = Rational(r[j]);
    m.push_back(std::move(row));
  }
  return m;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t n) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][col];
    for (std::size_t j = col; j < n; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

LatticeVector scale_to_primitive(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * l;
    c[i] = s.get_num();
  }
  return make_primitive(LatticeVector(std::move(c)));
}

}  // namespace

std::size_t rank(std::span<const LatticeVector> rows, std::size_t n) {
  auto m = to_rational(rows, n);
  return rref(m, n).size();
}

std::vector<LatticeVector> nullspace(std::span<const LatticeVector> rows, std::size_t n) {
  auto m = to_rational(rows, n);
  auto pivots = rref(m, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<LatticeVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(n, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(scale_to_primitive(v));
  }
  return basis;
}

Integer determinant(std::span<const LatticeVector> rows) {
  const std::size_t n = rows.size();
  if (n == 0) return 1;
  if (n == 1) return rows[0][0];
  if (n == 2) return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0];
  if (n == 3) {
    const auto& a = rows[0];
    const auto& b = rows[1];
    const auto& c = rows[2];
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
  }
  // Bareiss fraction-free elimination.
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].dim() != n) throw Error(ErrorKind::InvalidArgument, "determinant of non-square matrix");
    for (std::size_t j = 0; j < n; ++j) m[i][j] = rows[i][j];
  }
  Integer prev = 1;
  int sgn_flip = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sgn_flip = -sgn_flip;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
    }
    prev = m[k][k];
  }
  return sgn_flip * m[n - 1][n - 1];
}

LatticeVector kernel_vector(std::span<const LatticeVector> rows) {
  const std::size_t n = rows.size() + 1;
  for (const auto& r : rows) {
    if (r.dim() != n) throw Error(ErrorKind::InvalidArgument, "kernel_vector needs n-1 rows in Z^n");
  }
  if (n == 2) return LatticeVector(std::vector<Integer>{-rows[0][1], rows[0][0]});
  if (n == 3) {
    const auto& a = rows[0];
    const auto& b = rows[1];
    return LatticeVector(std::vector<Integer>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                                              a[0] * b[1] - a[1] * b[0]});
  }
  std::vector<Integer> k(n);
  for (std::size_t drop = 0; drop < n; ++drop) {
    std::vector<LatticeVector> minor;
    for (const auto& r : rows) {
      std::vector<Integer> c;
      for (std::size_t j = 0; j < n; ++j)
        if (j != drop) c.push_back(r[j]);
      minor.emplace_back(std::move(c));
    }
    Integer d = determinant(minor);
    k[drop] = (drop % 2 == 0) ? d : Integer(-d);
  }
  return LatticeVector(std::move(k));
}

std::optional<std::vector<Rational>> solve_columns(std::span<const LatticeVector> columns,
                                                   const LatticeVector& target) {
  const std::size_t n = target.dim();
  const std::size_t k = columns.size();
  // Augmented system, one row per coordinate.
  RationalMatrix m(n, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = Rational(columns[j][i]);
    m[i][k] = Rational(target[i]);
  }
  auto pivots = rref(m, k + 1);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  if (pivots.size() != k) throw Error(ErrorKind::RankDeficient, "solve_columns: dependent columns");
  std::vector<Rational> x(k);
  for (std::size_t r = 0; r < k; ++r) x[pivots[r]] = m[r][k];
  return x;
}

}  // namespace linalg

}  // namespace toricres
