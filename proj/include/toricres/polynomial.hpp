#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toricres/lattice.hpp"

namespace toricres {

// Nonnegative exponent vector of a monomial.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<long> exps);
  ExponentVector(std::initializer_list<long> exps) : ExponentVector(std::vector<long>(exps)) {}

  std::size_t dim() const noexcept { return exps_.size(); }
  long operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<long>& exps() const noexcept { return exps_; }
  long degree() const;

  LatticeVector to_lattice() const;
  std::string to_string() const;

  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<long> exps_;
};

Integer dot(const LatticeVector& w, const ExponentVector& a);

// Integer polynomial with terms keyed by exponent; zero coefficients never
// stored. Iteration order is lexicographic ascending on exponents.
class Polynomial {
 public:
  using Terms = std::map<ExponentVector, Integer>;

  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  // Like terms are combined and cancelled terms dropped.
  Polynomial(std::size_t nvars, std::span<const std::pair<ExponentVector, Integer>> terms);

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  Integer coefficient(const ExponentVector& e) const;

  void add_term(const ExponentVector& e, const Integer& c);

  // Descending lexicographic order, e.g. "x*y - z^3"; "0" for zero.
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t nvars_;
  Terms terms_;
};

// Variable names: x, y, z for at most three variables, x1..xn otherwise.
std::string variable_name(std::size_t i, std::size_t nvars);

// Grammar: an optional sign, then terms joined by + or -; a term is a
// product of factors joined by *, a factor is an integer or a variable with
// an optional ^exponent. Whitespace is ignored. x1..xn are always accepted;
// x, y, z too when nvars <= 3. Throws SyntaxError (with position),
// UnknownVariable, Unsupported for rational coefficients and ZeroPolynomial
// when everything cancels unless allow_zero is set.
Polynomial parse_polynomial(std::string_view text, std::size_t nvars, bool allow_zero = false);

// Exponent keys in ascending lexicographic order.
std::vector<ExponentVector> support(const Polynomial& f);

// Minimum of w.alpha over the support. Throws EmptyPolynomial for f = 0 and
// InvalidArgument for a negative or mismatched weight.
Integer v_order(const LatticeVector& w, const Polynomial& f);

// The terms of f attaining v_order(w, f).
Polynomial initial_form(const LatticeVector& w, const Polynomial& f);

// The terms of f whose exponents lie in face.
Polynomial restrict_to_face(const Polynomial& f, std::span<const ExponentVector> face);

}  // namespace toricres
