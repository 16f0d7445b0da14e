#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace toricres {

using Integer = mpz_class;
using Rational = mpq_class;

enum class ErrorKind {
  ZeroVector,
  RankDeficient,
  NotPointed,
  Empty,
  Unsupported,
  SyntaxError,
  UnknownVariable,
  EmptyPolynomial,
  ZeroPolynomial,
  NoLatticePoints,
  NonCoplanar,
  NotUnimodular,
  Stuck,
  IncompatibleSharedFace,
  NoIntegerSolution,
  SkeletonMismatch,
  BadParameter,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

// Every failure in the library is reported through this type; `kind()` is
// the machine-readable part, what() carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Position-carrying error from the polynomial parser.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& detail);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline int sign(const Integer& a) { return sgn(a); }

inline std::string to_string(const Integer& a) { return a.get_str(); }

// Floor division, exact for integers.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Converts to long, throwing InvalidArgument when out of range.
long to_long(const Integer& a);

}  // namespace toricres
