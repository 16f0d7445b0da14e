#include "toricres/arith.hpp"

#include <climits>

namespace toricres {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NotPointed: return "NotPointed";
    case ErrorKind::Empty: return "Empty";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::EmptyPolynomial: return "EmptyPolynomial";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NoLatticePoints: return "NoLatticePoints";
    case ErrorKind::NonCoplanar: return "NonCoplanar";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::Stuck: return "Stuck";
    case ErrorKind::IncompatibleSharedFace: return "IncompatibleSharedFace";
    case ErrorKind::NoIntegerSolution: return "NoIntegerSolution";
    case ErrorKind::SkeletonMismatch: return "SkeletonMismatch";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

SyntaxError::SyntaxError(std::size_t position, const std::string& detail)
    : Error(ErrorKind::SyntaxError, detail + " at position " + std::to_string(position)),
      position_(position) {}

long to_long(const Integer& a) {
  if (!a.fits_slong_p()) throw Error(ErrorKind::InvalidArgument, "integer " + a.get_str() + " out of range");
  return a.get_si();
}

}  // namespace toricres
