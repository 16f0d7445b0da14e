#include "toricres/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace toricres {

ExponentVector::ExponentVector(std::vector<long> exps) : exps_(std::move(exps)) {
  for (long e : exps_)
    if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent " + std::to_string(e));
}

long ExponentVector::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0L); }

LatticeVector ExponentVector::to_lattice() const {
  std::vector<Integer> c;
  c.reserve(exps_.size());
  for (long e : exps_) c.emplace_back(e);
  return LatticeVector(std::move(c));
}

std::string ExponentVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(exps_[i]);
  }
  return s + ")";
}

Integer dot(const LatticeVector& w, const ExponentVector& a) {
  if (w.dim() != a.dim()) throw Error(ErrorKind::InvalidArgument, "weight and exponent dimensions differ");
  Integer s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += w[i] * a[i];
  return s;
}

Polynomial::Polynomial(std::size_t nvars, std::span<const std::pair<ExponentVector, Integer>> terms)
    : nvars_(nvars) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

Integer Polynomial::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Polynomial::add_term(const ExponentVector& e, const Integer& c) {
  if (e.dim() != nvars_) throw Error(ErrorKind::InvalidArgument, "exponent has wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::string variable_name(std::size_t i, std::size_t nvars) {
  if (nvars <= 3) return std::string(1, "xyz"[i]);
  return "x" + std::to_string(i + 1);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c < 0;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    Integer mag = abs(c);
    std::vector<std::string> factors;
    if (mag != 1 || e.degree() == 0) factors.push_back(mag.get_str());
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      std::string f = variable_name(i, nvars_);
      if (e[i] > 1) f += "^" + std::to_string(e[i]);
      factors.push_back(std::move(f));
    }
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) s += "*";
      s += factors[k];
    }
  }
  return s;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

  Polynomial run() {
    Polynomial f(nvars_);
    skip_ws();
    if (at_end()) throw SyntaxError(pos_, "expected a term");
    int sign = 1;
    if (peek_sign(sign)) skip_ws();
    while (true) {
      auto [e, c] = term();
      f.add_term(e, sign * c);
      skip_ws();
      if (at_end()) break;
      if (!peek_sign(sign)) throw SyntaxError(pos_, std::string("unexpected character '") + text_[pos_] + "'");
      skip_ws();
    }
    return f;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // Consumes '+', '-' or U+2212.
  bool peek_sign(int& sign) {
    if (at_end()) return false;
    if (text_[pos_] == '+' || text_[pos_] == '-') {
      sign = text_[pos_] == '-' ? -1 : 1;
      ++pos_;
      return true;
    }
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      sign = -1;
      pos_ += 3;
      return true;
    }
    return false;
  }

  std::pair<ExponentVector, Integer> term() {
    std::vector<long> exps(nvars_, 0);
    Integer coeff = 1;
    while (true) {
      skip_ws();
      factor(exps, coeff);
      skip_ws();
      if (!at_end() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      if (!at_end() && (text_[pos_] == '/' || text_[pos_] == '.')) {
        throw Error(ErrorKind::Unsupported, "rational coefficients at position " + std::to_string(pos_));
      }
      break;
    }
    return {ExponentVector(std::move(exps)), coeff};
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void factor(std::vector<long>& exps, Integer& coeff) {
    if (at_end()) throw SyntaxError(pos_, "expected a factor");
    const char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      coeff *= Integer(digits());
      return;
    }
    if (!std::isalpha(static_cast<unsigned char>(ch))) {
      throw SyntaxError(pos_, std::string("expected a factor, found '") + ch + "'");
    }
    const std::size_t start = pos_;
    while (!at_end() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    const std::size_t var = lookup(name, start);
    long power = 1;
    skip_ws();
    if (!at_end() && text_[pos_] == '^') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      std::string d = digits();
      if (d.empty()) throw SyntaxError(at, "expected a nonnegative integer exponent");
      Integer p(d);
      if (!p.fits_slong_p()) throw SyntaxError(at, "exponent too large");
      power = p.get_si();
    }
    exps[var] += power;
  }

  std::size_t lookup(const std::string& name, std::size_t at) const {
    if (nvars_ <= 3) {
      for (std::size_t i = 0; i < nvars_; ++i)
        if (name == variable_name(i, nvars_)) return i;
    }
    if (name.size() >= 2 && name[0] == 'x' && std::all_of(name.begin() + 1, name.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        })) {
      const unsigned long k = std::stoul(name.substr(1));
      if (k >= 1 && k <= nvars_) return k - 1;
    }
    throw Error(ErrorKind::UnknownVariable,
                "'" + name + "' at position " + std::to_string(at) + " in " + std::to_string(nvars_) + " variables");
  }

  std::string_view text_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t nvars, bool allow_zero) {
  if (nvars == 0) throw Error(ErrorKind::InvalidArgument, "need at least one variable");
  Polynomial f = Parser(text, nvars).run();
  if (f.is_zero() && !allow_zero) throw Error(ErrorKind::ZeroPolynomial, "all terms cancel");
  return f;
}

std::vector<ExponentVector> support(const Polynomial& f) {
  std::vector<ExponentVector> s;
  s.reserve(f.size());
  for (const auto& [e, c] : f.terms()) s.push_back(e);
  return s;
}

Integer v_order(const LatticeVector& w, const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::EmptyPolynomial, "order of the zero polynomial");
  if (w.dim() != f.nvars()) throw Error(ErrorKind::InvalidArgument, "weight has wrong dimension");
  if (!w.is_nonnegative()) throw Error(ErrorKind::InvalidArgument, "weight " + w.to_string() + " is not nonnegative");
  Integer best;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    Integer d = dot(w, e);
    if (first || d < best) best = d;
    first = false;
  }
  return best;
}

Polynomial initial_form(const LatticeVector& w, const Polynomial& f) {
  const Integer m = v_order(w, f);
  Polynomial g(f.nvars());
  for (const auto& [e, c] : f.terms())
    if (dot(w, e) == m) g.add_term(e, c);
  return g;
}

Polynomial restrict_to_face(const Polynomial& f, std::span<const ExponentVector> face) {
  Polynomial g(f.nvars());
  for (const auto& e : face) {
    auto c = f.coefficient(e);
    if (c != 0 && g.coefficient(e) == 0) g.add_term(e, c);
  }
  return g;
}

}  // namespace toricres
