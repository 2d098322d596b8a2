#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"

namespace mlqkit {

using Integer = boost::multiprecision::cpp_int;

// Polynomial in q with exact integer coefficients, c[d] the coefficient of
// q^d. Trailing zeros are never stored, so the zero polynomial is empty.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Integer> c) : c_(std::move(c)) { trim(); }
  static QPoly monomial(int degree, Integer coeff = 1) {
    std::vector<Integer> c(degree + 1);
    c[degree] = std::move(coeff);
    return QPoly(std::move(c));
  }
  static QPoly one() { return monomial(0); }

  const std::vector<Integer>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Integer at(int d) const { return d >= 0 && d < static_cast<int>(c_.size()) ? c_[d] : Integer(0); }
  Integer at_one() const {
    Integer s = 0;
    for (const auto& x : c_) s += x;
    return s;
  }
  bool nonnegative() const {
    for (const auto& x : c_)
      if (x < 0) return false;
    return true;
  }

  QPoly& operator+=(const QPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t d = 0; d < o.c_.size(); ++d) c_[d] += o.c_[d];
    trim();
    return *this;
  }
  QPoly& operator-=(const QPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t d = 0; d < o.c_.size(); ++d) c_[d] -= o.c_[d];
    trim();
    return *this;
  }
  void add_monomial(int degree, const Integer& coeff = 1) {
    if (static_cast<int>(c_.size()) <= degree) c_.resize(degree + 1);
    c_[degree] += coeff;
    trim();
  }
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return QPoly(std::move(c));
  }
  bool operator==(const QPoly& o) const { return c_ == o.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Integer> c_;
};

inline std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int d = 0; d <= p.degree(); ++d) {
    Integer c = p.at(d);
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (s.empty()) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    if (d == 0 || c != 1) s += c.str();
    if (d >= 1) s += "q";
    if (d >= 2) s += "^" + std::to_string(d);
  }
  return s;
}

using Exponent = std::vector<int>;

// Polynomial in x_1..x_n with QPoly coefficients; zero terms are dropped.
struct GenFun {
  int n = 0;
  std::map<Exponent, QPoly> terms;

  void add(const Exponent& e, const QPoly& c) {
    if (static_cast<int>(e.size()) != n) throw ShapeError("exponent length differs from the variable count");
    auto& slot = terms[e];
    slot += c;
    if (slot.is_zero()) terms.erase(e);
  }
  void add_scaled(const GenFun& g, const QPoly& c, bool subtract = false) {
    for (const auto& [e, p] : g.terms) {
      QPoly t = c * p;
      auto& slot = terms[e];
      if (subtract) slot -= t;
      else slot += t;
      if (slot.is_zero()) terms.erase(e);
    }
  }
  QPoly coeff(const Exponent& e) const {
    auto it = terms.find(e);
    return it == terms.end() ? QPoly{} : it->second;
  }
  // The q = 0 specialization.
  GenFun at_q_zero() const {
    GenFun g{n, {}};
    for (const auto& [e, p] : terms)
      if (p.at(0) != 0) g.terms[e] = QPoly::monomial(0, p.at(0));
    return g;
  }
  bool operator==(const GenFun& o) const { return n == o.n && terms == o.terms; }
};

inline std::string to_string(const GenFun& g) {
  if (g.terms.empty()) return "0";
  std::string s;
  for (auto it = g.terms.rbegin(); it != g.terms.rend(); ++it) {
    if (!s.empty()) s += " + ";
    std::string mono;
    for (int i = 0; i < g.n; ++i) {
      if (it->first[i] == 0) continue;
      mono += "x" + std::to_string(i + 1);
      if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
    }
    std::string c = to_string(it->second);
    bool unit = c == "1";
    if (mono.empty()) s += c;
    else if (unit) s += mono;
    else s += "(" + c + ")" + mono;
  }
  return s;
}

}  // namespace mlqkit
