#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "brauer/rational.hpp"

namespace brauer {

/// Polynomial in the algebra parameter delta with rational coefficients.
/// Coefficient k is the coefficient of delta^k; no trailing zeros are
/// stored, and the zero polynomial has degree -1.
class DeltaPoly {
 public:
  DeltaPoly() = default;
  DeltaPoly(long c) { if (c != 0) c_.push_back(Rational(c)); }
  DeltaPoly(const Rational& c) { if (!brauer::is_zero(c)) c_.push_back(c); }

  static DeltaPoly delta() {
    DeltaPoly p;
    p.c_ = {Rational(0), Rational(1)};
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& coeff(int k) const {
    static const Rational zero(0);
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : zero;
  }

  Rational evaluate(const Rational& x) const {
    Rational v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
  }

  friend DeltaPoly operator+(const DeltaPoly& a, const DeltaPoly& b) {
    DeltaPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
  }
  friend DeltaPoly operator-(const DeltaPoly& a, const DeltaPoly& b) {
    return a + (-b);
  }
  DeltaPoly operator-() const {
    DeltaPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend DeltaPoly operator*(const DeltaPoly& a, const DeltaPoly& b) {
    DeltaPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }
  DeltaPoly& operator+=(const DeltaPoly& b) { return *this = *this + b; }
  DeltaPoly& operator-=(const DeltaPoly& b) { return *this = *this - b; }
  DeltaPoly& operator*=(const DeltaPoly& b) { return *this = *this * b; }

  /// Exact division; throws if the divisor does not divide exactly.
  friend DeltaPoly exact_div(const DeltaPoly& a, const DeltaPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return DeltaPoly();
    DeltaPoly rem = a, quot;
    quot.c_.assign(a.c_.size(), Rational(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      int k = rem.degree() - b.degree();
      Rational q = rem.c_.back() / b.c_.back();
      quot.c_[k] = q;
      for (std::size_t i = 0; i < b.c_.size(); ++i)
        rem.c_[k + i] -= q * b.c_[i];
      rem.trim();
    }
    if (!rem.is_zero())
      throw std::domain_error("inexact polynomial division");
    quot.trim();
    return quot;
  }
  friend DeltaPoly operator/(const DeltaPoly& a, const DeltaPoly& b) {
    return exact_div(a, b);
  }

  friend bool operator==(const DeltaPoly& a, const DeltaPoly& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const DeltaPoly& a, const DeltaPoly& b) {
    return !(a == b);
  }

 private:
  void trim() {
    while (!c_.empty() && brauer::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<Rational> c_;
};

inline bool is_zero(const DeltaPoly& x) { return x.is_zero(); }

/// Text form "3/2*d^2 - 1": terms by decreasing degree, unit coefficients
/// elided in front of d.
inline std::string scalar_to_string(const DeltaPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coeff(k);
    if (is_zero(c)) continue;
    bool neg = sgn(c) < 0;
    Rational a = neg ? Rational(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    bool unit = a == Rational(1);
    if (k == 0)
      out += scalar_to_string(a);
    else {
      if (!unit) out += scalar_to_string(a) + "*";
      out += k == 1 ? "d" : "d^" + std::to_string(k);
    }
  }
  return out;
}

inline DeltaPoly delta_poly_from_string(const std::string& s) {
  DeltaPoly result;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
  skip_ws();
  if (i == s.size()) throw std::invalid_argument("empty polynomial");
  bool first = true;
  while (i < s.size()) {
    skip_ws();
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw std::invalid_argument("malformed polynomial: '" + s + "'");
    }
    first = false;
    Rational coeff(1);
    bool saw_coeff = false;
    std::size_t start = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    if (i > start) {
      coeff = rational_from_string(s.substr(start, i - start));
      saw_coeff = true;
      skip_ws();
      if (i < s.size() && s[i] == '*') { ++i; skip_ws(); }
    }
    int deg = 0;
    if (i < s.size() && s[i] == 'd') {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t dstart = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == dstart) throw std::invalid_argument("missing exponent: '" + s + "'");
        deg = std::stoi(s.substr(dstart, i - dstart));
      }
    } else if (!saw_coeff) {
      throw std::invalid_argument("malformed polynomial term: '" + s + "'");
    }
    DeltaPoly term(sign == 1 ? coeff : Rational(-coeff));
    DeltaPoly d = DeltaPoly::delta();
    for (int k = 0; k < deg; ++k) term *= d;
    result += term;
    skip_ws();
  }
  return result;
}

}  // namespace brauer
