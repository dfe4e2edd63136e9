#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "brauer/rational.hpp"

namespace brauer {

/// Element of F_p for an odd prime p < 2^31.
///
/// Values constructed from a bare integer are "pending": they carry no
/// modulus yet and acquire one from the first bound operand they meet. This
/// lets generic code write S(0), S(1), S(-1) without threading a ring
/// context through every call. Mixing two distinct bound moduli is an error.
class Fp {
 public:
  Fp() = default;
  Fp(long x) : v_(x) {}  // pending literal, modulus unset
  Fp(long x, std::uint32_t p) : p_(check_modulus(p)) { v_ = reduce(x, p_); }
  Fp(const Int& x, std::uint32_t p) : p_(check_modulus(p)) {
    Int r = x % Int(p);
    if (sgn(r) < 0) r += Int(p);
    v_ = r.get_si();
  }

  /// Image of a rational with denominator coprime to p.
  static Fp from_rational(const Rational& q, std::uint32_t p) {
    check_modulus(p);
    Fp den(q.get_den(), p);
    if (den.is_zero())
      throw std::domain_error("denominator divisible by modulus " +
                              std::to_string(p));
    return Fp(q.get_num(), p) / den;
  }

  std::uint32_t modulus() const { return p_; }
  bool bound() const { return p_ != 0; }
  std::int64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Fp bind(std::uint32_t p) const {
    if (bound()) {
      if (p_ != p) throw std::domain_error("modulus mismatch");
      return *this;
    }
    return Fp(static_cast<long>(v_), p);
  }

  friend Fp operator+(const Fp& a, const Fp& b) {
    auto [x, y, p] = unify(a, b);
    if (p == 0) return Fp(static_cast<long>(x + y));
    std::uint64_t s = static_cast<std::uint64_t>(x) + static_cast<std::uint64_t>(y);
    if (s >= p) s -= p;
    return make(s, p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }
  friend Fp operator*(const Fp& a, const Fp& b) {
    auto [x, y, p] = unify(a, b);
    if (p == 0) return Fp(static_cast<long>(x * y));
    return make((static_cast<std::uint64_t>(x) * static_cast<std::uint64_t>(y)) %
                    p,
                p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) {
    if (!b.bound()) {
      if (b.v_ == 1) return a;
      if (b.v_ == -1) return -a;
      throw std::domain_error("division by unbound F_p literal");
    }
    return a * b.inverse();
  }
  Fp operator-() const {
    if (!bound()) return Fp(static_cast<long>(-v_));
    return make(v_ == 0 ? 0 : p_ - static_cast<std::uint64_t>(v_), p_);
  }
  Fp& operator+=(const Fp& b) { return *this = *this + b; }
  Fp& operator-=(const Fp& b) { return *this = *this - b; }
  Fp& operator*=(const Fp& b) { return *this = *this * b; }
  Fp& operator/=(const Fp& b) { return *this = *this / b; }

  Fp inverse() const {
    if (!bound()) {
      if (v_ == 1 || v_ == -1) return *this;
      throw std::domain_error("inverse of unbound F_p literal");
    }
    if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
    // extended Euclid on (v, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = v_;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t -= q * new_t;
      std::swap(t, new_t);
      r -= q * new_r;
      std::swap(r, new_r);
    }
    if (t < 0) t += p_;
    return make(static_cast<std::uint64_t>(t), p_);
  }

  friend bool operator==(const Fp& a, const Fp& b) {
    auto [x, y, p] = unify(a, b);
    return x == y;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

 private:
  static std::uint32_t check_modulus(std::uint32_t p) {
    if (p == 2) throw std::domain_error("modulus 2 is not supported");
    if (p < 3 || p >= (1u << 31))
      throw std::domain_error("modulus out of range");
    return p;
  }
  static std::int64_t reduce(std::int64_t x, std::uint32_t p) {
    std::int64_t r = x % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return r;
  }
  static Fp make(std::uint64_t v, std::uint32_t p) {
    Fp f;
    f.v_ = static_cast<std::int64_t>(v);
    f.p_ = p;
    return f;
  }
  // Returns reduced values and the common modulus (0 when both pending).
  static std::tuple<std::int64_t, std::int64_t, std::uint32_t> unify(const Fp& a,
                                                                     const Fp& b) {
    if (a.bound() && b.bound()) {
      if (a.p_ != b.p_) throw std::domain_error("modulus mismatch");
      return {a.v_, b.v_, a.p_};
    }
    if (a.bound()) return {a.v_, reduce(b.v_, a.p_), a.p_};
    if (b.bound()) return {reduce(a.v_, b.p_), b.v_, b.p_};
    return {a.v_, b.v_, 0};
  }

  std::int64_t v_ = 0;
  std::uint32_t p_ = 0;
};

inline bool is_zero(const Fp& x) { return x.is_zero(); }

/// Serialized as "k mod p".
inline std::string scalar_to_string(const Fp& x) {
  if (!x.bound()) return std::to_string(x.value());
  return std::to_string(x.value()) + " mod " + std::to_string(x.modulus());
}

inline Fp fp_from_string(const std::string& s, std::uint32_t p) {
  auto pos = s.find(" mod ");
  std::string num = pos == std::string::npos ? s : s.substr(0, pos);
  if (pos != std::string::npos) {
    std::uint32_t q = static_cast<std::uint32_t>(std::stoul(s.substr(pos + 5)));
    if (q != p) throw std::domain_error("modulus mismatch in '" + s + "'");
  }
  return Fp(std::stol(num), p);
}

/// Deterministic trial-division primality test; moduli here are small.
inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace brauer
