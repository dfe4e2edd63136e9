#pragma once

#include <string>
#include <type_traits>

#include "brauer/delta_poly.hpp"
#include "brauer/prime_field.hpp"
#include "brauer/rational.hpp"

namespace brauer {

/// The three scalar rings of the workbench. All arithmetic is exact; a
/// computation never mixes rings (the type system enforces it), and all
/// F_p values in a computation must share one modulus (checked at runtime).
template <class S>
inline constexpr bool is_exact_field =
    std::is_same_v<S, Rational> || std::is_same_v<S, Fp>;

template <class S>
inline constexpr bool is_scalar_ring =
    is_exact_field<S> || std::is_same_v<S, DeltaPoly>;

inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
inline Fp exact_div(const Fp& a, const Fp& b) { return a / b; }
inline Int exact_div(const Int& a, const Int& b) {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (sgn(r) != 0) throw std::domain_error("inexact integer division");
  return q;
}

template <class S>
std::string ring_name() {
  if constexpr (std::is_same_v<S, Rational>) return "Q";
  else if constexpr (std::is_same_v<S, DeltaPoly>) return "Qdelta";
  else if constexpr (std::is_same_v<S, Fp>) return "Fp";
  else return "?";
}

}  // namespace brauer
