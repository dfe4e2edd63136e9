#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "brauer/diagram.hpp"
#include "brauer/matrix.hpp"
#include "brauer/scalar.hpp"

namespace brauer {

/// Formal scalar combination of Brauer diagrams on a fixed strand count.
/// Zero coefficients are never stored; the term map is ordered, so
/// iteration and printing are deterministic.
template <class S>
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(int r) : r_(r) {}

  static AlgebraElement from_diagram(const BrauerDiagram& d, S coeff = S(1)) {
    AlgebraElement x(d.strands());
    x.add_term(d, coeff);
    return x;
  }

  int strands() const { return r_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const std::map<BrauerDiagram, S>& terms() const { return terms_; }

  S coeff(const BrauerDiagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? S(0) : it->second;
  }

  void add_term(const BrauerDiagram& d, const S& c) {
    if (brauer::is_zero(c)) return;
    if (d.strands() != r_) throw std::invalid_argument("strand count mismatch");
    auto [it, inserted] = terms_.emplace(d, c);
    if (!inserted) {
      it->second += c;
      if (brauer::is_zero(it->second)) terms_.erase(it);
    }
  }

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    a.check_compatible(b);
    AlgebraElement r = a;
    for (const auto& [d, c] : b.terms_) r.add_term(d, c);
    return r;
  }
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    a.check_compatible(b);
    AlgebraElement r = a;
    for (const auto& [d, c] : b.terms_) r.add_term(d, -c);
    return r;
  }
  AlgebraElement operator-() const {
    AlgebraElement r(r_);
    for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
    return r;
  }
  friend AlgebraElement operator*(const S& c, const AlgebraElement& a) {
    AlgebraElement r(a.r_);
    if (brauer::is_zero(c)) return r;
    for (const auto& [d, x] : a.terms_) r.add_term(d, c * x);
    return r;
  }
  AlgebraElement& operator+=(const AlgebraElement& b) { return *this = *this + b; }
  AlgebraElement& operator-=(const AlgebraElement& b) { return *this = *this - b; }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.r_ == b.r_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) {
    return !(a == b);
  }

 private:
  void check_compatible(const AlgebraElement& b) const {
    if (r_ != b.r_) throw std::invalid_argument("strand count mismatch");
  }

  int r_ = 0;
  std::map<BrauerDiagram, S> terms_;
};

/// Term-wise cellular involution; an anti-automorphism of the product.
template <class S>
AlgebraElement<S> apply_star(const AlgebraElement<S>& a) {
  AlgebraElement<S> r(a.strands());
  for (const auto& [d, c] : a.terms()) r.add_term(d.star(), c);
  return r;
}

/// Enumerated diagram basis of B_r with O(1) index lookup.
class DiagramBasis {
 public:
  explicit DiagramBasis(int r, int max_strands = 6) : list_(all_diagrams(r, max_strands)) {
    for (int i = 0; i < static_cast<int>(list_.size()); ++i) index_.emplace(list_[i], i);
  }
  int size() const { return static_cast<int>(list_.size()); }
  const BrauerDiagram& diagram(int i) const { return list_[i]; }
  const std::vector<BrauerDiagram>& diagrams() const { return list_; }
  int index_of(const BrauerDiagram& d) const {
    auto it = index_.find(d);
    if (it == index_.end()) throw std::invalid_argument("diagram not in basis");
    return it->second;
  }

 private:
  std::vector<BrauerDiagram> list_;
  std::unordered_map<BrauerDiagram, int, DiagramHash> index_;
};

template <class S>
std::vector<S> coefficient_vector(const AlgebraElement<S>& a, const DiagramBasis& basis) {
  std::vector<S> v(basis.size(), S(0));
  for (const auto& [d, c] : a.terms()) v[basis.index_of(d)] = c;
  return v;
}

/// The Brauer algebra B_r(delta): the ring context carrying the strand
/// count and the loop parameter. For the symbolic ring delta is the
/// polynomial indeterminate; for Q and F_p it is the specialized value.
template <class S>
struct BrauerAlgebra {
  int r;
  S delta;

  AlgebraElement<S> zero() const { return AlgebraElement<S>(r); }
  AlgebraElement<S> one() const {
    return AlgebraElement<S>::from_diagram(BrauerDiagram::identity(r));
  }
  AlgebraElement<S> from(const BrauerDiagram& d) const {
    return AlgebraElement<S>::from_diagram(d);
  }
  AlgebraElement<S> s(int i) const { return from(generator_s(i, r)); }
  AlgebraElement<S> e(int i) const { return from(generator_e(i, r)); }
  AlgebraElement<S> e(int i, int j) const { return from(generator_e(i, j, r)); }
  AlgebraElement<S> perm(const Permutation& sigma) const { return from(perm_diagram(sigma)); }

  /// Bilinear extension of the diagram product with delta^loops weights.
  AlgebraElement<S> mul(const AlgebraElement<S>& a, const AlgebraElement<S>& b) const {
    if (a.strands() != r || b.strands() != r)
      throw std::invalid_argument("strand count mismatch");
    std::vector<S> delta_pow{S(1)};
    while (static_cast<int>(delta_pow.size()) <= r) delta_pow.push_back(delta_pow.back() * delta);
    AlgebraElement<S> out(r);
    for (const auto& [d1, c1] : a.terms())
      for (const auto& [d2, c2] : b.terms()) {
        auto [d, loops] = compose(d1, d2);
        out.add_term(d, c1 * c2 * delta_pow[loops]);
      }
    return out;
  }

  AlgebraElement<S> mul(const AlgebraElement<S>& a, const AlgebraElement<S>& b,
                        const AlgebraElement<S>& c) const {
    return mul(mul(a, b), c);
  }
};

/// Signed sum over Sym{k,...,l} embedded as permutation diagrams; the
/// identity element when k >= l.
template <class S>
AlgebraElement<S> alt_interval(int k, int l, int r) {
  if (k < 1 || l > r || k > r || l < 1) throw std::invalid_argument("interval out of range");
  AlgebraElement<S> out(r);
  if (k >= l) {
    out.add_term(BrauerDiagram::identity(r), S(1));
    return out;
  }
  std::vector<int> window(l - k + 1);
  std::iota(window.begin(), window.end(), k);
  std::vector<int> images(r);
  do {
    std::iota(images.begin(), images.end(), 1);
    for (int i = 0; i < static_cast<int>(window.size()); ++i) images[k - 1 + i] = window[i];
    Permutation sigma = Permutation::from_images(images);
    out.add_term(perm_diagram(sigma), S(sigma.sign()));
  } while (std::next_permutation(window.begin(), window.end()));
  return out;
}

/// Evaluates every polynomial coefficient at the given delta value.
inline AlgebraElement<Rational> specialize_delta(const AlgebraElement<DeltaPoly>& a,
                                                 const Rational& value) {
  AlgebraElement<Rational> out(a.strands());
  for (const auto& [d, c] : a.terms()) out.add_term(d, c.evaluate(value));
  return out;
}

/// Coefficient-wise reduction mod an odd prime; every denominator must be
/// coprime to p.
inline AlgebraElement<Fp> reduce_mod_p(const AlgebraElement<Rational>& a, std::uint32_t p) {
  if (!is_prime(p)) throw std::domain_error("modulus is not prime");
  AlgebraElement<Fp> out(a.strands());
  for (const auto& [d, c] : a.terms()) out.add_term(d, Fp::from_rational(c, p));
  return out;
}

/// Coefficient-vector span of the two-sided ideal generated by the given
/// elements, computed by closure: seed with the generators, then repeatedly
/// multiply new basis elements on both sides by every s_i and e_i,
/// re-echelonizing until the rank stabilizes.
template <class S>
Subspace<S> ideal_span(const BrauerAlgebra<S>& alg, const std::vector<AlgebraElement<S>>& generators,
                       const DiagramBasis& basis) {
  static_assert(is_exact_field<S>, "ideal spans need a specialized delta");
  Subspace<S> span(basis.size());
  std::vector<AlgebraElement<S>> work;
  for (const auto& g : generators)
    if (span.insert(coefficient_vector(g, basis))) work.push_back(g);
  std::vector<AlgebraElement<S>> side;
  for (int i = 1; i < alg.r; ++i) side.push_back(alg.s(i));
  for (int i = 1; i < alg.r; ++i) side.push_back(alg.e(i));
  for (std::size_t head = 0; head < work.size(); ++head) {
    AlgebraElement<S> x = work[head];
    for (const auto& g : side) {
      for (AlgebraElement<S> y : {alg.mul(g, x), alg.mul(x, g)}) {
        if (span.insert(coefficient_vector(y, basis))) work.push_back(std::move(y));
      }
    }
  }
  return span;
}

/// True iff x lies in the two-sided ideal generated by g.
template <class S>
bool ideal_membership(const AlgebraElement<S>& x, const AlgebraElement<S>& g,
                      const BrauerAlgebra<S>& alg, const DiagramBasis& basis) {
  auto span = ideal_span(alg, {g}, basis);
  return span.contains(coefficient_vector(x, basis));
}

/// Verifies the defining relations of B_r(delta) with symbolic delta as
/// computed diagram products.
inline bool presentation_check(int r) {
  BrauerAlgebra<DeltaPoly> alg{r, DeltaPoly::delta()};
  auto one = alg.one();
  DeltaPoly delta = DeltaPoly::delta();
  for (int i = 1; i < r; ++i) {
    auto si = alg.s(i), ei = alg.e(i);
    if (alg.mul(si, si) != one) return false;
    if (alg.mul(ei, ei) != delta * ei) return false;
    if (alg.mul(si, ei) != ei || alg.mul(ei, si) != ei) return false;
    for (int j = i + 2; j < r; ++j) {
      auto sj = alg.s(j), ej = alg.e(j);
      if (alg.mul(si, sj) != alg.mul(sj, si)) return false;
      if (alg.mul(si, ej) != alg.mul(ej, si)) return false;
      if (alg.mul(ei, ej) != alg.mul(ej, ei)) return false;
    }
    if (i + 1 < r) {
      auto si1 = alg.s(i + 1), ei1 = alg.e(i + 1);
      if (alg.mul(si, si1, si) != alg.mul(si1, si, si1)) return false;
      if (alg.mul(ei, ei1, ei) != ei) return false;
      if (alg.mul(ei1, ei, ei1) != ei1) return false;
      if (alg.mul(si, ei1, ei) != alg.mul(si1, ei)) return false;
      if (alg.mul(ei1, ei, si1) != alg.mul(ei1, si)) return false;
      if (alg.mul(ei, si1, ei) != ei) return false;
      if (alg.mul(ei1, si, ei1) != ei1) return false;
    }
  }
  return true;
}

}  // namespace brauer
