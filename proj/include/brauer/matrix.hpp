#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "brauer/scalar.hpp"

namespace brauer {

/// Dense matrix over an exact scalar ring.
template <class S>
class Matrix {
  static_assert(is_scalar_ring<S> || std::is_same_v<S, Int>);

 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, S(0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  S& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const S& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  std::vector<S> row(int i) const {
    return std::vector<S>(a_.begin() + static_cast<std::size_t>(i) * cols_,
                          a_.begin() + static_cast<std::size_t>(i + 1) * cols_);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const S& x) { return brauer::is_zero(x); });
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += b.a_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= b.a_[k];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (brauer::is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend Matrix operator*(const S& c, const Matrix& m) {
    Matrix r = m;
    for (auto& x : r.a_) x = c * x;
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  void check_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  int rows_ = 0, cols_ = 0;
  std::vector<S> a_;
};

namespace detail {

/// In-place reduced row echelon form over a field. Returns the pivot
/// columns; zero rows are removed.
template <class S>
std::vector<int> rref(std::vector<std::vector<S>>& rows) {
  static_assert(is_exact_field<S>);
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const int cols = static_cast<int>(rows[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int sel = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (!is_zero(rows[i][c])) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(rows[r], rows[sel]);
    S inv = S(1) / rows[r][c];
    for (int j = c; j < cols; ++j) rows[r][j] = inv * rows[r][j];
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || is_zero(rows[i][c])) continue;
      S f = rows[i][c];
      for (int j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

/// Fraction-free (Bareiss) elimination rank over an integral domain.
template <class T>
int bareiss_rank(std::vector<std::vector<T>> m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  T prev = T(1);
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (!is_zero(m[i][c])) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        m[i][j] = exact_div(m[r][c] * m[i][j] - m[i][c] * m[r][j], prev);
      m[i][c] = T(0);
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

/// Clears denominators of a rational row, yielding a primitive integer row.
inline std::vector<Int> integerize(const std::vector<Rational>& row) {
  Int l = 1;
  for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Int> out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    Rational v = row[j] * Rational(l);
    out[j] = v.get_num();
  }
  return out;
}

}  // namespace detail

/// Exact rank. Over Q and Q[delta] this uses fraction-free elimination
/// (rank over Q[delta] means rank over the fraction field Q(delta)); over
/// F_p plain Gaussian elimination.
template <class S>
int rank(const Matrix<S>& m) {
  std::vector<std::vector<S>> rows;
  rows.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  if constexpr (std::is_same_v<S, Rational>) {
    std::vector<std::vector<Int>> z;
    z.reserve(rows.size());
    for (auto& row : rows) z.push_back(detail::integerize(row));
    return detail::bareiss_rank(std::move(z));
  } else if constexpr (std::is_same_v<S, DeltaPoly> || std::is_same_v<S, Int>) {
    return detail::bareiss_rank(std::move(rows));
  } else {
    return static_cast<int>(detail::rref(rows).size());
  }
}

/// A linear subspace held as its canonical reduced row echelon basis:
/// nonzero rows, strictly increasing pivot columns, pivots 1, pivot columns
/// cleared. Equality of subspaces is equality of these bases.
template <class S>
class Subspace {
  static_assert(is_exact_field<S>);

 public:
  explicit Subspace(int ambient) : ambient_(ambient) {}

  static Subspace span(int ambient, const std::vector<std::vector<S>>& vectors) {
    Subspace s(ambient);
    for (const auto& v : vectors) s.insert(v);
    return s;
  }

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<S>>& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Residual of v after elimination against the basis.
  std::vector<S> reduce(std::vector<S> v) const {
    check_ambient(v);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const S& c = v[pivots_[k]];
      if (is_zero(c)) continue;
      S f = c;
      for (int j = pivots_[k]; j < ambient_; ++j) v[j] -= f * rows_[k][j];
    }
    return v;
  }

  bool contains(const std::vector<S>& v) const {
    auto res = reduce(v);
    return std::all_of(res.begin(), res.end(), [](const S& x) { return is_zero(x); });
  }

  /// Adds v to the span, keeping the basis in reduced echelon form.
  /// Returns true when the dimension grew.
  bool insert(std::vector<S> v) {
    v = reduce(std::move(v));
    int c = -1;
    for (int j = 0; j < ambient_; ++j)
      if (!is_zero(v[j])) { c = j; break; }
    if (c < 0) return false;
    S inv = S(1) / v[c];
    for (int j = c; j < ambient_; ++j) v[j] = inv * v[j];
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      S f = rows_[k][c];
      if (is_zero(f)) continue;
      for (int j = c; j < ambient_; ++j) rows_[k][j] -= f * v[j];
    }
    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), c) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, c);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_)
      throw std::invalid_argument("ambient dimension mismatch");
    return a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  void check_ambient(const std::vector<S>& v) const {
    if (static_cast<int>(v.size()) != ambient_)
      throw std::invalid_argument("ambient dimension mismatch");
  }

  int ambient_;
  std::vector<std::vector<S>> rows_;
  std::vector<int> pivots_;
};

template <class S>
bool subspace_equal(const Subspace<S>& a, const Subspace<S>& b) {
  return a == b;
}

/// Basis of the right kernel {x : m x = 0}; dim = cols - rank.
template <class S>
Subspace<S> null_space(const Matrix<S>& m) {
  static_assert(is_exact_field<S>);
  std::vector<std::vector<S>> rows;
  rows.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  auto pivots = detail::rref(rows);
  Subspace<S> kernel(m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<S> v(m.cols(), S(0));
    v[f] = S(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -rows[k][f];
    kernel.insert(std::move(v));
  }
  return kernel;
}

}  // namespace brauer
