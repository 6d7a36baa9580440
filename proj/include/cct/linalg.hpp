#pragma once

// Dense linear algebra over exact scalars (Rational, FieldElement) and BigFloat.
// Row-major matrices stored as vectors of rows.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "cct/bigfloat.hpp"
#include "cct/scalar.hpp"

namespace cct {

template <class T>
using Vec = std::vector<T>;
template <class T>
using Mat = std::vector<Vec<T>>;

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational zero_like(const Rational&) { return 0; }
  static Rational one_like(const Rational&) { return 1; }
};

template <>
struct ScalarTraits<FieldElement> {
  static constexpr bool exact = true;
  static bool is_zero(const FieldElement& x) { return x.is_zero(); }
  static FieldElement zero_like(const FieldElement&) { return 0; }
  static FieldElement one_like(const FieldElement&) { return 1; }
};

template <>
struct ScalarTraits<BigFloat> {
  static constexpr bool exact = false;
  // Entries below 2^(-prec/2) count as zero for rank decisions.
  static bool is_zero(const BigFloat& x) {
    if (x.is_zero()) return true;
    return mpfr_get_exp(x.get()) < -x.precision() / 2;
  }
  static BigFloat zero_like(const BigFloat& x) { return BigFloat(0L, x.precision()); }
  static BigFloat one_like(const BigFloat& x) { return BigFloat(1L, x.precision()); }
};

template <class T>
bool is_zero(const T& x) {
  return ScalarTraits<T>::is_zero(x);
}

template <class T>
T dot(const Vec<T>& x, const Vec<T>& y) {
  T s = ScalarTraits<T>::zero_like(x.at(0));
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

template <class T>
Vec<T> operator+(const Vec<T>& x, const Vec<T>& y) {
  Vec<T> r(x);
  for (std::size_t i = 0; i < x.size(); ++i) r[i] += y[i];
  return r;
}

template <class T>
Vec<T> operator-(const Vec<T>& x, const Vec<T>& y) {
  Vec<T> r(x);
  for (std::size_t i = 0; i < x.size(); ++i) r[i] -= y[i];
  return r;
}

template <class T>
Vec<T> operator-(const Vec<T>& x) {
  Vec<T> r(x);
  for (auto& v : r) v = -v;
  return r;
}

template <class T>
Vec<T> scale(const T& s, const Vec<T>& x) {
  Vec<T> r(x);
  for (auto& v : r) v = s * v;
  return r;
}

template <class T>
bool is_zero_vec(const Vec<T>& x) {
  return std::all_of(x.begin(), x.end(), [](const T& v) { return is_zero(v); });
}

template <class T>
Mat<T> transpose(const Mat<T>& m) {
  if (m.empty()) return {};
  Mat<T> t(m[0].size(), Vec<T>(m.size(), ScalarTraits<T>::zero_like(m[0][0])));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

template <class T>
Vec<T> mat_vec(const Mat<T>& m, const Vec<T>& x) {
  Vec<T> r;
  r.reserve(m.size());
  for (const auto& row : m) r.push_back(dot(row, x));
  return r;
}

namespace detail {

// Pivot row for column c among rows [from, n): first nonzero for exact
// scalars, largest magnitude for BigFloat.
template <class T>
std::size_t find_pivot(const Mat<T>& a, std::size_t from, std::size_t c) {
  std::size_t best = a.size();
  for (std::size_t r = from; r < a.size(); ++r) {
    if (is_zero(a[r][c])) continue;
    if constexpr (ScalarTraits<T>::exact) {
      return r;
    } else {
      if (best == a.size() || abs(a[r][c]) > abs(a[best][c])) best = r;
    }
  }
  return best;
}

}  // namespace detail

// Reduced row echelon form. Returns pivot columns; `a` is reduced in place
// with unit pivots and zero rows dropped.
template <class T>
std::vector<std::size_t> rref(Mat<T>& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t cols = a[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = detail::find_pivot(a, row, c);
    if (p == a.size()) continue;
    std::swap(a[row], a[p]);
    T inv = ScalarTraits<T>::one_like(a[row][c]) / a[row][c];
    for (std::size_t j = c; j < cols; ++j) a[row][j] = (j == c) ? ScalarTraits<T>::one_like(inv) : a[row][j] * inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || is_zero(a[r][c])) continue;
      T f = a[r][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!is_zero(a[row][j])) a[r][j] -= f * a[row][j];
      }
      a[r][c] = ScalarTraits<T>::zero_like(f);
    }
    pivots.push_back(c);
    ++row;
  }
  a.resize(row);
  return pivots;
}

// Fraction-free (Bareiss) elimination. Returns the rank; for square input
// `det` receives the determinant.
template <class T>
std::size_t bareiss_rank(Mat<T> a, T* det = nullptr) {
  if (a.empty()) return 0;
  const std::size_t n = a.size(), m = a[0].size();
  T prev = ScalarTraits<T>::one_like(a[0][0]);
  std::size_t rank = 0;
  int swaps = 0;
  for (std::size_t c = 0; c < m && rank < n; ++c) {
    std::size_t p = detail::find_pivot(a, rank, c);
    if (p == n) continue;
    if (p != rank) {
      std::swap(a[p], a[rank]);
      ++swaps;
    }
    for (std::size_t r = rank + 1; r < n; ++r) {
      for (std::size_t j = c + 1; j < m; ++j) {
        a[r][j] = (a[rank][c] * a[r][j] - a[r][c] * a[rank][j]) / prev;
      }
      a[r][c] = ScalarTraits<T>::zero_like(prev);
    }
    prev = a[rank][c];
    ++rank;
  }
  if (det) {
    if (n != m || rank < n) {
      *det = ScalarTraits<T>::zero_like(a[0][0]);
    } else {
      *det = (swaps % 2) ? -prev : prev;
    }
  }
  return rank;
}

template <class T>
std::size_t rank(const Mat<T>& a) {
  return bareiss_rank(a);
}

template <class T>
T determinant(const Mat<T>& a) {
  T d = ScalarTraits<T>::zero_like(a.at(0).at(0));
  bareiss_rank(a, &d);
  return d;
}

// Basis of {x : a x = 0}; `cols` is needed when `a` has no rows.
template <class T>
Mat<T> nullspace(Mat<T> a, std::size_t cols, const T& like) {
  auto pivots = rref(a);
  Mat<T> basis;
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec<T> v(cols, ScalarTraits<T>::zero_like(like));
    v[f] = ScalarTraits<T>::one_like(like);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
Mat<T> nullspace(const Mat<T>& a) {
  return nullspace(a, a.at(0).size(), a[0][0]);
}

// Unique solution of the square system a x = b.
template <class T>
Vec<T> solve(const Mat<T>& a, const Vec<T>& b) {
  const std::size_t n = a.size();
  Mat<T> aug = a;
  for (std::size_t i = 0; i < n; ++i) aug[i].push_back(b[i]);
  auto piv = rref(aug);
  if (piv.size() != n || piv.back() >= n) throw Error(ErrorCode::RankDeficient, "singular linear system");
  Vec<T> x;
  for (std::size_t i = 0; i < n; ++i) x.push_back(aug[i][n]);
  return x;
}

// Incrementally maintained reduced echelon basis; insert() reports whether
// the vector increased the rank.
template <class T>
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t cols) : cols_(cols) {}

  std::size_t rank() const { return rows_.size(); }

  bool insert(Vec<T> v) {
    reduce(v);
    std::size_t c = 0;
    while (c < cols_ && is_zero(v[c])) ++c;
    if (c == cols_) return false;
    T inv = ScalarTraits<T>::one_like(v[c]) / v[c];
    for (std::size_t j = c; j < cols_; ++j) {
      if (!is_zero(v[j])) v[j] = v[j] * inv;
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(c);
    return true;
  }

  bool contains(Vec<T> v) const {
    reduce(v);
    return is_zero_vec(v);
  }

 private:
  void reduce(Vec<T>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t p = pivots_[i];
      if (is_zero(v[p])) continue;
      T f = v[p];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!is_zero(rows_[i][j])) v[j] -= f * rows_[i][j];
      }
    }
  }

  std::size_t cols_;
  Mat<T> rows_;
  std::vector<std::size_t> pivots_;
};

template <class T>
Vec<FieldElement> to_field(const Vec<T>& v) {
  Vec<FieldElement> r;
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

template <class V>
Vec<BigFloat> approx_vec(const V& v, long prec) {
  Vec<BigFloat> r;
  for (const auto& x : v) r.push_back(approx(FieldElement(x), prec));
  return r;
}

}  // namespace cct
