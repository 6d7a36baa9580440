#pragma once

// Spherical linear algebra: spans, meets, side tests and the sign-level
// predicates attached to the Clifford projections of S^3_eq.
//
// Points are rays in R^{d+1} stored as plain coordinate vectors. Points of
// S^4 have five coordinates; points of S^3_eq have four (the equator
// coordinate is dropped).

#include <cstddef>
#include <vector>

#include "cct/linalg.hpp"

namespace cct {

using Point = Vec<FieldElement>;

template <class T>
int sign_of(const T& x) {
  if (is_zero(x)) return 0;
  return sgn(x);
}

template <class T>
class LinearSubspace {
 public:
  LinearSubspace() = default;
  LinearSubspace(std::size_t ambient, Mat<T> rows) : ambient_(ambient), basis_(std::move(rows)) {
    if (!basis_.empty()) rref(basis_);
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const Mat<T>& basis() const { return basis_; }

  // Linear forms vanishing on the subspace.
  Mat<T> complement(const T& like) const {
    if (basis_.empty()) {
      Mat<T> id(ambient_, Vec<T>(ambient_, ScalarTraits<T>::zero_like(like)));
      for (std::size_t i = 0; i < ambient_; ++i) id[i][i] = ScalarTraits<T>::one_like(like);
      return id;
    }
    return nullspace(basis_, ambient_, like);
  }

  bool contains(const Vec<T>& x) const {
    if (basis_.empty()) return is_zero_vec(x);
    Mat<T> m = basis_;
    m.push_back(x);
    return rank(m) == basis_.size();
  }

  friend bool operator==(const LinearSubspace& u, const LinearSubspace& v) {
    if (u.ambient_ != v.ambient_ || u.dim() != v.dim()) return false;
    for (std::size_t i = 0; i < u.basis_.size(); ++i)
      for (std::size_t j = 0; j < u.ambient_; ++j)
        if (!is_zero(u.basis_[i][j] - v.basis_[i][j])) return false;
    return true;
  }

 private:
  std::size_t ambient_ = 0;
  Mat<T> basis_;
};

template <class T>
LinearSubspace<T> span(const std::vector<Vec<T>>& points) {
  if (points.empty()) throw Error(ErrorCode::Precondition, "span of an empty list");
  return LinearSubspace<T>(points[0].size(), points);
}

template <class T>
LinearSubspace<T> meet(const LinearSubspace<T>& u, const LinearSubspace<T>& v) {
  if (u.ambient() != v.ambient()) throw Error(ErrorCode::Precondition, "meet of subspaces in different spaces");
  if (u.dim() == 0 || v.dim() == 0) return LinearSubspace<T>(u.ambient(), {});
  const T& like = u.basis()[0][0];
  Mat<T> eqs = u.complement(like);
  for (auto& row : v.complement(like)) eqs.push_back(row);
  if (eqs.empty()) return u;
  return LinearSubspace<T>(u.ambient(), nullspace(eqs, u.ambient(), like));
}

template <class T>
LinearSubspace<T> join(const LinearSubspace<T>& u, const LinearSubspace<T>& v) {
  Mat<T> rows = u.basis();
  for (const auto& r : v.basis()) rows.push_back(r);
  return LinearSubspace<T>(u.ambient(), rows);
}

// The single ray of a one-dimensional meet of spans; MeetDegenerate otherwise.
template <class T>
Vec<T> meet_point(const std::vector<std::vector<Vec<T>>>& spans, const char* what) {
  LinearSubspace<T> acc = span(spans.at(0));
  for (std::size_t i = 1; i < spans.size(); ++i) acc = meet(acc, span(spans[i]));
  if (acc.dim() != 1) {
    throw Error(ErrorCode::MeetDegenerate, std::string(what) + ": meet has dimension " + std::to_string(acc.dim()));
  }
  return acc.basis()[0];
}

// Interior is {x : <normal, x> < 0}.
template <class T>
struct Hemisphere {
  Vec<T> normal;
};

template <class T>
int side(const Hemisphere<T>& h, const Vec<T>& x) {
  return sign_of(dot(h.normal, x));
}

// Representative with positive last coordinate, or first nonzero coordinate
// positive on the equator.
template <class T>
Vec<T> canonical(const Vec<T>& x) {
  int s = sign_of(x.back());
  if (s == 0) {
    for (const auto& v : x) {
      s = sign_of(v);
      if (s != 0) break;
    }
  }
  if (s == 0) throw Error(ErrorCode::Precondition, "zero vector has no canonical ray");
  return s > 0 ? x : -x;
}

// Homogeneous form with last coordinate 1.
template <class T>
Vec<T> homogenize(const Vec<T>& x) {
  if (is_zero(x.back())) throw Error(ErrorCode::Precondition, "point on the equator has no homogeneous form");
  T inv = ScalarTraits<T>::one_like(x.back()) / x.back();
  return scale(inv, x);
}

// Scalar multiple test for rays (positive = same ray, negative = antipode).
template <class T>
int ray_relation(const Vec<T>& x, const Vec<T>& y) {
  Mat<T> m = {x, y};
  if (rank(m) != 1) return 0;
  return sign_of(dot(x, y));
}

template <class T>
Vec<T> project_equator(const Vec<T>& x) {
  Vec<T> r(x.begin(), x.end() - 1);
  if (is_zero_vec(r)) throw Error(ErrorCode::PoleProjection, "point is a pole of the sphere");
  return r;
}

// lambda with y/|y| on the weighted Clifford torus C_lambda.
template <class T>
T clifford_lambda(const Vec<T>& y) {
  T n12 = y[0] * y[0] + y[1] * y[1];
  T n34 = y[2] * y[2] + y[3] * y[3];
  T tot = n12 + n34;
  if (is_zero(tot)) throw Error(ErrorCode::Precondition, "clifford_lambda of the zero vector");
  return (n34 + n34) / tot;
}

namespace detail {

template <class T>
void check_pair(int i, const Vec<T>& p) {
  std::size_t k = (i == 2) ? 2 : 0;
  if (is_zero(p[k]) && is_zero(p[k + 1])) {
    throw Error(ErrorCode::DegenerateAnchor, i == 2 ? "(x3,x4) pair is zero" : "(x1,x2) pair is zero");
  }
}

}  // namespace detail

// Side of x relative to the hyperplane spanned by the pi_i fiber of anchor.
template <class T>
int fiber_side(int i, const Vec<T>& anchor, const Vec<T>& x) {
  if (i != 0 && i != 2) throw Error(ErrorCode::Precondition, "fiber index must be 0 or 2");
  detail::check_pair(i, anchor);
  if (i == 2) return sign_of(anchor[3] * x[2] - anchor[2] * x[3]);
  return sign_of(anchor[1] * x[0] - anchor[0] * x[1]);
}

// pi_i(x) == pi_i(y): the coordinate pairs are positive multiples.
template <class T>
bool pi_equal(int i, const Vec<T>& x, const Vec<T>& y) {
  if (i != 0 && i != 2) throw Error(ErrorCode::Precondition, "fiber index must be 0 or 2");
  detail::check_pair(i, x);
  detail::check_pair(i, y);
  std::size_t k = (i == 2) ? 2 : 0;
  T cross = x[k] * y[k + 1] - x[k + 1] * y[k];
  T d = x[k] * y[k] + x[k + 1] * y[k + 1];
  return is_zero(cross) && sign_of(d) > 0;
}

// pi_i(x) lies in the interior of the segment [pi_i(a), pi_i(b)]; at least
// two of the three separation statements must hold.
template <class T>
bool pi_between(int i, const Vec<T>& x, const Vec<T>& a, const Vec<T>& b) {
  int votes = 0;
  if (fiber_side(i, x, a) * fiber_side(i, x, b) < 0) ++votes;
  if (fiber_side(i, b, a) * fiber_side(i, b, x) > 0) ++votes;
  if (fiber_side(i, a, b) * fiber_side(i, a, x) > 0) ++votes;
  return votes >= 2;
}

// <u,w> - <u,m><w,m>/<m,m>: sign of the cosine of the angle at m between
// the segments towards u and w. m may be unnormalized.
template <class T>
T projected_inner(const Vec<T>& m, const Vec<T>& u, const Vec<T>& w) {
  T mm = dot(m, m);
  if (is_zero(mm)) throw Error(ErrorCode::Precondition, "projected_inner with zero base point");
  T um = dot(u, m), wm = dot(w, m);
  if (is_zero(dot(u, u) * mm - um * um) || is_zero(dot(w, w) * mm - wm * wm)) {
    throw Error(ErrorCode::DegenerateTangent, "tangent direction vanishes");
  }
  return dot(u, w) - um * wm / mm;
}

// Squared norm of the tangent component of u at m, times <m,m>.
template <class T>
T tangent_norm2_scaled(const Vec<T>& m, const Vec<T>& u) {
  T um = dot(u, m);
  return dot(u, u) * dot(m, m) - um * um;
}

}  // namespace cct
