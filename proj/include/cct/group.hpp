#pragma once

// The rotations r12 (quarter turn in the x1x2-plane), r34 (sixth turn in the
// x3x4-plane), the reflection x4 -> -x4, and the groups they generate.

#include <string>
#include <vector>

#include "cct/geom.hpp"

namespace cct {

template <class T>
struct RotationConstants;

template <>
struct RotationConstants<FieldElement> {
  static FieldElement half(const FieldElement&) { return Rational(1, 2); }
  static FieldElement half_sqrt3(const FieldElement&) { return {0, 0, Rational(1, 2), 0}; }
};

template <>
struct RotationConstants<BigFloat> {
  static BigFloat half(const BigFloat& like) { return BigFloat(1L, like.precision()) / BigFloat(2L, like.precision()); }
  static BigFloat half_sqrt3(const BigFloat& like) { return sqrt(BigFloat(3L, like.precision())) / BigFloat(2L, like.precision()); }
};

inline int mod(int v, int m) { return ((v % m) + m) % m; }

// r12^a r34^b applied to x (4 or 5 coordinates; extra coordinates are fixed).
template <class T>
Vec<T> rotate(int a, int b, const Vec<T>& x) {
  a = mod(a, 4);
  b = mod(b, 6);
  Vec<T> r(x);
  switch (a) {
    case 1: r[0] = -x[1]; r[1] = x[0]; break;
    case 2: r[0] = -x[0]; r[1] = -x[1]; break;
    case 3: r[0] = x[1]; r[1] = -x[0]; break;
    default: break;
  }
  if (b == 0) return r;
  if (b == 3) {
    r[2] = -x[2];
    r[3] = -x[3];
    return r;
  }
  const T h = RotationConstants<T>::half(x[0]);
  const T s = RotationConstants<T>::half_sqrt3(x[0]);
  // cos, sin of b*pi/3 expressed through h = 1/2 and s = sqrt3/2
  T c = (b == 1 || b == 5) ? h : -h;
  T sn = (b == 1 || b == 2) ? s : -s;
  r[2] = c * x[2] - sn * x[3];
  r[3] = sn * x[2] + c * x[3];
  return r;
}

template <class T>
Vec<T> reflect_e4(const Vec<T>& x) {
  Vec<T> r(x);
  r[3] = -r[3];
  return r;
}

// Orthogonal 5x5 matrix over the field.
class GroupElement {
 public:
  GroupElement() : m_(identity5()) {}
  explicit GroupElement(Mat<FieldElement> m) : m_(std::move(m)) {}

  static GroupElement r12() { return rotation(1, 0); }
  static GroupElement r34() { return rotation(0, 1); }
  static GroupElement s_e4() {
    Mat<FieldElement> m = identity5();
    m[3][3] = -1;
    return GroupElement(m);
  }
  // r12^a r34^b
  static GroupElement rotation(int a, int b) {
    Mat<FieldElement> cols;
    Mat<FieldElement> id = identity5();
    for (const auto& e : id) cols.push_back(rotate(a, b, e));
    return GroupElement(transpose(cols));
  }

  const Mat<FieldElement>& matrix() const { return m_; }

  Point operator*(const Point& x) const { return mat_vec(m_, x); }

  friend GroupElement operator*(const GroupElement& g, const GroupElement& h) {
    Mat<FieldElement> r(5, Vec<FieldElement>(5));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        for (int k = 0; k < 5; ++k) r[i][j] += g.m_[i][k] * h.m_[k][j];
    return GroupElement(r);
  }

  GroupElement inverse() const { return GroupElement(transpose(m_)); }

  bool is_orthogonal() const {
    GroupElement p = inverse() * *this;
    return p == GroupElement();
  }

  friend bool operator==(const GroupElement& g, const GroupElement& h) { return g.m_ == h.m_; }

 private:
  static Mat<FieldElement> identity5() {
    Mat<FieldElement> m(5, Vec<FieldElement>(5));
    for (int i = 0; i < 5; ++i) m[i][i] = 1;
    return m;
  }
  Mat<FieldElement> m_;
};

// Closure of a generator set under multiplication.
inline std::vector<GroupElement> generate_group(const std::vector<GroupElement>& gens) {
  std::vector<GroupElement> elems{GroupElement()};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      GroupElement h = g * elems[i];
      bool seen = false;
      for (const auto& e : elems) {
        if (e == h) {
          seen = true;
          break;
        }
      }
      if (!seen) elems.push_back(h);
    }
  }
  return elems;
}

// The rotation group generated by r34^2 and r34 r12 (order 12).
inline std::vector<GroupElement> rotation_group() {
  auto r12 = GroupElement::r12(), r34 = GroupElement::r34();
  return generate_group({r34 * r34, r34 * r12});
}

// Rotations together with the reflection x4 -> -x4 (order 24).
inline std::vector<GroupElement> symmetry_group() {
  auto r12 = GroupElement::r12(), r34 = GroupElement::r34();
  return generate_group({GroupElement::s_e4(), r34 * r34, r34 * r12});
}

// Group exponents (a, b) of r12^a r34^b attached to the lattice point
// (x, y, z): translation by e1 acts as (r12 r34)^-1, by e2 as r12^-1 r34,
// and e3 acts trivially.
struct RotationIndex {
  int a;
  int b;
};

inline RotationIndex lattice_rotation(long x, long y, long /*z*/) {
  return {mod(static_cast<int>(-(x + y) % 4), 4), mod(static_cast<int>((y - x) % 6), 6)};
}

}  // namespace cct
