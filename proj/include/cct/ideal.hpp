#pragma once

// Ideality predicates: symmetry, alignment of three-layer windows,
// transversality, slope and orientation.

#include <cmath>
#include <string>
#include <vector>

#include "cct/symmetric.hpp"

namespace cct {

namespace detail {

template <class T>
T cross2(const T& p0, const T& p1, const T& q0, const T& q1) {
  return p0 * q1 - p1 * q0;
}

// The cone over the triangle abc meets the circle where the coordinate
// pair k, k+1 vanishes, i.e. 0 lies in the convex hull of the projected pairs.
template <class T>
bool triangle_hits_circle(const Vec<T>& a, const Vec<T>& b, const Vec<T>& c, std::size_t k) {
  const Vec<T>* pts[3] = {&a, &b, &c};
  for (auto* p : pts) {
    if (is_zero((*p)[k]) && is_zero((*p)[k + 1])) return true;
  }
  int signs[3];
  for (int i = 0; i < 3; ++i) {
    const Vec<T>& p = *pts[i];
    const Vec<T>& q = *pts[(i + 1) % 3];
    signs[i] = sign_of(cross2(p[k], p[k + 1], q[k], q[k + 1]));
    if (signs[i] == 0 && sign_of(p[k] * q[k] + p[k + 1] * q[k + 1]) < 0) return true;
  }
  return signs[0] != 0 && signs[0] == signs[1] && signs[1] == signs[2];
}

template <class T>
bool quad_avoids_circles(const Vec<T>& a, const Vec<T>& b, const Vec<T>& c, const Vec<T>& d) {
  for (std::size_t k : {std::size_t(0), std::size_t(2)}) {
    if (triangle_hits_circle(a, b, c, k) || triangle_hits_circle(a, c, d, k)) return false;
  }
  return true;
}

// pi_2(p) is the midpoint of the arc from pi_2(s) to pi_2(t).
template <class T>
bool pi2_midpoint(const Vec<T>& p, const Vec<T>& s, const Vec<T>& t) {
  T ps = p[2] * s[2] + p[3] * s[3];
  T pt = p[2] * t[2] + p[3] * t[3];
  T ss = s[2] * s[2] + s[3] * s[3];
  T tt = t[2] * t[2] + t[3] * t[3];
  if (sign_of(ps) != sign_of(pt)) return false;
  if (!is_zero(ps * ps * tt - pt * pt * ss)) return false;
  return pi_between(2, p, s, t);
}

}  // namespace detail

// The seven vertices of the window with bottom vertex at lattice point w.
template <class T>
struct WindowLabels {
  Vec<T> v, u, p, r, s, t, q;
};

template <class T>
WindowLabels<T> window_labels(const SymmetricCCT<T>& c, const LatticePoint& w) {
  return {c.at(w), c.at(w + kE3), c.at(w + kE1 + kE2), c.at(w + kE1), c.at(w + kE1 + kE3), c.at(w + kE2 + kE3),
          c.at(w + kE2)};
}

struct AlignmentReport {
  bool a = false, b = false, c = false, d = false, e = false, f = false, g = false;
  bool all() const { return a && b && c && d && e && f && g; }
};

// Conditions of the alignment statement for a symmetric window of three
// layers, starting at layer i of a CCT in S^3_eq.
template <class T>
AlignmentReport check_alignment(const SymmetricCCT<T>& c, int i) {
  if (c.ambient != Ambient::S3eq) throw Error(ErrorCode::Precondition, "alignment needs a CCT in S3eq");
  if (i < 0 || i + 2 > c.width) throw Error(ErrorCode::Precondition, "window out of range");
  AlignmentReport rep;
  SymmetricCCT<T> win = c.restrict_to(i, i + 2);
  AbstractCCT ab = build_abstract(2);
  rep.a = true;
  for (const auto& q : ab.quads) {
    if (!detail::quad_avoids_circles(win.vertex(q[0]), win.vertex(q[1]), win.vertex(q[2]), win.vertex(q[3]))) {
      rep.a = false;
      break;
    }
  }
  auto L = window_labels(win, LatticePoint{0, 0, 0});
  rep.b = pi_equal(2, L.s, L.r) && pi_equal(2, L.p, L.v) && pi_equal(2, L.v, L.u) && pi_equal(2, L.t, L.q);
  rep.c = pi_equal(0, L.t, L.s) && pi_equal(0, L.q, L.r);
  rep.d = detail::pi2_midpoint(L.p, L.s, L.t);
  rep.e = pi_between(0, L.v, L.u, L.p) && pi_between(0, L.s, L.u, L.p) && pi_between(0, L.r, L.u, L.p);
  rep.f = pi_between(0, L.s, L.u, L.r) && pi_between(0, L.v, L.u, L.r);
  rep.g = pi_between(0, L.r, L.v, L.p) && pi_between(0, L.r, L.s, L.p);
  return rep;
}

// Hypotheses of the injectivity criterion for the three quadrilaterals
// {u,t,v,q}, {u,s,v,r}, {p,q,v,r} around v. Returns the first failing
// condition letter, or 0.
template <class T>
char inj3_failure(const WindowLabels<T>& L) {
  if (!detail::quad_avoids_circles(L.u, L.t, L.v, L.q) || !detail::quad_avoids_circles(L.u, L.s, L.v, L.r) ||
      !detail::quad_avoids_circles(L.p, L.q, L.v, L.r)) {
    return 'a';
  }
  if (!(pi_equal(2, L.s, L.r) && pi_equal(2, L.p, L.v) && pi_equal(2, L.v, L.u) && pi_equal(2, L.t, L.q))) return 'b';
  if (!(pi_equal(0, L.t, L.s) && pi_equal(0, L.q, L.r))) return 'c';
  if (!pi_between(2, L.p, L.s, L.t)) return 'd';
  if (!(pi_between(0, L.v, L.u, L.p) && pi_between(0, L.r, L.u, L.p))) return 'e';
  if (!pi_between(0, L.s, L.u, L.r)) return 'f';
  return 0;
}

struct IdealityCertificate {
  bool applicable = false;  // width >= 2
  bool symmetric = false;
  bool transversal = false;
  bool slope_obtuse = false;
  bool oriented = false;
  std::vector<std::string> failures;

  bool passed() const { return symmetric && (!applicable || (transversal && slope_obtuse && oriented)); }
};

// Symmetry as exact orbit identities over all vertices:
// reflection x4 -> -x4 matches swapping x and y, r34^2 matches translation
// by (-1,1,0) and r12 r34^-1 matches translation by (0,-1,1).
template <class T>
bool check_symmetry(const SymmetricCCT<T>& c, std::vector<std::string>* why = nullptr) {
  for (std::size_t v = 0; v < c.num_vertices(); ++v) {
    LatticePoint w = representative(v);
    Vec<T> x = c.vertex(v);
    LatticePoint sw{w.y, w.x, w.z};
    if (!is_zero_vec(reflect_e4(x) - c.at(sw))) {
      if (why) why->push_back("reflection symmetry fails at vertex " + std::to_string(v));
      return false;
    }
    if (!is_zero_vec(rotate(0, 2, x) - c.at(w + LatticePoint{-1, 1, 0}))) {
      if (why) why->push_back("r34^2 symmetry fails at vertex " + std::to_string(v));
      return false;
    }
    if (!is_zero_vec(rotate(1, -1, x) - c.at(w + LatticePoint{0, -1, 1}))) {
      if (why) why->push_back("r12 r34^-1 symmetry fails at vertex " + std::to_string(v));
      return false;
    }
  }
  return true;
}

// Transversality of every window [i-1, i+1]: the injectivity criterion on
// the degree-3 stars of the bottom and top layers, plus pairwise distinct
// Clifford images of all window vertices.
template <class T>
bool check_transversal(const SymmetricCCT<T>& c, std::vector<std::string>* why = nullptr) {
  for (int i = 1; i + 1 <= c.width; ++i) {
    SymmetricCCT<T> win = c.restrict_to(i - 1, i + 1);
    for (std::size_t v = 0; v < 12; ++v) {
      LatticePoint w = representative(v);
      char fail = inj3_failure(window_labels(win, w));
      if (fail) {
        if (why) why->push_back("window " + std::to_string(i) + ": star of bottom vertex " + std::to_string(v) +
                                " fails condition (" + fail + ")");
        return false;
      }
      // top star, read with the lattice directions reversed
      LatticePoint top = representative(24 + v);
      WindowLabels<T> L{win.at(top), win.at(top - kE3), win.at(top - kE1 - kE2), win.at(top - kE1),
                        win.at(top - kE1 - kE3), win.at(top - kE2 - kE3), win.at(top - kE2)};
      fail = inj3_failure(L);
      if (fail) {
        if (why) why->push_back("window " + std::to_string(i) + ": star of top vertex " + std::to_string(24 + v) +
                                " fails condition (" + fail + ")");
        return false;
      }
    }
    auto verts = win.vertices();
    for (std::size_t a = 0; a < verts.size(); ++a) {
      for (std::size_t b = a + 1; b < verts.size(); ++b) {
        if (pi_equal(0, verts[a], verts[b]) && pi_equal(2, verts[a], verts[b])) {
          if (why) why->push_back("window " + std::to_string(i) + ": vertices " + std::to_string(a) + " and " +
                                  std::to_string(b) + " share a Clifford image");
          return false;
        }
      }
    }
  }
  return true;
}

// Slope data of the top window of a CCT in S^3_eq: s = seed_k, t = r34^2 s,
// u = the middle vertex at lattice (-1,0,k), m = s + t.
template <class T>
struct SlopeWitness {
  T inner;       // projected_inner(m, u, pi_0 direction); negative iff obtuse
  T u_perp2;     // |u tangent|^2 * <m,m>
  T w_perp2;     // |w tangent|^2 * <m,m>
  T mm;
};

template <class T>
SlopeWitness<T> slope_witness(const SymmetricCCT<T>& c) {
  if (c.ambient != Ambient::S3eq) throw Error(ErrorCode::Precondition, "slope needs a CCT in S3eq");
  if (c.width < 2) throw Error(ErrorCode::Precondition, "slope needs width >= 2");
  const long k = c.width;
  Vec<T> s = c.at({0, 0, k});
  Vec<T> t = rotate(0, 2, s);
  Vec<T> u = c.at({-1, 0, k});
  Vec<T> m = s + t;
  Vec<T> w = m;
  w[2] = ScalarTraits<T>::zero_like(m[0]);
  w[3] = ScalarTraits<T>::zero_like(m[0]);
  return {projected_inner(m, u, w), tangent_norm2_scaled(m, u), tangent_norm2_scaled(m, w), dot(m, m)};
}

// The slope angle in radians at the given precision.
template <class T>
BigFloat slope_angle(const SlopeWitness<T>& sw, long prec) {
  auto to_bf = [prec](const T& x) {
    if constexpr (std::is_same_v<T, BigFloat>) {
      return x;
    } else {
      return approx(x, prec);
    }
  };
  // cos(alpha) = inner / (|u_perp| |w_perp|), with both norms scaled by <m,m>
  BigFloat num = to_bf(sw.inner) * to_bf(sw.mm);
  BigFloat den = sqrt(to_bf(sw.u_perp2) * to_bf(sw.w_perp2));
  return acos(num / den);
}

template <class T>
IdealityCertificate check_ideal(const SymmetricCCT<T>& t) {
  IdealityCertificate cert;
  SymmetricCCT<T> c = control_cct(t);
  cert.symmetric = check_symmetry(c, &cert.failures) && check_symmetry(t, &cert.failures);
  cert.applicable = t.width >= 2;
  if (!cert.applicable) return cert;
  cert.transversal = check_transversal(c, &cert.failures);
  SlopeWitness<T> sw = slope_witness(c);
  cert.slope_obtuse = sign_of(sw.inner) < 0;
  if (!cert.slope_obtuse) cert.failures.push_back("slope of top window is not obtuse");
  cert.oriented = sign_of(clifford_lambda(c.seeds[c.width]) - clifford_lambda(c.seeds[c.width - 1])) < 0;
  if (!cert.oriented) cert.failures.push_back("top layer is not closer to C0");
  return cert;
}

}  // namespace cct
