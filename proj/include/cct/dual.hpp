#pragma once

// Polar duals of CCTs in convex position and reciprocal diagrams in S^3_eq.
//
// The pole of the cube with corner w is the outer facet normal. Poles are
// equivariant, so the dual is again a symmetric CCT: the dual vertex at w is
// the pole of the primal cube at w, the dual edge [w, w+e_i] is reciprocal to
// the primal quadrilateral shared by the cubes at w and w+e_i, and the dual
// has width k-3.

#include <string>
#include <vector>

#include "cct/convex.hpp"

namespace cct {

template <class T>
struct DualComplex {
  SymmetricCCT<T> poles;      // in S4, one vertex per primal facet
  SymmetricCCT<T> projected;  // orthogonal projection to S3eq
};

// Primal quadrilateral reciprocal to the dual edge from w in direction i.
inline std::array<LatticePoint, 4> dual_edge_face(const LatticePoint& w, int i) {
  const LatticePoint dirs[3] = {kE1, kE2, kE3};
  LatticePoint base = w + dirs[i];
  const LatticePoint& a = dirs[(i + 1) % 3];
  const LatticePoint& b = dirs[(i + 2) % 3];
  return {base, base + a, base + a + b, base + b};
}

template <class T>
DualComplex<T> build_polar_dual(const SymmetricCCT<T>& t, const ConvexityCertificate<T>& cert) {
  if (t.ambient != Ambient::S4) throw Error(ErrorCode::Precondition, "polar dual needs a CCT in S4");
  const std::size_t nfacets = 12 * static_cast<std::size_t>(t.width - 2);
  if (t.width < 3 || !cert.passed || cert.mode != CertMode::Brute || cert.facets.size() != nfacets) {
    throw Error(ErrorCode::MissingCertificate, "polar dual needs a passing full brute convexity certificate");
  }
  std::vector<Vec<T>> seeds;
  for (int l = 0; l + 3 <= t.width; ++l) {
    seeds.push_back(cert.facets.at(vertex_index(LatticePoint{0, 0, l})).hemisphere.normal);
  }
  DualComplex<T> d;
  d.poles = build_symmetric(seeds, Ambient::S4);
  for (const auto& w : cert.facets) {
    if (ray_relation(w.hemisphere.normal, d.poles.vertex(w.facet)) <= 0) {
      throw Error(ErrorCode::CertificationFailure, "facet normals are not equivariant at facet " +
                                                       std::to_string(w.facet));
    }
  }
  d.projected = control_cct(d.poles);
  return d;
}

struct ReciprocityReport {
  bool reciprocal = false;
  bool orientation_preserving = false;
  std::size_t edges_checked = 0;
  std::vector<std::string> failures;

  bool passed() const { return reciprocal && orientation_preserving; }
};

namespace detail {

// Basis of the tangent space at m of the great sphere sp(rows).
template <class T>
Mat<T> tangent_basis(const Mat<T>& rows, const Vec<T>& m) {
  LinearSubspace<T> sp(m.size(), rows);
  Mat<T> eqs = sp.complement(m[0]);
  eqs.push_back(m);
  return nullspace(eqs, m.size(), m[0]);
}

// <n, a/|a|> > <n, b/|b|> without square roots.
template <class T>
bool normalized_gap_positive(const Vec<T>& n, const Vec<T>& a, const Vec<T>& b) {
  T alpha = dot(n, a), beta = dot(n, b);
  int sa = sign_of(alpha), sb = sign_of(beta);
  if (sa > 0 && sb <= 0) return true;
  if (sa <= 0 && sb > 0) return false;
  if (sa == 0 && sb == 0) return false;
  T lhs = alpha * alpha * dot(b, b);
  T rhs = beta * beta * dot(a, a);
  return sa > 0 ? sign_of(lhs - rhs) > 0 : sign_of(lhs - rhs) < 0;
}

}  // namespace detail

// Reciprocity of a dual complex d (width k-3) to a CCT c (width k), both in
// S3eq: each dual edge span meets the reciprocal primal quadrilateral span in
// one point with orthogonal tangent spaces there, and the normal of the shared
// face directed towards the cube of a has positive inner product with a - b.
template <class T>
ReciprocityReport check_reciprocal(const SymmetricCCT<T>& c, const SymmetricCCT<T>& d) {
  if (c.ambient != Ambient::S3eq || d.ambient != Ambient::S3eq) {
    throw Error(ErrorCode::Precondition, "reciprocity is checked in S3eq");
  }
  if (d.width != c.width - 3) throw Error(ErrorCode::Precondition, "dual width must be primal width - 3");
  ReciprocityReport rep;
  rep.reciprocal = true;
  rep.orientation_preserving = true;
  AbstractCCT ab = build_abstract(d.width);
  const LatticePoint dirs[3] = {kE1, kE2, kE3};
  for (std::size_t v = 0; v < d.num_vertices(); ++v) {
    LatticePoint w = representative(v);
    if (w.layer() + 1 > d.width) continue;
    for (int i = 0; i < 3; ++i) {
      ++rep.edges_checked;
      Vec<T> a = d.at(w), b = d.at(w + dirs[i]);
      auto face = dual_edge_face(w, i);
      Mat<T> quad;
      for (const auto& p : face) quad.push_back(c.at(p));
      std::string tag = "dual edge " + std::to_string(v) + "+e" + std::to_string(i + 1);
      LinearSubspace<T> m = meet(span(Mat<T>{a, b}), span(quad));
      if (m.dim() != 1) {
        rep.reciprocal = false;
        rep.failures.push_back(tag + ": meet has dimension " + std::to_string(m.dim()));
        continue;
      }
      Vec<T> x = m.basis()[0];
      Mat<T> te = detail::tangent_basis(Mat<T>{a, b}, x);
      Mat<T> tf = detail::tangent_basis(quad, x);
      bool orth = true;
      for (const auto& p : te)
        for (const auto& q : tf)
          if (!is_zero(dot(p, q))) orth = false;
      if (!orth) {
        rep.reciprocal = false;
        rep.failures.push_back(tag + ": spans are not orthogonal at their meet");
      }
      // normal of the face hyperplane, directed towards the cube at w, which
      // owns the vertex w not on the face
      Mat<T> ker = nullspace(quad, 4, a[0]);
      if (ker.size() != 1) {
        rep.reciprocal = false;
        rep.failures.push_back(tag + ": face does not span a hyperplane");
        continue;
      }
      Vec<T> n = ker[0];
      int s = sign_of(dot(n, c.at(w)));
      if (s == 0) {
        rep.orientation_preserving = false;
        rep.failures.push_back(tag + ": adjacent cube is flat");
        continue;
      }
      if (s < 0) n = -n;
      if (!detail::normalized_gap_positive(n, a, b)) {
        rep.orientation_preserving = false;
        rep.failures.push_back(tag + ": orientation is reversed");
      }
    }
  }
  return rep;
}

template <class T>
void require_reciprocal(const SymmetricCCT<T>& c, const SymmetricCCT<T>& d) {
  auto rep = check_reciprocal(c, d);
  if (!rep.reciprocal) throw Error(ErrorCode::NotReciprocal, rep.failures.front());
  if (!rep.orientation_preserving) throw Error(ErrorCode::NotOrientationPreserving, rep.failures.front());
}

struct HarnessReport {
  std::vector<ReciprocityReport> steps;  // steps[0] is the initial pair

  bool passed() const {
    for (const auto& s : steps)
      if (!s.passed()) return false;
    return !steps.empty();
  }
};

// Extends the primal and its reciprocal independently by cube completion and
// re-checks reciprocity after every step.
template <class T>
HarnessReport reciprocity_extension_harness(const SymmetricCCT<T>& c, const SymmetricCCT<T>& d, int steps) {
  if (c.width < 5) throw Error(ErrorCode::Precondition, "the harness needs primal width >= 5");
  if (steps < 0) throw Error(ErrorCode::Precondition, "negative step count");
  HarnessReport rep;
  rep.steps.push_back(check_reciprocal(c, d));
  if (!rep.steps.back().passed()) return rep;
  ExtendOptions opt;
  opt.certify = false;
  opt.cross_check = false;
  SymmetricCCT<T> cc = c, dd = d;
  for (int i = 0; i < steps; ++i) {
    cc = elementary_extension(cc, opt);
    dd = elementary_extension(dd, opt);
    rep.steps.push_back(check_reciprocal(cc, dd));
    if (!rep.steps.back().passed()) break;
  }
  return rep;
}

}  // namespace cct
