#pragma once

// Cube completion, the closed-form seed recursion, and elementary extension.

#include <string>
#include <vector>

#include "cct/ideal.hpp"

namespace cct {

// The eighth vertex a1 of a cube from a2..a7, where the three faces through
// a1 are {a1,a2,a3,a4}, {a1,a4,a5,a6}, {a1,a2,a7,a6}.
template <class T>
Vec<T> complete_cube(const Vec<T>& a2, const Vec<T>& a3, const Vec<T>& a4, const Vec<T>& a5, const Vec<T>& a6,
                     const Vec<T>& a7) {
  if (rank(Mat<T>{a2, a3, a4, a5, a6, a7}) <= 3) {
    throw Error(ErrorCode::CoplanarQuads, "the three quadrilaterals lie in a common plane");
  }
  const std::size_t n = a2.size();
  Mat<T> eqs;
  for (const Mat<T>& quad : {Mat<T>{a2, a3, a4}, Mat<T>{a4, a5, a6}, Mat<T>{a2, a7, a6}}) {
    LinearSubspace<T> sp(n, quad);
    if (sp.dim() != 3) throw Error(ErrorCode::DegenerateInput, "a quadrilateral spans less than a 2-sphere");
    for (auto& row : sp.complement(a2[0])) eqs.push_back(row);
  }
  Mat<T> ker = nullspace(eqs, n, a2[0]);
  if (ker.size() != 1) {
    throw Error(ErrorCode::DegenerateInput, "meet of the quadrilateral spans has dimension " + std::to_string(ker.size()));
  }
  Vec<T> x = ker[0];
  if (n == 5) {
    if (is_zero(x.back())) throw Error(ErrorCode::DegenerateInput, "completed vertex lies on the equator");
    return homogenize(x);
  }
  // on the equator sphere pick the antipode facing the three neighbours
  int s = sign_of(dot(x, a2 + a4 + a6));
  if (s == 0) throw Error(ErrorCode::DegenerateInput, "completed vertex is orthogonal to its neighbours");
  return s > 0 ? x : -x;
}

// mu(a,b) of the closed-form recursion; a, b homogeneous with a4 = b4 = 0.
// 1 - mu = 4 (La - Lb) S / den.
template <class T>
T mu_coefficient(const Vec<T>& a, const Vec<T>& b) {
  if (a.size() != 5 || b.size() != 5) throw Error(ErrorCode::BadNormalization, "points must live in S4");
  if (!is_zero(a[3]) || !is_zero(b[3])) throw Error(ErrorCode::BadNormalization, "fourth coordinate must vanish");
  if (!is_zero(a[4] - ScalarTraits<T>::one_like(a[4])) || !is_zero(b[4] - ScalarTraits<T>::one_like(b[4]))) {
    throw Error(ErrorCode::BadNormalization, "last coordinate must be 1");
  }
  T S = a[0] * b[0] + a[1] * b[1];
  T La = a[0] * a[0] + a[1] * a[1];
  T Lb = b[0] * b[0] + b[1] * b[1];
  T D = a[0] * b[1] - a[1] * b[0];
  T num = (S + Lb + D) * (S + S + S + Lb + D);
  T den = Lb * Lb + T(4) * La * S + T(2) * Lb * D + T(3) * S * S + D * D + T(4) * D * S;
  if (is_zero(den)) throw Error(ErrorCode::ZeroDenominator, "mu denominator vanishes");
  return num / den;
}

// i(a,b) = mu a + (1-mu) (r12 r34 b + r12 r34^-1 b) / 2
template <class T>
Vec<T> iterate_seed(const Vec<T>& a, const Vec<T>& b) {
  T mu = mu_coefficient(a, b);
  T one = ScalarTraits<T>::one_like(mu);
  T half = one / T(2);
  Vec<T> avg = scale(half, rotate(1, 1, b) + rotate(1, -1, b));
  return scale(mu, a) + scale(one - mu, avg);
}

struct ExtendOptions {
  bool certify = true;      // check_ideal on every new complex of width >= 2
  bool cross_check = true;  // compare the formula path with cube completion
  bool all_orbits = false;  // complete all 12 new cubes and compare with the orbit
};

// Cube completion at the new seed position (0,0,k+1).
template <class T>
Vec<T> completed_seed(const SymmetricCCT<T>& t) {
  const long k = t.width;
  return complete_cube(t.at({-1, 0, k + 1}), t.at({-1, -1, k + 1}), t.at({0, -1, k + 1}), t.at({0, -1, k}),
                       t.at({0, 0, k}), t.at({-1, 0, k}));
}

// The closed form applies to homogeneous exact seeds with vanishing x4.
template <class T>
bool formula_applies(const SymmetricCCT<T>& t) {
  if (t.ambient != Ambient::S4 || t.width < 1) return false;
  for (int l = t.width - 1; l <= t.width; ++l) {
    const auto& s = t.seeds[l];
    if (!is_zero(s[3]) || !is_zero(s[4] - ScalarTraits<T>::one_like(s[4]))) return false;
  }
  return true;
}

// New seed from the recursion kappa_{k+1} = r12^2 i(kappa_{k-1}, kappa_k),
// where kappa_j = r12^{2j} seed_j.
template <class T>
Vec<T> formula_seed(const SymmetricCCT<T>& t) {
  const int k = t.width;
  Vec<T> kp = rotate(2 * (k - 1), 0, t.seeds[k - 1]);
  Vec<T> kc = rotate(2 * k, 0, t.seeds[k]);
  Vec<T> next = rotate(2, 0, iterate_seed(kp, kc));
  return rotate(2 * (k + 1), 0, next);
}

template <class T>
SymmetricCCT<T> elementary_extension(const SymmetricCCT<T>& t, const ExtendOptions& opt = {}) {
  if (t.width < 1) throw Error(ErrorCode::Precondition, "extension needs width >= 1");
  Vec<T> seed;
  try {
    seed = completed_seed(t);
  } catch (const Error& e) {
    throw Error(ErrorCode::ExtensionDegenerate, e.what());
  }
  if constexpr (ScalarTraits<T>::exact) {
    if (opt.cross_check && formula_applies(t)) {
      Vec<T> alt;
      bool have_alt = true;
      try {
        alt = formula_seed(t);
      } catch (const Error&) {
        have_alt = false;
      }
      if (have_alt && alt != seed) {
        throw Error(ErrorCode::CertificationFailure, "closed form and cube completion disagree at layer " +
                                                         std::to_string(t.width + 1));
      }
    }
  }
  SymmetricCCT<T> out = t;
  out.width = t.width + 1;
  out.seeds.push_back(seed);
  if (opt.all_orbits) {
    const long k = t.width;
    for (std::size_t v = 12 * static_cast<std::size_t>(k + 1); v < out.num_vertices(); ++v) {
      LatticePoint x = representative(v);
      Vec<T> c = complete_cube(out.at(x - kE1), out.at(x - kE1 - kE2), out.at(x - kE2), out.at(x - kE2 - kE3),
                               out.at(x - kE3), out.at(x - kE1 - kE3));
      if (ray_relation(c, out.vertex(v)) <= 0) {
        throw Error(ErrorCode::CertificationFailure, "cube completion at vertex " + std::to_string(v) +
                                                         " disagrees with the orbit of the new seed");
      }
    }
  }
  if (opt.certify && out.width >= 2) {
    IdealityCertificate cert = check_ideal(out);
    if (!cert.passed()) {
      std::string why = cert.failures.empty() ? std::string("unknown") : cert.failures.front();
      throw Error(ErrorCode::CertificationFailure, "extension to width " + std::to_string(out.width) +
                                                       " is not ideal: " + why);
    }
  }
  return out;
}

template <class T>
SymmetricCCT<T> extend_to(const SymmetricCCT<T>& t, int n, ExtendOptions opt = {}) {
  if (n < t.width) throw Error(ErrorCode::Precondition, "target width below current width");
  SymmetricCCT<T> cur = t;
  while (cur.width < n) cur = elementary_extension(cur, opt);
  return cur;
}

struct SlopeStep {
  int width;
  int sign;       // sign of the obtuseness witness; -1 means obtuse
  BigFloat angle;  // radians
};

// Extends `steps` times and records the top-window slope after each step,
// starting with the input. CertificationFailure if obtuseness is lost.
template <class T>
std::vector<SlopeStep> slope_monotone_harness(const SymmetricCCT<T>& t, int steps, long prec = 256,
                                              ExtendOptions opt = {}) {
  if (t.width < 2) throw Error(ErrorCode::Precondition, "slope harness needs width >= 2");
  std::vector<SlopeStep> out;
  SymmetricCCT<T> cur = t;
  for (int i = 0;; ++i) {
    SlopeWitness<T> sw = slope_witness(control_cct(cur));
    int s = sign_of(sw.inner);
    if (s >= 0) {
      throw Error(ErrorCode::CertificationFailure, "slope is not obtuse at width " + std::to_string(cur.width));
    }
    out.push_back({cur.width, s, slope_angle(sw, prec)});
    if (i == steps) break;
    cur = elementary_extension(cur, opt);
  }
  return out;
}

}  // namespace cct
