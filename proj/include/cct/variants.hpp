#pragma once

// Rational CCTs (exact, exported through Theta = diag(1,1,1,sqrt3,1)) and
// inscribed CCTs (BigFloat) with sphere witnesses.

#include <string>
#include <vector>

#include "cct/bigfloat.hpp"
#include "cct/families.hpp"

namespace cct {

struct RationalCCT {
  SymmetricCCT<FieldElement> complex;
  std::vector<Vec<Rational>> exported;  // Theta applied to every vertex, if requested
};

// Theta = diag(1, 1, 1, sqrt3, 1); RationalityFailure if a coordinate of the
// image is irrational.
inline Vec<Rational> theta_export(const Point& x) {
  Vec<Rational> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    FieldElement y = i == 3 ? x[i] * FieldElement::sqrt3() : x[i];
    if (!y.is_rational()) throw Error(ErrorCode::RationalityFailure, "coordinate " + std::to_string(i) + " is " + y.str());
    out.push_back(y.a());
  }
  return out;
}

inline RationalCCT build_rational(int n, bool export_rational, const ExtendOptions& opt = {}) {
  if (n < 1) throw Error(ErrorCode::Precondition, "T^Q[n] needs n >= 1");
  RationalCCT r;
  r.complex = extend_to(rational1(), n, opt);
  if (export_rational) {
    for (const auto& v : r.complex.vertices()) r.exported.push_back(theta_export(v));
  }
  return r;
}

// The second coordinate magnitude x of the inscribed layer-1 seed, from the
// real trigonometric closed form. The closed form as displayed evaluates to
// -x; the sign is flipped here.
inline BigFloat inscribed_x(long prec) {
  BigFloat two(2L, prec);
  BigFloat t = atan(BigFloat(3L, prec) * sqrt(BigFloat(566805L, prec)) / BigFloat(5593L, prec)) / BigFloat(3L, prec);
  BigFloat c23 = pow(two, Rational(2, 3));
  BigFloat inner = c23 * sqrt(BigFloat(789L, prec)) * sin(t) - c23 * sqrt(BigFloat(263L, prec)) * cos(t) -
                   BigFloat(13L, prec) * pow(two, Rational(1, 6));
  return -(pow(two, Rational(5, 6)) / BigFloat(60L, prec) * inner);
}

namespace detail {

struct BigComplex {
  BigFloat re, im;
};

inline BigComplex cmul(const BigComplex& a, const BigComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline BigComplex cdiv(const BigComplex& a, const BigComplex& b) {
  BigFloat d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

// Principal cube root of a with a.re > 0.
inline BigComplex ccbrt(const BigComplex& a) {
  BigFloat r = cbrt(sqrt(a.re * a.re + a.im * a.im));
  BigFloat arg = atan(a.im / a.re) / BigFloat(3L, a.re.precision());
  return {r * cos(arg), r * sin(arg)};
}

}  // namespace detail

// The same quantity from the complex radical form with principal roots; only
// the real part is returned, the imaginary part is rounding noise.
inline BigFloat inscribed_x_radical(long prec) {
  using detail::BigComplex;
  BigFloat s3 = sqrt(BigFloat(3L, prec));
  BigComplex w{BigFloat(83895L, prec), -BigFloat(45L, prec) * sqrt(BigFloat(566805L, prec))};
  BigComplex w13 = detail::ccbrt(w);
  BigComplex w23 = detail::cmul(w13, w13);
  BigFloat c60 = BigFloat(60L, prec);
  BigFloat p23 = pow(c60, Rational(2, 3)), p43 = pow(c60, Rational(4, 3));
  BigComplex a{BigFloat(-2L, prec) * p23, BigFloat(2L, prec) * s3 * p23};
  BigComplex t1 = detail::cmul(a, w23);
  BigComplex t2{BigFloat(263L, prec) * p43, BigFloat(263L, prec) * s3 * p43};
  BigComplex t3{BigFloat(1560L, prec) * w13.re, BigFloat(1560L, prec) * w13.im};
  BigComplex num{t1.re - t2.re - t3.re, t1.im - t2.im - t3.im};
  BigComplex den{BigFloat(3600L, prec) * w13.re, BigFloat(3600L, prec) * w13.im};
  return -detail::cdiv(num, den).re;
}

// The root of 1000 x^3 - 1300 x^2 - 1190 x + 1507 in [1, 1.1] by bisection.
inline BigFloat inscribed_x_cubic(long prec) {
  auto f = [&](const BigFloat& x) {
    return ((BigFloat(1000L, prec) * x - BigFloat(1300L, prec)) * x - BigFloat(1190L, prec)) * x +
           BigFloat(1507L, prec);
  };
  BigFloat lo(1L, prec), hi = BigFloat(Rational(11, 10), prec);
  int slo = f(lo).sign();
  for (long i = 0; i < prec + 8; ++i) {
    BigFloat mid = (lo + hi) / BigFloat(2L, prec);
    if (f(mid).sign() == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / BigFloat(2L, prec);
}

struct InscribedSeeds {
  BigFloat x, y, z;
  Vec<BigFloat> theta0, theta1;
};

inline InscribedSeeds inscribed_seeds(long prec) {
  InscribedSeeds s;
  s.x = inscribed_x(prec);
  BigFloat x2 = s.x * s.x;
  BigFloat root = sqrt(BigFloat(559L, prec) - BigFloat(400L, prec) * s.x - BigFloat(100L, prec) * x2);
  s.y = (BigFloat(24L, prec) - BigFloat(20L, prec) * s.x) / root;
  s.z = (BigFloat(319L, prec) - BigFloat(100L, prec) * x2 - BigFloat(200L, prec) * s.x) / (BigFloat(10L, prec) * root);
  BigFloat one(1L, prec), zero(0L, prec);
  s.theta0 = {one, -one, s.y, zero, one};
  s.theta1 = {BigFloat(Rational(11, 10), prec), s.x, s.z, zero, one};
  return s;
}

// A sphere in S4: the unit vectors y with <u, y> = c.
struct SphereWitness {
  Vec<BigFloat> u;
  BigFloat c;
  BigFloat tolerance;
};

inline BigFloat norm(const Vec<BigFloat>& x) { return sqrt(dot(x, x)); }

inline Vec<BigFloat> approx_vec(const Vec<BigFloat>& v, long prec) {
  Vec<BigFloat> r;
  for (const auto& x : v) {
    BigFloat y(0L, prec);
    mpfr_set(y.get(), x.get(), MPFR_RNDN);
    r.push_back(y);
  }
  return r;
}

// |<u, x/|x|> - c|.
inline BigFloat sphere_residual(const SphereWitness& s, const Vec<BigFloat>& x) {
  return abs(dot(s.u, x) / norm(x) - s.c);
}

// Fits the sphere through five linearly independent vertices of layers
// 0..2 and, with verify_fit, checks the other vertices of those layers
// against it.
template <class T>
SphereWitness fit_sphere(const SymmetricCCT<T>& t, long prec, bool verify_fit = true) {
  if (t.ambient != Ambient::S4 || t.width < 2) throw Error(ErrorCode::Precondition, "sphere fit needs width >= 2 in S4");
  std::vector<Vec<BigFloat>> pts;
  for (std::size_t v = 0; v < 36; ++v) {
    Vec<BigFloat> x = approx_vec(t.vertex(v), prec);
    pts.push_back(scale(BigFloat(1L, prec) / norm(x), x));
  }
  Mat<BigFloat> rows;
  for (const auto& y : pts) {
    Mat<BigFloat> trial = rows;
    trial.push_back(y);
    if (rank(trial) == trial.size()) rows.push_back(y);
    if (rows.size() == 5) break;
  }
  if (rows.size() != 5) throw Error(ErrorCode::DegenerateInput, "layers 0..2 do not span R^5");
  Vec<BigFloat> w = solve(rows, Vec<BigFloat>(5, BigFloat(1L, prec)));
  BigFloat len = norm(w);
  SphereWitness s;
  s.u = scale(BigFloat(1L, prec) / len, w);
  s.c = BigFloat(1L, prec) / len;
  s.tolerance = pow(BigFloat(2L, prec), Rational(-prec / 2));
  if (!(s.c < BigFloat(1L, prec))) throw Error(ErrorCode::DegenerateInput, "fitted slice misses the open ball");
  for (std::size_t v = 0; verify_fit && v < pts.size(); ++v) {
    if (sphere_residual(s, pts[v]) > s.tolerance) {
      throw Error(ErrorCode::MembershipFailure, "width-2 vertex " + std::to_string(v) + " is off the fitted sphere");
    }
  }
  return s;
}

struct InscribedCCT {
  InscribedSeeds seeds;
  SymmetricCCT<BigFloat> complex;
  SphereWitness sphere;
};

struct QuadricReport {
  bool passed = true;
  BigFloat max_residual;
  std::size_t worst_vertex = 0;
  std::size_t vertices_checked = 0;
};

template <class T>
QuadricReport check_quadric_propagation(const SymmetricCCT<T>& t, const SphereWitness& s) {
  const long prec = s.c.precision();
  QuadricReport rep;
  rep.max_residual = BigFloat(0L, prec);
  for (std::size_t v = 36; v < t.num_vertices(); ++v) {
    BigFloat r = sphere_residual(s, approx_vec(t.vertex(v), prec));
    ++rep.vertices_checked;
    if (r > rep.max_residual) {
      rep.max_residual = r;
      rep.worst_vertex = v;
    }
  }
  rep.passed = !(rep.max_residual > s.tolerance);
  return rep;
}

template <class T>
void require_quadric_propagation(const SymmetricCCT<T>& t, const SphereWitness& s) {
  QuadricReport rep = check_quadric_propagation(t, s);
  if (!rep.passed) {
    throw Error(ErrorCode::MembershipFailure, "vertex " + std::to_string(rep.worst_vertex) + " has residual " +
                                                   rep.max_residual.str(6));
  }
}

inline InscribedCCT build_inscribed(int n, long prec) {
  if (n < 1) throw Error(ErrorCode::Precondition, "T^in[n] needs n >= 1");
  if (prec < 128) throw Error(ErrorCode::Precondition, "inscribed family needs at least 128 bits");
  InscribedCCT r;
  r.seeds = inscribed_seeds(prec);
  ExtendOptions opt;
  opt.certify = false;
  opt.cross_check = false;
  SymmetricCCT<BigFloat> t1 = build_symmetric<BigFloat>({r.seeds.theta0, r.seeds.theta1}, Ambient::S4);
  r.complex = extend_to(t1, std::max(n, 2), opt);
  r.sphere = fit_sphere(r.complex, prec);
  if (n < 2) r.complex = r.complex.restrict_to(0, n);
  QuadricReport rep = check_quadric_propagation(r.complex, r.sphere);
  if (!rep.passed) {
    throw Error(ErrorCode::PrecisionExhausted, "residual " + rep.max_residual.str(6) + " at vertex " +
                                                   std::to_string(rep.worst_vertex) + "; rerun at higher precision");
  }
  return r;
}

}  // namespace cct
