#pragma once

// The explicit ideal CCTs: the main family CT^s[n] over Q(sqrt2) and the
// rational family T^Q[n].

#include <vector>

#include "cct/extend.hpp"

namespace cct {

inline FieldElement q(long num, long den = 1) { return FieldElement(Rational(num, den)); }

inline Point make_point(std::initializer_list<FieldElement> xs) { return Point(xs); }

// theta_0 = (sqrt2-1, 1-sqrt2, 2, 0, 1)
inline Point theta0() { return {FieldElement(-1, 1), FieldElement(1, -1), 2, 0, 1}; }
// theta_1 = (1, 0, 1, 0, 1)
inline Point theta1() { return {1, 0, 1, 0, 1}; }
// theta_2 = ((-11+7sqrt2)/23, (-9-11sqrt2)/23, (16-6sqrt2)/23, 0, 1)
inline Point theta2() {
  return {FieldElement(Rational(-11, 23), Rational(7, 23)), FieldElement(Rational(-9, 23), Rational(-11, 23)),
          FieldElement(Rational(16, 23), Rational(-6, 23)), 0, 1};
}
// theta_3 = ((37+11sqrt2)/49, (-11+6sqrt2)/49, (22-12sqrt2)/49, 0, 1)
inline Point theta3() {
  return {FieldElement(Rational(37, 49), Rational(11, 49)), FieldElement(Rational(-11, 49), Rational(6, 49)),
          FieldElement(Rational(22, 49), Rational(-12, 49)), 0, 1};
}

// The outer facet normal at theta_0 in CT^s[3].
inline Point theta0_facet_normal() {
  return {FieldElement(7, 5), FieldElement(-8, -5), 2, 0, FieldElement(-9, -5)};
}

inline SymmetricCCT<FieldElement> cts1() { return build_symmetric<FieldElement>({theta0(), theta1()}, Ambient::S4); }

// CT^s[n] for n >= 1, extended from CT^s[1].
inline SymmetricCCT<FieldElement> cts(int n, ExtendOptions opt = {}) {
  if (n < 1) throw Error(ErrorCode::Precondition, "CT^s[n] needs n >= 1");
  return extend_to(cts1(), n, opt);
}

// The seed kappa_l of the published coordinate lists: kappa_l = r12^{2l} seed_l.
template <class T>
Vec<T> kappa(const SymmetricCCT<T>& t, int l) {
  return rotate(2 * l, 0, t.seeds.at(l));
}

// Rational seeds (1/3, -1/3, 2, 0, 1) and (1, 0, 3/5, 0, 1).
inline Point rational_theta0() { return {q(1, 3), q(-1, 3), 2, 0, 1}; }
inline Point rational_theta1() { return {1, 0, q(3, 5), 0, 1}; }

inline SymmetricCCT<FieldElement> rational1() {
  return build_symmetric<FieldElement>({rational_theta0(), rational_theta1()}, Ambient::S4);
}

}  // namespace cct
