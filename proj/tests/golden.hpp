#pragma once

// Printed reference values shared by the unit tests and the acceptance run.

#include <cmath>
#include <string>
#include <vector>

#include "cct/families.hpp"

namespace golden {

using cct::FieldElement;
using cct::Point;
using cct::Rational;

// One unit in the last printed digit of a decimal string like "1.7906e-3".
inline double last_digit_unit(const std::string& s) {
  auto e = s.find('e');
  std::string mant = s.substr(0, e);
  int exp10 = e == std::string::npos ? 0 : std::stoi(s.substr(e + 1));
  auto dot = mant.find('.');
  int decimals = dot == std::string::npos ? 0 : static_cast<int>(mant.size() - dot - 1);
  return std::pow(10.0, exp10 - decimals);
}

struct ExactRow {
  FieldElement first, second, third;
  const char* lambda;  // as printed
};

inline FieldElement qs2(long p, long q, long r) {
  return (FieldElement(p) + FieldElement(q) * FieldElement::sqrt2()) / FieldElement(r);
}

inline FieldElement rq(const char* s) {
  Rational r(s);
  r.canonicalize();
  return FieldElement(r);
}

// kappa_0 .. kappa_10 of CT^s.
inline const std::vector<ExactRow>& standard_table() {
  static const FieldElement r2 = FieldElement::sqrt2();
  static const std::vector<ExactRow> rows = {
      {r2 - 1, 1 - r2, 2, "1.8419"},
      {-1, 0, 1, "1"},
      {qs2(11, -7, 23), qs2(9, 11, 23), qs2(16, -6, 23), "0.1709"},
      {qs2(37, 11, 49), qs2(-11, 6, 49), qs2(22, -12, 49), "0.0181"},
      {qs2(-241, 145, 697), qs2(-407, -241, 697), qs2(260, -168, 697), "1.7906e-3"},
      {qs2(-457, -192, 679), qs2(192, -111, 679), qs2(202, -138, 679), "1.7580e-4"},
      {qs2(577, -341, 1837), qs2(1155, 577, 1837), qs2(464, -324, 1837), "1.7247e-5"},
      {qs2(25057, 11471, 38473), qs2(-11471, 6708, 38473), qs2(8116, -5712, 38473), "1.6920e-6"},
      {qs2(-233, 137, 761), qs2(-487, -233, 761), qs2(136, -96, 761), "1.6598e-7"},
      {qs2(-353893, -165588, 548089), qs2(165588, -97098, 548089), qs2(82564, -58344, 548089), "1.6283e-8"},
      {qs2(5033675, -2955751, 16549127), qs2(10637625, 5033675, 16549127), qs2(2108416, -1490520, 16549127),
       "1.5974e-9"},
  };
  return rows;
}

// kappa_0 .. kappa_10 of the rational family.
inline const std::vector<ExactRow>& rational_table() {
  static const std::vector<ExactRow> rows = {
      {rq("1/3"), rq("-1/3"), rq("2"), "1.8947"},
      {rq("-1"), rq("0"), rq("3/5"), "0.5294"},
      {rq("1/25"), rq("27/25"), rq("12/125"), "0.0157"},
      {rq("179/165"), rq("-7/165"), rq("4/275"), "3.5892e-4"},
      {rq("-93/2185"), rq("-2371/2185"), rq("24/10925"), "8.1842e-6"},
      {rq("-7851/7235"), rq("308/7235"), rq("12/36175"), "1.8660e-7"},
      {rq("8159/191655"), rq("207973/191655"), rq("16/319425"), "4.2549e-9"},
      {rq("1377301/1269235"), rq("-54033/1269235"), rq("48/6346175"), "9.7016e-11"},
      {rq("-715667/16811015"), rq("-18242349/16811015"), rq("96/84055075"), "2.2121e-12"},
      {rq("-60404969/55665465"), rq("2369752/55665465"), rq("16/92775775"), "5.0438e-14"},
      {rq("62774721/1474577945"), rq("1600127387/1474577945"), rq("192/7372889725"), "1.1501e-15"},
  };
  return rows;
}

struct FloatRow {
  double first, second, third;  // seven decimals
  const char* lambda;
  double norm;
};

// kappa_0 .. kappa_5 of the inscribed family.
inline const std::vector<FloatRow>& inscribed_table() {
  static const std::vector<FloatRow> rows = {
      {1.0, -1.0, 0.5266533, "0.2435", 1.8103},
      {-1.1, -1.0226363, 0.1468968, "0.0189", 1.8103},
      {-1.0243331, 1.1074958, 0.0394770, "1.3686e-3", 1.8103},
      {1.1080357, 1.0244553, 0.0105801, "9.8305e-5", 1.8103},
      {1.0244641, -1.1080745, 0.0028350, "7.0582e-6", 1.8103},
      {-1.1080770, -1.0244648, 0.0007596, "5.0675e-7", 1.8103},
  };
  return rows;
}

struct Labelled {
  const char* label;
  Point p;
};

// Displayed coordinates of the K construction at lambda = sqrt2 - 1.
inline std::vector<Labelled> k_points() {
  const FieldElement r3 = FieldElement::sqrt3();
  const FieldElement h = FieldElement(Rational(1, 2));
  const FieldElement l = FieldElement::sqrt2() - 1;
  return {
      {"a1+", {1, 0, -2, 0, 1}},
      {"a1-", {-1, 0, -2, 0, 1}},
      {"oa1+", {0, 1, -2, 0, 1}},
      {"a2+", {1, 0, 1, r3, 1}},
      {"a2-", {-1, 0, 1, r3, 1}},
      {"oa2+", {0, 1, 1, r3, 1}},
      {"a3+", {1, 0, 1, -r3, 1}},
      {"a3-", {-1, 0, 1, -r3, 1}},
      {"oa3+", {0, 1, 1, -r3, 1}},
      {"b23", {0, 0, 1, 0, 1}},
      {"oa1-", {0, -1, -2, 0, 1}},
      {"b13", {0, 0, -h, -r3 * h, 1}},
      {"oa2-", {0, -1, 1, r3, 1}},
      {"b12", {0, 0, -h, r3 * h, 1}},
      {"oa3-", {0, -1, 1, -r3, 1}},
      {"b0", {0, 0, 0, 0, 1}},
      {"ta1+", {1, 0, 2, 0, 1}},
      {"ta2+", {1, 0, -1, -r3, 1}},
      {"ta3+", {1, 0, -1, r3, 1}},
      {"ta1-", {-1, 0, 2, 0, 1}},
      {"ota1+", {0, 1, 2, 0, 1}},
      {"ota1-", {0, -1, 2, 0, 1}},
      {"ta2-", {-1, 0, -1, -r3, 1}},
      {"ota2+", {0, 1, -1, -r3, 1}},
      {"ota2-", {0, -1, -1, -r3, 1}},
      {"ta3-", {-1, 0, -1, r3, 1}},
      {"ota3+", {0, 1, -1, r3, 1}},
      {"ota3-", {0, -1, -1, r3, 1}},
      {"psi1+", {1, 0, 1, 0, 1}},
      {"psi2+", {1, 0, -h, -r3 * h, 1}},
      {"psi3+", {1, 0, -h, r3 * h, 1}},
      {"psi1-", {-1, 0, 1, 0, 1}},
      {"otpsi1+", {0, 1, -1, 0, 1}},
      {"otpsi1-", {0, -1, -1, 0, 1}},
      {"psi2-", {-1, 0, -h, -r3 * h, 1}},
      {"otpsi2+", {0, 1, h, r3 * h, 1}},
      {"otpsi2-", {0, -1, h, r3 * h, 1}},
      {"psi3-", {-1, 0, -h, r3 * h, 1}},
      {"otpsi3+", {0, 1, h, -r3 * h, 1}},
      {"otpsi3-", {0, -1, h, -r3 * h, 1}},
      {"b1", {0, 0, -2, 0, 1}},
      {"b12++", {h, h, -h, r3 * h, 1}},
      {"b12+-", {h, -h, -h, r3 * h, 1}},
      {"w1++", {l, l, -2, 0, 1}},
      {"w1+-", {l, -l, -2, 0, 1}},
      {"w1--", {-l, -l, -2, 0, 1}},
      {"w1-+", {-l, l, -2, 0, 1}},
      {"w2++", {l, l, 1, r3, 1}},
      {"w2--", {-l, -l, 1, r3, 1}},
      {"w3++", {l, l, 1, -r3, 1}},
      {"w3--", {-l, -l, 1, -r3, 1}},
      {"tw1+-", {l, -l, 2, 0, 1}},
      {"tw1-+", {-l, l, 2, 0, 1}},
      {"tw2+-", {l, -l, -1, -r3, 1}},
      {"tw2-+", {-l, l, -1, -r3, 1}},
      {"tw3+-", {l, -l, -1, r3, 1}},
      {"tw3-+", {-l, l, -1, r3, 1}},
  };
}

}  // namespace golden
