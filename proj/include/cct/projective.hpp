#pragma once

// The projectively unique point configuration K built from a product of two
// triangles by exact meets, the weak projective triple it yields for the
// polytopes conv CT^s[n], subdirect cones, Lawrence extensions and the
// 69-dimensional polytopes PCCTP_69[n].
//
// Point labels: "o" marks the copy with zero first coordinate, "t" the
// antipodal framework copy, "w" the layer-0 quadrilateral points, "inf" the
// points at infinity.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cct/families.hpp"

namespace cct {

struct KConfiguration {
  FieldElement lambda;
  std::vector<std::string> labels;
  std::vector<Point> points;
  std::vector<int> steps;  // construction step (1..7) of each point
  std::map<std::string, std::size_t> index;

  std::size_t size() const { return points.size(); }
  const Point& at(const std::string& label) const {
    auto it = index.find(label);
    if (it == index.end()) throw Error(ErrorCode::Precondition, "no point labelled " + label);
    return points[it->second];
  }
  void add(const std::string& label, const Point& p, int step) {
    if (index.count(label)) throw Error(ErrorCode::Precondition, "duplicate label " + label);
    index[label] = points.size();
    labels.push_back(label);
    points.push_back(p);
    steps.push_back(step);
  }
};

namespace detail {

inline FieldElement r3() { return FieldElement::sqrt3(); }

inline std::string sgn_str(int s) { return s > 0 ? "+" : "-"; }

// A meet in the closed upper hemisphere: homogenized when off the equator.
inline Point meet_upper(const std::vector<std::vector<Point>>& spans, const std::string& what, int step) {
  Point x;
  try {
    x = meet_point(spans, what.c_str());
  } catch (const Error& e) {
    throw Error(ErrorCode::MeetDegenerate, "step " + std::to_string(step) + ", " + e.what());
  }
  return is_zero(x.back()) ? canonical(x) : homogenize(x);
}

// The 12 images of x under the rotation group.
inline std::vector<Point> rotation_orbit(const Point& x) {
  std::vector<Point> out;
  for (int a = 0; a < 4; ++a)
    for (int b = a % 2; b < 6; b += 2) out.push_back(rotate(a, b, x));
  return out;
}

inline bool same_ray_sets(const std::vector<Point>& xs, const std::vector<Point>& ys) {
  if (xs.size() != ys.size()) return false;
  for (const auto& x : xs) {
    bool hit = false;
    for (const auto& y : ys) {
      if (ray_relation(x, y) > 0) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace detail

// The layer-0 quadrilateral W_1 = {w1++, w1+-, w1--, w1-+} around b1 and the
// incidence conditions that pin it down up to dilation.
struct SquareCertificate {
  bool in_plane = false;         // all four points in sp{a1+-, oa1+-}
  bool diagonal_x = false;       // w1++, w1-- on X
  bool diagonal_y = false;       // w1+-, w1-+ on Y
  bool side_meets_o = false;     // w_ad, w_bc on sp{oa1+, oa1-}
  bool side_meet_a = false;      // w_ab on sp{a1+, a1-}
  bool same_component = false;   // w1++ and oa1+ on the same side of sp{a1+, a1-}

  bool all() const { return in_plane && diagonal_x && diagonal_y && side_meets_o && side_meet_a && same_component; }
};

inline SquareCertificate certify_square(const KConfiguration& k) {
  SquareCertificate c;
  LinearSubspace<FieldElement> plane = span<FieldElement>({k.at("a1+"), k.at("a1-"), k.at("oa1+"), k.at("oa1-")});
  const char* ws[4] = {"w1++", "w1+-", "w1--", "w1-+"};
  c.in_plane = true;
  for (auto w : ws) c.in_plane = c.in_plane && plane.contains(k.at(w));
  auto x_line = meet(span<FieldElement>({k.at("b1"), k.at("b12"), k.at("b12++")}), plane);
  auto y_line = meet(span<FieldElement>({k.at("b1"), k.at("b12"), k.at("b12+-")}), plane);
  c.diagonal_x = x_line.contains(k.at("w1++")) && x_line.contains(k.at("w1--"));
  c.diagonal_y = y_line.contains(k.at("w1+-")) && y_line.contains(k.at("w1-+"));
  LinearSubspace<FieldElement> o_line = span<FieldElement>({k.at("oa1+"), k.at("oa1-")});
  LinearSubspace<FieldElement> a_line = span<FieldElement>({k.at("a1+"), k.at("a1-")});
  c.side_meets_o = o_line.contains(k.at("wad")) && o_line.contains(k.at("wbc"));
  c.side_meet_a = a_line.contains(k.at("wab"));
  // same side: a functional on the plane vanishing on a1+ and a1- has the
  // same sign at w1++ and oa1+
  Mat<FieldElement> eqs = plane.complement(FieldElement(0));
  eqs.push_back(k.at("a1+"));
  eqs.push_back(k.at("a1-"));
  Mat<FieldElement> f = nullspace(eqs, 5, FieldElement(0));
  if (f.size() == 1) {
    int sw = sign_of(dot(f[0], k.at("w1++"))), so = sign_of(dot(f[0], k.at("oa1+")));
    c.same_component = sw != 0 && sw == so;
  }
  return c;
}

// The configuration K_lambda plus the four points at infinity, each point
// obtained by the construction's meets (64 points).
inline KConfiguration build_K(const FieldElement& lambda) {
  if (sgn(lambda) <= 0) throw Error(ErrorCode::Precondition, "lambda must be positive");
  using detail::meet_upper;
  using detail::r3;
  using detail::sgn_str;
  KConfiguration k;
  k.lambda = lambda;

  // I. vertices of the product of two triangles, then b_ij, oa_i^-, b0
  const Point base[3] = {{0, 0, -2, 0, 1}, {0, 0, 1, r3(), 1}, {0, 0, 1, -r3(), 1}};
  for (int i = 0; i < 3; ++i) {
    for (int s : {1, -1}) {
      Point p = base[i];
      p[0] = s;
      k.add("a" + std::to_string(i + 1) + sgn_str(s), p, 1);
    }
  }
  for (int i = 0; i < 3; ++i) {
    Point p = base[i];
    p[1] = 1;
    k.add("oa" + std::to_string(i + 1) + "+", p, 1);
  }
  auto A = [&](int i, int s) { return k.at("a" + std::to_string(i) + sgn_str(s)); };
  auto OA = [&](int i, int s) { return k.at("oa" + std::to_string(i) + sgn_str(s)); };
  const int pairs[3][2] = {{2, 3}, {1, 3}, {1, 2}};
  for (auto [i, j] : pairs) {
    std::string name = "b" + std::to_string(i) + std::to_string(j);
    k.add(name, meet_upper({{A(i, 1), A(j, -1)}, {A(i, -1), A(j, 1)}}, name, 1), 1);
  }
  auto B = [&](int i, int j) { return k.at("b" + std::to_string(std::min(i, j)) + std::to_string(std::max(i, j))); };
  for (int i = 1; i <= 3; ++i) {
    int j = i % 3 + 1;
    std::string name = "oa" + std::to_string(i) + "-";
    k.add(name, meet_upper({{A(i, 1), A(i, -1), OA(i, 1)}, {B(i, j), OA(j, 1)}}, name, 1), 1);
  }
  {
    std::vector<std::vector<Point>> spans;
    for (int i = 1; i <= 3; ++i) {
      int j = i % 3 + 1, l = j % 3 + 1;
      spans.push_back({A(i, 1), A(i, -1), B(j, l)});
      spans.push_back({OA(i, 1), OA(i, -1), B(j, l)});
    }
    k.add("b0", meet_upper(spans, "b0", 1), 1);
  }

  // II. the antipodal framework
  for (int s : {1, -1}) {
    for (int i = 1; i <= 3; ++i) {
      std::string name = "ta" + std::to_string(i) + sgn_str(s);
      k.add(name, meet_upper({{A(1, s), A(2, s), A(3, s)}, {k.at("b0"), A(i, -s)}}, name, 2), 2);
    }
  }
  for (int s : {1, -1}) {
    for (int i = 1; i <= 3; ++i) {
      std::string name = "ota" + std::to_string(i) + sgn_str(s);
      k.add(name, meet_upper({{OA(1, s), OA(2, s), OA(3, s)}, {k.at("b0"), OA(i, -s)}}, name, 2), 2);
    }
  }
  auto TA = [&](int i, int s) { return k.at("ta" + std::to_string(i) + sgn_str(s)); };
  auto OTA = [&](int i, int s) { return k.at("ota" + std::to_string(i) + sgn_str(s)); };

  // III. layer 1 of CT^s[1]
  for (int s : {1, -1}) {
    for (int i = 1; i <= 3; ++i) {
      int j = i % 3 + 1, l = j % 3 + 1;
      std::string name = "psi" + std::to_string(i) + sgn_str(s);
      k.add(name, meet_upper({{A(i, s), TA(i, s)}, {A(j, s), A(l, s)}}, name, 3), 3);
    }
  }
  for (int s : {1, -1}) {
    for (int i = 1; i <= 3; ++i) {
      int j = i % 3 + 1, l = j % 3 + 1;
      std::string name = "otpsi" + std::to_string(i) + sgn_str(s);
      k.add(name, meet_upper({{OA(i, s), OTA(i, s)}, {OTA(j, s), OTA(l, s)}}, name, 3), 3);
    }
  }

  // IV. transition to layer 0: the square W_1 of dilation lambda about b1
  k.add("b1", meet_upper({{A(1, 1), A(1, -1)}, {OA(1, 1), OA(1, -1)}}, "b1", 4), 4);
  k.add("b12++", meet_upper({{A(1, 1), OA(2, 1)}, {A(2, 1), OA(1, 1)}}, "b12++", 4), 4);
  k.add("b12+-", meet_upper({{A(1, 1), OA(2, -1)}, {A(2, 1), OA(1, -1)}}, "b12+-", 4), 4);
  auto W1 = [&](int s3, int s4) { return Point{lambda * FieldElement(s3), lambda * FieldElement(s4), -2, 0, 1}; };
  k.add("w1++", W1(1, 1), 4);
  k.add("w1+-", W1(1, -1), 4);
  k.add("w1--", W1(-1, -1), 4);
  k.add("w1-+", W1(-1, 1), 4);
  k.add("wad", meet_upper({{k.at("w1++"), A(1, -1)}, {k.at("w1-+"), A(1, 1)}}, "wad", 4), 4);
  k.add("wbc", meet_upper({{k.at("w1+-"), A(1, -1)}, {k.at("w1--"), A(1, 1)}}, "wbc", 4), 4);
  k.add("wab", meet_upper({{k.at("w1++"), OA(1, -1)}, {k.at("w1+-"), OA(1, 1)}}, "wab", 4), 4);
  SquareCertificate sq = certify_square(k);
  if (!sq.all()) throw Error(ErrorCode::CertificationFailure, "step 4: the square W_1 violates its incidences");

  // V. transfer of W_1 to the other five quadrilateral planes
  for (int i = 2; i <= 3; ++i) {
    for (int s : {1, -1}) {
      std::string w1 = "w1" + sgn_str(s) + sgn_str(s);
      std::string name = "w" + std::to_string(i) + sgn_str(s) + sgn_str(s);
      k.add(name,
            meet_upper({{A(i, 1), A(i, -1), OA(i, 1), OA(i, -1)},
                        {A(1, 1), A(i, 1), k.at(w1)},
                        {OA(1, 1), OA(i, 1), k.at(w1)}},
                       name, 5),
            5);
    }
  }
  for (int i = 1; i <= 3; ++i) {
    for (int s : {1, -1}) {
      std::string w1 = "w1" + sgn_str(s) + sgn_str(-s);
      std::string name = "tw" + std::to_string(i) + sgn_str(s) + sgn_str(-s);
      k.add(name,
            meet_upper({{TA(i, 1), TA(i, -1), OTA(i, 1), OTA(i, -1)},
                        {A(1, 1), TA(i, 1), k.at(w1)},
                        {OA(1, 1), OTA(i, 1), k.at(w1)}},
                       name, 5),
            5);
    }
  }

  // VII. four points at infinity spanning the equator
  k.add("inf1", meet_upper({{A(1, 1), A(2, 1)}, {A(1, -1), A(2, -1)}}, "inf1", 7), 7);
  k.add("inf2", meet_upper({{A(3, 1), A(2, 1)}, {A(3, -1), A(2, -1)}}, "inf2", 7), 7);
  k.add("inf3", meet_upper({{A(1, 1), A(1, -1)}, {A(2, 1), A(2, -1)}}, "inf3", 7), 7);
  k.add("inf4", meet_upper({{OA(1, 1), OA(1, -1)}, {OA(2, 1), OA(2, -1)}}, "inf4", 7), 7);
  return k;
}

// The layer-0 points Omega(lambda): the w-points with equal signs and the
// tw-points with opposite signs.
inline std::vector<std::string> omega_labels() {
  return {"w1++", "w1--", "w2++", "w2--", "w3++", "w3--", "tw1+-", "tw1-+", "tw2+-", "tw2-+", "tw3+-", "tw3-+"};
}

inline std::vector<std::string> layer1_labels() {
  std::vector<std::string> out;
  for (const char* pre : {"psi", "otpsi"})
    for (int i = 1; i <= 3; ++i)
      for (const char* s : {"+", "-"}) out.push_back(pre + std::to_string(i) + s);
  return out;
}

// The six points that must share a hyperplane: psi1+ and two of its
// rotations, and tw1-+ with two of its rotations.
inline std::vector<Point> lambda_points(const FieldElement& lambda) {
  Point psi = {1, 0, 1, 0, 1};
  Point w = {-lambda, lambda, 2, 0, 1};
  return {psi, rotate(1, 1, psi), rotate(1, -1, psi), w, rotate(-1, -1, w), rotate(-1, 1, w)};
}

// True iff the six points have rank <= 4, i.e. all 5x5 minors of the 6x5
// matrix vanish exactly.
inline bool verify_lambda(const FieldElement& lambda) {
  if (sgn(lambda) <= 0) throw Error(ErrorCode::Precondition, "lambda must be positive");
  auto pts = lambda_points(lambda);
  for (std::size_t skip = 0; skip < pts.size(); ++skip) {
    Mat<FieldElement> m;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (i != skip) m.push_back(pts[i]);
    if (!is_zero(determinant(m))) return false;
  }
  return true;
}

inline FieldElement lambda_value() { return FieldElement(-1, 1); }

// A hemisphere containing all points strictly, built from a functional c on
// all but the last coordinate that is already positive on the points with
// last coordinate 0; the last coordinate weight is raised until every point
// is inside.
inline Hemisphere<FieldElement> lifted_hemisphere(const Point& c_head, const std::vector<Point>& pts) {
  FieldElement m = 0;
  for (const auto& x : pts) {
    FieldElement head = 0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) head += c_head[i] * x[i];
    int s = sign_of(x.back());
    if (s < 0) throw Error(ErrorCode::HemisphereViolation, "point below the equator");
    if (s == 0) {
      if (sign_of(head) <= 0) throw Error(ErrorCode::HemisphereViolation, "equator point outside the base functional");
      continue;
    }
    FieldElement need = -head / x.back();
    if (sign_of(need - m) > 0) m = need;
  }
  Point c = c_head;
  c.resize(pts.at(0).size());
  c.back() = m + 1;
  Hemisphere<FieldElement> h{-c};
  for (const auto& x : pts) {
    if (side(h, x) >= 0) throw Error(ErrorCode::HemisphereViolation, "witness hemisphere does not contain all points");
  }
  return h;
}

struct WeakTriple {
  std::vector<Point> polytope;  // vertices of conv CT^s[n]
  std::vector<Point> framing;   // Q: layers 0 and 1 of CT^s[1]
  std::vector<Point> points;    // R: the rest of K
  std::vector<Point> wedge;     // points of R spanning the wedge hyperplane
  Point wedge_normal;           // every polytope vertex strictly negative
  Hemisphere<FieldElement> hemisphere;
  std::string framing_basis = "assumed: layers 0..1 frame the polytope by uniqueness of elementary extensions";
};

// Normal of the hyperplane spanned by the wedge points, oriented so that
// every polytope vertex is strictly negative; WedgeIntersectsPolytope otherwise.
inline Point wedge_normal(const std::vector<Point>& wedge, const std::vector<Point>& polytope) {
  Mat<FieldElement> m(wedge.begin(), wedge.end());
  Mat<FieldElement> ker = nullspace(m, wedge.at(0).size(), wedge[0][0]);
  if (ker.size() != 1) throw Error(ErrorCode::MeetDegenerate, "wedge points do not span a hyperplane");
  Point n = ker[0];
  int s0 = sign_of(dot(n, polytope.at(0)));
  for (std::size_t i = 0; i < polytope.size(); ++i) {
    int s = sign_of(dot(n, polytope[i]));
    if (s == 0 || s != s0) {
      throw Error(ErrorCode::WedgeIntersectsPolytope, "wedge hyperplane meets the polytope at vertex " + std::to_string(i));
    }
  }
  return s0 > 0 ? -n : n;
}

inline WeakTriple build_weak_triple(int n, const ExtendOptions& opt = {}) {
  if (n < 1) throw Error(ErrorCode::Precondition, "weak triple needs n >= 1");
  KConfiguration k = build_K(lambda_value());
  WeakTriple tr;
  tr.polytope = cts(n, opt).vertices();
  std::vector<std::string> qlabels = omega_labels();
  for (const auto& l : layer1_labels()) qlabels.push_back(l);
  std::set<std::string> qset(qlabels.begin(), qlabels.end());
  for (const auto& l : qlabels) tr.framing.push_back(k.at(l));
  for (std::size_t i = 0; i < k.size(); ++i)
    if (!qset.count(k.labels[i])) tr.points.push_back(k.points[i]);
  std::vector<Point> f0(tr.polytope.begin(), tr.polytope.begin() + 24);
  if (!detail::same_ray_sets(tr.framing, f0)) {
    throw Error(ErrorCode::CertificationFailure, "framing points differ from the first two layers");
  }
  tr.wedge = {k.at("inf1"), k.at("inf2"), k.at("inf3"), k.at("inf4")};
  tr.wedge_normal = wedge_normal(tr.wedge, tr.polytope);
  // base functional on the equator: 1 on each point at infinity
  Mat<FieldElement> eq;
  for (const auto& w : tr.wedge) eq.push_back(Point(w.begin(), w.end() - 1));
  Point c = solve(eq, Point{1, 1, 1, 1});
  std::vector<Point> all = tr.polytope;
  all.insert(all.end(), k.points.begin(), k.points.end());
  tr.hemisphere = lifted_hemisphere(c, all);
  return tr;
}

struct PPConfiguration {
  std::vector<Point> polytope;  // apex first, then the base vertices p^v
  std::vector<Point> points;
  std::size_t sphere_dim = 0;
  Hemisphere<FieldElement> hemisphere;
  Point cut_normal;             // the hyperplane containing the base
};

inline Point lift_equator(const Point& x) {
  Point y = x;
  y.push_back(0);
  return y;
}

// Pyramid over the polytope of a weak triple with apex v = (0,0,0,0,-1,1);
// the base lies in the hyperplane spanned by the wedge and e5 + eps e6.
inline PPConfiguration subdirect_cone(const WeakTriple& tr) {
  const Point v = {0, 0, 0, 0, -1, 1};
  FieldElement eps = 1;
  for (int attempt = 0; attempt < 8; ++attempt, eps = eps / FieldElement(2)) {
    Mat<FieldElement> rows;
    for (const auto& w : tr.wedge) rows.push_back(lift_equator(w));
    rows.push_back(Point{0, 0, 0, 0, 1, eps});
    Mat<FieldElement> ker = nullspace(rows, 6, FieldElement(0));
    if (ker.size() != 1) throw Error(ErrorCode::MeetDegenerate, "tilted hyperplane is degenerate");
    Point eta = ker[0];
    int sv = sign_of(dot(eta, v));
    bool separates = sv != 0;
    for (const auto& p : tr.polytope) {
      if (!separates) break;
      separates = sign_of(dot(eta, lift_equator(p))) == -sv;
    }
    if (!separates) continue;
    PPConfiguration pp;
    pp.sphere_dim = 5;
    pp.cut_normal = eta;
    pp.polytope.push_back(v);
    for (const auto& p : tr.polytope) {
      Point pl = lift_equator(p);
      FieldElement alpha = -dot(eta, v), beta = dot(eta, pl);
      if (sign_of(alpha) < 0) {
        alpha = -alpha;
        beta = -beta;
      }
      if (sign_of(alpha) <= 0 || sign_of(beta) <= 0) {
        throw Error(ErrorCode::SeparationFailure, "cut point is not inside the segment to the apex");
      }
      Point pv = homogenize(scale(alpha, pl) + scale(beta, v));
      if (!is_zero(dot(eta, pv))) throw Error(ErrorCode::SeparationFailure, "cut point misses the hyperplane");
      pp.polytope.push_back(pv);
    }
    // apex and base: the hyperplane through v and the wedge has the base
    // strictly on one side
    Mat<FieldElement> apex_rows;
    for (const auto& w : tr.wedge) apex_rows.push_back(lift_equator(w));
    apex_rows.push_back(v);
    Mat<FieldElement> zk = nullspace(apex_rows, 6, FieldElement(0));
    if (zk.size() != 1) throw Error(ErrorCode::SeparationFailure, "apex lies in the wedge span");
    int s0 = sign_of(dot(zk[0], pp.polytope[1]));
    for (std::size_t i = 1; i < pp.polytope.size(); ++i) {
      if (s0 == 0 || sign_of(dot(zk[0], pp.polytope[i])) != s0) {
        throw Error(ErrorCode::SeparationFailure, "base vertex on the wrong side of the apex hyperplane");
      }
    }
    for (const auto& q : tr.framing) pp.points.push_back(lift_equator(q));
    for (const auto& r : tr.points) pp.points.push_back(lift_equator(r));
    // witness: the triple's hemisphere functional extended over the new axis
    Point c_head = -tr.hemisphere.normal;
    std::vector<Point> all = pp.polytope;
    all.insert(all.end(), pp.points.begin(), pp.points.end());
    pp.hemisphere = lifted_hemisphere(c_head, all);
    return pp;
  }
  throw Error(ErrorCode::SeparationFailure, "no tilt separates the apex from the polytope");
}

struct LawrenceResult {
  std::vector<Point> vertices;
  std::size_t linear_rank = 0;
  std::size_t sphere_dim = 0;  // the output lives in S^sphere_dim

  std::size_t dimension() const { return linear_rank - 1; }
};

// Lifts the i-th external point r to r + h_low e'_i and r + h_high e'_i.
inline LawrenceResult lawrence_extension(const PPConfiguration& pp, long h_low = 1, long h_high = 2) {
  if (!(0 < h_low && h_low < h_high)) throw Error(ErrorCode::Precondition, "heights must satisfy 0 < low < high");
  const std::size_t base = pp.polytope.at(0).size();
  const std::size_t k = pp.points.size();
  const std::size_t cols = base + k;
  LawrenceResult out;
  out.sphere_dim = pp.sphere_dim + k;
  EchelonBasis<FieldElement> eb(cols);
  for (const auto& p : pp.polytope) {
    Point x = p;
    x.resize(cols, FieldElement(0));
    eb.insert(x);
    out.vertices.push_back(std::move(x));
  }
  if (eb.rank() != base) throw Error(ErrorCode::Precondition, "polytope of the configuration is not full-dimensional");
  for (std::size_t i = 0; i < k; ++i) {
    Point lo = pp.points[i], hi = pp.points[i];
    lo.resize(cols, FieldElement(0));
    hi.resize(cols, FieldElement(0));
    lo[base + i] = FieldElement(h_low);
    hi[base + i] = FieldElement(h_high);
    std::size_t before = eb.rank();
    eb.insert(lo);
    eb.insert(hi);
    if (eb.rank() != before + 1) {
      throw Error(ErrorCode::TransversalityFailure, "lifted pair " + std::to_string(i) + " raises the rank by " +
                                                        std::to_string(eb.rank() - before));
    }
    out.vertices.push_back(std::move(lo));
    out.vertices.push_back(std::move(hi));
  }
  out.linear_rank = eb.rank();
  return out;
}

struct PcctpResult {
  WeakTriple triple;
  PPConfiguration cone;
  LawrenceResult polytope;
};

inline std::size_t pcctp_vertex_count(int n) { return 12 * static_cast<std::size_t>(n + 1) + 129; }

inline PcctpResult build_pcctp(int n, const ExtendOptions& opt = {}) {
  PcctpResult r;
  r.triple = build_weak_triple(n, opt);
  r.cone = subdirect_cone(r.triple);
  r.polytope = lawrence_extension(r.cone);
  if (r.polytope.vertices.size() != pcctp_vertex_count(n)) {
    throw Error(ErrorCode::CertificationFailure, "unexpected vertex count " + std::to_string(r.polytope.vertices.size()));
  }
  if (r.polytope.dimension() != 69) {
    throw Error(ErrorCode::CertificationFailure, "affine rank " + std::to_string(r.polytope.dimension()) + ", expected 69");
  }
  return r;
}

}  // namespace cct
