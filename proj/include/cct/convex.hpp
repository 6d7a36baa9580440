#pragma once

// Convex-position certificates for symmetric CCTs in S^4: supporting
// hemispheres of the facets, local convexity of vertex stars, the width-3
// local-to-global criterion and the hypotheses of the convexity theorem for
// manifolds with boundary.

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cct/extend.hpp"
#include "cct/parallel.hpp"

namespace cct {

enum class CertMode { Brute, LocalCriterion, AvhHypotheses };

inline const char* cert_mode_name(CertMode m) {
  switch (m) {
    case CertMode::Brute: return "brute";
    case CertMode::LocalCriterion: return "local-criterion";
    case CertMode::AvhHypotheses: return "avh-hypotheses";
  }
  return "unknown";
}

template <class T>
struct FacetWitness {
  std::size_t facet = 0;  // cube index in build_abstract order
  Hemisphere<T> hemisphere;
  std::vector<std::pair<std::size_t, int>> signs;  // (vertex, side)
};

template <class T>
struct ConvexityCertificate {
  CertMode mode = CertMode::Brute;
  std::vector<FacetWitness<T>> facets;
  bool passed = false;
  std::optional<std::pair<std::size_t, std::size_t>> violation;  // (facet, vertex)
  std::string message;
};

// Supporting hemisphere of the hyperplane through a geometric 3-cube, with
// the reference point on the negative side.
template <class T>
Hemisphere<T> facet_hyperplane(const std::vector<Vec<T>>& cube, const Vec<T>& reference) {
  if (cube.size() != 8) throw Error(ErrorCode::Precondition, "a cube has 8 vertices");
  Mat<T> m(cube.begin(), cube.end());
  std::size_t r = rank(m);
  if (r < cube[0].size() - 1) throw Error(ErrorCode::RankDeficient, "cube spans rank " + std::to_string(r));
  if (r == cube[0].size()) throw Error(ErrorCode::NotCoplanar, "cube vertices span the whole space");
  Mat<T> ker = nullspace(m, cube[0].size(), cube[0][0]);
  Vec<T> n = ker.at(0);
  int s = sign_of(dot(n, reference));
  if (s == 0) throw Error(ErrorCode::DegenerateInput, "reference point lies on the facet hyperplane");
  return {s > 0 ? -n : n};
}

template <class T>
Vec<T> vertex_sum(const std::vector<Vec<T>>& verts) {
  Vec<T> acc = verts.at(0);
  for (std::size_t i = 1; i < verts.size(); ++i) acc = acc + verts[i];
  return acc;
}

namespace detail {

template <class T>
std::vector<Vec<T>> cube_points(const std::vector<Vec<T>>& verts, const std::array<std::size_t, 8>& cube) {
  std::vector<Vec<T>> pts;
  for (std::size_t v : cube) pts.push_back(verts[v]);
  return pts;
}

inline bool in_cube(const std::array<std::size_t, 8>& cube, std::size_t v) {
  for (std::size_t c : cube)
    if (c == v) return true;
  return false;
}

// Evaluates one facet against the given vertices; facet vertices must be on
// the hyperplane, all others strictly inside.
template <class T>
FacetWitness<T> evaluate_facet(const std::vector<Vec<T>>& verts, const AbstractCCT& ab, std::size_t f,
                               const Vec<T>& reference, const std::vector<std::size_t>& targets) {
  FacetWitness<T> w;
  w.facet = f;
  w.hemisphere = facet_hyperplane(cube_points(verts, ab.cubes[f]), reference);
  for (std::size_t v : targets) w.signs.emplace_back(v, side(w.hemisphere, verts[v]));
  return w;
}

template <class T>
std::optional<std::size_t> first_violation(const FacetWitness<T>& w, const AbstractCCT& ab) {
  for (auto [v, s] : w.signs) {
    bool on = in_cube(ab.cubes[w.facet], v);
    if (on ? s != 0 : s >= 0) return v;
  }
  return std::nullopt;
}

template <class T>
void require_s4(const SymmetricCCT<T>& t, int min_width) {
  if (t.ambient != Ambient::S4) throw Error(ErrorCode::Precondition, "convexity checks need a CCT in S4");
  if (t.width < min_width) {
    throw Error(ErrorCode::Precondition, "convexity check needs width >= " + std::to_string(min_width));
  }
}

// Brute certificate of a set of facets against a set of vertices.
template <class T>
ConvexityCertificate<T> brute_on(const std::vector<Vec<T>>& verts, const AbstractCCT& ab,
                                 const std::vector<std::size_t>& facets, const std::vector<std::size_t>& targets,
                                 const Vec<T>& reference) {
  ConvexityCertificate<T> cert;
  cert.mode = CertMode::Brute;
  cert.facets.resize(facets.size());
  parallel_for(facets.size(), [&](std::size_t i) {
    cert.facets[i] = evaluate_facet(verts, ab, facets[i], reference, targets);
  });
  cert.passed = true;
  for (const auto& w : cert.facets) {
    if (auto v = first_violation(w, ab)) {
      cert.passed = false;
      cert.violation = std::make_pair(w.facet, *v);
      cert.message = "vertex " + std::to_string(*v) + " is not strictly inside the hemisphere of facet " +
                     std::to_string(w.facet);
      break;
    }
  }
  return cert;
}

inline std::vector<std::size_t> iota_indices(std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

}  // namespace detail

struct ConvexOptions {
  bool orbit_shortcut = false;  // one facet per layer, the rest by symmetry
};

// Every facet has a hemisphere with the facet on its boundary and all other
// vertices strictly inside.
template <class T>
ConvexityCertificate<T> check_convex_position(const SymmetricCCT<T>& t, const ConvexOptions& opt = {}) {
  detail::require_s4(t, 3);
  AbstractCCT ab = build_abstract(t.width);
  auto verts = t.vertices();
  Vec<T> ref = vertex_sum(verts);
  std::vector<std::size_t> facets;
  for (std::size_t f = 0; f < ab.cubes.size(); ++f) {
    // cubes are listed 12 per corner layer; the rotation group is transitive on them
    if (!opt.orbit_shortcut || f % 12 == 0) facets.push_back(f);
  }
  return detail::brute_on(verts, ab, facets, detail::iota_indices(verts.size()), ref);
}

// Throws NotInConvexPosition with the violating pair.
template <class T>
void require_convex_position(const SymmetricCCT<T>& t) {
  auto cert = check_convex_position(t);
  if (!cert.passed) throw Error(ErrorCode::NotInConvexPosition, cert.message);
}

template <class T>
struct LocalConvexityReport {
  bool passed = false;
  std::optional<std::size_t> witness;  // center vertex of a failing star
  ConvexityCertificate<T> certificate;
};

// Each vertex star is in convex position: every facet of the star is exposed
// among the star's vertices by the facet hemisphere.
template <class T>
LocalConvexityReport<T> check_local_convex_position(const SymmetricCCT<T>& t) {
  detail::require_s4(t, 3);
  AbstractCCT ab = build_abstract(t.width);
  auto verts = t.vertices();
  Vec<T> ref = vertex_sum(verts);
  std::vector<std::vector<std::size_t>> star_cubes(verts.size());
  for (std::size_t f = 0; f < ab.cubes.size(); ++f)
    for (std::size_t v : ab.cubes[f]) star_cubes[v].push_back(f);

  std::vector<Hemisphere<T>> hs(ab.cubes.size());
  parallel_for(ab.cubes.size(),
               [&](std::size_t f) { hs[f] = facet_hyperplane(detail::cube_points(verts, ab.cubes[f]), ref); });

  LocalConvexityReport<T> rep;
  rep.certificate.mode = CertMode::LocalCriterion;
  rep.passed = true;
  for (std::size_t v = 0; v < verts.size() && rep.passed; ++v) {
    std::set<std::size_t> star_verts;
    for (std::size_t f : star_cubes[v]) star_verts.insert(ab.cubes[f].begin(), ab.cubes[f].end());
    for (std::size_t f : star_cubes[v]) {
      FacetWitness<T> w;
      w.facet = f;
      w.hemisphere = hs[f];
      for (std::size_t x : star_verts) w.signs.emplace_back(x, side(hs[f], verts[x]));
      auto bad = detail::first_violation(w, ab);
      rep.certificate.facets.push_back(std::move(w));
      if (bad) {
        rep.passed = false;
        rep.witness = v;
        rep.certificate.violation = std::make_pair(f, *bad);
        rep.certificate.message = "star of vertex " + std::to_string(v) + ": vertex " + std::to_string(*bad) +
                                  " is not strictly inside the hemisphere of facet " + std::to_string(f);
        break;
      }
    }
  }
  rep.certificate.passed = rep.passed;
  return rep;
}

struct Width3Report {
  bool ideal = false;
  bool local_hypothesis = false;
  bool global_conclusion = false;
  bool dihedral = false;
  std::vector<std::string> failures;

  // The criterion itself: on an ideal complex the local hypothesis forces the
  // global conclusion. Non-ideal inputs are outside its scope.
  bool implication_holds() const { return !ideal || !local_hypothesis || global_conclusion; }
  bool passed() const { return ideal && local_hypothesis && global_conclusion; }
};

// The tangent direction of [v, pi_0(v)] at v lies in the cone over the link of
// v in its upward star, for every bottom vertex of every window of the
// control complex.
template <class T>
bool check_dihedral_directions(const SymmetricCCT<T>& c, std::vector<std::string>* why = nullptr) {
  for (int i = 0; i + 2 <= c.width; ++i) {
    SymmetricCCT<T> win = c.restrict_to(i, i + 2);
    for (std::size_t v = 0; v < 12; ++v) {
      auto L = window_labels(win, representative(v));
      Vec<T> target = L.v;
      target[2] = ScalarTraits<T>::zero_like(target[0]);
      target[3] = ScalarTraits<T>::zero_like(target[0]);
      const Vec<T>* link[6] = {&L.u, &L.r, &L.q, &L.p, &L.s, &L.t};
      bool inside = false;
      for (int a = 0; a < 6 && !inside; ++a) {
        for (int b = a + 1; b < 6 && !inside; ++b) {
          for (int d = b + 1; d < 6 && !inside; ++d) {
            // target = x_a ca + x_b cb + x_d cd + v e with ca, cb, cd >= 0
            Mat<T> cols = {*link[a], *link[b], *link[d], L.v};
            Mat<T> m = transpose(cols);
            if (rank(m) < 4) continue;
            Vec<T> coef = solve(m, target);
            inside = sign_of(coef[0]) >= 0 && sign_of(coef[1]) >= 0 && sign_of(coef[2]) >= 0;
          }
        }
      }
      if (!inside) {
        if (why) {
          why->push_back("window " + std::to_string(i) + ": direction to C0 leaves the star of vertex " +
                         std::to_string(v));
        }
        return false;
      }
    }
  }
  return true;
}

// The local-to-global criterion on an ideal CCT of width 3: the local
// hypothesis (layer-1 vertices edge-connected to a facet lie strictly inside
// its hemisphere) and the global conclusion are evaluated separately.
template <class T>
Width3Report check_width3_criterion(const SymmetricCCT<T>& t) {
  detail::require_s4(t, 3);
  if (t.width != 3) throw Error(ErrorCode::Precondition, "the width-3 criterion needs width exactly 3");
  Width3Report rep;
  auto cert = check_ideal(t);
  rep.ideal = cert.passed();
  for (const auto& f : cert.failures) rep.failures.push_back("not ideal: " + f);
  AbstractCCT ab = build_abstract(3);
  auto verts = t.vertices();
  Vec<T> ref = vertex_sum(verts);

  std::vector<std::vector<std::size_t>> nbrs(verts.size());
  for (auto e : ab.edges) {
    nbrs[e[0]].push_back(e[1]);
    nbrs[e[1]].push_back(e[0]);
  }
  rep.local_hypothesis = true;
  for (std::size_t f = 0; f < ab.cubes.size() && rep.local_hypothesis; ++f) {
    std::set<std::size_t> targets;
    for (std::size_t v : ab.cubes[f])
      for (std::size_t x : nbrs[v])
        if (ab.layer[x] == 1 && !detail::in_cube(ab.cubes[f], x)) targets.insert(x);
    std::vector<std::size_t> tv(targets.begin(), targets.end());
    for (std::size_t v : ab.cubes[f]) tv.push_back(v);
    auto w = detail::evaluate_facet(verts, ab, f, ref, tv);
    if (auto bad = detail::first_violation(w, ab)) {
      rep.local_hypothesis = false;
      rep.failures.push_back("local hypothesis fails at facet " + std::to_string(f) + ", vertex " +
                             std::to_string(*bad));
    }
  }
  auto global = check_convex_position(t);
  rep.global_conclusion = global.passed;
  if (!global.passed) rep.failures.push_back("global conclusion fails: " + global.message);
  rep.dihedral = check_dihedral_directions(control_cct(t), &rep.failures);
  return rep;
}

struct AvhReport {
  bool bottom_fattening = false;  // fat(B, C) of the layer-0 boundary in convex position
  bool top_fattening = false;     // same for the top boundary
  bool locally_convex = false;
  bool brute = false;             // independent brute certificate of the whole complex
  std::vector<std::string> failures;

  bool hypotheses() const { return bottom_fattening && top_fattening && locally_convex; }
  bool agrees() const { return hypotheses() == brute; }
};

// The two boundary components are the quadrilaterals with bottom vertex in
// layer 0 and in layer k-2; their fattenings are the cubes with corner in
// layer 0 and layer k-3, i.e. the width-3 subcomplexes at both ends.
template <class T>
AvhReport check_avh_hypotheses(const SymmetricCCT<T>& t) {
  detail::require_s4(t, 5);
  AvhReport rep;
  auto bottom = check_convex_position(t.restrict_to(0, 3));
  rep.bottom_fattening = bottom.passed;
  if (!bottom.passed) rep.failures.push_back("bottom fattening: " + bottom.message);
  auto top = check_convex_position(t.restrict_to(t.width - 3, t.width));
  rep.top_fattening = top.passed;
  if (!top.passed) rep.failures.push_back("top fattening: " + top.message);
  auto local = check_local_convex_position(t);
  rep.locally_convex = local.passed;
  if (!local.passed) rep.failures.push_back("local convexity: " + local.certificate.message);
  auto brute = check_convex_position(t);
  rep.brute = brute.passed;
  if (!brute.passed) rep.failures.push_back("brute: " + brute.message);
  return rep;
}

}  // namespace cct
