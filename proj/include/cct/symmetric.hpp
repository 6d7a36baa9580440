#pragma once

// Symmetric CCTs: one seed per layer, vertices are the rotation-group orbits.
// The vertex at lattice point (x,y,z) of layer l is r12^-(x+y) r34^(y-x) seed_l,
// so seed_l sits at (0,0,l).

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "cct/abstract.hpp"

namespace cct {

enum class Ambient { S4, S3eq };

inline const char* ambient_name(Ambient a) { return a == Ambient::S4 ? "S4" : "S3eq"; }

template <class T>
struct SymmetricCCT {
  int width = 0;
  Ambient ambient = Ambient::S4;
  std::vector<Vec<T>> seeds;

  std::size_t num_vertices() const { return 12 * seeds.size(); }

  Vec<T> vertex(std::size_t v) const {
    RotationIndex g = vertex_rotation(v);
    return rotate(g.a, g.b, seeds.at(v / 12));
  }

  Vec<T> at(const LatticePoint& p) const { return vertex(vertex_index(p)); }

  std::vector<Vec<T>> vertices() const {
    std::vector<Vec<T>> out;
    out.reserve(num_vertices());
    for (std::size_t v = 0; v < num_vertices(); ++v) out.push_back(vertex(v));
    return out;
  }

  std::vector<Vec<T>> layer(int l) const {
    std::vector<Vec<T>> out;
    for (std::size_t i = 0; i < 12; ++i) out.push_back(vertex(12 * static_cast<std::size_t>(l) + i));
    return out;
  }

  // The subcomplex on layers [lo, hi], re-indexed from 0.
  SymmetricCCT restrict_to(int lo, int hi) const {
    if (lo < 0 || hi > width || lo > hi) throw Error(ErrorCode::Precondition, "bad layer range");
    SymmetricCCT r;
    r.width = hi - lo;
    r.ambient = ambient;
    r.seeds.assign(seeds.begin() + lo, seeds.begin() + hi + 1);
    return r;
  }
};

namespace detail {

// A string key identifying the ray of an exact vector.
inline std::string ray_key(const Point& x) {
  FieldElement lead;
  for (const auto& c : x) {
    if (!c.is_zero()) {
      lead = abs(c);
      break;
    }
  }
  std::string key;
  for (const auto& c : x) {
    key += (c / lead).str();
    key += '|';
  }
  return key;
}

inline bool rays_distinct(const std::vector<Point>& pts, std::size_t* i_out, std::size_t* j_out) {
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto [it, fresh] = seen.emplace(ray_key(pts[i]), i);
    if (!fresh) {
      *i_out = it->second;
      *j_out = i;
      return false;
    }
  }
  return true;
}

inline bool rays_distinct(const std::vector<Vec<BigFloat>>& pts, std::size_t* i_out, std::size_t* j_out) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (ray_relation(pts[i], pts[j]) > 0) {
        *i_out = i;
        *j_out = j;
        return false;
      }
    }
  }
  return true;
}

}  // namespace detail

template <class T>
SymmetricCCT<T> build_symmetric(const std::vector<Vec<T>>& seeds, Ambient ambient) {
  if (seeds.empty()) throw Error(ErrorCode::Precondition, "no seeds");
  const std::size_t dim = ambient == Ambient::S4 ? 5 : 4;
  for (std::size_t l = 0; l < seeds.size(); ++l) {
    const auto& s = seeds[l];
    if (s.size() != dim) throw Error(ErrorCode::Precondition, "seed has wrong dimension");
    if (is_zero(s[0]) && is_zero(s[1])) {
      throw Error(ErrorCode::FixedPointViolation, "seed " + std::to_string(l) + " is fixed by r12^2");
    }
    if (is_zero(s[2]) && is_zero(s[3])) {
      throw Error(ErrorCode::FixedPointViolation, "seed " + std::to_string(l) + " is fixed by r34^2");
    }
  }
  SymmetricCCT<T> t;
  t.width = static_cast<int>(seeds.size()) - 1;
  t.ambient = ambient;
  t.seeds = seeds;
  std::size_t i = 0, j = 0;
  if (!detail::rays_distinct(t.vertices(), &i, &j)) {
    throw Error(ErrorCode::OrbitCollision, "vertices " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
  }
  return t;
}

template <class T>
std::array<long, 4> f_vector(const SymmetricCCT<T>& t) {
  return f_vector(build_abstract(t.width));
}

// Replaces each seed from layer 2 on by the orbit element that makes the
// quadrilaterals below it planar (used for seeds given up to orbit choice).
template <class T>
std::vector<Vec<T>> align_seeds(const std::vector<Vec<T>>& raw) {
  std::vector<Vec<T>> seeds(raw.begin(), raw.begin() + std::min<std::size_t>(2, raw.size()));
  for (std::size_t l = 2; l < raw.size(); ++l) {
    std::vector<Vec<T>> hits;
    for (int a = 0; a < 4; ++a) {
      for (int b = a % 2; b < 6; b += 2) {
        Vec<T> cand = rotate(a, b, raw[l]);
        seeds.push_back(cand);
        SymmetricCCT<T> t;
        t.width = static_cast<int>(l);
        t.seeds = seeds;
        seeds.pop_back();
        const LatticePoint w{0, 0, static_cast<long>(l) - 2};
        const LatticePoint dirs[3] = {kE1, kE2, kE3};
        bool planar = true;
        for (int i = 0; i < 3 && planar; ++i) {
          for (int j = i + 1; j < 3 && planar; ++j) {
            Mat<T> q = {t.at(w), t.at(w + dirs[i]), t.at(w + dirs[i] + dirs[j]), t.at(w + dirs[j])};
            planar = rank(q) == 3;
          }
        }
        if (planar) hits.push_back(cand);
      }
    }
    if (hits.size() != 1) {
      throw Error(ErrorCode::DegenerateInput,
                  "layer " + std::to_string(l) + " has " + std::to_string(hits.size()) + " planar orbit choices");
    }
    seeds.push_back(hits[0]);
  }
  return seeds;
}

// Orthogonal projection of a CCT in S^4 to the equator.
template <class T>
SymmetricCCT<T> control_cct(const SymmetricCCT<T>& t) {
  if (t.ambient != Ambient::S4) return t;
  SymmetricCCT<T> c;
  c.width = t.width;
  c.ambient = Ambient::S3eq;
  for (const auto& s : t.seeds) c.seeds.push_back(project_equator(s));
  std::size_t i = 0, j = 0;
  if (!detail::rays_distinct(c.vertices(), &i, &j)) {
    throw Error(ErrorCode::ProjectionNotInjective,
                "vertices " + std::to_string(i) + " and " + std::to_string(j) + " project to the same point");
  }
  return c;
}

}  // namespace cct
