#pragma once

// The combinatorial complex: the unit cube tiling of the slab
// 0 <= x+y+z <= k modulo the lattice (3,-3,0)Z + (-2,-2,4)Z.

#include <array>
#include <cstddef>
#include <vector>

#include "cct/group.hpp"

namespace cct {

struct LatticePoint {
  long x = 0, y = 0, z = 0;
  long layer() const { return x + y + z; }
  LatticePoint operator+(const LatticePoint& o) const { return {x + o.x, y + o.y, z + o.z}; }
  LatticePoint operator-(const LatticePoint& o) const { return {x - o.x, y - o.y, z - o.z}; }
};

inline constexpr LatticePoint kE1{1, 0, 0};
inline constexpr LatticePoint kE2{0, 1, 0};
inline constexpr LatticePoint kE3{0, 0, 1};

// Class key (layer, z mod 4, (x-y) mod 6).
struct ClassKey {
  long layer;
  int z4;
  int d6;
};

inline ClassKey class_key(const LatticePoint& p) {
  return {p.layer(), mod(static_cast<int>(p.z % 4), 4), mod(static_cast<int>((p.x - p.y) % 6), 6)};
}

// Vertex index: 12 per layer, layer-major.
inline std::size_t vertex_index(const LatticePoint& p) {
  ClassKey k = class_key(p);
  return static_cast<std::size_t>(k.layer) * 12 + static_cast<std::size_t>(k.z4) * 3 + static_cast<std::size_t>(k.d6 / 2);
}

// A lattice representative of vertex index v.
inline LatticePoint representative(std::size_t v) {
  long layer = static_cast<long>(v / 12);
  long z4 = static_cast<long>((v % 12) / 3);
  long half = static_cast<long>(v % 3);
  // (x - y) mod 6 has the parity of layer - z
  long d6 = 2 * half + (((layer - z4) % 2 + 2) % 2);
  long s = layer - z4;  // x + y
  return {(s + d6) / 2, (s - d6) / 2, z4};
}

inline RotationIndex vertex_rotation(std::size_t v) {
  LatticePoint p = representative(v);
  return lattice_rotation(p.x, p.y, p.z);
}

struct AbstractCCT {
  int width = 0;
  std::vector<long> layer;                    // per vertex
  std::vector<std::array<std::size_t, 2>> edges;
  std::vector<std::array<std::size_t, 4>> quads;  // cyclic order
  std::vector<std::array<std::size_t, 8>> cubes;  // bit order: bit0=e1, bit1=e2, bit2=e3
  std::vector<LatticePoint> cube_corner;          // min-corner representative

  std::size_t num_vertices() const { return layer.size(); }
};

inline AbstractCCT build_abstract(int k) {
  if (k < 0) throw Error(ErrorCode::Precondition, "width must be non-negative");
  AbstractCCT t;
  t.width = k;
  const std::size_t n = 12 * static_cast<std::size_t>(k + 1);
  const LatticePoint dirs[3] = {kE1, kE2, kE3};
  for (std::size_t v = 0; v < n; ++v) t.layer.push_back(static_cast<long>(v / 12));
  for (std::size_t v = 0; v < n; ++v) {
    LatticePoint w = representative(v);
    long l = w.layer();
    if (l + 1 <= k) {
      for (const auto& d : dirs) t.edges.push_back({v, vertex_index(w + d)});
    }
    if (l + 2 <= k) {
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
          t.quads.push_back({v, vertex_index(w + dirs[i]), vertex_index(w + dirs[i] + dirs[j]),
                             vertex_index(w + dirs[j])});
        }
      }
    }
    if (l + 3 <= k) {
      std::array<std::size_t, 8> c{};
      for (int bits = 0; bits < 8; ++bits) {
        LatticePoint p = w;
        if (bits & 1) p = p + kE1;
        if (bits & 2) p = p + kE2;
        if (bits & 4) p = p + kE3;
        c[bits] = vertex_index(p);
      }
      t.cubes.push_back(c);
      t.cube_corner.push_back(w);
    }
  }
  return t;
}

inline std::array<long, 4> f_vector_formula(int k) {
  auto clamp = [](long v) { return v < 0 ? 0L : v; };
  return {clamp(12L * (k + 1)), clamp(36L * k), clamp(36L * (k - 1)), clamp(12L * (k - 2))};
}

inline std::array<long, 4> f_vector(const AbstractCCT& t) {
  return {static_cast<long>(t.num_vertices()), static_cast<long>(t.edges.size()),
          static_cast<long>(t.quads.size()), static_cast<long>(t.cubes.size())};
}

}  // namespace cct
