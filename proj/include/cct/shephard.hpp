#pragma once

// Shephard's list of eleven projectively unique 4-polytopes, as reference
// data, and vertex coordinates for P8 = product of two triangles in S4.

#include <array>
#include <string>
#include <vector>

#include "cct/families.hpp"

namespace cct {

struct ShephardEntry {
  int index;                 // P_index
  std::string construction;  // empty when the list gives none
  int dual;                  // index of the dual polytope
  std::string type;          // "simplicial", "simple" or empty
  std::array<int, 4> f;      // (f0, f1, f2, f3)
  std::string facets;
};

inline const std::vector<ShephardEntry>& shephard_list() {
  static const std::vector<ShephardEntry> list = {
      {1, "Delta_4", 1, "simplicial", {5, 10, 10, 5}, "5 tetrahedra"},
      {2, "Box * Delta_1", 2, "", {6, 11, 11, 6}, "4 tetrahedra, 2 square pyramids"},
      {3, "(Delta_2 (+) Delta_1) * Delta_0", 4, "", {6, 14, 15, 7}, "6 tetrahedra, 1 bipyramid"},
      {4, "(Delta_2 x Delta_1) * Delta_0", 3, "", {7, 15, 14, 6}, "2 tetrahedra, 3 square pyramids, 1 prism"},
      {5, "Delta_3 (+) Delta_1", 6, "simplicial", {6, 14, 16, 8}, "8 tetrahedra"},
      {6, "Delta_3 x Delta_1", 5, "simple", {8, 16, 14, 6}, "2 tetrahedra, 4 prisms"},
      {7, "Delta_2 (+) Delta_2", 8, "simplicial", {6, 15, 18, 9}, "9 tetrahedra"},
      {8, "Delta_2 x Delta_2", 7, "simple", {9, 18, 15, 6}, "6 prisms"},
      {9, "(Box, v) (+) (Box, v)", 10, "", {7, 17, 18, 8}, "4 square pyramids, 4 tetrahedra"},
      {10, "", 9, "", {8, 18, 17, 7}, "2 prisms, 4 square pyramids, 1 tetrahedron"},
      {11, "v.split(Delta_2 x Delta_1)", 11, "", {7, 17, 17, 7}, "3 tetrahedra, 2 square pyramids, 2 bipyramids"},
  };
  return list;
}

// Vertices (+-1, 0, t) and (0, 1, t) for the three triangle points
// t in {(-2, 0), (1, sqrt3), (1, -sqrt3)}, homogeneous in S4.
inline std::vector<Point> p8_vertices() {
  const FieldElement s3 = FieldElement::sqrt3();
  const Point base[3] = {{0, 0, -2, 0, 1}, {0, 0, 1, s3, 1}, {0, 0, 1, -s3, 1}};
  std::vector<Point> out;
  for (const auto& b : base) {
    for (const Point& head : {Point{1, 0}, Point{-1, 0}, Point{0, 1}}) {
      Point p = b;
      p[0] = head[0];
      p[1] = head[1];
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace cct
