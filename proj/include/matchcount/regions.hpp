// Copyright 2026 The Matchcount Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATCHCOUNT_REGIONS_HPP_
#define MATCHCOUNT_REGIONS_HPP_

#include <array>
#include <string>
#include <vector>

#include "matchcount/graph.hpp"

namespace matchcount {

// Coordinate conventions. Every geometric notion used by the library
// (centers, symmetry axes, radial cuts) is derived from the definitions here.
//
// Triangular lattice: lattice point (u, v) sits at u*(1, 0) + v*(1/2, sqrt3/2).
//   UP   (x, y) has corners (x, y), (x+1, y), (x, y+1).
//   DOWN (x, y) has corners (x+1, y), (x+1, y+1), (x, y+1).
//   Vertex position = 3 * centroid in lattice coordinates:
//   UP -> (3x+1, 3y+1), DOWN -> (3x+2, 3y+2). Color: UP 0, DOWN 1.
//
// Square lattice: SquareCell (i, j) is [i, i+1] x [j, j+1]; position is twice
// the center, (2i+1, 2j+1); color is (i + j) mod 2.
//
// Hexagon boundary: starts at lattice point (0, 0) and walks side k along
// direction (1,0), (0,1), (-1,1), (-1,0), (0,-1), (1,-1) for k = 1..6, i.e.
// counterclockwise starting with the bottom edge.

enum class Orient { kUp = 0, kDown = 1 };

struct TriCell {
  int x = 0;
  int y = 0;
  Orient orient = Orient::kUp;
  friend bool operator==(const TriCell&, const TriCell&) = default;
  friend auto operator<=>(const TriCell&, const TriCell&) = default;
};

struct SquareCell {
  int i = 0;
  int j = 0;
  friend bool operator==(const SquareCell&, const SquareCell&) = default;
  friend auto operator<=>(const SquareCell&, const SquareCell&) = default;
};

Label ToLabel(const TriCell& c);
Label ToLabel(const SquareCell& c);
TriCell TriCellFromLabel(const Label& l);
SquareCell SquareCellFromLabel(const Label& l);
std::string Describe(const MatchGraph& g, int v);

// Six side lengths in cyclic order. Valid iff all are nonnegative and
// s1 - s4 == s5 - s2 == s3 - s6.
struct HexSides {
  std::array<int, 6> s{};
  bool IsClosed() const;
  // Lattice corners of the boundary walk (6 points, repeats allowed).
  std::array<std::array<int, 2>, 6> Corners() const;
  std::string ToString() const;
};

MatchGraph BuildHexagon(const HexSides& sides, const std::vector<TriCell>& holes = {});

// Every unit triangle inside the hexagon, sorted.
std::vector<TriCell> HexagonCells(const HexSides& sides);

// Sides (a,a,b,a,a,b) with a, b of opposite parity: the unique edge whose
// rhombus center is the hexagon's center. `hexagon` must come from
// BuildHexagon(sides, ...) and still contain both cells.
Edge CentralRhombusEdge(const MatchGraph& hexagon, const HexSides& sides);

// For centrally symmetric hexagons: every edge whose closed rhombus contains
// the center. `symmetric` marks rhombi mapped to themselves by the mirror
// through the center parallel to sides s2 and s5.
struct CenterTouchingEdge {
  Edge edge;
  bool symmetric = false;
};
std::vector<CenterTouchingEdge> CenterTouchingEdges(const MatchGraph& hexagon,
                                                    const HexSides& sides);

// Cell of the majority orientation nearest the center (mean of the corners).
// Throws if the hexagon is balanced or the nearest cell is not unique.
TriCell CentralTriangle(const HexSides& sides);

MatchGraph BuildAztecDiamond(int n);

// Aztec rectangle with a+1 cells per row of one color class and a per row of
// the other; in rotated coordinates u = i+j+1, v = j-i it is
//   |u| <= a,  -b+s <= v <= b+s,  u+v odd,  s = (a+b) mod 2.
// Color classes have sizes b(a+1) and a(b+1); `removed` must come from the
// larger class and restore balance. (a, a) is exactly the Aztec diamond.
MatchGraph BuildAztecRectangle(int a, int b, const std::vector<SquareCell>& removed);
std::vector<SquareCell> AztecRectangleCells(int a, int b);
// Color of the larger class (defined when a < b).
int AztecRectangleMajorityColor(int a, int b);

// Aztec diamond of order x+w minus the concentric diamond of order x.
MatchGraph BuildAztecWindow(int x, int w);

inline constexpr int kMaxHypercubeDimension = 16;
MatchGraph BuildHypercube(int n);

enum class RegionKind { kHexagon, kAztecDiamond, kAztecRectangle, kAztecWindow, kHypercube };

const char* RegionKindName(RegionKind kind);

struct RegionSpec {
  RegionKind kind = RegionKind::kHexagon;
  HexSides sides;                   // kHexagon
  int n = 0;                        // kAztecDiamond, kHypercube
  int a = 0, b = 0;                 // kAztecRectangle
  std::vector<SquareCell> removed;  // kAztecRectangle
  int x = 0, w = 0;                 // kAztecWindow
  std::vector<TriCell> holes;       // kHexagon only

  friend bool operator==(const RegionSpec&, const RegionSpec&);
};

MatchGraph BuildRegion(const RegionSpec& spec);

}  // namespace matchcount

#endif  // MATCHCOUNT_REGIONS_HPP_
