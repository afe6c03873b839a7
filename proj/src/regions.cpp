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

#include "matchcount/regions.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "matchcount/error.hpp"

namespace matchcount {

namespace {

constexpr std::array<std::array<int, 2>, 6> kSideDirections{{
    {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

Point TriPosition(const TriCell& c) {
  return c.orient == Orient::kUp ? Point{3 * c.x + 1, 3 * c.y + 1}
                                 : Point{3 * c.x + 2, 3 * c.y + 2};
}

// Corners of a unit triangle in lattice coordinates.
std::array<std::array<int, 2>, 3> TriCorners(const TriCell& c) {
  if (c.orient == Orient::kUp) {
    return {{{c.x, c.y}, {c.x + 1, c.y}, {c.x, c.y + 1}}};
  }
  return {{{c.x + 1, c.y}, {c.x + 1, c.y + 1}, {c.x, c.y + 1}}};
}

std::array<TriCell, 3> TriNeighbors(const TriCell& c) {
  if (c.orient == Orient::kUp) {
    return {{{c.x, c.y, Orient::kDown},
             {c.x - 1, c.y, Orient::kDown},
             {c.x, c.y - 1, Orient::kDown}}};
  }
  return {{{c.x, c.y, Orient::kUp},
           {c.x + 1, c.y, Orient::kUp},
           {c.x, c.y + 1, Orient::kUp}}};
}

std::int64_t Cross(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by) {
  return ax * by - ay * bx;
}

// Squared Euclidean length of lattice vector (du, dv), exact.
std::int64_t LatticeNorm2(std::int64_t du, std::int64_t dv) {
  return du * du + du * dv + dv * dv;
}

std::array<std::int64_t, 2> CornerSum(const HexSides& sides) {
  std::array<std::int64_t, 2> sum{0, 0};
  for (const auto& p : sides.Corners()) {
    sum[0] += p[0];
    sum[1] += p[1];
  }
  return sum;
}

bool IsCentrallySymmetric(const HexSides& h) {
  return h.s[0] == h.s[3] && h.s[1] == h.s[4] && h.s[2] == h.s[5];
}

template <typename Cell>
MatchGraph AssembleGraph(LabelKind kind, const std::vector<Cell>& cells,
                         const std::vector<std::vector<Cell>>& neighbor_lists,
                         std::vector<std::uint8_t> colors, std::vector<Point> positions) {
  std::map<Cell, int> index;
  std::vector<Label> labels;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    index[cells[k]] = static_cast<int>(k);
    labels.push_back(ToLabel(cells[k]));
  }
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    for (const Cell& nb : neighbor_lists[k]) {
      auto it = index.find(nb);
      if (it != index.end() && static_cast<int>(k) < it->second) {
        edges.push_back({static_cast<int>(k), it->second});
      }
    }
  }
  MatchGraph g(kind, std::move(labels), std::move(edges));
  g.SetBipartition(std::move(colors));
  g.SetPositions(std::move(positions));
  return g;
}

MatchGraph SquareCellGraph(const std::vector<SquareCell>& cells) {
  std::vector<std::vector<SquareCell>> nbs;
  std::vector<std::uint8_t> colors;
  std::vector<Point> pos;
  for (const SquareCell& c : cells) {
    nbs.push_back({{c.i + 1, c.j}, {c.i - 1, c.j}, {c.i, c.j + 1}, {c.i, c.j - 1}});
    colors.push_back(static_cast<std::uint8_t>(((c.i + c.j) % 2 + 2) % 2));
    pos.push_back({2 * c.i + 1, 2 * c.j + 1});
  }
  return AssembleGraph(LabelKind::kSquareCell, cells, nbs, std::move(colors), std::move(pos));
}

std::vector<SquareCell> DiamondCells(int order) {
  std::vector<SquareCell> cells;
  for (int j = -order; j < order; ++j) {
    for (int i = -order; i < order; ++i) {
      if (std::abs(2 * i + 1) + std::abs(2 * j + 1) <= 2 * order) cells.push_back({i, j});
    }
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

}  // namespace

Label ToLabel(const TriCell& c) { return {c.x, c.y, static_cast<int>(c.orient)}; }
Label ToLabel(const SquareCell& c) { return {c.i, c.j, 0}; }
TriCell TriCellFromLabel(const Label& l) {
  return {l[0], l[1], l[2] == 0 ? Orient::kUp : Orient::kDown};
}
SquareCell SquareCellFromLabel(const Label& l) { return {l[0], l[1]}; }

std::string Describe(const MatchGraph& g, int v) {
  const Label& l = g.label(v);
  std::ostringstream out;
  switch (g.label_kind()) {
    case LabelKind::kTriCell:
      out << "[" << l[0] << "," << l[1] << "," << (l[2] == 0 ? "up" : "down") << "]";
      break;
    case LabelKind::kSquareCell:
      out << "[" << l[0] << "," << l[1] << "]";
      break;
    case LabelKind::kCubeVertex:
      out << l[0];
      break;
  }
  return out.str();
}

bool HexSides::IsClosed() const {
  for (int v : s) {
    if (v < 0) return false;
  }
  return s[0] - s[3] == s[4] - s[1] && s[4] - s[1] == s[2] - s[5];
}

std::array<std::array<int, 2>, 6> HexSides::Corners() const {
  std::array<std::array<int, 2>, 6> out{};
  std::array<int, 2> p{0, 0};
  for (int k = 0; k < 6; ++k) {
    out[k] = p;
    p[0] += s[k] * kSideDirections[k][0];
    p[1] += s[k] * kSideDirections[k][1];
  }
  return out;
}

std::string HexSides::ToString() const {
  std::ostringstream out;
  out << "(";
  for (int k = 0; k < 6; ++k) out << (k ? "," : "") << s[k];
  out << ")";
  return out.str();
}

std::vector<TriCell> HexagonCells(const HexSides& sides) {
  if (!sides.IsClosed()) {
    throw Error(ErrorCode::kInvalidParameters,
                "hexagon sides " + sides.ToString() + " violate s1-s4 = s5-s2 = s3-s6");
  }
  auto corners = sides.Corners();
  int umin = 0, umax = 0, vmin = 0, vmax = 0;
  for (const auto& p : corners) {
    umin = std::min(umin, p[0]);
    umax = std::max(umax, p[0]);
    vmin = std::min(vmin, p[1]);
    vmax = std::max(vmax, p[1]);
  }
  std::vector<TriCell> cells;
  for (int y = vmin; y < vmax; ++y) {
    for (int x = umin - 1; x <= umax; ++x) {
      for (Orient o : {Orient::kUp, Orient::kDown}) {
        TriCell c{x, y, o};
        Point p = TriPosition(c);
        bool inside = true;
        for (int k = 0; k < 6 && inside; ++k) {
          if (sides.s[k] == 0) continue;
          std::int64_t px = 3 * corners[k][0], py = 3 * corners[k][1];
          std::int64_t dx = kSideDirections[k][0], dy = kSideDirections[k][1];
          inside = Cross(dx, dy, p.x - px, p.y - py) > 0;
        }
        if (inside) cells.push_back(c);
      }
    }
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

MatchGraph BuildHexagon(const HexSides& sides, const std::vector<TriCell>& holes) {
  std::vector<TriCell> cells = HexagonCells(sides);
  std::set<TriCell> hole_set;
  for (const TriCell& h : holes) {
    if (!std::binary_search(cells.begin(), cells.end(), h)) {
      throw Error(ErrorCode::kInvalidHole, "hole " + std::to_string(h.x) + "," +
                                               std::to_string(h.y) + " lies outside the hexagon");
    }
    if (!hole_set.insert(h).second) {
      throw Error(ErrorCode::kInvalidHole, "duplicate hole");
    }
  }
  std::erase_if(cells, [&](const TriCell& c) { return hole_set.count(c) > 0; });

  std::vector<std::vector<TriCell>> nbs;
  std::vector<std::uint8_t> colors;
  std::vector<Point> pos;
  for (const TriCell& c : cells) {
    auto n3 = TriNeighbors(c);
    nbs.emplace_back(n3.begin(), n3.end());
    colors.push_back(static_cast<std::uint8_t>(c.orient));
    pos.push_back(TriPosition(c));
  }
  return AssembleGraph(LabelKind::kTriCell, cells, nbs, std::move(colors), std::move(pos));
}

Edge CentralRhombusEdge(const MatchGraph& hexagon, const HexSides& sides) {
  const auto& s = sides.s;
  const int a = s[0], b = s[2];
  if (!(s[1] == a && s[3] == a && s[4] == a && s[5] == b)) {
    throw Error(ErrorCode::kInvalidParameters,
                "central rhombus needs sides (a,a,b,a,a,b), got " + sides.ToString());
  }
  if ((a + b) % 2 == 0) {
    throw Error(ErrorCode::kInvalidParameters,
                "central rhombus needs a and b of opposite parity, got " + sides.ToString());
  }
  // Six times the center equals the corner sum; six times an edge's rhombus
  // center equals the sum of its endpoint positions (3 * centroids).
  auto center6 = CornerSum(sides);
  const auto& pos = hexagon.positions();
  std::vector<Edge> hits;
  for (const Edge& e : hexagon.edges()) {
    if (pos[e.u].x + pos[e.v].x == center6[0] && pos[e.u].y + pos[e.v].y == center6[1]) {
      hits.push_back(e);
    }
  }
  if (hits.size() != 1) {
    throw Error(ErrorCode::kNotAnEdge, "expected one edge at the hexagon center, found " +
                                           std::to_string(hits.size()));
  }
  return hits.front();
}

std::vector<CenterTouchingEdge> CenterTouchingEdges(const MatchGraph& hexagon,
                                                    const HexSides& sides) {
  if (!IsCentrallySymmetric(sides)) {
    throw Error(ErrorCode::kInvalidParameters,
                "center-touching edges need a centrally symmetric hexagon, got " +
                    sides.ToString());
  }
  auto c6 = CornerSum(sides);
  // Closed-triangle membership of the center, in 6x lattice coordinates.
  auto contains = [&](const TriCell& t) {
    auto corners = TriCorners(t);
    for (int k = 0; k < 3; ++k) {
      auto p = corners[k], q = corners[(k + 1) % 3];
      if (Cross(6 * (q[0] - p[0]), 6 * (q[1] - p[1]), c6[0] - 6 * p[0], c6[1] - 6 * p[1]) < 0) {
        return false;
      }
    }
    return true;
  };
  // Mirror through the center along lattice direction (0,1): (u,v) -> (-u, u+v).
  auto mirror = [&](std::array<std::int64_t, 2> p6) {
    std::int64_t du = p6[0] - c6[0], dv = p6[1] - c6[1];
    return std::array<std::int64_t, 2>{c6[0] - du, c6[1] + du + dv};
  };
  std::vector<CenterTouchingEdge> out;
  for (const Edge& e : hexagon.edges()) {
    TriCell t1 = TriCellFromLabel(hexagon.label(e.u));
    TriCell t2 = TriCellFromLabel(hexagon.label(e.v));
    if (!contains(t1) && !contains(t2)) continue;
    std::set<std::array<std::int64_t, 2>> corners;
    for (const auto& t : {t1, t2}) {
      for (const auto& p : TriCorners(t)) corners.insert({6LL * p[0], 6LL * p[1]});
    }
    std::set<std::array<std::int64_t, 2>> mirrored;
    for (const auto& p : corners) mirrored.insert(mirror(p));
    out.push_back({e, mirrored == corners});
  }
  return out;
}

TriCell CentralTriangle(const HexSides& sides) {
  int excess = sides.s[0] - sides.s[3];
  if (!sides.IsClosed()) {
    throw Error(ErrorCode::kInvalidParameters, "hexagon sides " + sides.ToString() + " not closed");
  }
  if (excess == 0) {
    throw Error(ErrorCode::kInvalidParameters, "balanced hexagon has no excess triangle");
  }
  Orient majority = excess > 0 ? Orient::kUp : Orient::kDown;
  auto sum = CornerSum(sides);
  // Compare at scale 18: centroid*3*6 against corner-sum*3.
  std::int64_t best = -1;
  int ties = 0;
  TriCell best_cell;
  for (const TriCell& c : HexagonCells(sides)) {
    if (c.orient != majority) continue;
    Point p = TriPosition(c);
    std::int64_t d = LatticeNorm2(6 * p.x - 3 * sum[0], 6 * p.y - 3 * sum[1]);
    if (best < 0 || d < best) {
      best = d;
      best_cell = c;
      ties = 1;
    } else if (d == best) {
      ++ties;
    }
  }
  if (ties != 1) {
    throw Error(ErrorCode::kInvalidParameters,
                "no unique central triangle for " + sides.ToString());
  }
  return best_cell;
}

MatchGraph BuildAztecDiamond(int n) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidParameters, "Aztec diamond order must be >= 1");
  }
  return SquareCellGraph(DiamondCells(n));
}

std::vector<SquareCell> AztecRectangleCells(int a, int b) {
  if (a < 1 || a > b) {
    throw Error(ErrorCode::kInvalidParameters,
                "Aztec rectangle needs 1 <= a <= b, got a=" + std::to_string(a) +
                    " b=" + std::to_string(b));
  }
  const int shift = (a + b) % 2;
  std::vector<SquareCell> cells;
  for (int u = -a; u <= a; ++u) {
    for (int v = -b + shift; v <= b + shift; ++v) {
      if ((u + v) % 2 == 0) continue;
      cells.push_back({(u - v - 1) / 2, (u + v - 1) / 2});
    }
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

int AztecRectangleMajorityColor(int a, [[maybe_unused]] int b) {
  // The larger class has u = i+j+1 congruent to a mod 2.
  return (a + 1) % 2;
}

MatchGraph BuildAztecRectangle(int a, int b, const std::vector<SquareCell>& removed) {
  std::vector<SquareCell> cells = AztecRectangleCells(a, b);
  std::set<SquareCell> drop;
  for (const SquareCell& c : removed) {
    if (!std::binary_search(cells.begin(), cells.end(), c)) {
      throw Error(ErrorCode::kInvalidParameters, "removed cell [" + std::to_string(c.i) + "," +
                                                     std::to_string(c.j) +
                                                     "] is not in the Aztec rectangle");
    }
    if (!drop.insert(c).second) {
      throw Error(ErrorCode::kInvalidParameters, "removed cell listed twice");
    }
  }
  std::erase_if(cells, [&](const SquareCell& c) { return drop.count(c) > 0; });
  MatchGraph g = SquareCellGraph(cells);
  auto sizes = g.ClassSizes();
  if (sizes[0] != sizes[1]) {
    throw Error(ErrorCode::kImbalance,
                "Aztec rectangle color classes unbalanced after removal (" +
                    std::to_string(sizes[0]) + " vs " + std::to_string(sizes[1]) + ")");
  }
  return g;
}

MatchGraph BuildAztecWindow(int x, int w) {
  if (x < 1 || w < 1) {
    throw Error(ErrorCode::kInvalidParameters, "Aztec window needs x >= 1 and w >= 1");
  }
  std::vector<SquareCell> cells;
  for (const SquareCell& c : DiamondCells(x + w)) {
    if (std::abs(2 * c.i + 1) + std::abs(2 * c.j + 1) > 2 * x) cells.push_back(c);
  }
  return SquareCellGraph(cells);
}

MatchGraph BuildHypercube(int n) {
  if (n < 1 || n > kMaxHypercubeDimension) {
    throw Error(ErrorCode::kInvalidParameters,
                "hypercube dimension must be in 1.." + std::to_string(kMaxHypercubeDimension));
  }
  const int size = 1 << n;
  std::vector<Label> labels;
  std::vector<Edge> edges;
  std::vector<std::uint8_t> colors;
  for (int v = 0; v < size; ++v) {
    labels.push_back({v, 0, 0});
    colors.push_back(static_cast<std::uint8_t>(__builtin_popcount(v) & 1));
    for (int bit = 0; bit < n; ++bit) {
      int w = v ^ (1 << bit);
      if (v < w) edges.push_back({v, w});
    }
  }
  MatchGraph g(LabelKind::kCubeVertex, std::move(labels), std::move(edges));
  g.SetBipartition(std::move(colors));
  return g;
}

const char* RegionKindName(RegionKind kind) {
  switch (kind) {
    case RegionKind::kHexagon: return "hexagon";
    case RegionKind::kAztecDiamond: return "aztec_diamond";
    case RegionKind::kAztecRectangle: return "aztec_rectangle";
    case RegionKind::kAztecWindow: return "aztec_window";
    case RegionKind::kHypercube: return "hypercube";
  }
  return "unknown";
}

bool operator==(const RegionSpec& l, const RegionSpec& r) {
  if (l.kind != r.kind) return false;
  switch (l.kind) {
    case RegionKind::kHexagon: return l.sides.s == r.sides.s && l.holes == r.holes;
    case RegionKind::kAztecDiamond:
    case RegionKind::kHypercube: return l.n == r.n;
    case RegionKind::kAztecRectangle: return l.a == r.a && l.b == r.b && l.removed == r.removed;
    case RegionKind::kAztecWindow: return l.x == r.x && l.w == r.w;
  }
  return false;
}

MatchGraph BuildRegion(const RegionSpec& spec) {
  if (spec.kind != RegionKind::kHexagon && !spec.holes.empty()) {
    throw Error(ErrorCode::kInvalidParameters, "holes are only allowed for hexagons");
  }
  switch (spec.kind) {
    case RegionKind::kHexagon: return BuildHexagon(spec.sides, spec.holes);
    case RegionKind::kAztecDiamond: return BuildAztecDiamond(spec.n);
    case RegionKind::kAztecRectangle: return BuildAztecRectangle(spec.a, spec.b, spec.removed);
    case RegionKind::kAztecWindow: return BuildAztecWindow(spec.x, spec.w);
    case RegionKind::kHypercube: return BuildHypercube(spec.n);
  }
  throw Error(ErrorCode::kMalformedInput, "unknown region kind");
}

}  // namespace matchcount
