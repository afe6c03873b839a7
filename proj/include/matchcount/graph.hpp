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

#ifndef MATCHCOUNT_GRAPH_HPP_
#define MATCHCOUNT_GRAPH_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace matchcount {

// Integer planar position. Builders choose coordinates related to the true
// geometry by an orientation-preserving linear map, so cyclic order of
// directions and the sign of signed areas are exact.
struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Edge {
  int u = 0;  // u < v
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

Edge MakeEdge(int a, int b);

enum class LabelKind { kTriCell, kSquareCell, kCubeVertex };

// Vertex label; meaning depends on LabelKind:
//   kTriCell:    {x, y, orient}  with orient 0 = up, 1 = down
//   kSquareCell: {i, j, 0}
//   kCubeVertex: {bits, 0, 0}
using Label = std::array<int, 3>;

// Rotation system plus faces traced from it. Each face is a closed walk of
// darts (a -> b), listed with the face on the left. Bounded faces therefore
// run counterclockwise and the outer face clockwise.
struct Embedding {
  std::vector<std::vector<int>> rotation;  // neighbors, counterclockwise
  std::vector<std::vector<int>> faces;     // vertex cycles
  int outer_face = -1;

  int BoundedFaceCount() const {
    return static_cast<int>(faces.size()) - (outer_face >= 0 ? 1 : 0);
  }
};

class MatchGraph {
 public:
  MatchGraph() = default;
  // Edges are normalized and deduplicated; self-loops are rejected.
  MatchGraph(LabelKind kind, std::vector<Label> labels, std::vector<Edge> edges);

  int VertexCount() const { return static_cast<int>(labels_.size()); }
  int EdgeCount() const { return static_cast<int>(edges_.size()); }
  LabelKind label_kind() const { return kind_; }
  const std::vector<Label>& labels() const { return labels_; }
  const Label& label(int v) const { return labels_[v]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const int> Neighbors(int v) const { return adjacency_[v]; }
  int Degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  std::optional<int> FindVertex(const Label& label) const;
  std::optional<int> EdgeIndex(int a, int b) const;
  bool HasEdge(int a, int b) const { return EdgeIndex(a, b).has_value(); }

  // Two-coloring: color(v) in {0, 1}. Builders set it from lattice parity.
  void SetBipartition(std::vector<std::uint8_t> colors);
  bool HasBipartition() const { return has_bipartition_; }
  int Color(int v) const { return colors_[v]; }
  const std::vector<std::uint8_t>& colors() const { return colors_; }
  std::array<int, 2> ClassSizes() const;
  bool IsBalanced() const;

  // Positions enable the planar embedding (derived by angle sort).
  void SetPositions(std::vector<Point> positions);
  bool HasEmbedding() const { return embedding_.has_value(); }
  const Embedding& embedding() const { return *embedding_; }
  const std::vector<Point>& positions() const { return positions_; }

  std::vector<std::vector<int>> Components() const;
  bool IsConnected() const;

 private:
  LabelKind kind_ = LabelKind::kSquareCell;
  std::vector<Label> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::uint8_t> colors_;
  bool has_bipartition_ = false;
  std::vector<Point> positions_;
  std::optional<Embedding> embedding_;
};

// Builds the rotation system by sorting neighbors counterclockwise around
// each position, then traces faces. The outer face is the one of least
// signed area.
Embedding EmbedFromPositions(const MatchGraph& g, std::span<const Point> pos);

// Subgraph induced on `keep` (vertex order preserved). Bipartition and
// positions carry over; the embedding is re-derived.
MatchGraph InducedSubgraph(const MatchGraph& g, std::span<const int> keep);

// Graph with the given vertices deleted.
MatchGraph DeleteVertices(const MatchGraph& g, std::span<const int> removed);

}  // namespace matchcount

#endif  // MATCHCOUNT_GRAPH_HPP_
