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

#include "matchcount/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "matchcount/error.hpp"

namespace matchcount {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParameters: return "invalid-parameters";
    case ErrorCode::kInvalidHole: return "invalid-hole";
    case ErrorCode::kImbalance: return "imbalance";
    case ErrorCode::kMissingEmbedding: return "missing-embedding";
    case ErrorCode::kDisconnected: return "disconnected";
    case ErrorCode::kNotBipartite: return "not-bipartite";
    case ErrorCode::kSizeBound: return "size-bound";
    case ErrorCode::kNotAnEdge: return "not-an-edge";
    case ErrorCode::kZeroCount: return "zero-count";
    case ErrorCode::kMalformedInput: return "malformed-input";
  }
  return "unknown";
}

Edge MakeEdge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

MatchGraph::MatchGraph(LabelKind kind, std::vector<Label> labels,
                       std::vector<Edge> edges)
    : kind_(kind), labels_(std::move(labels)) {
  const int n = VertexCount();
  for (Edge& e : edges) {
    if (e.u == e.v) throw std::invalid_argument("self-loop");
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw std::out_of_range("edge endpoint out of range");
    }
    e = MakeEdge(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  adjacency_.assign(n, {});
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
}

std::optional<int> MatchGraph::FindVertex(const Label& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

std::optional<int> MatchGraph::EdgeIndex(int a, int b) const {
  Edge key = MakeEdge(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

void MatchGraph::SetBipartition(std::vector<std::uint8_t> colors) {
  if (static_cast<int>(colors.size()) != VertexCount()) {
    throw std::invalid_argument("bipartition size mismatch");
  }
  for (const Edge& e : edges_) {
    if (colors[e.u] == colors[e.v]) {
      throw Error(ErrorCode::kNotBipartite, "edge joins two vertices of one color");
    }
  }
  colors_ = std::move(colors);
  has_bipartition_ = true;
}

std::array<int, 2> MatchGraph::ClassSizes() const {
  std::array<int, 2> sizes{0, 0};
  for (std::uint8_t c : colors_) ++sizes[c];
  return sizes;
}

bool MatchGraph::IsBalanced() const {
  auto sizes = ClassSizes();
  return sizes[0] == sizes[1];
}

void MatchGraph::SetPositions(std::vector<Point> positions) {
  if (static_cast<int>(positions.size()) != VertexCount()) {
    throw std::invalid_argument("position count mismatch");
  }
  positions_ = std::move(positions);
  embedding_ = EmbedFromPositions(*this, positions_);
}

std::vector<std::vector<int>> MatchGraph::Components() const {
  const int n = VertexCount();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (int w : adjacency_[members[k]]) {
        if (comp[w] < 0) {
          comp[w] = comp[s];
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool MatchGraph::IsConnected() const { return Components().size() <= 1; }

namespace {

int HalfPlane(const Point& d) {
  return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1;
}

std::int64_t Cross(const Point& a, const Point& b) {
  return a.x * b.y - a.y * b.x;
}

}  // namespace

Embedding EmbedFromPositions(const MatchGraph& g, std::span<const Point> pos) {
  const int n = g.VertexCount();
  Embedding emb;
  emb.rotation.resize(n);
  for (int v = 0; v < n; ++v) {
    auto nb = g.Neighbors(v);
    std::vector<int> rot(nb.begin(), nb.end());
    auto dir = [&](int w) {
      return Point{pos[w].x - pos[v].x, pos[w].y - pos[v].y};
    };
    std::sort(rot.begin(), rot.end(), [&](int a, int b) {
      Point da = dir(a), db = dir(b);
      int ha = HalfPlane(da), hb = HalfPlane(db);
      if (ha != hb) return ha < hb;
      return Cross(da, db) > 0;
    });
    emb.rotation[v] = std::move(rot);
  }

  // Dart (v -> rotation[v][k]) has id offset[v] + k.
  std::vector<int> offset(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    offset[v + 1] = offset[v] + static_cast<int>(emb.rotation[v].size());
  }
  auto slot = [&](int v, int w) {
    const auto& r = emb.rotation[v];
    return static_cast<int>(std::find(r.begin(), r.end(), w) - r.begin());
  };
  std::vector<char> used(offset[n], 0);
  std::int64_t best_area = 0;
  for (int v = 0; v < n; ++v) {
    for (std::size_t k = 0; k < emb.rotation[v].size(); ++k) {
      if (used[offset[v] + k]) continue;
      std::vector<int> walk;
      int a = v, b = emb.rotation[v][k];
      std::int64_t area2 = 0;
      while (!used[offset[a] + slot(a, b)]) {
        used[offset[a] + slot(a, b)] = 1;
        walk.push_back(a);
        area2 += Cross(pos[a], pos[b]);
        const auto& rb = emb.rotation[b];
        int d = static_cast<int>(rb.size());
        int i = slot(b, a);
        int c = rb[(i - 1 + d) % d];
        a = b;
        b = c;
      }
      int id = static_cast<int>(emb.faces.size());
      if (emb.outer_face < 0 || area2 < best_area) {
        emb.outer_face = id;
        best_area = area2;
      }
      emb.faces.push_back(std::move(walk));
    }
  }
  return emb;
}

MatchGraph InducedSubgraph(const MatchGraph& g, std::span<const int> keep) {
  std::vector<int> index(g.VertexCount(), -1);
  std::vector<Label> labels;
  for (int v : keep) {
    if (index[v] >= 0) throw std::invalid_argument("duplicate vertex in subset");
    index[v] = static_cast<int>(labels.size());
    labels.push_back(g.label(v));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) {
      edges.push_back(MakeEdge(index[e.u], index[e.v]));
    }
  }
  MatchGraph sub(g.label_kind(), std::move(labels), std::move(edges));
  if (g.HasBipartition()) {
    std::vector<std::uint8_t> colors;
    for (int v : keep) colors.push_back(g.colors()[v]);
    sub.SetBipartition(std::move(colors));
  }
  if (g.HasEmbedding()) {
    std::vector<Point> pos;
    for (int v : keep) pos.push_back(g.positions()[v]);
    sub.SetPositions(std::move(pos));
  }
  return sub;
}

MatchGraph DeleteVertices(const MatchGraph& g, std::span<const int> removed) {
  std::vector<char> drop(g.VertexCount(), 0);
  for (int v : removed) drop[v] = 1;
  std::vector<int> keep;
  for (int v = 0; v < g.VertexCount(); ++v) {
    if (!drop[v]) keep.push_back(v);
  }
  return InducedSubgraph(g, keep);
}

}  // namespace matchcount
