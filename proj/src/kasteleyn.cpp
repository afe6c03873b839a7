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

#include "matchcount/kasteleyn.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <utility>

#include "matchcount/error.hpp"

namespace matchcount {

bool Orientation::Directed(const MatchGraph& g, int from, int to) const {
  auto k = g.EdgeIndex(from, to);
  if (!k) throw Error(ErrorCode::kNotAnEdge, "not an edge");
  return forward[*k] == (from < to);
}

namespace {

void RequireEmbedding(const MatchGraph& g) {
  if (!g.HasEmbedding()) {
    throw Error(ErrorCode::kMissingEmbedding, "Kasteleyn method needs a planar embedding");
  }
}

}  // namespace

std::vector<int> ClockwiseCounts(const MatchGraph& g, const Orientation& o) {
  RequireEmbedding(g);
  const Embedding& emb = g.embedding();
  std::vector<int> out;
  for (int f = 0; f < static_cast<int>(emb.faces.size()); ++f) {
    if (f == emb.outer_face) continue;
    const auto& walk = emb.faces[f];
    int cw = 0;
    for (std::size_t k = 0; k < walk.size(); ++k) {
      int a = walk[k], b = walk[(k + 1) % walk.size()];
      // Walks are counterclockwise; an edge pointing against it is clockwise.
      if (o.Directed(g, b, a)) ++cw;
    }
    out.push_back(cw);
  }
  return out;
}

bool IsKasteleyn(const MatchGraph& g, const Orientation& o) {
  for (int cw : ClockwiseCounts(g, o)) {
    if (cw % 2 == 0) return false;
  }
  return true;
}

Orientation KasteleynOrient(const MatchGraph& g, int root) {
  RequireEmbedding(g);
  const int n = g.VertexCount();
  Orientation o;
  o.forward.assign(g.EdgeCount(), true);
  if (n == 0) return o;
  if (!g.IsConnected()) {
    throw Error(ErrorCode::kDisconnected, "Kasteleyn orientation needs a connected graph");
  }
  if (root < 0 || root >= n) throw std::out_of_range("root vertex out of range");

  std::vector<char> is_set(g.EdgeCount(), 0);
  std::vector<char> seen(n, 0);
  std::deque<int> queue{root};
  seen[root] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.Neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = 1;
      int k = *g.EdgeIndex(v, w);
      o.forward[k] = v < w;
      is_set[k] = 1;
      queue.push_back(w);
    }
  }

  const Embedding& emb = g.embedding();
  const int nf = static_cast<int>(emb.faces.size());
  // Per face: the edge index of every dart in its walk.
  std::vector<std::vector<int>> face_edges(nf);
  std::vector<std::vector<int>> edge_faces(g.EdgeCount());
  std::vector<int> unset(nf, 0);
  for (int f = 0; f < nf; ++f) {
    const auto& walk = emb.faces[f];
    for (std::size_t k = 0; k < walk.size(); ++k) {
      int e = *g.EdgeIndex(walk[k], walk[(k + 1) % walk.size()]);
      face_edges[f].push_back(e);
      edge_faces[e].push_back(f);
      if (!is_set[e]) ++unset[f];
    }
  }
  std::deque<int> leaves;
  for (int f = 0; f < nf; ++f) {
    if (f != emb.outer_face && unset[f] == 1) leaves.push_back(f);
  }
  while (!leaves.empty()) {
    int f = leaves.front();
    leaves.pop_front();
    if (unset[f] != 1) continue;
    const auto& walk = emb.faces[f];
    int free_slot = -1, cw = 0;
    for (std::size_t k = 0; k < walk.size(); ++k) {
      int e = face_edges[f][k];
      if (!is_set[e]) {
        free_slot = static_cast<int>(k);
        continue;
      }
      if (o.Directed(g, walk[(k + 1) % walk.size()], walk[k])) ++cw;
    }
    int a = walk[free_slot], b = walk[(free_slot + 1) % walk.size()];
    int e = face_edges[f][free_slot];
    // Make the free edge clockwise (b -> a) exactly when cw is even.
    bool clockwise = cw % 2 == 0;
    int from = clockwise ? b : a;
    o.forward[e] = from == g.edges()[e].u;
    is_set[e] = 1;
    for (int other : edge_faces[e]) {
      if (--unset[other] == 1 && other != emb.outer_face) leaves.push_back(other);
    }
  }
  for (char s : is_set) {
    if (!s) throw Error(ErrorCode::kDisconnected, "dual peeling left edges unset");
  }
  return o;
}

namespace {

// Edge directions (indexed like g.edges(), true = from e.u to e.v) from a
// Kasteleyn orientation of each connected component; `root` seeds the
// spanning tree of its own component, the other components use their lowest
// vertex.
std::vector<bool> ComponentwiseDirections(const MatchGraph& g, int root) {
  auto components = g.Components();
  if (components.size() <= 1) {
    Orientation o = KasteleynOrient(g, root);
    std::vector<bool> out(g.EdgeCount());
    for (int e = 0; e < g.EdgeCount(); ++e) {
      out[e] = o.Directed(g, g.edges()[e].u, g.edges()[e].v);
    }
    return out;
  }
  if (root < 0 || root >= g.VertexCount()) throw std::out_of_range("root vertex out of range");
  std::vector<bool> out(g.EdgeCount(), true);
  for (auto comp : components) {
    std::sort(comp.begin(), comp.end());
    MatchGraph sub = InducedSubgraph(g, comp);
    auto it = std::find(comp.begin(), comp.end(), root);
    int sub_root = it == comp.end() ? 0 : static_cast<int>(it - comp.begin());
    Orientation o = KasteleynOrient(sub, sub_root);
    for (const Edge& e : sub.edges()) {
      out[*g.EdgeIndex(comp[e.u], comp[e.v])] = o.Directed(sub, e.u, e.v);
    }
  }
  return out;
}

}  // namespace

SignedMatrix KasteleynMatrix(const MatchGraph& g, int root) {
  if (!g.HasBipartition()) throw Error(ErrorCode::kNotBipartite, "Kasteleyn matrix needs a bipartition");
  RequireEmbedding(g);
  if (!g.IsBalanced()) {
    throw Error(ErrorCode::kImbalance, "Kasteleyn matrix needs balanced color classes");
  }
  std::vector<bool> forward = ComponentwiseDirections(g, root);
  SignedMatrix k;
  std::vector<int> slot(g.VertexCount(), -1);
  for (int v = 0; v < g.VertexCount(); ++v) {
    auto& list = g.Color(v) == 0 ? k.row_vertices : k.col_vertices;
    slot[v] = static_cast<int>(list.size());
    list.push_back(v);
  }
  const int n = static_cast<int>(k.row_vertices.size());
  k.entries = IntMatrix(n, n);
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const Edge& ed = g.edges()[e];
    const bool row_first = g.Color(ed.u) == 0;
    int r = row_first ? ed.u : ed.v;
    int c = row_first ? ed.v : ed.u;
    k.entries(slot[r], slot[c]) = forward[e] == row_first ? 1 : -1;
  }
  return k;
}

Count CountKasteleyn(const MatchGraph& g, int root) {
  if (!g.HasBipartition()) throw Error(ErrorCode::kNotBipartite, "Kasteleyn count needs a bipartition");
  RequireEmbedding(g);
  if (!g.IsBalanced()) return Count(0ul);
  // Components occupy disjoint row and column sets, so the determinant is the
  // product of the per-component determinants (0 if any is imbalanced).
  BigInt det = BareissDeterminant(KasteleynMatrix(g, root).entries);
  return Count(BigInt(abs(det)));
}

}  // namespace matchcount
