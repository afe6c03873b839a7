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

#ifndef MATCHCOUNT_KASTELEYN_HPP_
#define MATCHCOUNT_KASTELEYN_HPP_

#include <vector>

#include "matchcount/bigint.hpp"
#include "matchcount/graph.hpp"
#include "matchcount/matrix.hpp"

namespace matchcount {

// forward[k] is true when edges()[k] = {u, v} is directed u -> v.
struct Orientation {
  std::vector<bool> forward;

  bool Directed(const MatchGraph& g, int from, int to) const;
};

// Kasteleyn orientation of a connected embedded graph. Edges of a BFS tree
// rooted at `root` point away from the root; the remaining edges form a
// spanning tree of the dual, which is peeled from its leaves (bounded faces
// with a single unset edge) toward the outer face, fixing each face's parity.
Orientation KasteleynOrient(const MatchGraph& g, int root = 0);

// Number of clockwise edges on each bounded face, in face order with the
// outer face skipped (face-walk multiplicity).
std::vector<int> ClockwiseCounts(const MatchGraph& g, const Orientation& o);
bool IsKasteleyn(const MatchGraph& g, const Orientation& o);

// Signed biadjacency: rows are color-0 vertices, columns color-1 vertices,
// both in increasing vertex order. Entry +1 when the edge is directed
// row -> column, -1 when column -> row, 0 for non-edges.
struct SignedMatrix {
  IntMatrix entries;
  std::vector<int> row_vertices;
  std::vector<int> col_vertices;
};

// Disconnected graphs are oriented component by component; `root` seeds its
// own component and every other component starts from its lowest vertex.
SignedMatrix KasteleynMatrix(const MatchGraph& g, int root = 0);

// |det| of the Kasteleyn matrix. Imbalanced graphs (or components) give 0.
// The empty graph gives 1.
Count CountKasteleyn(const MatchGraph& g, int root = 0);

}  // namespace matchcount

#endif  // MATCHCOUNT_KASTELEYN_HPP_
