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

#ifndef MATCHCOUNT_COUNT_HPP_
#define MATCHCOUNT_COUNT_HPP_

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "matchcount/bigint.hpp"
#include "matchcount/graph.hpp"

namespace matchcount {

inline constexpr int kMaxBruteVertices = 64;
inline constexpr int kMaxPermanentClass = 20;

using Matching = std::vector<Edge>;

// Backtracking on the vertex of least remaining degree. A degree-1 vertex
// gives a single forced branch, so chains of forced edges are followed
// without branching.
Count CountBrute(const MatchGraph& g, int max_vertices = kMaxBruteVertices);

// Same search, reporting each matching (edges sorted).
void EnumerateMatchings(const MatchGraph& g, const std::function<void(const Matching&)>& visit,
                        int max_vertices = kMaxBruteVertices);

// Permanent of the 0/1 biadjacency matrix by inclusion-exclusion over column
// subsets (Gray-code order). Subsets are split across `threads` workers; the
// integer result does not depend on the split.
Count CountPermanent(const MatchGraph& g, int max_class = kMaxPermanentClass, int threads = 0);

enum class Method { kAuto, kBrute, kPermanent, kKasteleyn };

const char* MethodName(Method m);
Method ParseMethod(const std::string& name);

// kAuto: Kasteleyn when embedded and bipartite, else permanent when
// bipartite and small enough, else brute force.
Count CountMatchings(const MatchGraph& g, Method method = Method::kAuto);

Count CountWithForcedEdge(const MatchGraph& g, const Edge& e, Method method = Method::kAuto);

// CountWithForcedEdge / CountMatchings, reduced. Throws kZeroCount when the
// region has no matching.
ExactRatio ContainmentRatio(const MatchGraph& g, const Edge& e, Method method = Method::kAuto);

}  // namespace matchcount

#endif  // MATCHCOUNT_COUNT_HPP_
