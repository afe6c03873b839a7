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

#include "matchcount/count.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <thread>

#include "matchcount/error.hpp"
#include "matchcount/kasteleyn.hpp"

namespace matchcount {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> AdjacencyMasks(const MatchGraph& g, int max_vertices) {
  if (g.VertexCount() > max_vertices || g.VertexCount() > 64) {
    throw Error(ErrorCode::kSizeBound, "brute-force oracle limited to " +
                                           std::to_string(std::min(max_vertices, 64)) +
                                           " vertices, graph has " +
                                           std::to_string(g.VertexCount()));
  }
  std::vector<Mask> adj(g.VertexCount(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  return adj;
}

Mask FullMask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Picks the remaining vertex of least remaining degree.
int PickVertex(const std::vector<Mask>& adj, Mask remaining) {
  int best = -1, best_degree = 65;
  for (Mask r = remaining; r; r &= r - 1) {
    int v = std::countr_zero(r);
    int d = std::popcount(adj[v] & remaining);
    if (d < best_degree) {
      best = v;
      best_degree = d;
      if (d <= 1) break;
    }
  }
  return best;
}

std::uint64_t CountFrom(const std::vector<Mask>& adj, Mask remaining) {
  if (remaining == 0) return 1;
  int v = PickVertex(adj, remaining);
  Mask options = adj[v] & remaining;
  std::uint64_t total = 0;
  Mask rest = remaining & ~(Mask{1} << v);
  for (; options; options &= options - 1) {
    int w = std::countr_zero(options);
    total += CountFrom(adj, rest & ~(Mask{1} << w));
  }
  return total;
}

void EnumerateFrom(const std::vector<Mask>& adj, Mask remaining, Matching& current,
                   const std::function<void(const Matching&)>& visit) {
  if (remaining == 0) {
    Matching sorted = current;
    std::sort(sorted.begin(), sorted.end());
    visit(sorted);
    return;
  }
  int v = PickVertex(adj, remaining);
  Mask rest = remaining & ~(Mask{1} << v);
  for (Mask options = adj[v] & remaining; options; options &= options - 1) {
    int w = std::countr_zero(options);
    current.push_back(MakeEdge(v, w));
    EnumerateFrom(adj, rest & ~(Mask{1} << w), current, visit);
    current.pop_back();
  }
}

BigInt FromInt128(__int128 value) {
  bool negative = value < 0;
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(value)
                                   : static_cast<unsigned __int128>(value);
  BigInt hi = static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64));
  BigInt lo = static_cast<unsigned long>(static_cast<std::uint64_t>(mag));
  BigInt out = (hi << 64) + lo;
  return negative ? BigInt(-out) : out;
}

// Signed Ryser sum over subsets whose top `fixed_bits` columns equal `prefix`.
__int128 RyserChunk(const std::vector<Mask>& row_masks, int n, int fixed_bits, Mask prefix) {
  const int free_bits = n - fixed_bits;
  std::vector<int> row_sum(n, 0);
  Mask subset = prefix << free_bits;
  for (int i = 0; i < n; ++i) row_sum[i] = std::popcount(row_masks[i] & subset);
  __int128 total = 0;
  const Mask steps = Mask{1} << free_bits;
  for (Mask k = 0; k < steps; ++k) {
    if (k > 0) {
      // Gray code: flip the column at the lowest set bit of k.
      int col = std::countr_zero(k);
      Mask bit = Mask{1} << col;
      int delta = (subset & bit) ? -1 : 1;
      subset ^= bit;
      for (int i = 0; i < n; ++i) {
        if (row_masks[i] & bit) row_sum[i] += delta;
      }
    }
    if (subset == 0) continue;
    __int128 product = 1;
    for (int i = 0; i < n && product != 0; ++i) product *= row_sum[i];
    if (product == 0) continue;
    total += (std::popcount(subset) % 2 == n % 2) ? product : -product;
  }
  return total;
}

}  // namespace

Count CountBrute(const MatchGraph& g, int max_vertices) {
  auto adj = AdjacencyMasks(g, max_vertices);
  if (g.VertexCount() % 2 == 1) return Count(0ul);
  return Count(static_cast<unsigned long>(CountFrom(adj, FullMask(g.VertexCount()))));
}

void EnumerateMatchings(const MatchGraph& g, const std::function<void(const Matching&)>& visit,
                        int max_vertices) {
  auto adj = AdjacencyMasks(g, max_vertices);
  if (g.VertexCount() % 2 == 1) return;
  Matching current;
  EnumerateFrom(adj, FullMask(g.VertexCount()), current, visit);
}

Count CountPermanent(const MatchGraph& g, int max_class, int threads) {
  if (!g.HasBipartition()) {
    throw Error(ErrorCode::kNotBipartite, "permanent needs a bipartition");
  }
  if (!g.IsBalanced()) {
    throw Error(ErrorCode::kImbalance, "permanent needs balanced color classes");
  }
  std::vector<int> rows, cols(g.VertexCount(), -1);
  int ncols = 0;
  for (int v = 0; v < g.VertexCount(); ++v) {
    if (g.Color(v) == 0) {
      rows.push_back(v);
    } else {
      cols[v] = ncols++;
    }
  }
  const int n = static_cast<int>(rows.size());
  if (n > max_class) {
    throw Error(ErrorCode::kSizeBound, "permanent limited to " + std::to_string(max_class) +
                                           " vertices per color class, graph has " +
                                           std::to_string(n));
  }
  if (n == 0) return Count(1ul);
  std::vector<Mask> row_masks(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int w : g.Neighbors(rows[i])) row_masks[i] |= Mask{1} << cols[w];
  }

  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  int fixed_bits = 0;
  while (fixed_bits < n - 10 && (1 << fixed_bits) < threads) ++fixed_bits;
  const int chunks = 1 << fixed_bits;
  std::vector<__int128> partial(chunks, 0);
  if (chunks == 1) {
    partial[0] = RyserChunk(row_masks, n, 0, 0);
  } else {
    std::vector<std::thread> pool;
    for (int c = 0; c < chunks; ++c) {
      pool.emplace_back([&, c] { partial[c] = RyserChunk(row_masks, n, fixed_bits, c); });
    }
    for (auto& t : pool) t.join();
  }
  __int128 total = 0;
  for (__int128 p : partial) total += p;
  return Count(FromInt128(total));
}

const char* MethodName(Method m) {
  switch (m) {
    case Method::kAuto: return "auto";
    case Method::kBrute: return "brute";
    case Method::kPermanent: return "permanent";
    case Method::kKasteleyn: return "kasteleyn";
  }
  return "unknown";
}

Method ParseMethod(const std::string& name) {
  if (name == "auto") return Method::kAuto;
  if (name == "brute") return Method::kBrute;
  if (name == "permanent") return Method::kPermanent;
  if (name == "kasteleyn") return Method::kKasteleyn;
  throw Error(ErrorCode::kMalformedInput, "unknown counting method '" + name + "'");
}

Count CountMatchings(const MatchGraph& g, Method method) {
  switch (method) {
    case Method::kBrute: return CountBrute(g);
    case Method::kPermanent:
      if (g.HasBipartition() && !g.IsBalanced()) return Count(0ul);
      return CountPermanent(g);
    case Method::kKasteleyn: return CountKasteleyn(g);
    case Method::kAuto:
      if (g.HasBipartition() && g.HasEmbedding()) return CountKasteleyn(g);
      if (g.HasBipartition()) {
        if (!g.IsBalanced()) return Count(0ul);
        if (g.VertexCount() / 2 <= kMaxPermanentClass) return CountPermanent(g);
      }
      return CountBrute(g);
  }
  throw Error(ErrorCode::kMalformedInput, "unknown counting method");
}

Count CountWithForcedEdge(const MatchGraph& g, const Edge& e, Method method) {
  if (!g.HasEdge(e.u, e.v)) {
    throw Error(ErrorCode::kNotAnEdge, "forced edge (" + std::to_string(e.u) + "," +
                                           std::to_string(e.v) + ") is not in the graph");
  }
  const int ends[2] = {e.u, e.v};
  return CountMatchings(DeleteVertices(g, ends), method);
}

ExactRatio ContainmentRatio(const MatchGraph& g, const Edge& e, Method method) {
  Count forced = CountWithForcedEdge(g, e, method);
  Count total = CountMatchings(g, method);
  if (total.IsZero()) {
    throw Error(ErrorCode::kZeroCount, "containment ratio undefined: region has no matching");
  }
  return ExactRatio(forced.value(), total.value());
}

}  // namespace matchcount
