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

#ifndef MATCHCOUNT_TRANSFER_HPP_
#define MATCHCOUNT_TRANSFER_HPP_

#include <cstdint>
#include <vector>

#include "matchcount/bigint.hpp"
#include "matchcount/graph.hpp"
#include "matchcount/matrix.hpp"
#include "matchcount/regions.hpp"

namespace matchcount {

inline constexpr int kMaxCutWidth = 24;
inline constexpr int kMaxSweepBandwidth = 63;

// Cyclic sweep of an Aztec window.
//
// In rotated coordinates u = i+j+1, v = j-i the window is the square ring
// x < max(|u|, |v|) <= x+w (cells have u+v odd; neighbors differ by (+-1, +-1)).
// The radial cut lies on the left arm between rows v = c and v = c+1, with
// c = -(x mod 2) so the local picture at the cut is the same for every x.
// Cells are swept clockwise by angle around (0, c + 1/2), starting just above
// the cut. An edge is "wrapped" when it crosses the cut; its endpoint above
// the cut is a cut cell.
//
// A sweep state is a bitmask relative to the current position p: bit k set
// means the cell at position p+k is already covered. Positions m..m+63 are
// virtual copies of positions 0..63, reached only through wrapped edges.
struct SweepPlan {
  int x = 0;
  int w = 0;
  MatchGraph graph;                         // BuildAztecWindow(x, w)
  std::vector<int> order;                   // sweep position -> vertex
  std::vector<std::vector<int>> forward;    // per position: offsets to later cells
  std::vector<int> cut_positions;           // increasing, all < 64
  int bandwidth = 0;

  int size() const { return static_cast<int>(order.size()); }
  int CutWidth() const { return static_cast<int>(cut_positions.size()); }
  // Bitmask (over positions) of the cut cells selected by `cut_state`, whose
  // bit k refers to cut_positions[k].
  std::uint64_t PositionMask(std::uint64_t cut_state) const;
};

SweepPlan PlanAztecWindowSweep(int x, int w);

// One single-cell step from `state` at position p. Distinct choices lead to
// distinct successor states, so every step matrix entry is 0 or 1.
std::vector<std::uint64_t> StepTransitions(const SweepPlan& plan, int p, std::uint64_t state);

// Full sweep operator indexed by cut states (subsets of the cut cells):
// entry (s, t) counts the coverings that start with the cut cells in s
// pre-covered by wrapped dominoes and end with those in t claimed by them.
// Dimension is 2^CutWidth.
struct TransferMatrix {
  int cut_width = 0;
  IntMatrix entries;
  int dimension() const { return entries.rows(); }
};
TransferMatrix SweepOperator(const SweepPlan& plan);

// Matching count of the window: trace of the sweep operator. Only the
// diagonal is computed.
Count TransferCount(const SweepPlan& plan);
Count TransferCount(int x, int w);
Count TransferCount(const RegionSpec& spec);

// TransferCount for x = x_from..x_to, in order; empty when x_from > x_to.
std::vector<Count> CountSequence(int w, int x_from, int x_to);

}  // namespace matchcount

#endif  // MATCHCOUNT_TRANSFER_HPP_
