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

#include "matchcount/transfer.hpp"

#include <algorithm>
#include <future>
#include <string>
#include <unordered_map>

#include "matchcount/error.hpp"

namespace matchcount {

namespace {

struct RingCell {
  int u;
  int v;
};

RingCell Rotated(const Label& l) { return {l[0] + l[1] + 1, l[1] - l[0]}; }

// Clockwise angle order starting just above the ray pointing toward -u.
bool ClockwiseBefore(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by) {
  auto group = [](std::int64_t dx, std::int64_t dy) {
    return (dy > 0 || (dy == 0 && dx < 0)) ? 0 : 1;
  };
  int ga = group(ax, ay), gb = group(bx, by);
  if (ga != gb) return ga < gb;
  std::int64_t cross = ax * by - ay * bx;
  if (cross != 0) return cross < 0;
  return ax * ax + ay * ay < bx * bx + by * by;
}

using StateMap = std::unordered_map<std::uint64_t, BigInt>;

// Runs the sweep from one start mask; returns final masks with multiplicity.
StateMap Sweep(const SweepPlan& plan, std::uint64_t start) {
  StateMap current{{start, BigInt(1)}};
  for (int p = 0; p < plan.size(); ++p) {
    StateMap next;
    for (const auto& [state, ways] : current) {
      for (std::uint64_t succ : StepTransitions(plan, p, state)) next[succ] += ways;
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace

std::uint64_t SweepPlan::PositionMask(std::uint64_t cut_state) const {
  std::uint64_t mask = 0;
  for (int k = 0; k < CutWidth(); ++k) {
    if (cut_state >> k & 1) mask |= std::uint64_t{1} << cut_positions[k];
  }
  return mask;
}

SweepPlan PlanAztecWindowSweep(int x, int w) {
  SweepPlan plan;
  plan.x = x;
  plan.w = w;
  plan.graph = BuildAztecWindow(x, w);
  const MatchGraph& g = plan.graph;
  const int m = g.VertexCount();
  const int c = -(x % 2);

  std::vector<RingCell> cells;
  for (const Label& l : g.labels()) cells.push_back(Rotated(l));
  plan.order.resize(m);
  for (int k = 0; k < m; ++k) plan.order[k] = k;
  std::sort(plan.order.begin(), plan.order.end(), [&](int a, int b) {
    return ClockwiseBefore(2 * cells[a].u, 2 * cells[a].v - 2 * c - 1, 2 * cells[b].u,
                           2 * cells[b].v - 2 * c - 1);
  });
  std::vector<int> pos(m);
  for (int k = 0; k < m; ++k) pos[plan.order[k]] = k;

  plan.forward.assign(m, {});
  std::vector<int> cut;
  for (const Edge& e : g.edges()) {
    const RingCell& a = cells[e.u];
    const RingCell& b = cells[e.v];
    bool crosses = a.u < 0 && b.u < 0 && ((a.v <= c) != (b.v <= c));
    int offset, from;
    if (crosses) {
      int early = a.v > c ? e.u : e.v;
      int late = early == e.u ? e.v : e.u;
      from = pos[late];
      offset = m + pos[early] - pos[late];
      cut.push_back(pos[early]);
    } else {
      from = std::min(pos[e.u], pos[e.v]);
      offset = std::max(pos[e.u], pos[e.v]) - from;
    }
    plan.forward[from].push_back(offset);
    plan.bandwidth = std::max(plan.bandwidth, offset);
  }
  for (auto& f : plan.forward) std::sort(f.begin(), f.end());
  std::sort(cut.begin(), cut.end());
  cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
  plan.cut_positions = std::move(cut);

  if (plan.CutWidth() > kMaxCutWidth) {
    throw Error(ErrorCode::kSizeBound, "transfer cut width " + std::to_string(plan.CutWidth()) +
                                           " exceeds " + std::to_string(kMaxCutWidth));
  }
  if (plan.bandwidth > kMaxSweepBandwidth ||
      (!plan.cut_positions.empty() && plan.cut_positions.back() > kMaxSweepBandwidth)) {
    throw Error(ErrorCode::kSizeBound, "transfer sweep bandwidth " +
                                           std::to_string(plan.bandwidth) + " exceeds " +
                                           std::to_string(kMaxSweepBandwidth));
  }
  return plan;
}

std::vector<std::uint64_t> StepTransitions(const SweepPlan& plan, int p, std::uint64_t state) {
  if (state & 1) return {state >> 1};
  std::vector<std::uint64_t> out;
  for (int d : plan.forward[p]) {
    std::uint64_t bit = std::uint64_t{1} << d;
    if (!(state & bit)) out.push_back((state | bit) >> 1);
  }
  return out;
}

TransferMatrix SweepOperator(const SweepPlan& plan) {
  TransferMatrix t;
  t.cut_width = plan.CutWidth();
  const int dim = 1 << t.cut_width;
  t.entries = IntMatrix(dim, dim);
  std::unordered_map<std::uint64_t, int> index;
  for (int s = 0; s < dim; ++s) index[plan.PositionMask(s)] = s;
  for (int s = 0; s < dim; ++s) {
    for (const auto& [final_mask, ways] : Sweep(plan, plan.PositionMask(s))) {
      auto it = index.find(final_mask);
      if (it == index.end()) throw std::logic_error("sweep ended outside the cut");
      t.entries(s, it->second) = ways;
    }
  }
  return t;
}

Count TransferCount(const SweepPlan& plan) {
  BigInt total = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << plan.CutWidth()); ++s) {
    std::uint64_t mask = plan.PositionMask(s);
    StateMap finals = Sweep(plan, mask);
    auto it = finals.find(mask);
    if (it != finals.end()) total += it->second;
  }
  return Count(total);
}

Count TransferCount(int x, int w) { return TransferCount(PlanAztecWindowSweep(x, w)); }

Count TransferCount(const RegionSpec& spec) {
  if (spec.kind != RegionKind::kAztecWindow) {
    throw Error(ErrorCode::kInvalidParameters, "transfer method applies to aztec_window regions only");
  }
  return TransferCount(spec.x, spec.w);
}

std::vector<Count> CountSequence(int w, int x_from, int x_to) {
  std::vector<std::future<Count>> jobs;
  for (int x = x_from; x <= x_to; ++x) {
    jobs.push_back(std::async(std::launch::async, [x, w] { return TransferCount(x, w); }));
  }
  std::vector<Count> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace matchcount
