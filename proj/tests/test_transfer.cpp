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

#include <random>
#include <set>

#include "doctest.h"
#include "matchcount/count.hpp"
#include "matchcount/error.hpp"
#include "matchcount/kasteleyn.hpp"
#include "matchcount/polynomial.hpp"
#include "matchcount/regions.hpp"
#include "matchcount/transfer.hpp"
#include "oracles.hpp"

using namespace matchcount;

TEST_CASE("small window counts") {
  CHECK(TransferCount(1, 1) == Count(1ul));
  CHECK(TransferCount(1, 2) == Count(8ul));
  CHECK(TransferCount(2, 2) == Count(8ul));
  CHECK(TransferCount(2, 1).IsZero());
}

TEST_CASE("sweep agrees with the determinant and the naive oracle") {
  for (int x = 1; x <= 3; ++x) {
    for (int w = 1; w <= 3; ++w) {
      CAPTURE(x);
      CAPTURE(w);
      MatchGraph g = BuildAztecWindow(x, w);
      const Count t = TransferCount(x, w);
      CHECK(t == CountKasteleyn(g));
      if (g.VertexCount() <= 48) CHECK(t.value() == oracle::CountMatchingsNaive(g));
    }
  }
  for (int x = 4; x <= 7; ++x) CHECK(TransferCount(x, 4) == CountKasteleyn(BuildAztecWindow(x, 4)));
}

TEST_CASE("sweep plan shape") {
  for (int w = 1; w <= 4; ++w) {
    std::set<int> widths;
    for (int x = 1; x <= 8; ++x) {
      SweepPlan plan = PlanAztecWindowSweep(x, w);
      CHECK(plan.size() == plan.graph.VertexCount());
      std::vector<int> seen(plan.size(), 0);
      for (int v : plan.order) ++seen[v];
      for (int s : seen) CHECK(s == 1);
      // Each edge appears once as a forward offset (wrapped edges included).
      int offsets = 0;
      for (const auto& f : plan.forward) {
        offsets += static_cast<int>(f.size());
        for (int d : f) CHECK(d >= 1);
      }
      CHECK(offsets == plan.graph.EdgeCount());
      widths.insert(plan.CutWidth() * 2 + x % 2);
    }
    // The cut width only depends on w and the parity of x.
    CHECK(widths.size() <= 2);
  }
}

TEST_CASE("step transitions are distinct") {
  SweepPlan plan = PlanAztecWindowSweep(2, 3);
  for (int p = 0; p < plan.size(); ++p) {
    for (std::uint64_t state : {0ull, 1ull, 2ull, 5ull}) {
      auto next = StepTransitions(plan, p, state);
      std::set<std::uint64_t> unique(next.begin(), next.end());
      CHECK(unique.size() == next.size());
    }
  }
}

TEST_CASE("trace of the sweep operator is the count") {
  for (int x = 1; x <= 5; ++x) {
    for (int w = 1; w <= 3; ++w) {
      SweepPlan plan = PlanAztecWindowSweep(x, w);
      TransferMatrix t = SweepOperator(plan);
      CHECK(t.dimension() == (1 << plan.CutWidth()));
      BigInt trace = 0;
      for (int i = 0; i < t.dimension(); ++i) {
        trace += t.entries(i, i);
        for (int j = 0; j < t.dimension(); ++j) CHECK(t.entries(i, j) >= 0);
      }
      CHECK(trace == TransferCount(plan).value());
    }
  }
}

TEST_CASE("count sequences") {
  auto seq = CountSequence(2, 1, 8);
  REQUIRE(seq.size() == 8);
  for (const Count& c : seq) CHECK(c == Count(8ul));
  auto w3 = CountSequence(3, 2, 5);
  REQUIRE(w3.size() == 4);
  for (int k = 0; k < 4; ++k) CHECK(w3[k] == TransferCount(2 + k, 3));
  CHECK(CountSequence(2, 5, 4).empty());
}

TEST_CASE("region spec dispatch and bounds") {
  RegionSpec spec;
  spec.kind = RegionKind::kAztecWindow;
  spec.x = 3;
  spec.w = 2;
  CHECK(TransferCount(spec) == Count(8ul));
  spec.kind = RegionKind::kAztecDiamond;
  spec.n = 3;
  try {
    TransferCount(spec);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidParameters);
  }
  try {
    PlanAztecWindowSweep(2, 40);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSizeBound);
  }
  CHECK_THROWS_AS(PlanAztecWindowSweep(0, 2), Error);
}

TEST_CASE("polynomial detection examples") {
  std::vector<BigInt> constant(8, 8);
  PolyReport c = DetectPolynomial(constant, 1);
  REQUIRE(c.detected_degree);
  CHECK(*c.detected_degree == 0);
  CHECK(c.confirming_zeros == 7);
  CHECK(c.x_from == 1);
  CHECK(c.x_to == 8);

  std::vector<BigInt> w4;
  for (long v : {6400L, 25600L, 73984L, 173056L, 350464L, 640000L, 1081600L, 1721344L}) {
    w4.emplace_back(v);
  }
  PolyReport q = DetectPolynomial(w4, 1);
  REQUIRE(q.detected_degree);
  CHECK(*q.detected_degree == 4);
  CHECK(q.confirming_zeros == 3);
  CHECK(q.differences[0] == w4);
  CHECK(q.Caveat().find("not a proof") != std::string::npos);

  std::vector<BigInt> powers;
  for (int k = 0; k < 8; ++k) powers.emplace_back(BigInt(1) << k);
  PolyReport e = DetectPolynomial(powers);
  CHECK(!e.detected_degree);
  CHECK(e.confirming_zeros == 0);

  CHECK_THROWS_AS(DetectPolynomial(std::vector<BigInt>{1, 2}), Error);
}

TEST_CASE("random polynomials of degree <= 4 are recovered") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> coef(-50, 50), deg(0, 4), extra(0, 4);
  for (int trial = 0; trial < 300; ++trial) {
    int d = deg(rng);
    std::vector<long> a(d + 1);
    for (auto& c : a) c = coef(rng);
    if (a[d] == 0) a[d] = 1;
    int n = std::max(3, d + 2 + extra(rng));
    std::vector<BigInt> values;
    for (int x = 0; x < n; ++x) {
      BigInt v = 0;
      for (int k = d; k >= 0; --k) v = v * x + a[k];
      values.push_back(v);
    }
    PolyReport r = DetectPolynomial(values);
    REQUIRE(r.detected_degree);
    CHECK(*r.detected_degree == d);
    CHECK(r.confirming_zeros == n - d - 1);
    // The last populated difference row is constant k! * leading coefficient.
    BigInt lead = a[d];
    for (int k = 2; k <= d; ++k) lead *= k;
    for (const BigInt& v : r.differences[d]) CHECK(v == lead);
  }
}
