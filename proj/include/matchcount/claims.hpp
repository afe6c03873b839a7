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

#ifndef MATCHCOUNT_CLAIMS_HPP_
#define MATCHCOUNT_CLAIMS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "matchcount/bigint.hpp"
#include "matchcount/regions.hpp"

namespace matchcount {

enum class Verdict { kPass, kFail, kReportOnly };
const char* VerdictName(Verdict v);
// Process exit status for a verdict: 0 for PASS and REPORT_ONLY, 1 for FAIL.
int VerdictExitCode(Verdict v);

// One checked (or reported) quantity. `computed` and `expected` are JSON
// values with counts as decimal strings; `expected` is null for REPORT_ONLY
// claims and otherwise carries a "provenance" note.
struct ClaimReport {
  std::string claim_id;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  nlohmann::ordered_json computed = nlohmann::ordered_json::object();
  nlohmann::ordered_json expected;
  Verdict verdict = Verdict::kFail;
  std::int64_t runtime_ms = 0;
};

// Hexagon (2n-1, 2n-1, 2n, 2n-1, 2n-1, 2n): share of tilings using the
// central rhombus. PASS iff exactly 1/3. n in 1..3.
ClaimReport VerifyProblem1(int n);
// Negative control on the same hexagon: the edge nearest the center among
// those sharing no cell with the central rhombus (REPORT_ONLY).
ClaimReport VerifyProblem1OffCenter(int n);

// Transfer-matrix counts of the Aztec window for x = 1..x_to, cross-checked
// against the Kasteleyn count for x <= 3, then finite-difference detection.
// PASS iff the cross-check agrees and a finite degree is detected.
ClaimReport VerifyProblem14(int w, int x_to);

// f(n) = number of perfect matchings of the n-cube for n = 1..n_max (<= 5),
// by permanent, with brute force alongside for n <= 4.
// PASS iff the methods agree and f(n) = n (mod 2) throughout.
ClaimReport VerifyProblem19Parity(int n_max);

// Orbits of the n-cube's matchings under the group of the n coordinate
// reflections v -> v xor g.
struct OrbitDecomposition {
  std::vector<int> orbit_sizes;  // ascending
  int fixed_point_count = 0;
  bool fixed_points_all_parallel = true;
  BigInt total = 0;
};
OrbitDecomposition DecomposeHypercubeMatchings(int n);

// n <= 4. PASS iff exactly n fixed matchings, all parallel, and every other
// orbit has size 2^k with k >= 1.
ClaimReport VerifyProblem19Orbits(int n);

// REPORT_ONLY table of g(n) = f(n)^(2^(1-n)) beside n/e for n = 1..n_max
// (<= 5). FAIL only if g fails to increase by at least kTrendMargin.
inline constexpr double kTrendMargin = 1e-9;
ClaimReport VerifyProblem19Asymptotic(int n_max);

// Seeded corpus of small regions covering every kind.
std::vector<RegionSpec> RandomCorpus(std::uint64_t seed, int cases);

// Runs every applicable counting method (and the determinant identity for
// K K^T) on RandomCorpus(seed, cases). PASS iff all agree.
ClaimReport VerifyOracles(std::uint64_t seed, int cases);

// Report serialization. Counts stay decimal strings.
nlohmann::ordered_json ReportToJson(const ClaimReport& r, bool include_runtime = true);
std::string ReportToCsv(const std::vector<ClaimReport>& reports, bool include_runtime = true);

}  // namespace matchcount

#endif  // MATCHCOUNT_CLAIMS_HPP_
