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

#include "matchcount/claims.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "matchcount/count.hpp"
#include "matchcount/error.hpp"
#include "matchcount/kasteleyn.hpp"
#include "matchcount/polynomial.hpp"
#include "matchcount/region_spec.hpp"
#include "matchcount/spectra.hpp"
#include "matchcount/transfer.hpp"

namespace matchcount {

using ojson = nlohmann::ordered_json;

namespace {

class Stopwatch {
 public:
  std::int64_t ElapsedMs() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void RequireRange(const char* name, int value, int lo, int hi) {
  if (value < lo || value > hi) {
    throw Error(ErrorCode::kSizeBound, std::string(name) + " must be in " + std::to_string(lo) +
                                           ".." + std::to_string(hi) + ", got " +
                                           std::to_string(value));
  }
}

HexSides Problem1Sides(int n) {
  const int a = 2 * n - 1, b = 2 * n;
  return HexSides{{a, a, b, a, a, b}};
}

ojson EdgeJson(const MatchGraph& g, const Edge& e) {
  return ojson::array({Describe(g, e.u), Describe(g, e.v)});
}

std::vector<Count> HypercubeCounts(int n_max) {
  std::vector<Count> f;
  for (int n = 1; n <= n_max; ++n) f.push_back(CountPermanent(BuildHypercube(n)));
  return f;
}

int Uniform(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

const char* VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "PASS";
    case Verdict::kFail: return "FAIL";
    case Verdict::kReportOnly: return "REPORT_ONLY";
  }
  return "UNKNOWN";
}

ClaimReport VerifyProblem1(int n) {
  RequireRange("n", n, 1, 3);
  Stopwatch clock;
  ClaimReport r;
  r.claim_id = "problem1";
  r.parameters["n"] = n;
  HexSides sides = Problem1Sides(n);
  MatchGraph g = BuildHexagon(sides);
  Edge e = CentralRhombusEdge(g, sides);
  Count forced = CountWithForcedEdge(g, e);
  Count total = CountMatchings(g);
  ExactRatio ratio(forced.value(), total.value());
  r.computed["sides"] = sides.s;
  r.computed["edge"] = EdgeJson(g, e);
  r.computed["forced_count"] = forced.ToString();
  r.computed["total_count"] = total.ToString();
  r.computed["ratio"] = ratio.ToString();
  r.expected = {{"ratio", "1/3"}, {"provenance", "one-third claim for a=2n-1, b=2n"}};
  r.verdict = ratio == ExactRatio(1, 3) ? Verdict::kPass : Verdict::kFail;
  r.runtime_ms = clock.ElapsedMs();
  return r;
}

ClaimReport VerifyProblem1OffCenter(int n) {
  RequireRange("n", n, 1, 3);
  Stopwatch clock;
  ClaimReport r;
  r.claim_id = "problem1";
  r.parameters["n"] = n;
  r.parameters["edge"] = "off-center";
  HexSides sides = Problem1Sides(n);
  MatchGraph g = BuildHexagon(sides);
  std::array<std::int64_t, 2> center6{0, 0};
  for (const auto& p : sides.Corners()) {
    center6[0] += p[0];
    center6[1] += p[1];
  }
  // Control edge: the one nearest the center among edges sharing no cell
  // with the central rhombus (ties broken by edge order).
  const Edge central = CentralRhombusEdge(g, sides);
  const auto& pos = g.positions();
  Edge control = g.edges().front();
  std::int64_t best = -1;
  for (const Edge& e : g.edges()) {
    if (e.u == central.u || e.u == central.v || e.v == central.u || e.v == central.v) continue;
    std::int64_t du = pos[e.u].x + pos[e.v].x - center6[0];
    std::int64_t dv = pos[e.u].y + pos[e.v].y - center6[1];
    std::int64_t d = du * du + du * dv + dv * dv;
    if (best < 0 || d < best) {
      best = d;
      control = e;
    }
  }
  ExactRatio ratio = ContainmentRatio(g, control);
  r.computed["sides"] = sides.s;
  r.computed["edge"] = EdgeJson(g, control);
  r.computed["ratio"] = ratio.ToString();
  r.computed["differs_from_one_third"] = !(ratio == ExactRatio(1, 3));
  r.expected = nullptr;
  r.verdict = Verdict::kReportOnly;
  r.runtime_ms = clock.ElapsedMs();
  return r;
}

ClaimReport VerifyProblem14(int w, int x_to) {
  RequireRange("w", w, 1, 6);
  if (x_to < 3) {
    throw Error(ErrorCode::kInvalidParameters,
                "x_to must be >= 3 for finite-difference detection, got " + std::to_string(x_to));
  }
  RequireRange("x_to", x_to, 3, 40);
  Stopwatch clock;
  ClaimReport r;
  r.claim_id = "problem14";
  r.parameters["w"] = w;
  r.parameters["x_from"] = 1;
  r.parameters["x_to"] = x_to;

  std::vector<Count> counts = CountSequence(w, 1, x_to);
  ojson counts_json = ojson::array();
  std::vector<BigInt> values;
  for (const Count& c : counts) {
    counts_json.push_back(c.ToString());
    values.push_back(c.value());
  }
  bool cross_ok = true;
  ojson cross = ojson::array();
  for (int x = 1; x <= std::min(3, x_to); ++x) {
    Count k = CountKasteleyn(BuildAztecWindow(x, w));
    bool same = k == counts[x - 1];
    cross_ok = cross_ok && same;
    cross.push_back({{"x", x},
                     {"transfer", counts[x - 1].ToString()},
                     {"kasteleyn", k.ToString()},
                     {"agree", same}});
  }
  PolyReport poly = DetectPolynomial(values, 1);
  ojson table = ojson::array();
  for (const auto& row : poly.differences) {
    ojson jr = ojson::array();
    for (const BigInt& v : row) jr.push_back(v.get_str());
    table.push_back(jr);
  }
  r.computed["counts"] = counts_json;
  r.computed["kasteleyn_check"] = cross;
  r.computed["detected_degree"] = poly.detected_degree ? ojson(*poly.detected_degree) : ojson(nullptr);
  r.computed["confirming_zeros"] = poly.confirming_zeros;
  r.computed["differences"] = table;
  r.computed["caveat"] = poly.Caveat();
  // Earliest suffix of the window on which a degree is backed by at least
  // two vanishing differences.
  ojson eventual = nullptr;
  for (int start = 0; start + 3 <= static_cast<int>(values.size()); ++start) {
    PolyReport tail = DetectPolynomial(std::span(values).subspan(start), 1 + start);
    if (tail.detected_degree && tail.confirming_zeros >= 2) {
      eventual = {{"from_x", 1 + start}, {"degree", *tail.detected_degree}};
      break;
    }
  }
  r.computed["eventual_degree"] = eventual;
  const bool has_zero =
      std::any_of(counts.begin(), counts.end(), [](const Count& c) { return c.IsZero(); });
  r.expected = {{"finite_degree", true},
                {"kasteleyn_agreement", true},
                {"provenance", "count is a polynomial in x for each fixed w"}};
  if (!cross_ok) {
    r.verdict = Verdict::kFail;
  } else if (poly.detected_degree) {
    r.verdict = Verdict::kPass;
  } else if (has_zero) {
    // Untileable windows are data, not a counterexample.
    r.computed["note"] = "window contains zero counts; tileability is not part of the claim";
    r.verdict = Verdict::kReportOnly;
  } else {
    r.verdict = Verdict::kFail;
  }
  r.runtime_ms = clock.ElapsedMs();
  return r;
}

ClaimReport VerifyProblem19Parity(int n_max) {
  RequireRange("n_max", n_max, 1, 5);
  Stopwatch clock;
  ClaimReport r;
  r.claim_id = "problem19-parity";
  r.parameters["n_max"] = n_max;
  std::vector<Count> f = HypercubeCounts(n_max);
  bool ok = true;
  ojson rows = ojson::array();
  for (int n = 1; n <= n_max; ++n) {
    const Count& fn = f[n - 1];
    bool parity = mpz_odd_p(fn.value().get_mpz_t()) == (n % 2 == 1);
    ojson row = {{"n", n}, {"f", fn.ToString()}, {"parity_matches", parity}};
    if (n <= 4) {
      Count brute = CountBrute(BuildHypercube(n));
      row["brute"] = brute.ToString();
      row["methods_agree"] = brute == fn;
      ok = ok && brute == fn;
    }
    ok = ok && parity;
    rows.push_back(row);
  }
  r.computed["rows"] = rows;
  r.expected = {{"parity", "f(n) = n (mod 2)"}, {"provenance", "same parity as n"}};
  r.verdict = ok ? Verdict::kPass : Verdict::kFail;
  r.runtime_ms = clock.ElapsedMs();
  return r;
}

OrbitDecomposition DecomposeHypercubeMatchings(int n) {
  RequireRange("n", n, 1, 4);
  MatchGraph cube = BuildHypercube(n);
  std::set<Matching> all;
  EnumerateMatchings(cube, [&](const Matching& m) { all.insert(m); });
  OrbitDecomposition out;
  out.total = static_cast<unsigned long>(all.size());
  std::set<Matching> seen;
  for (const Matching& m : all) {
    if (seen.count(m)) continue;
    std::set<Matching> orbit;
    for (int g = 0; g < (1 << n); ++g) {
      Matching image;
      for (const Edge& e : m) image.push_back(MakeEdge(e.u ^ g, e.v ^ g));
      std::sort(image.begin(), image.end());
      orbit.insert(std::move(image));
    }
    seen.insert(orbit.begin(), orbit.end());
    out.orbit_sizes.push_back(static_cast<int>(orbit.size()));
    if (orbit.size() == 1) {
      ++out.fixed_point_count;
      const int dir = m.front().u ^ m.front().v;
      for (const Edge& e : m) {
        if ((e.u ^ e.v) != dir) out.fixed_points_all_parallel = false;
      }
    }
  }
  std::sort(out.orbit_sizes.begin(), out.orbit_sizes.end());
  return out;
}

ClaimReport VerifyProblem19Orbits(int n) {
  RequireRange("n", n, 1, 4);
  Stopwatch clock;
  ClaimReport r;
  r.claim_id = "problem19-orbits";
  r.parameters["n"] = n;
  OrbitDecomposition d = DecomposeHypercubeMatchings(n);
  long sum = 0;
  bool sizes_ok = true;
  for (int s : d.orbit_sizes) {
    sum += s;
    bool power_of_two = (s & (s - 1)) == 0;
    if (s != 1 && !(power_of_two && s >= 2)) sizes_ok = false;
  }
  r.computed["total"] = d.total.get_str();
  r.computed["fixed_point_count"] = d.fixed_point_count;
  r.computed["fixed_points_all_parallel"] = d.fixed_points_all_parallel;
  r.computed["orbit_sizes"] = d.orbit_sizes;
  r.computed["orbit_size_sum"] = std::to_string(sum);
  r.expected = {{"fixed_point_count", n},
                {"fixed_points_all_parallel", true},
                {"other_orbits", "powers of 2, at least 2"},
                {"provenance", "all-parallel matchings are the only fixed points"}};
  bool ok = d.fixed_point_count == n && d.fixed_points_all_parallel && sizes_ok &&
            BigInt(sum) == d.total;
  r.verdict = ok ? Verdict::kPass : Verdict::kFail;
  r.runtime_ms = clock.ElapsedMs();
  return r;
}

ClaimReport VerifyProblem19Asymptotic(int n_max) {
  RequireRange("n_max", n_max, 1, 5);
  Stopwatch clock;
  ClaimReport r;
  r.claim_id = "problem19-asymptotic";
  r.parameters["n_max"] = n_max;
  std::vector<Count> f = HypercubeCounts(n_max);
  ojson rows = ojson::array();
  bool increasing = true;
  double previous = 0;
  for (int n = 1; n <= n_max; ++n) {
    double g = std::exp(std::log(f[n - 1].value().get_d()) / std::ldexp(1.0, n - 1));
    if (n > 1 && !(g - previous >= kTrendMargin)) increasing = false;
    previous = g;
    rows.push_back({{"n", n},
                    {"f", f[n - 1].ToString()},
                    {"g", g},
                    {"n_over_e", n / std::numbers::e}});
  }
  r.computed["rows"] = rows;
  r.computed["strictly_increasing"] = increasing;
  r.computed["note"] = "limit behavior is not checkable at this scale";
  r.expected = nullptr;
  r.verdict = increasing ? Verdict::kReportOnly : Verdict::kFail;
  r.runtime_ms = clock.ElapsedMs();
  return r;
}

std::vector<RegionSpec> RandomCorpus(std::uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  std::vector<RegionSpec> out;
  for (int k = 0; k < cases; ++k) {
    RegionSpec spec;
    switch (k % 5) {
      case 0: {
        spec.kind = RegionKind::kHexagon;
        if (k == 0) {
          // One hole in a balanced hexagon: no matching at all.
          spec.sides = HexSides{{2, 2, 2, 2, 2, 2}};
          auto cells = HexagonCells(spec.sides);
          spec.holes.push_back(cells[Uniform(rng, 0, static_cast<int>(cells.size()) - 1)]);
          break;
        }
        std::vector<TriCell> cells;
        while (cells.empty()) {
          int s1 = Uniform(rng, 0, 3), s2 = Uniform(rng, 0, 3), s3 = Uniform(rng, 0, 3);
          int t = Uniform(rng, -3, 3);
          spec.sides = HexSides{{s1, s2, s3, s1 - t, s2 + t, s3 - t}};
          if (spec.sides.IsClosed() && s1 - t <= 3 && s2 + t <= 3 && s3 - t <= 3) cells = HexagonCells(spec.sides);
        }
        int holes = std::min(Uniform(rng, 0, 2), static_cast<int>(cells.size()));
        std::set<TriCell> chosen;
        while (static_cast<int>(chosen.size()) < holes) {
          chosen.insert(cells[Uniform(rng, 0, static_cast<int>(cells.size()) - 1)]);
        }
        spec.holes.assign(chosen.begin(), chosen.end());
        break;
      }
      case 1:
        spec.kind = RegionKind::kAztecDiamond;
        spec.n = Uniform(rng, 1, 3);
        break;
      case 2: {
        spec.kind = RegionKind::kAztecRectangle;
        spec.a = Uniform(rng, 1, 3);
        spec.b = Uniform(rng, spec.a, 3);
        std::vector<SquareCell> majority;
        const int color = AztecRectangleMajorityColor(spec.a, spec.b);
        for (const SquareCell& c : AztecRectangleCells(spec.a, spec.b)) {
          if (((c.i + c.j) % 2 + 2) % 2 == color) majority.push_back(c);
        }
        std::set<SquareCell> chosen;
        while (static_cast<int>(chosen.size()) < spec.b - spec.a) {
          chosen.insert(majority[Uniform(rng, 0, static_cast<int>(majority.size()) - 1)]);
        }
        spec.removed.assign(chosen.begin(), chosen.end());
        break;
      }
      case 3:
        spec.kind = RegionKind::kAztecWindow;
        spec.x = Uniform(rng, 1, 2);
        spec.w = Uniform(rng, 1, 3 - spec.x);
        break;
      case 4:
        spec.kind = RegionKind::kHypercube;
        spec.n = Uniform(rng, 1, 4);
        break;
    }
    out.push_back(std::move(spec));
  }
  return out;
}

ClaimReport VerifyOracles(std::uint64_t seed, int cases) {
  if (cases < 1) throw Error(ErrorCode::kInvalidParameters, "cases must be >= 1");
  Stopwatch clock;
  ClaimReport r;
  r.claim_id = "oracles";
  r.parameters["seed"] = std::to_string(seed);
  r.parameters["cases"] = cases;
  bool all_ok = true;
  ojson rows = ojson::array();
  for (const RegionSpec& spec : RandomCorpus(seed, cases)) {
    MatchGraph g = BuildRegion(spec);
    ojson row;
    row["region"] = RegionSpecToJson(spec);
    row["vertices"] = g.VertexCount();
    std::vector<Count> results;
    Count brute = CountBrute(g);
    results.push_back(brute);
    row["brute"] = brute.ToString();
    if (g.HasEmbedding()) {
      Count k = CountKasteleyn(g);
      results.push_back(k);
      row["kasteleyn"] = k.ToString();
    }
    if (g.HasBipartition() && g.VertexCount() / 2 <= kMaxPermanentClass) {
      Count p = CountMatchings(g, Method::kPermanent);
      results.push_back(p);
      row["permanent"] = p.ToString();
    }
    if (spec.kind == RegionKind::kAztecWindow) {
      Count t = TransferCount(spec);
      results.push_back(t);
      row["transfer"] = t.ToString();
    }
    bool agree = true;
    for (const Count& c : results) agree = agree && c == brute;
    if (g.HasEmbedding() && g.IsBalanced() && g.VertexCount() / 2 <= 30) {
      CharPoly p = KKStarCharPoly(KasteleynMatrix(g));
      BigInt constant = abs(p.coefficients.front());
      row["charpoly_constant"] = constant.get_str();
      agree = agree && constant == brute.value() * brute.value();
    }
    row["agree"] = agree;
    all_ok = all_ok && agree;
    rows.push_back(row);
  }
  r.computed["regions"] = rows;
  r.computed["all_agree"] = all_ok;
  r.expected = {{"all_agree", true}, {"provenance", "independent counting methods must agree"}};
  r.verdict = all_ok ? Verdict::kPass : Verdict::kFail;
  r.runtime_ms = clock.ElapsedMs();
  return r;
}

}  // namespace matchcount
