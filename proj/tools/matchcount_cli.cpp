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

// matchcount: count perfect matchings of lattice regions and run the claim
// checks. Exit status: 0 PASS or REPORT_ONLY, 1 FAIL, 2 usage or input error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "matchcount/claims.hpp"
#include "matchcount/count.hpp"
#include "matchcount/error.hpp"
#include "matchcount/kasteleyn.hpp"
#include "matchcount/region_spec.hpp"
#include "matchcount/regions.hpp"
#include "matchcount/spectra.hpp"
#include "matchcount/transfer.hpp"

namespace {

using matchcount::Error;
using matchcount::ErrorCode;
using ojson = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitUsage = 2;

struct Output {
  std::string format;
  std::string path;

  void Write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::kMalformedInput, "cannot write '" + path + "'");
    out << text;
  }
};

std::string KeyValueCsv(const ojson& obj) {
  std::ostringstream out;
  out << "key,value\n";
  for (const auto& [key, value] : obj.items()) {
    std::string v = value.is_string() ? value.get<std::string>() : value.dump();
    std::string quoted = "\"";
    for (char c : v) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    out << key << ',' << quoted << "\"\n";
  }
  return out.str();
}

int EmitObject(const ojson& obj, const Output& out, const std::string& text) {
  if (out.format == "json") {
    out.Write(obj.dump(2) + "\n");
  } else if (out.format == "csv") {
    out.Write(KeyValueCsv(obj));
  } else {
    out.Write(text + "\n");
  }
  return kExitPass;
}

int RunCount(const std::string& region_path, const std::string& method, const Output& out) {
  matchcount::RegionSpec spec = matchcount::LoadRegionSpec(region_path);
  matchcount::MatchGraph g = matchcount::BuildRegion(spec);
  matchcount::Count count;
  if (method == "transfer") {
    count = matchcount::TransferCount(spec);
  } else {
    count = matchcount::CountMatchings(g, matchcount::ParseMethod(method));
  }
  ojson obj;
  obj["region"] = matchcount::RegionSpecToJson(spec);
  obj["method"] = method;
  obj["vertices"] = g.VertexCount();
  obj["count"] = count.ToString();
  if (g.HasBipartition() && !g.IsBalanced()) obj["note"] = "imbalanced bipartition; no matching";
  return EmitObject(obj, out, count.ToString());
}

// Parses "a,b[,o]" into a label.
matchcount::Label ParseLabel(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (parts.size() < 2 || parts.size() > 3) {
    throw Error(ErrorCode::kMalformedInput, "cell '" + text + "' must be x,y[,up|down]");
  }
  matchcount::Label l{0, 0, 0};
  try {
    l[0] = std::stoi(parts[0]);
    l[1] = std::stoi(parts[1]);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kMalformedInput, "cell '" + text + "' has non-integer coordinates");
  }
  if (parts.size() == 3) {
    if (parts[2] != "up" && parts[2] != "down") {
      throw Error(ErrorCode::kMalformedInput, "orientation must be up or down");
    }
    l[2] = parts[2] == "up" ? 0 : 1;
  }
  return l;
}

matchcount::Edge ParseEdgeSelector(const matchcount::MatchGraph& g, const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw Error(ErrorCode::kMalformedInput,
                "edge selector must be 'central', 'center-touching' or CELL:CELL");
  }
  auto a = g.FindVertex(ParseLabel(text.substr(0, colon)));
  auto b = g.FindVertex(ParseLabel(text.substr(colon + 1)));
  if (!a || !b || !g.HasEdge(*a, *b)) {
    throw Error(ErrorCode::kNotAnEdge, "'" + text + "' does not name an edge of the region");
  }
  return matchcount::MakeEdge(*a, *b);
}

int RunRatio(const std::string& region_path, const std::string& selector, const Output& out) {
  matchcount::RegionSpec spec = matchcount::LoadRegionSpec(region_path);
  matchcount::MatchGraph g = matchcount::BuildRegion(spec);
  std::vector<std::pair<matchcount::Edge, std::optional<bool>>> edges;
  if (selector == "central" || selector == "center-touching") {
    if (spec.kind != matchcount::RegionKind::kHexagon) {
      throw Error(ErrorCode::kInvalidParameters, "'" + selector + "' applies to hexagons only");
    }
    if (selector == "central") {
      edges.push_back({matchcount::CentralRhombusEdge(g, spec.sides), std::nullopt});
    } else {
      for (const auto& c : matchcount::CenterTouchingEdges(g, spec.sides)) {
        edges.push_back({c.edge, c.symmetric});
      }
    }
  } else {
    edges.push_back({ParseEdgeSelector(g, selector), std::nullopt});
  }
  matchcount::Count total = matchcount::CountMatchings(g);
  ojson obj;
  obj["region"] = matchcount::RegionSpecToJson(spec);
  obj["total_count"] = total.ToString();
  ojson list = ojson::array();
  std::string text;
  for (const auto& [e, symmetric] : edges) {
    matchcount::Count forced = matchcount::CountWithForcedEdge(g, e);
    ojson row;
    row["edge"] = {matchcount::Describe(g, e.u), matchcount::Describe(g, e.v)};
    if (symmetric) row["symmetric_about_axis"] = *symmetric;
    row["forced_count"] = forced.ToString();
    std::string ratio = total.IsZero()
                            ? "undefined"
                            : matchcount::ExactRatio(forced.value(), total.value()).ToString();
    row["ratio"] = ratio;
    text += (text.empty() ? "" : "\n") + ratio;
    list.push_back(row);
  }
  if (total.IsZero()) {
    throw Error(ErrorCode::kZeroCount, "containment ratio undefined: region has no matching");
  }
  obj["edges"] = list;
  return EmitObject(obj, out, text);
}

int RunSpectrum(const std::string& region_path, int root, const Output& out) {
  matchcount::RegionSpec spec = matchcount::LoadRegionSpec(region_path);
  matchcount::MatchGraph g = matchcount::BuildRegion(spec);
  matchcount::SignedMatrix k = matchcount::KasteleynMatrix(g, root);
  matchcount::CharPoly p = matchcount::KKStarCharPoly(k);
  std::vector<double> sv = matchcount::SingularValues(k);
  matchcount::Count count = matchcount::CountKasteleyn(g, root);
  double log_product = 0;
  for (double s : sv) log_product += std::log(s);
  ojson obj;
  obj["region"] = matchcount::RegionSpecToJson(spec);
  obj["dimension"] = k.entries.rows();
  obj["count"] = count.ToString();
  ojson coeffs = ojson::array();
  for (const auto& c : p.coefficients) coeffs.push_back(c.get_str());
  obj["charpoly"] = coeffs;
  obj["constant_term_is_count_squared"] =
      abs(p.coefficients.front()) == count.value() * count.value();
  obj["singular_values"] = sv;
  obj["singular_value_product"] = sv.empty() ? 1.0 : std::exp(log_product);
  return EmitObject(obj, out, obj.dump(2));
}

struct VerifyArgs {
  std::string claim;
  int n = 1;
  int w = 2;
  int x_to = 8;
  int n_max = 5;
  std::uint64_t seed = 1;
  int cases = 50;
  bool control = false;
};

int RunVerify(const VerifyArgs& a, const Output& out) {
  matchcount::ClaimReport r;
  if (a.claim == "problem1") {
    r = a.control ? matchcount::VerifyProblem1OffCenter(a.n) : matchcount::VerifyProblem1(a.n);
  } else if (a.claim == "problem14") {
    r = matchcount::VerifyProblem14(a.w, a.x_to);
  } else if (a.claim == "problem19-parity") {
    r = matchcount::VerifyProblem19Parity(a.n_max);
  } else if (a.claim == "problem19-orbits") {
    r = matchcount::VerifyProblem19Orbits(a.n);
  } else if (a.claim == "problem19-asymptotic") {
    r = matchcount::VerifyProblem19Asymptotic(a.n_max);
  } else if (a.claim == "oracles") {
    r = matchcount::VerifyOracles(a.seed, a.cases);
  } else {
    throw Error(ErrorCode::kMalformedInput, "unknown claim '" + a.claim + "'");
  }
  if (out.format == "csv") {
    out.Write(matchcount::ReportToCsv({r}));
  } else {
    out.Write(matchcount::ReportToJson(r).dump(2) + "\n");
  }
  return matchcount::VerdictExitCode(r.verdict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact perfect-matching counts for lattice regions"};
  app.require_subcommand(1);

  Output out;
  std::string region, method = "auto", selector = "central";
  int root = 0;
  VerifyArgs verify;

  auto add_output = [&](CLI::App* cmd, const std::string& default_format) {
    out.format = default_format;
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", out.path, "Write output to PATH instead of stdout");
  };

  CLI::App* count = app.add_subcommand("count", "Count perfect matchings of a region");
  count->add_option("--region", region, "Region JSON file")->required();
  count->add_option("--method", method, "Counting method")
      ->check(CLI::IsMember({"auto", "brute", "kasteleyn", "permanent", "transfer"}));

  CLI::App* ratio = app.add_subcommand("ratio", "Share of matchings containing an edge");
  ratio->add_option("--region", region, "Region JSON file")->required();
  ratio->add_option("--edge", selector,
                    "central | center-touching | CELL:CELL with CELL = x,y[,up|down]");

  CLI::App* spectrum = app.add_subcommand("spectrum", "Kasteleyn matrix spectrum");
  spectrum->add_option("--region", region, "Region JSON file")->required();
  spectrum->add_option("--root", root, "Spanning-tree root for the orientation");

  CLI::App* check = app.add_subcommand("verify", "Run a claim check");
  check->add_option("--claim", verify.claim, "Claim id")
      ->required()
      ->check(CLI::IsMember({"problem1", "problem14", "problem19-parity", "problem19-orbits",
                             "problem19-asymptotic", "oracles"}));
  check->add_option("--n", verify.n, "n for problem1 / problem19-orbits");
  check->add_option("--w", verify.w, "Window width for problem14");
  check->add_option("--x-to", verify.x_to, "Last inner order for problem14");
  check->add_option("--n-max", verify.n_max, "Largest cube dimension for problem19 checks");
  check->add_option("--seed", verify.seed, "Corpus seed for oracles");
  check->add_option("--cases", verify.cases, "Corpus size for oracles");
  check->add_flag("--control", verify.control, "problem1: use an off-center edge");

  for (CLI::App* cmd : {count, ratio}) add_output(cmd, "text");
  for (CLI::App* cmd : {spectrum, check}) add_output(cmd, "json");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (count->parsed()) {
      if (count->count("--format") == 0) out.format = "text";
      return RunCount(region, method, out);
    }
    if (ratio->parsed()) {
      if (ratio->count("--format") == 0) out.format = "text";
      return RunRatio(region, selector, out);
    }
    if (spectrum->parsed()) {
      if (spectrum->count("--format") == 0) out.format = "json";
      return RunSpectrum(region, root, out);
    }
    if (check->parsed()) {
      if (check->count("--format") == 0) out.format = "json";
      return RunVerify(verify, out);
    }
  } catch (const Error& e) {
    std::cerr << "error[" << matchcount::ErrorCodeName(e.code()) << "]: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error[internal]: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
