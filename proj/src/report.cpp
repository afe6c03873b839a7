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

#include <sstream>

#include "matchcount/claims.hpp"

namespace matchcount {

namespace {

std::string CsvField(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

int VerdictExitCode(Verdict v) { return v == Verdict::kFail ? 1 : 0; }

nlohmann::ordered_json ReportToJson(const ClaimReport& r, bool include_runtime) {
  nlohmann::ordered_json j;
  j["claim_id"] = r.claim_id;
  j["parameters"] = r.parameters;
  j["computed"] = r.computed;
  j["expected"] = r.expected;
  j["verdict"] = VerdictName(r.verdict);
  j["runtime_ms"] = include_runtime ? r.runtime_ms : 0;
  return j;
}

std::string ReportToCsv(const std::vector<ClaimReport>& reports, bool include_runtime) {
  std::ostringstream out;
  out << "claim_id,parameters,computed,expected,verdict,runtime_ms\n";
  for (const ClaimReport& r : reports) {
    out << CsvField(r.claim_id) << ',' << CsvField(r.parameters.dump()) << ','
        << CsvField(r.computed.dump()) << ',' << CsvField(r.expected.dump()) << ','
        << VerdictName(r.verdict) << ',' << (include_runtime ? r.runtime_ms : 0) << '\n';
  }
  return out.str();
}

}  // namespace matchcount
