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

#include "matchcount/polynomial.hpp"

#include <algorithm>
#include <string>

#include "matchcount/error.hpp"

namespace matchcount {

std::string PolyReport::Caveat() const {
  std::string window = "x=" + std::to_string(x_from) + ".." + std::to_string(x_to);
  if (!detected_degree) {
    return "no vanishing differences on " + window;
  }
  return "degree " + std::to_string(*detected_degree) + " on " + window + " (" +
         std::to_string(confirming_zeros) +
         " vanishing differences); windowed evidence, not a proof of polynomiality";
}

PolyReport DetectPolynomial(std::span<const BigInt> values, int x_from) {
  if (values.size() < 3) {
    throw Error(ErrorCode::kInvalidParameters,
                "polynomial detection needs at least 3 samples, got " +
                    std::to_string(values.size()));
  }
  PolyReport report;
  report.x_from = x_from;
  report.x_to = x_from + static_cast<int>(values.size()) - 1;
  report.values.assign(values.begin(), values.end());
  report.differences.push_back(report.values);
  while (report.differences.back().size() > 1) {
    const auto& prev = report.differences.back();
    std::vector<BigInt> next;
    for (std::size_t k = 0; k + 1 < prev.size(); ++k) next.push_back(prev[k + 1] - prev[k]);
    report.differences.push_back(std::move(next));
  }
  const int n = static_cast<int>(values.size());
  for (int d = 0; d <= n - 2; ++d) {
    const auto& row = report.differences[d + 1];
    if (std::all_of(row.begin(), row.end(), [](const BigInt& v) { return v == 0; })) {
      report.detected_degree = d;
      report.confirming_zeros = static_cast<int>(row.size());
      break;
    }
  }
  return report;
}

}  // namespace matchcount
