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

#ifndef MATCHCOUNT_POLYNOMIAL_HPP_
#define MATCHCOUNT_POLYNOMIAL_HPP_

#include <optional>
#include <span>
#include <vector>

#include "matchcount/bigint.hpp"

namespace matchcount {

// Finite-difference evidence for polynomial behavior of a sampled sequence.
// The detected degree describes this window only.
struct PolyReport {
  int x_from = 0;
  int x_to = 0;
  std::vector<BigInt> values;
  // differences[k] holds the k-th differences; differences[0] == values.
  std::vector<std::vector<BigInt>> differences;
  // Least d <= size-2 whose (d+1)-th differences all vanish.
  std::optional<int> detected_degree;
  // Number of vanishing entries backing the detected degree (0 if none).
  int confirming_zeros = 0;

  std::string Caveat() const;
};

// Requires at least 3 values; values[k] is the sample at x_from + k.
PolyReport DetectPolynomial(std::span<const BigInt> values, int x_from = 0);

}  // namespace matchcount

#endif  // MATCHCOUNT_POLYNOMIAL_HPP_
