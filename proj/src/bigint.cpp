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

#include "matchcount/bigint.hpp"

#include <stdexcept>
#include <utility>

namespace matchcount {

Count::Count(BigInt value) : value_(std::move(value)) {
  if (value_ < 0) throw std::invalid_argument("Count must be nonnegative");
}

Count Count::FromDecimal(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("not a decimal count: '" + text + "'");
  }
  return Count(BigInt(text, 10));
}

ExactRatio::ExactRatio(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  mpq_class q(numerator, denominator);
  q.canonicalize();
  numerator_ = q.get_num();
  denominator_ = q.get_den();
}

std::string ExactRatio::ToString() const {
  return numerator_.get_str() + "/" + denominator_.get_str();
}

double ExactRatio::ToDouble() const {
  return mpq_class(numerator_, denominator_).get_d();
}

}  // namespace matchcount
