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

#ifndef MATCHCOUNT_BIGINT_HPP_
#define MATCHCOUNT_BIGINT_HPP_

#include <gmpxx.h>

#include <compare>
#include <string>

namespace matchcount {

using BigInt = mpz_class;

// Number of perfect matchings. Always nonnegative and exact.
class Count {
 public:
  Count() = default;
  explicit Count(BigInt value);
  explicit Count(unsigned long value) : value_(value) {}

  static Count FromDecimal(const std::string& text);

  const BigInt& value() const { return value_; }
  std::string ToString() const { return value_.get_str(); }
  bool IsZero() const { return value_ == 0; }

  friend bool operator==(const Count& a, const Count& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Count& a, const Count& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }
  friend Count operator+(const Count& a, const Count& b) {
    return Count(BigInt(a.value_ + b.value_));
  }
  friend Count operator*(const Count& a, const Count& b) {
    return Count(BigInt(a.value_ * b.value_));
  }

 private:
  BigInt value_ = 0;
};

// Reduced fraction with positive denominator.
class ExactRatio {
 public:
  ExactRatio(const BigInt& numerator, const BigInt& denominator);

  const BigInt& numerator() const { return numerator_; }
  const BigInt& denominator() const { return denominator_; }
  // "p/q"; integers are still written with "/1".
  std::string ToString() const;
  double ToDouble() const;

  friend bool operator==(const ExactRatio& a, const ExactRatio& b) {
    return a.numerator_ == b.numerator_ && a.denominator_ == b.denominator_;
  }

 private:
  BigInt numerator_;
  BigInt denominator_;
};

}  // namespace matchcount

#endif  // MATCHCOUNT_BIGINT_HPP_
