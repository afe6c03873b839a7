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

#ifndef MATCHCOUNT_MATRIX_HPP_
#define MATCHCOUNT_MATRIX_HPP_

#include <vector>

#include "matchcount/bigint.hpp"

namespace matchcount {

// Dense row-major matrix of exact integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix Identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& operator()(int r, int c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(int r, int c) const { return data_[r * cols_ + c]; }

  IntMatrix Transpose() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> data_;
};

// Fraction-free Gaussian elimination with row pivoting; every intermediate
// division is exact. The 0x0 determinant is 1.
BigInt BareissDeterminant(IntMatrix m);

}  // namespace matchcount

#endif  // MATCHCOUNT_MATRIX_HPP_
