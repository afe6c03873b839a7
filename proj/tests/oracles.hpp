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

// Independent reference computations used only by the tests. None of these
// call into the counting, determinant or sweep code they check.

#ifndef MATCHCOUNT_TESTS_ORACLES_HPP_
#define MATCHCOUNT_TESTS_ORACLES_HPP_

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "matchcount/graph.hpp"

namespace oracle {

// Matching count by always matching the lowest-index uncovered vertex.
inline mpz_class CountMatchingsNaive(const matchcount::MatchGraph& g) {
  const int n = g.VertexCount();
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self) -> mpz_class {
    int v = 0;
    while (v < n && used[v]) ++v;
    if (v == n) return 1;
    mpz_class total = 0;
    used[v] = 1;
    for (int w : g.Neighbors(v)) {
      if (used[w]) continue;
      used[w] = 1;
      total += self(self);
      used[w] = 0;
    }
    used[v] = 0;
    return total;
  };
  return rec(rec);
}

// All perfect matchings as sorted edge lists, lowest-index-first search.
inline std::vector<std::vector<matchcount::Edge>> ListMatchings(const matchcount::MatchGraph& g) {
  const int n = g.VertexCount();
  std::vector<char> used(n, 0);
  std::vector<matchcount::Edge> cur;
  std::vector<std::vector<matchcount::Edge>> out;
  auto rec = [&](auto&& self) -> void {
    int v = 0;
    while (v < n && used[v]) ++v;
    if (v == n) {
      auto m = cur;
      std::sort(m.begin(), m.end());
      out.push_back(m);
      return;
    }
    used[v] = 1;
    for (int w : g.Neighbors(v)) {
      if (used[w]) continue;
      used[w] = 1;
      cur.push_back(matchcount::MakeEdge(v, w));
      self(self);
      cur.pop_back();
      used[w] = 0;
    }
    used[v] = 0;
  };
  rec(rec);
  return out;
}

using Matrix = std::vector<std::vector<mpz_class>>;

// Determinant by Gaussian elimination over the rationals.
inline mpz_class DeterminantRational(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
  }
  mpq_class det = 1;
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (int i = k + 1; i < n; ++i) {
      mpq_class f = m[i][k] / m[k][k];
      for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det.get_num();
}

// Permanent by expansion along the first row.
inline mpz_class PermanentExpansion(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int row) -> mpz_class {
    if (row == n) return 1;
    mpz_class total = 0;
    for (int c = 0; c < n; ++c) {
      if (used[c] || a[row][c] == 0) continue;
      used[c] = 1;
      total += a[row][c] * self(self, row + 1);
      used[c] = 0;
    }
    return total;
  };
  return rec(rec, 0);
}

// Lattice-hexagon area in unit triangles: the big triangle on sides
// s6+s1+s2 minus the three corner triangles of sides s2, s4, s6.
inline int HexagonArea(const std::array<int, 6>& s) {
  int t = s[5] + s[0] + s[1];
  return t * t - s[1] * s[1] - s[3] * s[3] - s[5] * s[5];
}

// Cells of the order-n Aztec diamond by the row profile 2, 4, ..., 2n, 2n, ..., 2.
inline int AztecDiamondArea(int n) {
  int total = 0;
  for (int k = 1; k <= n; ++k) total += 2 * (2 * k);
  return total;
}

// Characteristic polynomial det(t I - A) at integer t, by rational elimination.
inline mpz_class CharPolyAt(const Matrix& a, long t) {
  Matrix m = a;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) m[i][j] = (i == j ? t : 0) - a[i][j];
  }
  return DeterminantRational(m);
}

}  // namespace oracle

#endif  // MATCHCOUNT_TESTS_ORACLES_HPP_
