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

#include "matchcount/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace matchcount {

BigInt CharPoly::Evaluate(const BigInt& lambda) const {
  BigInt acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * lambda + *it;
  return acc;
}

bool CharPoly::HasAlternatingSigns() const {
  // For p(t) = prod (t - r_i) with r_i >= 0, coefficient of t^k has sign
  // (-1)^(n-k) or is zero.
  const int n = degree();
  for (int k = 0; k <= n; ++k) {
    int s = sgn(coefficients[k]);
    if (s == 0) continue;
    int expected = (n - k) % 2 == 0 ? 1 : -1;
    if (s != expected) return false;
  }
  return true;
}

IntMatrix GramMatrix(const IntMatrix& k) { return k * k.Transpose(); }

CharPoly CharacteristicPolynomial(const IntMatrix& a) {
  const int n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  CharPoly p;
  p.coefficients.assign(n + 1, 0);
  p.coefficients[n] = 1;
  // M_1 = I; c_{n-k} = -tr(A M_k) / k; M_{k+1} = A M_k + c_{n-k} I.
  IntMatrix m = IntMatrix::Identity(n);
  for (int k = 1; k <= n; ++k) {
    IntMatrix am = a * m;
    BigInt trace = 0;
    for (int i = 0; i < n; ++i) trace += am(i, i);
    if (!mpz_divisible_ui_p(trace.get_mpz_t(), static_cast<unsigned long>(k))) {
      throw std::logic_error("Faddeev-LeVerrier: inexact division");
    }
    BigInt c = -trace / k;
    p.coefficients[n - k] = c;
    for (int i = 0; i < n; ++i) am(i, i) += c;
    m = std::move(am);
  }
  return p;
}

CharPoly KKStarCharPoly(const SignedMatrix& k) {
  return CharacteristicPolynomial(GramMatrix(k.entries));
}

std::vector<double> SymmetricEigenvalues(std::vector<std::vector<double>> a, double tolerance) {
  const int n = static_cast<int>(a.size());
  auto off_norm = [&] {
    double s = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) s += a[i][j] * a[i][j];
      }
    }
    return std::sqrt(s);
  };
  double scale = 0;
  for (const auto& row : a) {
    for (double v : row) scale += v * v;
  }
  scale = std::sqrt(scale);
  for (int sweep = 0; sweep < 100 && off_norm() > tolerance * std::max(scale, 1.0); ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a[i][i];
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

std::vector<double> SingularValues(const SignedMatrix& k) {
  IntMatrix gram = GramMatrix(k.entries);
  const int n = gram.rows();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = gram(i, j).get_d();
  }
  std::vector<double> out;
  for (double e : SymmetricEigenvalues(std::move(a))) out.push_back(std::sqrt(std::max(e, 0.0)));
  return out;
}

}  // namespace matchcount
