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

#ifndef MATCHCOUNT_SPECTRA_HPP_
#define MATCHCOUNT_SPECTRA_HPP_

#include <vector>

#include "matchcount/bigint.hpp"
#include "matchcount/kasteleyn.hpp"
#include "matchcount/matrix.hpp"

namespace matchcount {

// Coefficients of det(lambda*I - A), constant term first; monic.
struct CharPoly {
  std::vector<BigInt> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  BigInt Evaluate(const BigInt& lambda) const;
  // Roots of a PSD matrix's characteristic polynomial are all >= 0 exactly
  // when the coefficients alternate in sign (zeros allowed).
  bool HasAlternatingSigns() const;
};

// K * K^T for a signed biadjacency matrix.
IntMatrix GramMatrix(const IntMatrix& k);

// Faddeev-LeVerrier recurrence. The trace divisions are exact for integer
// input; a non-exact division throws std::logic_error.
CharPoly CharacteristicPolynomial(const IntMatrix& a);
CharPoly KKStarCharPoly(const SignedMatrix& k);

inline constexpr double kJacobiTolerance = 1e-12;

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sweeping
// until the off-diagonal Frobenius norm falls below tolerance * ||A||_F.
// Returned in descending order.
std::vector<double> SymmetricEigenvalues(std::vector<std::vector<double>> a,
                                         double tolerance = kJacobiTolerance);

// Square roots of the eigenvalues of K K^T, descending.
std::vector<double> SingularValues(const SignedMatrix& k);

}  // namespace matchcount

#endif  // MATCHCOUNT_SPECTRA_HPP_
