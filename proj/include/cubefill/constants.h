// Copyright 2026 The cubefill Authors
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

// Constants of the dimension-free filling bound and the two scalar
// inequalities its case analysis relies on.
//
// c_k = prod_{i=1..k} 1 / (2^{1/(i+1)} - 1), the slice-size threshold
// epsilon, the side-size factor delta = c_k (so L = delta / c_k = 1), and the
// window 1/(2 c_k) <= epsilon <= (k+1)^k / ((k+1)^k + (kL)^k) that every case
// of the recursion needs.

#ifndef CUBEFILL_CONSTANTS_H_
#define CUBEFILL_CONSTANTS_H_

namespace cubefill {

// Relative slack on every comparison against a bound with an irrational
// exponent.
inline constexpr double kBoundRelativeTolerance = 1e-9;

struct ConstantSet {
  int k = 0;
  double c = 0;
  double epsilon = 0;
  double delta = 0;
  double L = 0;
  double epsilon_lower = 0;
  double epsilon_upper = 0;
};

// c_k; c_0 = 1 (empty product). Throws std::invalid_argument for k < 0.
double FillingConstant(int k);

// Throws std::invalid_argument for k < 1 and std::logic_error if the epsilon
// window is empty at double precision.
ConstantSet ConstantsFor(int k);

// value <= bound up to kBoundRelativeTolerance.
bool WithinBound(double value, double bound);

// Implication check for: x + y = 1 and (x+p)^a + (y+p)^a >= 1 with
// a = (k+1)/k imply p >= (2^{1/(k+1)} - 1) min(x, y). Inputs where the
// hypothesis fails pass. `tolerance` is absolute slack on the conclusion.
// Throws std::invalid_argument on negative inputs, |x + y - 1| > 1e-12 or
// k < 1.
bool CheckTech1(double x, double y, double p, int k, double tolerance = 1e-12);

// Upper end of the admissible x range for CheckTech2:
// (e S / (e + L^k))^{(k-1)/k} with e = ((k+1)/k)^k.
double Tech2Range(double S, double L, int k);

// (S - x)^{(k+1)/k} + L x^{k/(k-1)} <= S^{(k+1)/k}, with `tolerance` relative
// slack on the right-hand side. Throws std::invalid_argument unless S > 0,
// L > 0, k >= 2 and 0 <= x <= min(S, Tech2Range(S, L, k)).
bool CheckTech2(double S, double x, double L, int k, double tolerance = 1e-12);

}  // namespace cubefill

#endif  // CUBEFILL_CONSTANTS_H_
