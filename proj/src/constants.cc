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

#include "cubefill/constants.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cubefill {
namespace {

double SplitFactor(int i) { return std::exp2(1.0 / (i + 1)) - 1.0; }

}  // namespace

double FillingConstant(int k) {
  if (k < 0) throw std::invalid_argument("filling constant needs k >= 0");
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c /= SplitFactor(i);
  return c;
}

ConstantSet ConstantsFor(int k) {
  if (k < 1) throw std::invalid_argument("constants need k >= 1");
  ConstantSet s;
  s.k = k;
  s.c = FillingConstant(k);
  s.delta = FillingConstant(k - 1) / SplitFactor(k);
  s.L = s.delta / s.c;
  const double top = std::pow(k + 1.0, k);
  s.epsilon_lower = 1.0 / (2.0 * s.c);
  s.epsilon_upper = top / (top + std::pow(k * s.L, k));
  if (!(s.epsilon_lower <= s.epsilon_upper)) {
    throw std::logic_error("empty epsilon window at k=" + std::to_string(k));
  }
  s.epsilon = s.epsilon_upper;
  return s;
}

bool WithinBound(double value, double bound) {
  return value <= bound * (1.0 + kBoundRelativeTolerance);
}

bool CheckTech1(double x, double y, double p, int k, double tolerance) {
  if (k < 1) throw std::invalid_argument("tech1 needs k >= 1");
  if (x < 0 || y < 0 || p < 0) {
    throw std::invalid_argument("tech1 inputs must be non-negative");
  }
  if (std::abs(x + y - 1.0) > 1e-12) {
    throw std::invalid_argument("tech1 needs x + y = 1");
  }
  const double a = (k + 1.0) / k;
  const bool hypothesis = std::pow(x + p, a) + std::pow(y + p, a) >= 1.0;
  if (!hypothesis) return true;
  return p >= SplitFactor(k) * std::min(x, y) - tolerance;
}

double Tech2Range(double S, double L, int k) {
  const double e = std::pow((k + 1.0) / k, k);
  return std::pow(e * S / (e + std::pow(L, k)), (k - 1.0) / k);
}

bool CheckTech2(double S, double x, double L, int k, double tolerance) {
  if (k < 2) throw std::invalid_argument("tech2 needs k >= 2");
  if (!(S > 0) || !(L > 0)) {
    throw std::invalid_argument("tech2 needs S > 0 and L > 0");
  }
  const double hi = std::min(S, Tech2Range(S, L, k));
  if (!(x >= 0) || x > hi * (1.0 + 1e-12)) {
    throw std::invalid_argument("tech2 x outside [0, min(S, range)]");
  }
  x = std::min(x, S);
  const double lhs =
      std::pow(S - x, (k + 1.0) / k) + L * std::pow(x, k / (k - 1.0));
  return lhs <= std::pow(S, (k + 1.0) / k) * (1.0 + tolerance);
}

}  // namespace cubefill
