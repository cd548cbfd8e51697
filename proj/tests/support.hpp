// Copyright 2026 The mtc Authors
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

#pragma once

#include <random>
#include <vector>

#include "mtc/matrix.hpp"

namespace mtc::testing {

// Small random field element: integer combination of z^j with a small
// denominator, so products stay readable when a check fails.
inline Scalar random_scalar(std::mt19937& rng, bool allow_zero = true) {
  std::uniform_int_distribution<int> coef(-3, 3), den(1, 3), zero(0, 4);
  if (allow_zero && zero(rng) == 0) return Scalar();
  Scalar s;
  for (int j = 0; j < Field::degree(); ++j)
    s += Scalar(Rational(coef(rng), den(rng))) * Scalar::root_of_unity(j);
  if (!allow_zero && s.is_zero()) s = Scalar(1);
  return s;
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(rng);
  return m;
}

}  // namespace mtc::testing
