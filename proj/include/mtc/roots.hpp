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

#include <vector>

#include "mtc/scalar.hpp"

namespace mtc {

/** Polynomial over the scalar field, coefficients from low to high degree. */
using Poly = std::vector<Scalar>;

void poly_trim(Poly& p);
int poly_degree(const Poly& p);  // -1 for the zero polynomial
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_derivative(const Poly& p);
/** Quotient and remainder; b must be nonzero. */
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
/** Monic gcd. */
Poly poly_gcd(Poly a, Poly b);
bool poly_is_squarefree(const Poly& p);
Scalar poly_eval(const Poly& p, const Scalar& x);

/**
 * Distinct roots of p lying in Q(z), ordered by Scalar::compare.
 * Coefficients must lie in the base field. Roots are located numerically in
 * every complex embedding and accepted only after exact verification.
 */
std::vector<Scalar> roots_in_field(const Poly& p);

}  // namespace mtc
