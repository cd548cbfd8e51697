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

// Reference counts for the torus partition function and the defect algebra.
// The Cartan entry [P_u : S_v] equals dim e_v H e_u for primitive idempotents;
// here that dimension is a rank over the raw multiplication table.

#include <vector>

#include "mtc/matrix.hpp"
#include "oracles/hopf_raw.hpp"

namespace mtc::oracle {

// dim e_v H e_u for every pair of idempotents, C[u][v].
inline std::vector<std::vector<long>> cartan_by_corners(const RawHopf& h, const std::vector<Vec>& idem) {
  const std::size_t s = idem.size(), n = h.n;
  std::vector<std::vector<long>> c(s, std::vector<long>(s));
  for (std::size_t u = 0; u < s; ++u)
    for (std::size_t v = 0; v < s; ++v) {
      Matrix span(n, n);
      for (std::size_t x = 0; x < n; ++x) {
        Vec w = h.mul(h.mul(idem[v], h.basis(x)), idem[u]);
        for (std::size_t k = 0; k < n; ++k) span(k, x) = w[k];
      }
      c[u][v] = static_cast<long>(rank(span));
    }
  return c;
}

// Rank of the Gram matrix tr(A_a A_b) of a family of commuting operators.
// Over characteristic zero its defect is the dimension of the nilradical of
// the algebra they span, when the family is a basis.
inline std::size_t operator_trace_form_defect(const std::vector<Matrix>& ops) {
  const std::size_t s = ops.size();
  Matrix g(s, s);
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b) g(a, b) = (ops[a] * ops[b]).trace();
  return s - rank(g);
}

}  // namespace mtc::oracle
