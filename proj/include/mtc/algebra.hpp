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

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mtc/matrix.hpp"

namespace mtc {

/** Coordinates of an element in a fixed basis. */
using Elem = std::vector<Scalar>;

/** Finite-dimensional associative unital algebra given by structure constants. */
class Algebra {
 public:
  using Row = std::vector<std::pair<std::uint32_t, Scalar>>;

  Algebra() = default;
  /** products[i * n + j] lists the nonzero coordinates of e_i e_j. */
  Algebra(std::size_t n, std::vector<Row> products, Elem unit);

  std::size_t dim() const { return n_; }
  const Row& product(std::size_t i, std::size_t j) const { return products_[i * n_ + j]; }
  const Elem& unit() const { return unit_; }
  Elem basis(std::size_t i) const;
  Elem zero() const { return Elem(n_); }

  Elem mul(const Elem& a, const Elem& b) const;
  /** Matrix of y -> x y. */
  Matrix left_mult(const Elem& x) const;
  /** Matrix of y -> y x. */
  Matrix right_mult(const Elem& x) const;
  std::optional<Elem> inverse(const Elem& x) const;
  bool is_central(const Elem& x) const;
  /** Structure constants of the opposite algebra. */
  Algebra opposite() const;
  /** The algebra A (x) B on the basis (i, j) -> i * dim B + j. */
  static Algebra tensor(const Algebra& a, const Algebra& b);

 private:
  std::size_t n_ = 0;
  std::vector<Row> products_;
  Elem unit_;
};

Elem add(const Elem& a, const Elem& b);
Elem sub(const Elem& a, const Elem& b);
Elem scale(const Elem& a, const Scalar& s);
bool is_zero(const Elem& a);

/**
 * Algebra homomorphisms A -> k with values in the scalar field, as value
 * vectors chi(e_i), in lexicographic order of those vectors.
 */
std::vector<Elem> algebra_characters(const Algebra& a);

}  // namespace mtc
