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

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "mtc/algebra.hpp"
#include "mtc/report.hpp"

namespace mtc {

/**
 * Dense element of H^{(x)k}. The flat index is mixed radix in dim(H) with the
 * first tensor factor most significant.
 */
struct TensorElem {
  std::size_t n = 0;
  int order = 0;
  std::vector<Scalar> c;

  TensorElem() = default;
  TensorElem(std::size_t dim, int k);
  Scalar& at(std::size_t flat) { return c[flat]; }
  std::vector<std::size_t> split(std::size_t flat) const;
  std::size_t join(const std::vector<std::size_t>& idx) const;
  bool is_zero() const;
  friend bool operator==(const TensorElem& a, const TensorElem& b) {
    return a.n == b.n && a.order == b.order && a.c == b.c;
  }
};

struct Term2 {
  std::size_t i, j;
  Scalar c;
};
struct Term3 {
  std::size_t i, j, k;
  Scalar c;
};

/** Raw structure tensors, in the sparse layout of the algebra spec file. */
struct HopfData {
  std::string name;
  int cyclotomic_order = 1;
  std::vector<std::string> basis;
  std::vector<Term3> mult;      // e_i e_j = sum c e_k
  std::vector<std::pair<std::size_t, Scalar>> unit;
  std::vector<Term3> comult;    // Delta(e_i) = sum c e_j (x) e_k
  std::vector<std::pair<std::size_t, Scalar>> counit;
  std::vector<Term2> antipode;  // S(e_i) = sum c e_j
  std::vector<Term2> rmatrix;   // R = sum c e_i (x) e_j
  std::optional<std::vector<std::pair<std::size_t, Scalar>>> ribbon;
};

/**
 * A finite-dimensional quasitriangular Hopf algebra with optional ribbon
 * element. The twist of a module acts by v^-1 and the braiding by flip o R.
 */
class HopfAlgebra {
 public:
  HopfAlgebra() = default;
  explicit HopfAlgebra(const HopfData& data);

  HopfData data() const;
  const std::string& name() const { return name_; }
  int cyclotomic_order() const { return order_; }
  std::size_t dim() const { return n_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const Algebra& algebra() const { return alg_; }

  Elem basis(std::size_t i) const { return alg_.basis(i); }
  const Elem& one() const { return alg_.unit(); }
  Elem mul(const Elem& a, const Elem& b) const { return alg_.mul(a, b); }
  TensorElem comul(const Elem& a) const;
  const std::vector<std::tuple<std::size_t, std::size_t, Scalar>>& comul_basis(std::size_t i) const {
    return comult_[i];
  }
  Scalar counit(const Elem& a) const;
  const Elem& counit_vector() const { return counit_; }
  Elem antipode(const Elem& a) const;
  Elem antipode_inv(const Elem& a) const;
  const Matrix& antipode_matrix() const { return s_; }
  std::optional<Elem> inverse(const Elem& a) const { return alg_.inverse(a); }

  const TensorElem& R() const { return r_; }
  /** R^-1 = (S (x) id) R. */
  const TensorElem& R_inv() const { return r_inv_; }
  /** Drinfeld element u = sum S(R2) R1. */
  const Elem& drinfeld_u() const { return u_; }

  bool has_ribbon() const { return ribbon_.has_value(); }
  const Elem& ribbon() const;
  const Elem& ribbon_inv() const;
  /** Pivot g = u v^-1. */
  const Elem& pivot() const;
  const Elem& pivot_inv() const;
  HopfAlgebra with_ribbon(const Elem& v) const;
  HopfAlgebra with_name(std::string name) const;

  // Tensor-power operations.
  TensorElem tensor_mul(const TensorElem& a, const TensorElem& b) const;
  /** Applies Delta to factor p; the order grows by one. */
  TensorElem comul_at(const TensorElem& t, int p) const;
  /** Applies a linear map, given by its matrix, to factor p. */
  TensorElem apply_at(const TensorElem& t, int p, const Matrix& m) const;
  /** Inserts the unit as a new factor at position p. */
  TensorElem insert_unit(const TensorElem& t, int p) const;
  /** Reorders factors: factor q of the result is factor perm[q] of t. */
  TensorElem permute(const TensorElem& t, const std::vector<int>& perm) const;
  TensorElem pure(const std::vector<Elem>& factors) const;

 private:
  void derive();

  std::string name_;
  int order_ = 1;
  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  Algebra alg_;
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, Scalar>>> comult_;
  Elem counit_;
  Matrix s_, s_inv_;
  TensorElem r_, r_inv_;
  Elem u_;
  std::optional<Elem> ribbon_;
  Elem v_inv_, g_, g_inv_;
};

Report verify_hopf_axioms(const HopfAlgebra& h);
Report verify_quasitriangular(const HopfAlgebra& h);
Report verify_ribbon(const HopfAlgebra& h);

/** D(H) on the basis f^i (x) e_j, index i * dim + j, with R = sum (1 (x) e_i) (x) (f^i (x) 1). */
HopfAlgebra drinfeld_double(const HopfAlgebra& h);
/** All ribbon elements, ordered lexicographically by coordinates. */
std::vector<Elem> solve_ribbon(const HopfAlgebra& h);
/**
 * Central invertible v with eps(v) = 1 and Delta(v) R21 R = v (x) v, without
 * requiring S(v) = v. Contains solve_ribbon(h).
 */
std::vector<Elem> solve_balancing(const HopfAlgebra& h);
/** Grouplike elements of H, as characters of the dual algebra. */
std::vector<Elem> grouplikes(const HopfAlgebra& h);
/** Same Hopf structure with R -> R21^-1 and v -> v^-1. */
HopfAlgebra mirror(const HopfAlgebra& h);
HopfAlgebra tensor_hopf(const HopfAlgebra& h, const HopfAlgebra& k);
/** The dual algebra H* on the dual basis. */
Algebra dual_algebra(const HopfAlgebra& h);

class UnknownBuiltin : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Presets: trivial, group_algebra (param n), sweedler, double_group_algebra
 * (param n), double_z2, double_sweedler. Configures the scalar field.
 */
HopfAlgebra builtin(const std::string& name, const std::vector<std::pair<std::string, long>>& params = {});
std::vector<std::string> builtin_names();

}  // namespace mtc
