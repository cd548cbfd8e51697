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

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mtc/hopf.hpp"

namespace mtc {

/** Finite-dimensional module: one action matrix per basis element of the algebra. */
struct Module {
  std::string name;
  std::size_t dim = 0;
  std::vector<Matrix> action;

  /** Action of an arbitrary element given by coordinates. */
  Matrix act(const Elem& a) const;
};

class NonSplit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SimplesData {
  std::vector<Module> simples;
  std::vector<Module> projective_covers;
  /** Primitive idempotent of the algebra with P_i = A e_i. */
  std::vector<Elem> idempotents;
  /** C[u][v] = dim Hom(P_v, P_u). */
  std::vector<std::vector<long>> cartan;
  /** Basis of the Jacobson radical, as columns. */
  Matrix radical;
};

/** True if the matrices respect the multiplication and unit of the algebra. */
bool is_module(const Algebra& a, const Module& m);
/** Greedy subset of basis indices generating the algebra. */
std::vector<std::size_t> algebra_generators(const Algebra& a);
/** Jacobson radical as the radical of the trace form of the regular representation. */
Matrix jacobson_radical(const Algebra& a);
/**
 * Simples, projective covers and Cartan matrix of a split algebra, simples
 * sorted by (dimension, character vector).
 */
SimplesData compute_simples(const Algebra& a);

Module submodule(const Module& m, const Matrix& basis);
Module quotient_module(const Module& m, const Matrix& sub_basis);
Module direct_sum(const Module& x, const Module& y);
/** Character values tr rho(e_i). */
Elem character(const Module& m);

/**
 * H-mod with its rigid, braided and ribbon structure. Left duals use S;
 * the right duality maps use the pivot g = u v^-1.
 */
class RepCat {
 public:
  explicit RepCat(HopfAlgebra h);

  const HopfAlgebra& hopf() const { return h_; }
  const Algebra& algebra() const { return h_.algebra(); }
  const std::vector<std::size_t>& generators() const { return gens_; }

  Module unit_object() const;
  Module regular() const;
  Module tensor(const Module& x, const Module& y) const;
  Module dual(const Module& x) const;

  /** ev_X : X* (x) X -> 1. */
  Matrix ev(const Module& x) const;
  /** coev_X : 1 -> X (x) X*. */
  Matrix coev(const Module& x) const;
  /** ev~_X : X (x) X* -> 1, x (x) xi -> xi(g x). */
  Matrix evt(const Module& x) const;
  /** coev~_X : 1 -> X* (x) X, sum x^i (x) g^-1 x_i. */
  Matrix coevt(const Module& x) const;
  /** beta_{X,Y} = flip o R : X (x) Y -> Y (x) X. */
  Matrix braid(const Module& x, const Module& y) const;
  /** Inverse of braid(x, y), a map Y (x) X -> X (x) Y. */
  Matrix braid_inv(const Module& x, const Module& y) const;
  /** theta_X = action of v^-1. */
  Matrix twist(const Module& x) const;
  Matrix twist_inv(const Module& x) const;

  bool is_intertwiner(const Module& x, const Module& y, const Matrix& f) const;
  /** Basis of Hom(X, Y) as cod.dim x dom.dim matrices. */
  std::vector<Matrix> hom_basis(const Module& x, const Module& y) const;

  const SimplesData& simples() const;
  /** [X : S_i] by the radical filtration. */
  std::vector<long> composition_factors(const Module& x) const;
  /** [X : S_i] by the socle filtration. */
  std::vector<long> composition_factors_socle(const Module& x) const;
  /** [X : S_i] as rank rho_X(e_i). */
  std::vector<long> composition_factors_idempotent(const Module& x) const;
  /** Index of the simple isomorphic to the simple module m. */
  std::size_t simple_index(const Module& m) const;
  /** N[i][j][k] = [S_i (x) S_j : S_k]. */
  std::vector<std::vector<std::vector<long>>> grothendieck_ring() const;

 private:
  HopfAlgebra h_;
  std::vector<std::size_t> gens_;
  mutable std::once_flag simples_once_;
  mutable std::shared_ptr<SimplesData> simples_;
};

/** Multiplicities of the layers of a filtration, via characters of the simples. */
std::vector<long> decompose_semisimple(const Module& layer, const SimplesData& sd);
/** Radical of a module: J M. */
Matrix module_radical(const Module& m, const Matrix& radical);
/** Socle of a module: vectors killed by J. */
Matrix module_socle(const Module& m, const Matrix& radical);

}  // namespace mtc
