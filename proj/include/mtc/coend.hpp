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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mtc/diagram.hpp"

namespace mtc {

/**
 * The canonical coend L of H-mod: the dual space H* with the coadjoint
 * action (h.f)(a) = f(S(h1) a h2), together with its structure maps.
 *
 * Morphisms are plain matrices over the basis f^0..f^{n-1} of H*; L (x) L
 * uses index a * n + b. Fields are filled stage by stage.
 */
struct CoendData {
  const RepCat* cat = nullptr;
  Module carrier;
  std::size_t n = 0;
  /** iota_H o j for j(f) = f (x) 1; invertible for a valid coend. */
  Matrix witness;

  Matrix mu, eta, delta, eps, antipode, antipode_inv, omega, omega_bar;
  /** "diagram", or "convolution-inverse" when the twist-defined S fails. */
  std::string antipode_source;
  Matrix Lambda, lambda;
  Scalar zeta, D;
  Scalar Delta_plus, Delta_minus;
  Matrix T_transform, T_inv;
  Matrix kappa, kappa_copair;
  Matrix S_transform;
  /** Measured projective scalars of the SL(2,Z) action. */
  std::map<std::string, Scalar> sl2z;

  bool structure_done = false;
  bool integrals_done = false;
  bool st_done = false;

  /** iota_X : X* (x) X -> L, column a * dim X + b for xi^a (x) x_b. */
  Matrix iota(const Module& x) const;
};

/** Carrier, iota and the surjectivity witness. */
CoendData build_coend(const RepCat& cat);

/**
 * Solves mu, eta, Delta, eps, S, omega and omega_bar from their defining
 * diagrams at X = Y = H, then certifies dinaturality on simples and
 * projective covers and checks the braided Hopf axioms.
 */
Report solve_structure_morphisms(CoendData& cd);

/** The unique S with mu (S (x) id) Delta = eta eps, if any. */
std::optional<Matrix> antipode_by_convolution(const CoendData& cd);

/** Lambda, lambda, zeta, D, T and Delta+-. Needs the structure maps. */
Report integrals_and_zeta(CoendData& cd);

/** True iff the Hopf pairing has full rank. */
bool modularity_test(const CoendData& cd);

/** Radford pairing kappa = lambda o mu and its copairing (S (x) id) Delta Lambda. */
Report radford_pairing(CoendData& cd);

/** S-transformation, the relation S^2 = zeta S^-1 and the SL(2,Z) scalars. */
Report s_t_transforms(CoendData& cd);

/** delta_X = (id (x) iota_X)(coev_X (x) id) : X -> X (x) L. */
Matrix canonical_coaction(const CoendData& cd, const Module& x);
/** rho_X : X (x) L -> X, solved from the monodromy with X. */
Matrix canonical_action(const CoendData& cd, const Module& x);

struct Characters {
  Matrix chi;      // 1 x n
  Matrix cochi;    // n x 1
};
/** chi_X = left partial trace of rho_X; cochi_X = iota_X o coev~_X. */
Characters characters(const CoendData& cd, const Module& x);

struct Cutting {
  std::size_t m = 0;
  Matrix a, b, E;
};
/** E = (id (x) lambda) delta_X written as b o a through 1^m. */
Cutting cutting_decomposition(const CoendData& cd, const Module& x);

/**
 * Checks on an object: rho_X = (id (x) omega)(delta_X (x) id),
 * chi_X = omega (cochi_X (x) id), E = b o a and rho_X (id (x) Lambda) = zeta E.
 */
Report verify_object(const CoendData& cd, const Module& x, const std::string& label);

/** Simples and projective covers without repeats; the certificate objects. */
std::vector<Module> certificate_objects(const RepCat& cat);

}  // namespace mtc
