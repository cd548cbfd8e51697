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

#include <string>
#include <vector>

#include "mtc/coend.hpp"

namespace mtc {

/** A right L-module in H-mod: carrier object and action obj (x) L -> obj. */
struct LModule {
  std::string name;
  Module obj;
  Matrix action;
};

/** k (x) L with action id (x) mu. */
LModule free_lmodule(const CoendData& cd, const Module& k);
/** X (x) Xbar, L acting on the second factor by its canonical action. */
LModule product_lmodule(const CoendData& cd, const Module& x, const Module& xbar);
/** Associativity and unit of the action, and that it is an H-intertwiner. */
bool is_lmodule(const CoendData& cd, const LModule& m);
bool is_lmodule_map(const CoendData& cd, const LModule& a, const LModule& b, const Matrix& f);
/** delta^Lambda = (rho (x) id)(id (x) (S (x) id) Delta Lambda) : M -> M (x) L. */
Matrix lambda_coaction(const CoendData& cd, const LModule& m);

struct FieldContent {
  Module boundary;      // m* (x) n
  LModule bulk;         // L over itself
  LModule disorder;     // k (x) L
};
FieldContent field_content(const CoendData& cd, const Module& m, const Module& n, const Module& k);

/** phi(g) = rho_N (g (x) id) : k (x) L -> N. */
Matrix adjunction_phi(const CoendData& cd, const LModule& target, const Matrix& g);
/** psi(f) = D^-1 (f (x) id) delta^Lambda_M : M -> k (x) L. */
Matrix adjunction_psi(const CoendData& cd, const LModule& source, const Matrix& f);
/** F -> (id_k (x) lambda) F. */
Matrix adjunction_counit(const CoendData& cd, std::size_t k_dim, const Matrix& F);

/**
 * Checks for phi, psi and the counit at k against the given modules:
 * module maps, counit o psi = D^-1, phi(g)(id (x) eta) = g and both triangle
 * identities of forget -| (- (x) L).
 */
Report verify_adjunction(const CoendData& cd, const Module& k, const std::vector<LModule>& modules);

enum class Direction { Out, In };
/** out: cochi_n (n x 1); in: chi_n o S-transform (1 x n). */
Matrix boundary_state(const CoendData& cd, const Module& obj, Direction dir);
/** (chi_m S) cochi_n. Equals zeta lambda(annulus(m, n)). */
Scalar boundary_pairing(const CoendData& cd, const Module& m, const Module& n);

struct Annulus {
  Matrix open;    // cochi of m* (x) n
  Matrix closed;  // S-transform applied to it
};
Annulus annulus_amplitude(const CoendData& cd, const Module& m, const Module& n);

struct TorusPartition {
  /** C[u][v], the Cartan matrix. */
  std::vector<std::vector<long>> cartan;
  /** mult[u][v] = [L : S_{U*} (x) S_V] over H (x) mirror(H). */
  std::vector<std::vector<long>> multiplicity;
  /** Index of S_{U*} for each simple U. */
  std::vector<std::size_t> dual_index;
  long trace = 0;  // sum C dim S_U dim S_V
};
/**
 * Cartan matrix with its certificate from the carrier of L as a module over
 * tensor_hopf(H, mirror(H)). Throws InternalInconsistency on a mismatch.
 */
TorusPartition torus_partition(const CoendData& cd);
/** The coregular H (x) H-module on H*: (a (x) b) f = f(S(a) - b). */
Module coregular_bimodule(const CoendData& cd);

struct DefectOperator {
  std::string label;
  Matrix matrix;       // mu (cochi_D (x) id)
  Matrix alternative;  // ((chi_D S) (x) id) Delta_Lambda
  bool formulas_agree = false;
};
/** Frobenius coproduct (mu (x) id)(id (x) copair). */
Matrix frobenius_coproduct(const CoendData& cd);
/**
 * O_D by both formulas. A mismatch throws InternalInconsistency when the
 * coend antipode is the one of the twisted braiding; otherwise it is
 * recorded in formulas_agree.
 */
DefectOperator defect_operator(const CoendData& cd, const Module& d, const std::string& label = "D");

struct FusionAlgebra {
  std::vector<std::string> labels;
  /** N[i][j][k]: coefficient of b_k in b_i b_j. */
  std::vector<std::vector<std::vector<Scalar>>> constants;
  std::size_t unit = 0;
  std::size_t radical_dim = 0;
};
/** Dimension of the radical of the trace form of the regular representation. */
std::size_t trace_form_radical(const FusionAlgebra& a);
bool is_associative(const FusionAlgebra& a);
/** Product of two coordinate vectors. */
std::vector<Scalar> fusion_mul(const FusionAlgebra& a, const std::vector<Scalar>& x, const std::vector<Scalar>& y);

struct DefectAlgebra {
  FusionAlgebra algebra;
  std::vector<DefectOperator> operators;
  std::size_t span_dim = 0;
  bool matches_grothendieck = false;
  bool semisimple = false;        // trace-form radical is zero
  bool hopf_semisimple = false;   // Jacobson radical of H is zero
  /** Label of a simple whose O_S has a repeated root in its minimal polynomial, if any. */
  std::string non_diagonalisable;
};
/**
 * Defect operators of all simples, checked against the Grothendieck ring.
 * Throws InternalInconsistency on a dimension or structure-constant mismatch.
 */
DefectAlgebra defect_algebra(const CoendData& cd);
/** Composition law O_E O_D = O_{E (x) D} on all pairs of certificate objects. */
Report verify_defect_composition(const CoendData& cd);

/** The four-dimensional symplectic fermion algebra spanned by 1, P1, T, PT. */
FusionAlgebra sf_fusion_algebra(int N);

/** True if the polynomial (low to high) has a repeated root over the closure. */
bool has_repeated_root(const std::vector<Scalar>& p);

struct TwoPoint {
  /** D sum_alpha left_alpha (x) right_alpha, as a map X (x) Xbar -> Y (x) Ybar. */
  Matrix psi;
  /** phi(g) o psi(f). */
  Matrix composite;
  std::vector<Matrix> left, right;
  std::size_t m = 0;
  bool agree = false;
};
/**
 * Both sides of the two-point square for f : X (x) Xbar -> k and
 * g : k -> Y (x) Ybar. Throws InternalInconsistency when they differ.
 */
TwoPoint bulk_two_point(const CoendData& cd, const Module& x, const Module& xbar, const Module& y,
                        const Module& ybar, const Module& k, const Matrix& f, const Matrix& g);

}  // namespace mtc
