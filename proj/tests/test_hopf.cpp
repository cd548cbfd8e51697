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

#include <catch_amalgamated.hpp>

#include "mtc/hopf.hpp"
#include "mtc/repcat.hpp"
#include "oracles/hopf_raw.hpp"

using mtc::Elem;
using mtc::HopfAlgebra;
using mtc::Matrix;
using mtc::Scalar;
using mtc::oracle::RawHopf;

namespace {

bool all_pass(const mtc::Report& r) {
  for (const auto& c : r.checks())
    if (c.status != mtc::Status::Pass) {
      UNSCOPED_INFO(c.name << ": " << c.detail);
      return false;
    }
  return true;
}

const mtc::Check& check_named(const mtc::Report& r, const std::string& name) {
  const auto* c = r.find(name);
  REQUIRE(c != nullptr);
  return *c;
}

// Sweedler's algebra written out by hand from g^2 = 1, x^2 = 0, xg = -gx on
// the words g^a x^b, index a + 2b.
struct SweedlerWords {
  static int sign_and_index(int a1, int b1, int a2, int b2, int& idx) {
    // g^a1 x^b1 g^a2 x^b2 = (-1)^(b1 a2) g^(a1+a2) x^(b1+b2)
    if (b1 + b2 > 1) return 0;
    idx = (a1 + a2) % 2 + 2 * (b1 + b2);
    return (b1 * a2) % 2 ? -1 : 1;
  }
};

}  // namespace

TEST_CASE("group algebra of Z/2 matches the hand multiplication table", "[hopf]") {
  HopfAlgebra h = mtc::builtin("group_algebra", {{"n", 2}});
  REQUIRE(h.dim() == 2);
  RawHopf raw(h.data());
  // e = 1, g: e e = e, e g = g e = g, g g = e.
  const int table[2][2] = {{0, 1}, {1, 0}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        CHECK(raw.mult[i * 2 + j][k] == Scalar(table[i][j] == k ? 1 : 0));
  CHECK(raw.comult[1][3] == Scalar(1));
  CHECK(raw.antipode[1][1] == Scalar(1));
  CHECK(all_pass(mtc::verify_hopf_axioms(h)));
  CHECK(all_pass(mtc::verify_quasitriangular(h)));
  CHECK(all_pass(mtc::verify_ribbon(h)));
}

TEST_CASE("Sweedler tables agree with the symbolic expansion", "[hopf]") {
  HopfAlgebra h = mtc::builtin("sweedler");
  REQUIRE(h.dim() == 4);
  RawHopf raw(h.data());
  for (int w1 = 0; w1 < 4; ++w1)
    for (int w2 = 0; w2 < 4; ++w2) {
      int idx = -1;
      int sgn = SweedlerWords::sign_and_index(w1 % 2, w1 / 2, w2 % 2, w2 / 2, idx);
      for (int k = 0; k < 4; ++k)
        CHECK(raw.mult[w1 * 4 + w2][k] == Scalar(sgn != 0 && k == idx ? sgn : 0));
    }
  // Delta(g) = g (x) g, Delta(x) = x (x) 1 + g (x) x and multiplicativity for gx.
  using V = mtc::oracle::Vec;
  V g = raw.basis(1), x = raw.basis(2), one = raw.basis(0);
  auto plus = [](mtc::oracle::Vec2 a, const mtc::oracle::Vec2& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };
  auto dg = raw.outer(g, g);
  auto dx = plus(raw.outer(x, one), raw.outer(g, x));
  CHECK(raw.comult[1] == dg);
  CHECK(raw.comult[2] == dx);
  CHECK(raw.comult[3] == raw.mul2(dg, dx));
  CHECK(all_pass(mtc::verify_hopf_axioms(h)));
  CHECK(all_pass(mtc::verify_quasitriangular(h)));
}

TEST_CASE("replacing the antipode by the identity breaks the antipode axiom", "[hopf]") {
  HopfAlgebra h = mtc::builtin("sweedler");
  mtc::HopfData d = h.data();
  d.antipode.clear();
  for (std::size_t i = 0; i < 4; ++i) d.antipode.push_back({i, i, Scalar(1)});
  mtc::Report r = mtc::verify_hopf_axioms(HopfAlgebra(d));
  CHECK(check_named(r, "antipode").status == mtc::Status::Fail);
  CHECK_FALSE(check_named(r, "antipode").detail.empty());
  CHECK(check_named(r, "associativity").status == mtc::Status::Pass);
}

TEST_CASE("every builtin passes the Hopf and quasitriangular verifiers", "[hopf]") {
  for (const auto& name : mtc::builtin_names()) {
    INFO(name);
    HopfAlgebra h = mtc::builtin(name);
    CHECK(all_pass(mtc::verify_hopf_axioms(h)));
    CHECK(all_pass(mtc::verify_quasitriangular(h)));
    if (h.has_ribbon()) CHECK(all_pass(mtc::verify_ribbon(h)));
    // u S(u) is central.
    const Elem& u = h.drinfeld_u();
    CHECK(h.algebra().is_central(h.mul(u, h.antipode(u))));
  }
}

TEST_CASE("double of k[Z/2] matches the direct table construction", "[hopf][double]") {
  HopfAlgebra d = mtc::builtin("double_z2");
  REQUIRE(d.dim() == 4);
  CHECK_FALSE(d.has_ribbon());
  RawHopf raw(d.data());
  // For abelian G, (delta_a (x) b)(delta_c (x) d) = [a == c] delta_a (x) bd
  // on the basis index a * 2 + b.
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int e = 0; e < 2; ++e)
          for (int k = 0; k < 4; ++k) {
            int expect = (a == c && k == a * 2 + (b + e) % 2) ? 1 : 0;
            CHECK(raw.mult[(a * 2 + b) * 4 + (c * 2 + e)][k] == Scalar(expect));
          }
  // Commutative and cocommutative.
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(raw.comult[i] == raw.flip(raw.comult[i]));
    for (std::size_t j = 0; j < 4; ++j) CHECK(raw.mult[i * 4 + j] == raw.mult[j * 4 + i]);
  }
}

TEST_CASE("doubles have squared dimension and pass all verifiers", "[hopf][double]") {
  for (const auto& base : {"group_algebra", "sweedler"}) {
    HopfAlgebra h = mtc::builtin(base);
    HopfAlgebra d = mtc::drinfeld_double(h);
    CHECK(d.dim() == h.dim() * h.dim());
    CHECK(all_pass(mtc::verify_hopf_axioms(d)));
    CHECK(all_pass(mtc::verify_quasitriangular(d)));
  }
  CHECK(mtc::builtin("double_sweedler").dim() == 16);
}

TEST_CASE("ribbon elements of the double of k[Z/2] match exhaustive search", "[hopf][ribbon]") {
  HopfAlgebra d = mtc::builtin("double_z2");
  RawHopf raw(d.data());
  // Exhaustive search over coordinates in {-1, 0, 1} on the 4-dim algebra,
  // which is its own center.
  std::vector<Elem> found;
  for (int code = 0; code < 81; ++code) {
    Elem v(4);
    for (int k = 0, c = code; k < 4; ++k, c /= 3) v[k] = Scalar(c % 3 - 1);
    if (raw.ribbon(v)) found.push_back(v);
  }
  auto solved = mtc::solve_ribbon(d);
  REQUIRE_FALSE(solved.empty());
  CHECK(solved.size() == found.size());
  for (const auto& v : solved) {
    CHECK(std::find(found.begin(), found.end(), v) != found.end());
    HopfAlgebra r = d.with_ribbon(v);
    CHECK(all_pass(mtc::verify_ribbon(r)));
    // Twist eigenvalues on the four 1-dim simples are +-1.
    mtc::RepCat cat(r);
    for (const auto& s : cat.simples().simples) {
      Scalar t = cat.twist(s)(0, 0);
      CHECK((t == Scalar(1) || t == Scalar(-1)));
    }
    // The pivot is grouplike.
    const Elem& g = r.pivot();
    CHECK(r.comul(g) == r.pure({g, g}));
  }
}

TEST_CASE("group algebra with trivial R has v = 1 among its ribbon elements", "[hopf][ribbon]") {
  HopfAlgebra h = mtc::builtin("group_algebra", {{"n", 2}});
  auto solved = mtc::solve_ribbon(h);
  CHECK(std::find(solved.begin(), solved.end(), h.one()) != solved.end());
  RawHopf raw(h.data());
  for (const auto& v : solved) CHECK(raw.ribbon(v));
}

TEST_CASE("the double of Sweedler's algebra admits no ribbon element", "[hopf][ribbon]") {
  HopfAlgebra d = mtc::builtin("double_sweedler");
  CHECK(mtc::solve_ribbon(d).empty());
  RawHopf raw(d.data());
  auto lin = mtc::oracle::ribbon_linearisation(raw);
  INFO("affine parameters: " << lin.params);
  CHECK(lin.params <= 4);
  CHECK((lin.affine_empty || !lin.linear_consistent));
  // It is balanced: the relaxed enumeration finds twists that are not
  // self-dual, each failing only the S(v) = v identity.
  auto balanced = mtc::solve_balancing(d);
  CHECK(balanced.size() == 2);
  for (const auto& v : balanced) {
    mtc::Report r = mtc::verify_ribbon(d.with_ribbon(v));
    for (const auto& c : r.checks())
      CHECK((c.status == mtc::Status::Pass) == (c.name != "ribbon_antipode"));
  }
}

TEST_CASE("linearisation oracle agrees with the solver where ribbon elements exist", "[hopf][ribbon]") {
  for (const auto& name : {"group_algebra", "sweedler", "double_z2"}) {
    INFO(name);
    HopfAlgebra h = mtc::builtin(name);
    auto lin = mtc::oracle::ribbon_linearisation(RawHopf(h.data()));
    CHECK_FALSE(lin.affine_empty);
    CHECK(lin.linear_consistent);
    CHECK_FALSE(mtc::solve_ribbon(h).empty());
  }
}

TEST_CASE("mirror is an involution", "[hopf][mirror]") {
  HopfAlgebra z2 = mtc::builtin("group_algebra", {{"n", 2}});
  auto same = [](const HopfAlgebra& a, const HopfAlgebra& b) {
    return a.R() == b.R() && a.ribbon() == b.ribbon() && a.dim() == b.dim();
  };
  CHECK(same(mtc::mirror(z2), z2));
  HopfAlgebra d = mtc::builtin("double_z2");
  for (const auto& v : mtc::solve_ribbon(d)) {
    HopfAlgebra r = d.with_ribbon(v);
    HopfAlgebra m = mtc::mirror(r);
    CHECK(all_pass(mtc::verify_quasitriangular(m)));
    CHECK(all_pass(mtc::verify_ribbon(m)));
    CHECK(same(mtc::mirror(m), r));
    // Twist eigenvalues invert.
    mtc::RepCat c(r), cm(m);
    const auto& s = c.simples().simples;
    const auto& sm = cm.simples().simples;
    REQUIRE(s.size() == sm.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      Matrix t = c.twist(s[i]), tm = cm.twist(sm[i]);
      CHECK(t * tm == mtc::Matrix::identity(1));
    }
  }
}

TEST_CASE("tensor products of Hopf algebras", "[hopf][tensor]") {
  HopfAlgebra triv = mtc::builtin("trivial");
  HopfAlgebra sw = mtc::builtin("sweedler");
  HopfAlgebra t = mtc::tensor_hopf(sw, triv);
  CHECK(t.dim() == sw.dim());
  CHECK(t.algebra().dim() == sw.dim());
  CHECK(t.R() == sw.R());
  CHECK(t.antipode_matrix() == sw.antipode_matrix());
  CHECK(t.ribbon() == sw.ribbon());
  for (std::size_t i = 0; i < sw.dim(); ++i)
    for (std::size_t j = 0; j < sw.dim(); ++j) CHECK(t.algebra().product(i, j) == sw.algebra().product(i, j));

  HopfAlgebra d = mtc::builtin("double_z2");
  d = d.with_ribbon(mtc::solve_ribbon(d).back());
  HopfAlgebra dd = mtc::tensor_hopf(d, mtc::mirror(d));
  CHECK(dd.dim() == 16);
  CHECK(all_pass(mtc::verify_hopf_axioms(dd)));
  CHECK(all_pass(mtc::verify_quasitriangular(dd)));
  CHECK(all_pass(mtc::verify_ribbon(dd)));
}

TEST_CASE("Sweedler's radical is span{x, gx}", "[hopf][radical]") {
  HopfAlgebra h = mtc::builtin("sweedler");
  RawHopf raw(h.data());
  // Trace form t(a, b) = tr L_{ab}, built from the raw table.
  std::vector<std::vector<mpq_class>> t(4, std::vector<mpq_class>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      auto ab = raw.mul(raw.basis(a), raw.basis(b));
      mpq_class tr = 0;
      for (std::size_t k = 0; k < 4; ++k) tr += mtc::oracle::q_of(raw.mul(ab, raw.basis(k))[k]);
      t[a][b] = tr;
    }
  auto rad = mtc::oracle::nullspace_q(t, 4);
  REQUIRE(rad.size() == 2);
  for (const auto& v : rad) CHECK((v[0] == 0 && v[1] == 0));
  mtc::Matrix j = mtc::jacobson_radical(h.algebra());
  CHECK(j.cols() == 2);
  for (std::size_t c = 0; c < j.cols(); ++c) CHECK((j(0, c).is_zero() && j(1, c).is_zero()));
}

TEST_CASE("unknown builtin names are rejected", "[hopf]") {
  CHECK_THROWS_AS(mtc::builtin("nonesuch"), mtc::UnknownBuiltin);
}
