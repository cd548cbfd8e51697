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

#include <random>

#include "mtc/repcat.hpp"
#include "oracles/hopf_raw.hpp"

using mtc::Elem;
using mtc::HopfAlgebra;
using mtc::Matrix;
using mtc::Module;
using mtc::RepCat;
using mtc::Scalar;

namespace {

// Builtins with a twist set: the first ribbon element if one exists, else
// the first balancing element (only the double of Sweedler's algebra).
HopfAlgebra with_twist(const std::string& name) {
  HopfAlgebra h = mtc::builtin(name);
  if (h.has_ribbon()) return h;
  auto r = mtc::solve_ribbon(h);
  if (!r.empty()) return h.with_ribbon(r.front());
  return h.with_ribbon(mtc::solve_balancing(h).front());
}

const std::vector<std::string> kNames = {"group_algebra", "sweedler", "double_z2", "double_sweedler"};

Matrix id(std::size_t n) { return Matrix::identity(n); }

std::vector<Module> test_objects(const RepCat& c) {
  std::vector<Module> out = c.simples().simples;
  for (const auto& p : c.simples().projective_covers) out.push_back(p);
  return out;
}

long span_dim(const std::vector<Matrix>& ms) {
  if (ms.empty()) return 0;
  std::vector<Matrix> cols;
  for (const auto& m : ms) {
    Matrix v(m.rows() * m.cols(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) v(i * m.cols() + j, 0) = m(i, j);
    cols.push_back(v);
  }
  return static_cast<long>(mtc::rank(mtc::hstack(cols)));
}

}  // namespace

TEST_CASE("hom spaces contain the identity", "[repcat][hom]") {
  for (const auto& name : kNames) {
    INFO(name);
    RepCat c(with_twist(name));
    for (const auto& x : test_objects(c)) {
      auto hb = c.hom_basis(x, x);
      REQUIRE_FALSE(hb.empty());
      auto with_id = hb;
      with_id.push_back(id(x.dim));
      CHECK(span_dim(with_id) == span_dim(hb));
      for (const auto& f : hb) CHECK(c.is_intertwiner(x, x, f));
    }
  }
}

TEST_CASE("trivial and sign modules of Z/2 have no maps between them", "[repcat][hom]") {
  RepCat c(mtc::builtin("group_algebra", {{"n", 2}}));
  const auto& s = c.simples().simples;
  REQUIRE(s.size() == 2);
  // Direct 1x1 constraint f rho_0(g) = rho_1(g) f: nonzero f exists iff the
  // characters agree on g.
  bool oracle_zero = s[0].action[1](0, 0) != s[1].action[1](0, 0);
  CHECK(oracle_zero);
  CHECK(c.hom_basis(s[0], s[1]).empty() == oracle_zero);
  CHECK(c.hom_basis(s[1], s[0]).empty() == oracle_zero);
}

TEST_CASE("Schur's lemma holds for every computed simple", "[repcat][simples]") {
  for (const auto& name : kNames) {
    INFO(name);
    RepCat c(with_twist(name));
    const auto& s = c.simples().simples;
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(mtc::is_module(c.algebra(), s[i]));
      for (std::size_t j = 0; j < s.size(); ++j) CHECK(c.hom_basis(s[i], s[j]).size() == (i == j ? 1u : 0u));
    }
  }
}

TEST_CASE("snake identities for simples and projective covers", "[repcat][duality][property]") {
  for (const auto& name : kNames) {
    INFO(name);
    RepCat c(with_twist(name));
    std::vector<Module> objs = test_objects(c);
    objs.push_back(c.regular());
    for (const auto& x : objs) {
      const std::size_t d = x.dim;
      Module xd = c.dual(x);
      CHECK(mtc::is_module(c.algebra(), xd));
      CHECK(c.is_intertwiner(c.tensor(xd, x), c.unit_object(), c.ev(x)));
      CHECK(c.is_intertwiner(c.unit_object(), c.tensor(x, xd), c.coev(x)));
      CHECK(c.is_intertwiner(c.tensor(x, xd), c.unit_object(), c.evt(x)));
      CHECK(c.is_intertwiner(c.unit_object(), c.tensor(xd, x), c.coevt(x)));
      CHECK(kron(id(d), c.ev(x)) * kron(c.coev(x), id(d)) == id(d));
      CHECK(kron(c.ev(x), id(d)) * kron(id(d), c.coev(x)) == id(d));
      CHECK(kron(c.evt(x), id(d)) * kron(id(d), c.coevt(x)) == id(d));
      CHECK(kron(id(d), c.evt(x)) * kron(c.coevt(x), id(d)) == id(d));
    }
  }
}

TEST_CASE("dual of the unit and duality transport of hom dimensions", "[repcat][duality]") {
  for (const auto& name : kNames) {
    INFO(name);
    RepCat c(with_twist(name));
    Module one = c.unit_object();
    CHECK(c.dual(one).action == one.action);
    for (const auto& x : test_objects(c)) {
      auto lhs = c.hom_basis(one, c.tensor(x, c.dual(x)));
      auto rhs = c.hom_basis(x, x);
      CHECK(lhs.size() == rhs.size());
    }
  }
}

TEST_CASE("braiding with the unit and twist of the unit are trivial", "[repcat][braiding]") {
  for (const auto& name : kNames) {
    INFO(name);
    RepCat c(with_twist(name));
    Module one = c.unit_object();
    CHECK(c.twist(one) == id(1));
    for (const auto& x : test_objects(c)) {
      CHECK(c.braid(one, x) == id(x.dim));
      CHECK(c.braid(x, one) == id(x.dim));
    }
  }
}

TEST_CASE("twist of a tensor product is the double braiding times the twists", "[repcat][braiding]") {
  for (const auto& name : kNames) {
    INFO(name);
    RepCat c(with_twist(name));
    std::vector<Module> objs = test_objects(c);
    const auto& s = c.simples().simples;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i; j < s.size(); ++j) objs.push_back(mtc::direct_sum(s[i], s[j]));
    for (const auto& x : objs)
      for (const auto& y : objs) {
        if (x.dim * y.dim > 64) continue;
        Matrix lhs = c.twist(c.tensor(x, y));
        Matrix rhs = c.braid(y, x) * c.braid(x, y) * kron(c.twist(x), c.twist(y));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("hexagons and naturality of the braiding", "[repcat][braiding][property]") {
  std::mt19937 rng(7);
  for (const auto& name : kNames) {
    INFO(name);
    RepCat c(with_twist(name));
    std::vector<Module> objs = test_objects(c);
    for (int trial = 0; trial < 12; ++trial) {
      const Module& x = objs[rng() % objs.size()];
      const Module& y = objs[rng() % objs.size()];
      const Module& z = objs[rng() % objs.size()];
      if (x.dim * y.dim * z.dim > 64) continue;
      Matrix b_x_yz = c.braid(x, c.tensor(y, z));
      CHECK(b_x_yz == kron(id(y.dim), c.braid(x, z)) * kron(c.braid(x, y), id(z.dim)));
      Matrix b_xy_z = c.braid(c.tensor(x, y), z);
      CHECK(b_xy_z == kron(c.braid(x, z), id(y.dim)) * kron(id(x.dim), c.braid(y, z)));
      CHECK(c.braid_inv(x, y) * c.braid(x, y) == id(x.dim * y.dim));
      for (const auto& f : c.hom_basis(x, y)) {
        CHECK(c.braid(y, z) * kron(f, id(z.dim)) == kron(id(z.dim), f) * c.braid(x, z));
        CHECK(c.twist(y) * f == f * c.twist(x));
      }
    }
  }
}

TEST_CASE("twist is the right partial trace of the self-braiding", "[repcat][ribbon]") {
  for (const auto& name : kNames) {
    INFO(name);
    RepCat c(with_twist(name));
    for (const auto& x : test_objects(c)) {
      const std::size_t d = x.dim;
      Matrix ptr = kron(id(d), c.evt(x)) * kron(c.braid(x, x), id(d)) * kron(id(d), c.coev(x));
      CHECK(ptr == c.twist(x));
    }
  }
}

TEST_CASE("twist commutes with duality exactly when v is self-dual", "[repcat][ribbon]") {
  for (const auto& name : kNames) {
    INFO(name);
    HopfAlgebra h = with_twist(name);
    RepCat c(h);
    bool self_dual = h.antipode(h.ribbon()) == h.ribbon();
    bool all = true;
    for (const auto& x : test_objects(c)) all = all && c.twist(c.dual(x)) == c.twist(x).transpose();
    CHECK(all == self_dual);
  }
}

TEST_CASE("simples and Cartan matrices of the small builtins", "[repcat][simples]") {
  {
    RepCat c(mtc::builtin("group_algebra", {{"n", 2}}));
    CHECK(c.simples().simples.size() == 2);
    CHECK(c.simples().cartan == std::vector<std::vector<long>>{{1, 0}, {0, 1}});
  }
  {
    RepCat c(mtc::builtin("sweedler"));
    const auto& sd = c.simples();
    CHECK(sd.simples.size() == 2);
    CHECK(sd.cartan == std::vector<std::vector<long>>{{1, 1}, {1, 1}});
    for (const auto& p : sd.projective_covers) CHECK(p.dim == 2);
    CHECK(sd.radical.cols() == 2);
  }
  {
    HopfAlgebra d = mtc::builtin("double_z2");
    RepCat c(d);
    // Wedderburn oracle: the 1-dim representations of the commutative double
    // are its characters; search value vectors in {-1, 0, 1}^4.
    mtc::oracle::RawHopf raw(d.data());
    int chars = 0;
    for (int code = 0; code < 81; ++code) {
      Elem chi(4);
      for (int k = 0, cc = code; k < 4; ++k, cc /= 3) chi[k] = Scalar(cc % 3 - 1);
      bool ok = true;
      for (std::size_t i = 0; i < 4 && ok; ++i)
        for (std::size_t j = 0; j < 4 && ok; ++j) {
          Scalar rhs;
          for (std::size_t k = 0; k < 4; ++k) rhs += raw.mult[i * 4 + j][k] * chi[k];
          ok = chi[i] * chi[j] == rhs;
        }
      Scalar on_unit;
      for (std::size_t k = 0; k < 4; ++k) on_unit += raw.unit[k] * chi[k];
      if (ok && on_unit.is_one()) ++chars;
    }
    CHECK(chars == 4);
    CHECK(c.simples().simples.size() == 4);
    for (const auto& s : c.simples().simples) CHECK(s.dim == 1);
    std::vector<std::vector<long>> i4(4, std::vector<long>(4));
    for (int i = 0; i < 4; ++i) i4[i][i] = 1;
    CHECK(c.simples().cartan == i4);
  }
}

TEST_CASE("regular module bookkeeping and projectivity", "[repcat][simples][property]") {
  for (const auto& name : kNames) {
    INFO(name);
    RepCat c(with_twist(name));
    const auto& sd = c.simples();
    std::size_t total = 0;
    for (std::size_t i = 0; i < sd.simples.size(); ++i) total += sd.simples[i].dim * sd.projective_covers[i].dim;
    CHECK(total == c.hopf().dim());
    auto reg = c.composition_factors(c.regular());
    for (std::size_t i = 0; i < sd.simples.size(); ++i) {
      // Each P_i occurs dim S_i times in H, so [H : S_i] = sum_j dim S_j C_ij.
      long expect = 0;
      for (std::size_t j = 0; j < sd.simples.size(); ++j)
        expect += static_cast<long>(sd.simples[j].dim) * sd.cartan[i][j];
      CHECK(reg[i] == expect);
    }
    // dim Hom(P_V, U) = [U : S_V] on simples and on covers.
    for (const auto& u : test_objects(c)) {
      auto mult = c.composition_factors(u);
      for (std::size_t v = 0; v < sd.simples.size(); ++v)
        CHECK(static_cast<long>(c.hom_basis(sd.projective_covers[v], u).size()) == mult[v]);
    }
    // Cartan entries are hom dimensions between covers.
    for (std::size_t u = 0; u < sd.simples.size(); ++u)
      for (std::size_t v = 0; v < sd.simples.size(); ++v)
        CHECK(sd.cartan[u][v] == static_cast<long>(c.composition_factors_idempotent(sd.projective_covers[u])[v]));
  }
}

TEST_CASE("composition factors", "[repcat][composition]") {
  RepCat sw(mtc::builtin("sweedler"));
  const auto& s = sw.simples().simples;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<long> e(s.size());
    e[i] = 1;
    CHECK(sw.composition_factors(s[i]) == e);
  }
  // Radical series oracle: J = span{x, gx}, J^2 = 0, so H has Loewy layers
  // H/J and J of dimension 2 each, both a sum of the two 1-dim simples.
  mtc::oracle::RawHopf raw(sw.hopf().data());
  for (std::size_t a : {2u, 3u})
    for (std::size_t b : {2u, 3u}) CHECK(mtc::is_zero(raw.mul(raw.basis(a), raw.basis(b))));
  CHECK(sw.composition_factors(sw.regular()) == std::vector<long>{2, 2});

  std::mt19937 rng(3);
  for (const auto& name : kNames) {
    INFO(name);
    RepCat c(with_twist(name));
    auto objs = test_objects(c);
    for (int trial = 0; trial < 8; ++trial) {
      const Module& x = objs[rng() % objs.size()];
      const Module& y = objs[rng() % objs.size()];
      Module sum = mtc::direct_sum(x, y);
      auto fx = c.composition_factors(x), fy = c.composition_factors(y), fs = c.composition_factors(sum);
      for (std::size_t i = 0; i < fs.size(); ++i) CHECK(fs[i] == fx[i] + fy[i]);
      Module t = c.tensor(x, y);
      auto a = c.composition_factors(t);
      CHECK(a == c.composition_factors_socle(t));
      CHECK(a == c.composition_factors_idempotent(t));
      std::size_t dim = 0;
      for (std::size_t i = 0; i < a.size(); ++i) dim += a[i] * c.simples().simples[i].dim;
      CHECK(dim == t.dim);
    }
  }
}

TEST_CASE("Grothendieck rings", "[repcat][grothendieck]") {
  for (const auto& name : kNames) {
    INFO(name);
    RepCat c(with_twist(name));
    auto n = c.grothendieck_ring();
    const auto& s = c.simples().simples;
    const std::size_t k = s.size();
    std::size_t unit = c.simple_index(c.unit_object());
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<long> e(k);
      e[i] = 1;
      CHECK(n[unit][i] == e);
      CHECK(n[i][unit] == e);
    }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        std::size_t dim = 0;
        for (std::size_t m = 0; m < k; ++m) dim += n[i][j][m] * s[m].dim;
        CHECK(dim == s[i].dim * s[j].dim);
        for (std::size_t l = 0; l < k; ++l)
          for (std::size_t m = 0; m < k; ++m) {
            long left = 0, right = 0;
            for (std::size_t p = 0; p < k; ++p) {
              left += n[i][j][p] * n[p][l][m];
              right += n[j][l][p] * n[i][p][m];
            }
            CHECK(left == right);
          }
      }
  }
  {
    // Double of k[Z/2]: tensoring 1-dim characters multiplies their values.
    RepCat c(with_twist("double_z2"));
    auto n = c.grothendieck_ring();
    const auto& s = c.simples().simples;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        Elem prod(4);
        for (std::size_t b = 0; b < 4; ++b) {
          // rho_{i (x) j}(e_b) = sum Delta coefficients chi_i chi_j.
          for (const auto& [p, q, coeff] : c.hopf().comul_basis(b))
            prod[b] += coeff * s[i].action[p](0, 0) * s[j].action[q](0, 0);
        }
        for (std::size_t m = 0; m < 4; ++m) {
          bool match = mtc::character(s[m]) == prod;
          CHECK(n[i][j][m] == (match ? 1 : 0));
        }
      }
  }
  {
    // Double of Sweedler: the linearised ring has a degenerate trace form.
    RepCat c(with_twist("double_sweedler"));
    auto n = c.grothendieck_ring();
    const std::size_t k = n.size();
    std::vector<std::vector<mpq_class>> t(k, std::vector<mpq_class>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        mpq_class tr = 0;
        for (std::size_t m = 0; m < k; ++m)
          for (std::size_t l = 0; l < k; ++l) tr += n[i][j][m] * n[m][l][l];
        t[i][j] = tr;
      }
    CHECK_FALSE(mtc::oracle::nullspace_q(t, k).empty());
  }
}
