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

#include "mtc/diagram.hpp"

using mtc::Diagram;
using mtc::DiagramEnv;
using mtc::HopfAlgebra;
using mtc::Matrix;
using mtc::Module;
using mtc::RepCat;

namespace {

HopfAlgebra with_twist(const std::string& name) {
  HopfAlgebra h = mtc::builtin(name);
  if (h.has_ribbon()) return h;
  auto r = mtc::solve_ribbon(h);
  if (!r.empty()) return h.with_ribbon(r.front());
  return h.with_ribbon(mtc::solve_balancing(h).front());
}

Matrix id(std::size_t n) { return Matrix::identity(n); }

Matrix eval(const std::string& s, const DiagramEnv& env) { return mtc::evaluate(s, env); }

// Pairs (X, Y) of test objects: simples and covers, plus a 2-dim sum.
std::vector<std::pair<Module, Module>> object_pairs(const RepCat& c) {
  std::vector<Module> objs = c.simples().simples;
  for (const auto& p : c.simples().projective_covers) objs.push_back(p);
  if (objs.size() >= 2) objs.push_back(mtc::direct_sum(objs[0], objs[1]));
  std::vector<std::pair<Module, Module>> out;
  for (const auto& x : objs)
    for (const auto& y : objs)
      if (x.dim * y.dim <= 16) out.emplace_back(x, y);
  return out;
}

const std::vector<std::string> kNames = {"group_algebra", "sweedler", "double_z2", "double_sweedler"};

}  // namespace

TEST_CASE("parser builds the expected trees", "[diagram][parse]") {
  Diagram d = mtc::parse_diagram("id(X)");
  CHECK(d.kind == Diagram::Kind::Id);
  REQUIRE(d.args.size() == 1);
  CHECK(d.args[0].kind == mtc::ObjExpr::Kind::Name);
  CHECK(d.args[0].name == "X");

  Diagram c = mtc::parse_diagram("coev(X) ; ev(X)");
  REQUIRE(c.kind == Diagram::Kind::Compose);
  REQUIRE(c.parts.size() == 2);
  CHECK(c.parts[0].kind == Diagram::Kind::Coev);
  CHECK(c.parts[1].kind == Diagram::Kind::Ev);

  Diagram s = mtc::parse_diagram("(id(X) * coev(X)) ; (ev(X) * id(X))");
  REQUIRE(s.kind == Diagram::Kind::Compose);
  CHECK(s.parts[0].kind == Diagram::Kind::Tensor);
  CHECK(s.parts[1].kind == Diagram::Kind::Tensor);
  CHECK(mtc::diagram_str(s) == "((id(X) * coev(X)) ; (ev(X) * id(X)))");

  Diagram b = mtc::parse_diagram("  br( X.dual x X ,\n Y.dual ) * box(f)");
  REQUIRE(b.kind == Diagram::Kind::Tensor);
  CHECK(b.parts[0].args.size() == 2);
  CHECK(mtc::word_str(mtc::normalize(b.parts[0].args[0])) == "X.dual x X");
  CHECK(b.parts[1].box == "f");
}

TEST_CASE("object normal form", "[diagram][parse]") {
  auto w = [](const std::string& s) { return mtc::word_str(mtc::normalize(mtc::parse_object(s))); };
  CHECK(w("X.dual.dual") == "X");
  CHECK(w("(X x Y).dual") == "Y.dual x X.dual");
  CHECK(w("1 x X x 1") == "X");
  CHECK(w("1.dual") == "1");
  CHECK(w("(X x (Y x Z.dual)).dual") == "Z x Y.dual x X.dual");
}

TEST_CASE("syntax errors carry line and column", "[diagram][parse]") {
  try {
    mtc::parse_diagram("id(X) ;\n  br(X");
    FAIL("no error");
  } catch (const mtc::DiagramSyntaxError& e) {
    CHECK(e.loc().line == 2);
    CHECK(e.loc().column == 3);
  }
  try {
    mtc::parse_diagram("foo(X)");
    FAIL("no error");
  } catch (const mtc::DiagramSyntaxError& e) {
    CHECK(e.loc().column == 1);
  }
  CHECK_THROWS_AS(mtc::parse_diagram("id(X.dua)"), mtc::DiagramSyntaxError);
  CHECK_THROWS_AS(mtc::parse_diagram("br(X)"), mtc::DiagramSyntaxError);
  CHECK_THROWS_AS(mtc::parse_diagram("id(X) id(X)"), mtc::DiagramSyntaxError);
  CHECK_THROWS_AS(mtc::parse_diagram("id(X) # id(X)"), mtc::DiagramSyntaxError);
}

TEST_CASE("typechecking", "[diagram][types]") {
  RepCat c(with_twist("double_z2"));
  DiagramEnv env(c);
  env.bind("X", c.simples().simples[0]);
  env.bind("Y", c.simples().simples[1]);
  auto type = [&](const std::string& s) { return mtc::typecheck(mtc::parse_diagram(s), env); };

  auto snake = type("(coev(X) * id(X)) ; (id(X) * ev(X))");
  CHECK(mtc::word_str(snake.dom) == "X");
  CHECK(mtc::word_str(snake.cod) == "X");
  auto loop = type("coev(X) ; evt(X)");
  CHECK(loop.dom.empty());
  CHECK(loop.cod.empty());

  try {
    type("ev(X) ; ev(X)");
    FAIL("no error");
  } catch (const mtc::DiagramTypeError& e) {
    CHECK(e.loc().column == 9);
  }
  // With ev: X* X -> 1 and coev: 1 -> X X*, these words do not compose.
  CHECK_THROWS_AS(type("coev(X) ; ev(X)"), mtc::DiagramTypeError);
  CHECK_THROWS_AS(type("(id(X) * coev(X)) ; (ev(X) * id(X))"), mtc::DiagramTypeError);
  CHECK_THROWS_AS(type("id(Z)"), mtc::DiagramTypeError);
  CHECK_THROWS_AS(type("box(nothing)"), mtc::DiagramTypeError);

  // Hopf pairing word, by hand: X* X Y* Y -> X* (Y* X) Y -> X* (X Y*) Y -> 1.
  auto omega = type("(id(X.dual) * (br(X, Y.dual) ; br(Y.dual, X)) * id(Y)) ; (ev(X) * ev(Y))");
  CHECK(mtc::word_str(omega.dom) == "X.dual x X x Y.dual x Y");
  CHECK(omega.cod.empty());
}

TEST_CASE("generators evaluate to the category's structure maps", "[diagram][eval]") {
  for (const auto& name : kNames) {
    INFO(name);
    RepCat c(with_twist(name));
    for (const auto& [x, y] : object_pairs(c)) {
      DiagramEnv env(c);
      env.bind("X", x);
      env.bind("Y", y);
      CHECK(eval("ev(X)", env) == c.ev(x));
      CHECK(eval("coev(X)", env) == c.coev(x));
      CHECK(eval("evt(X)", env) == c.evt(x));
      CHECK(eval("coevt(X)", env) == c.coevt(x));
      CHECK(eval("br(X, Y)", env) == c.braid(x, y));
      CHECK(eval("brinv(X, Y)", env) == c.braid_inv(x, y));
      CHECK(eval("tw(X)", env) == c.twist(x));
      CHECK(eval("twinv(X)", env) == c.twist_inv(x));
      // Nested evaluation of a tensor product object against the composite
      // built from single-object maps: ev_{XY} = ev_Y (id (x) ev_X (x) id).
      Matrix nested = c.ev(y) * kron(kron(id(y.dim), c.ev(x)), id(y.dim));
      CHECK(eval("ev(X x Y)", env) == nested);
      Matrix nested_coev = kron(kron(id(x.dim), c.coev(y)), id(x.dim)) * c.coev(x);
      CHECK(eval("coev(X x Y)", env) == nested_coev);
    }
  }
}

TEST_CASE("graphical calculus relations hold as evaluated identities", "[diagram][eval][property]") {
  for (const auto& name : kNames) {
    INFO(name);
    HopfAlgebra h = with_twist(name);
    const bool ribbon = h.antipode(h.ribbon()) == h.ribbon();
    RepCat c(h);
    for (const auto& [x, y] : object_pairs(c)) {
      DiagramEnv env(c);
      env.bind("X", x);
      env.bind("Y", y);
      const std::size_t dx = x.dim, dy = y.dim;
      CHECK(eval("(coev(X) * id(X)) ; (id(X) * ev(X))", env) == id(dx));
      CHECK(eval("(id(X.dual) * coev(X)) ; (ev(X) * id(X.dual))", env) == id(dx));
      CHECK(eval("(id(X) * coevt(X)) ; (evt(X) * id(X))", env) == id(dx));
      CHECK(eval("(coevt(X) * id(X.dual)) ; (id(X.dual) * evt(X))", env) == id(dx));
      CHECK(eval("(coev(X x Y) * id(X x Y)) ; (id(X x Y) * ev(X x Y))", env) == id(dx * dy));
      CHECK(eval("(coev(X.dual) * id(X.dual)) ; (id(X.dual) * ev(X.dual))", env) == id(dx));
      CHECK(eval("br(X, Y) ; brinv(X, Y)", env) == id(dx * dy));
      CHECK(eval("tw(X) ; twinv(X)", env) == id(dx));
      CHECK(eval("(tw(X) * tw(Y)) ; br(X, Y) ; br(Y, X)", env) == eval("tw(X x Y)", env));
      CHECK(eval("br(X, Y x X)", env) == eval("(br(X, Y) * id(X)) ; (id(Y) * br(X, X))", env));
      CHECK(eval("br(X x Y, X)", env) == eval("(id(X) * br(Y, X)) ; (br(X, X) * id(Y))", env));
      // (theta_X)* = theta_{X*} exactly for ribbon twists.
      Matrix dual_tw = eval("(id(X.dual) * coev(X)) ; (id(X.dual) * tw(X) * id(X.dual)) ; (ev(X) * id(X.dual))", env);
      if (ribbon) CHECK(dual_tw == eval("tw(X.dual)", env));
      // Naturality of the braiding on every basis intertwiner.
      for (const auto& f : c.hom_basis(x, y)) {
        env.bind_box("f", "X", "Y", f);
        CHECK(eval("(box(f) * id(X)) ; br(Y, X)", env) == eval("br(X, X) ; (id(X) * box(f))", env));
        CHECK(eval("box(f) ; tw(Y)", env) == eval("tw(X) ; box(f)", env));
      }
    }
  }
}

TEST_CASE("interchange law and re-association", "[diagram][eval][property]") {
  RepCat c(with_twist("double_sweedler"));
  const auto& s = c.simples().simples;
  DiagramEnv env(c);
  env.bind("X", s[2]);
  env.bind("Y", s[0]);
  env.bind("Z", s[3]);
  std::mt19937 rng(9);
  auto tw_or_id = [&](const char* o) {
    const char* forms[] = {"tw(", "twinv(", "id("};
    return std::string(forms[rng() % 3]) + o + ")";
  };
  for (int trial = 0; trial < 10; ++trial) {
    std::string f = tw_or_id("X x Y"), g = "br(X, Y)", h = tw_or_id("Z"), k = tw_or_id("Z");
    Matrix a = eval("(" + f + " ; " + g + ") * (" + h + " ; " + k + ")", env);
    Matrix b = eval("(" + f + " * " + h + ") ; (" + g + " * " + k + ")", env);
    CHECK(a == b);
  }
  CHECK(eval("(br(X, Y) * id(Z)) * id(X)", env) == eval("br(X, Y) * (id(Z) * id(X))", env));
  CHECK(eval("(tw(X) ; twinv(X)) ; tw(X)", env) == eval("tw(X) ; (twinv(X) ; tw(X))", env));
}

TEST_CASE("serial and parallel circuit application agree", "[diagram][kernels]") {
  RepCat c(with_twist("double_sweedler"));
  DiagramEnv env(c);
  env.bind("H", c.regular());
  auto circ = mtc::compile(mtc::parse_diagram("(id(H.dual) * tw(H)) ; br(H.dual, H)"), env);
  std::vector<mtc::SparseVec> inputs;
  for (std::uint64_t j = 0; j < circ.dom_dim; j += 7) inputs.push_back({{j, mtc::Scalar(1)}, {(j * 31) % circ.dom_dim, mtc::Scalar(2)}});
  for (auto& v : inputs) mtc::canonicalize(v);
  CHECK(circ.apply_batch(inputs) == circ.apply_batch_serial(inputs));
}

TEST_CASE("box binding checks shapes and names", "[diagram][env]") {
  RepCat c(with_twist("double_z2"));
  DiagramEnv env(c);
  env.bind("X", c.simples().simples[0]);
  CHECK_THROWS_AS(env.bind_box("f", "X x X", "X", Matrix(2, 1)), mtc::ShapeError);
  CHECK_THROWS(env.bind("x", c.simples().simples[0]));
}
