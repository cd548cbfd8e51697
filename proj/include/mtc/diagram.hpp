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
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtc/repcat.hpp"

namespace mtc {

struct SourceLoc {
  std::size_t line = 1;
  std::size_t column = 1;
};

class DiagramSyntaxError : public std::invalid_argument {
 public:
  DiagramSyntaxError(const std::string& what, SourceLoc loc);
  SourceLoc loc() const { return loc_; }

 private:
  SourceLoc loc_;
};

class DiagramTypeError : public std::invalid_argument {
 public:
  DiagramTypeError(const std::string& what, SourceLoc loc);
  SourceLoc loc() const { return loc_; }

 private:
  SourceLoc loc_;
};

/** Object expression: the unit, a name, a dual or a tensor product. */
struct ObjExpr {
  enum class Kind { Unit, Name, Dual, Tensor } kind = Kind::Unit;
  std::string name;
  std::vector<ObjExpr> parts;
  SourceLoc loc;
};

/** A tensor factor of a normalised object: a named object or its dual. */
struct Letter {
  std::string name;
  bool dual = false;
  friend bool operator==(const Letter&, const Letter&) = default;
};
/** Strict normal form: (X (x) Y)* = Y* X*, X** = X, the unit is empty. */
using Word = std::vector<Letter>;

Word normalize(const ObjExpr& o);
Word dual_word(const Word& w);
std::string word_str(const Word& w);

struct Diagram {
  enum class Kind { Id, Ev, Coev, EvT, CoevT, Br, BrInv, Tw, TwInv, Box, Compose, Tensor };
  Kind kind = Kind::Id;
  std::vector<ObjExpr> args;
  std::string box;
  std::vector<Diagram> parts;
  SourceLoc loc;
};

/**
 * term := factor {';' factor}, where f ; g is g after f;
 * factor := atom {'*' atom}; atom := gen '(' args ')' | '(' term ')';
 * obj := '1' | IDENT | obj '.dual' | obj 'x' obj | '(' obj ')'.
 */
Diagram parse_diagram(const std::string& text);
ObjExpr parse_object(const std::string& text);
std::string diagram_str(const Diagram& d);

/** A named morphism usable as box(name). */
struct BoxDef {
  Word dom, cod;
  SparseMatrix matrix;
};

/** Named objects and morphisms over one category. */
class DiagramEnv {
 public:
  explicit DiagramEnv(const RepCat& cat) : cat_(&cat) {}

  const RepCat& cat() const { return *cat_; }
  void bind(const std::string& name, Module m);
  void bind_box(const std::string& name, const std::string& dom, const std::string& cod, const Matrix& m);
  void bind_box(const std::string& name, Word dom, Word cod, SparseMatrix m);

  const Module& object(const std::string& name) const;
  const BoxDef& box(const std::string& name) const;
  bool has_object(const std::string& name) const { return objects_.count(name) > 0; }
  bool has_box(const std::string& name) const { return boxes_.count(name) > 0; }
  std::size_t dim(const Word& w) const;
  /** The module of a word: tensor product of the letters' modules. */
  Module module(const Word& w) const;
  /** Sparse action matrices of a word's module, one per basis element; cached. */
  std::shared_ptr<const std::vector<SparseMatrix>> action(const Word& w) const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<const std::vector<SparseMatrix>>> actions;
  };
  const RepCat* cat_;
  std::map<std::string, Module> objects_;
  std::map<std::string, BoxDef> boxes_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

struct DiagramType {
  Word dom, cod;
};

DiagramType typecheck(const Diagram& d, const DiagramEnv& env);

/**
 * A compiled diagram: a list of operations on a row of legs, each leg one
 * letter. Vectors are sparse over the mixed-radix basis of the legs.
 */
class Circuit {
 public:
  struct Op {
    enum class Kind { Linear, Act, Swap } kind = Kind::Linear;
    std::uint64_t pre = 1, post = 1;
    // Linear: one block of size span_in -> span_out.
    std::uint64_t span_in = 1, span_out = 1;
    std::shared_ptr<const SparseMatrix> matrix;
    // Act: consecutive groups; t is an element of H^{(x) groups}.
    std::vector<std::uint64_t> group_dims;
    std::vector<std::shared_ptr<const std::vector<SparseMatrix>>> group_action;
    std::shared_ptr<const TensorElem> t;
    // Swap: blocks of size a then b.
    std::uint64_t a = 1, b = 1;
  };

  Word dom, cod;
  std::uint64_t dom_dim = 1, cod_dim = 1;
  std::vector<Op> ops;

  SparseVec apply(const SparseVec& v) const;
  std::vector<SparseVec> apply_batch(const std::vector<SparseVec>& vs) const;
  std::vector<SparseVec> apply_batch_serial(const std::vector<SparseVec>& vs) const;
  /** Dense matrix, column j = image of basis vector j. */
  Matrix to_matrix() const;
};

Circuit compile(const Diagram& d, const DiagramEnv& env);
Matrix evaluate(const Diagram& d, const DiagramEnv& env);
Matrix evaluate(const std::string& text, const DiagramEnv& env);

}  // namespace mtc
