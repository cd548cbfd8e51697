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

#include "mtc/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "mtc/kernels.hpp"

namespace mtc {
namespace {

std::string at(SourceLoc loc) {
  return " at line " + std::to_string(loc.line) + ", column " + std::to_string(loc.column);
}

struct Token {
  enum class Kind { Ident, One, LParen, RParen, Comma, Semi, Star, Dot, End } kind;
  std::string text;
  SourceLoc loc;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  SourceLoc loc;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++loc.line;
        loc.column = 1;
      } else {
        ++loc.column;
      }
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    SourceLoc start = loc;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Kind::Ident, s.substr(i, j - i), start});
      advance(j - i);
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '1': k = Token::Kind::One; break;
      case '(': k = Token::Kind::LParen; break;
      case ')': k = Token::Kind::RParen; break;
      case ',': k = Token::Kind::Comma; break;
      case ';': k = Token::Kind::Semi; break;
      case '*': k = Token::Kind::Star; break;
      case '.': k = Token::Kind::Dot; break;
      default:
        throw DiagramSyntaxError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({k, std::string(1, c), start});
    advance(1);
  }
  out.push_back({Token::Kind::End, "", loc});
  return out;
}

const std::map<std::string, std::pair<Diagram::Kind, int>>& generators() {
  static const std::map<std::string, std::pair<Diagram::Kind, int>> g = {
      {"id", {Diagram::Kind::Id, 1}},       {"ev", {Diagram::Kind::Ev, 1}},
      {"coev", {Diagram::Kind::Coev, 1}},   {"evt", {Diagram::Kind::EvT, 1}},
      {"coevt", {Diagram::Kind::CoevT, 1}}, {"br", {Diagram::Kind::Br, 2}},
      {"brinv", {Diagram::Kind::BrInv, 2}}, {"tw", {Diagram::Kind::Tw, 1}},
      {"twinv", {Diagram::Kind::TwInv, 1}}, {"box", {Diagram::Kind::Box, 1}}};
  return g;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  Diagram term() {
    Diagram first = factor();
    if (peek().kind != Token::Kind::Semi) return first;
    Diagram d;
    d.kind = Diagram::Kind::Compose;
    d.loc = first.loc;
    d.parts.push_back(std::move(first));
    while (accept(Token::Kind::Semi)) d.parts.push_back(factor());
    return d;
  }

  ObjExpr object() {
    ObjExpr first = obj_postfix();
    if (!is_tensor_x()) return first;
    ObjExpr t;
    t.kind = ObjExpr::Kind::Tensor;
    t.loc = first.loc;
    t.parts.push_back(std::move(first));
    while (is_tensor_x()) {
      ++pos_;
      t.parts.push_back(obj_postfix());
    }
    return t;
  }

  void finish() {
    if (peek().kind != Token::Kind::End)
      throw DiagramSyntaxError("unexpected '" + peek().text + "'", peek().loc);
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool accept(Token::Kind k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Token::Kind k, const char* what) {
    if (peek().kind != k)
      throw DiagramSyntaxError(std::string("expected ") + what + ", found " +
                                   (peek().kind == Token::Kind::End ? "end of input" : "'" + peek().text + "'"),
                               peek().loc);
    return toks_[pos_++];
  }
  bool is_tensor_x() const { return peek().kind == Token::Kind::Ident && peek().text == "x"; }

  Diagram factor() {
    Diagram first = atom();
    if (peek().kind != Token::Kind::Star) return first;
    Diagram d;
    d.kind = Diagram::Kind::Tensor;
    d.loc = first.loc;
    d.parts.push_back(std::move(first));
    while (accept(Token::Kind::Star)) d.parts.push_back(atom());
    return d;
  }

  Diagram atom() {
    if (peek().kind == Token::Kind::LParen) {
      ++pos_;
      Diagram d = term();
      expect(Token::Kind::RParen, "')'");
      return d;
    }
    const Token& name = expect(Token::Kind::Ident, "a generator or '('");
    auto it = generators().find(name.text);
    if (it == generators().end()) throw DiagramSyntaxError("unknown generator '" + name.text + "'", name.loc);
    Diagram d;
    d.kind = it->second.first;
    d.loc = name.loc;
    expect(Token::Kind::LParen, "'('");
    if (d.kind == Diagram::Kind::Box) {
      d.box = expect(Token::Kind::Ident, "a morphism name").text;
    } else {
      d.args.push_back(object());
      while (accept(Token::Kind::Comma)) d.args.push_back(object());
      if (static_cast<int>(d.args.size()) != it->second.second)
        throw DiagramSyntaxError(name.text + " takes " + std::to_string(it->second.second) + " object argument(s)",
                                 name.loc);
    }
    expect(Token::Kind::RParen, "')'");
    return d;
  }

  ObjExpr obj_postfix() {
    ObjExpr o = obj_base();
    while (peek().kind == Token::Kind::Dot) {
      SourceLoc loc = peek().loc;
      ++pos_;
      const Token& t = expect(Token::Kind::Ident, "'dual'");
      if (t.text != "dual") throw DiagramSyntaxError("expected 'dual' after '.'", t.loc);
      ObjExpr d;
      d.kind = ObjExpr::Kind::Dual;
      d.loc = loc;
      d.parts.push_back(std::move(o));
      o = std::move(d);
    }
    return o;
  }

  ObjExpr obj_base() {
    ObjExpr o;
    o.loc = peek().loc;
    if (accept(Token::Kind::One)) return o;
    if (accept(Token::Kind::LParen)) {
      o = object();
      expect(Token::Kind::RParen, "')'");
      return o;
    }
    if (is_tensor_x()) throw DiagramSyntaxError("expected an object, found 'x'", peek().loc);
    o.kind = ObjExpr::Kind::Name;
    o.name = expect(Token::Kind::Ident, "an object").text;
    return o;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string obj_str(const ObjExpr& o) {
  switch (o.kind) {
    case ObjExpr::Kind::Unit: return "1";
    case ObjExpr::Kind::Name: return o.name;
    case ObjExpr::Kind::Dual: {
      const auto& p = o.parts[0];
      bool wrap = p.kind == ObjExpr::Kind::Tensor;
      return (wrap ? "(" + obj_str(p) + ")" : obj_str(p)) + ".dual";
    }
    case ObjExpr::Kind::Tensor: {
      std::string s;
      for (std::size_t i = 0; i < o.parts.size(); ++i) s += (i ? " x " : "") + obj_str(o.parts[i]);
      return s;
    }
  }
  return "";
}

std::uint64_t word_dim(const DiagramEnv& env, const Word& w) { return env.dim(w); }

}  // namespace

DiagramSyntaxError::DiagramSyntaxError(const std::string& what, SourceLoc loc)
    : std::invalid_argument("syntax error" + at(loc) + ": " + what), loc_(loc) {}

DiagramTypeError::DiagramTypeError(const std::string& what, SourceLoc loc)
    : std::invalid_argument("type error" + at(loc) + ": " + what), loc_(loc) {}

Word normalize(const ObjExpr& o) {
  switch (o.kind) {
    case ObjExpr::Kind::Unit: return {};
    case ObjExpr::Kind::Name: return {Letter{o.name, false}};
    case ObjExpr::Kind::Dual: return dual_word(normalize(o.parts[0]));
    case ObjExpr::Kind::Tensor: {
      Word w;
      for (const auto& p : o.parts) {
        Word q = normalize(p);
        w.insert(w.end(), q.begin(), q.end());
      }
      return w;
    }
  }
  return {};
}

Word dual_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l.dual = !l.dual;
  return out;
}

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " x " : "") + w[i].name + (w[i].dual ? ".dual" : "");
  return s;
}

Diagram parse_diagram(const std::string& text) {
  Parser p(text);
  Diagram d = p.term();
  p.finish();
  return d;
}

ObjExpr parse_object(const std::string& text) {
  Parser p(text);
  ObjExpr o = p.object();
  p.finish();
  return o;
}

std::string diagram_str(const Diagram& d) {
  static const char* names[] = {"id", "ev", "coev", "evt", "coevt", "br", "brinv", "tw", "twinv", "box"};
  switch (d.kind) {
    case Diagram::Kind::Compose:
    case Diagram::Kind::Tensor: {
      std::string sep = d.kind == Diagram::Kind::Compose ? " ; " : " * ";
      std::string s = "(";
      for (std::size_t i = 0; i < d.parts.size(); ++i) s += (i ? sep : "") + diagram_str(d.parts[i]);
      return s + ")";
    }
    case Diagram::Kind::Box: return "box(" + d.box + ")";
    default: {
      std::string s = std::string(names[static_cast<int>(d.kind)]) + "(";
      for (std::size_t i = 0; i < d.args.size(); ++i) s += (i ? ", " : "") + obj_str(d.args[i]);
      return s + ")";
    }
  }
}

void DiagramEnv::bind(const std::string& name, Module m) {
  if (name == "x") throw std::invalid_argument("'x' is reserved for the tensor product");
  m.name = name;
  objects_[name] = std::move(m);
}

void DiagramEnv::bind_box(const std::string& name, const std::string& dom, const std::string& cod, const Matrix& m) {
  bind_box(name, normalize(parse_object(dom)), normalize(parse_object(cod)), SparseMatrix::from_dense(m));
}

void DiagramEnv::bind_box(const std::string& name, Word dom, Word cod, SparseMatrix m) {
  if (m.rows() != dim(cod) || m.cols() != dim(dom))
    throw ShapeError("box '" + name + "': matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                     " but the declared type is " + word_str(dom) + " -> " + word_str(cod));
  boxes_[name] = BoxDef{std::move(dom), std::move(cod), std::move(m)};
}

const Module& DiagramEnv::object(const std::string& name) const {
  auto it = objects_.find(name);
  if (it == objects_.end()) throw std::out_of_range("unbound object '" + name + "'");
  return it->second;
}

const BoxDef& DiagramEnv::box(const std::string& name) const {
  auto it = boxes_.find(name);
  if (it == boxes_.end()) throw std::out_of_range("unbound box '" + name + "'");
  return it->second;
}

std::size_t DiagramEnv::dim(const Word& w) const {
  std::size_t d = 1;
  for (const auto& l : w) d *= object(l.name).dim;
  return d;
}

Module DiagramEnv::module(const Word& w) const {
  if (w.empty()) return cat_->unit_object();
  auto letter = [&](const Letter& l) { return l.dual ? cat_->dual(object(l.name)) : object(l.name); };
  Module m = letter(w[0]);
  for (std::size_t i = 1; i < w.size(); ++i) m = cat_->tensor(m, letter(w[i]));
  m.name = word_str(w);
  return m;
}

std::shared_ptr<const std::vector<SparseMatrix>> DiagramEnv::action(const Word& w) const {
  const std::string key = word_str(w);
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->actions.find(key);
    if (it != cache_->actions.end()) return it->second;
  }
  const HopfAlgebra& h = cat_->hopf();
  auto acts = std::make_shared<std::vector<SparseMatrix>>();
  if (w.size() <= 1) {
    for (const auto& a : module(w).action) acts->push_back(SparseMatrix::from_dense(a));
  } else {
    // rho_{AB}(e_i) = sum rho_A(e_j) (x) rho_B(e_k) over Delta(e_i).
    auto first = action(Word(w.begin(), w.begin() + 1));
    auto rest = action(Word(w.begin() + 1, w.end()));
    for (std::size_t i = 0; i < h.dim(); ++i) {
      SparseMatrix m((*first)[0].rows() * (*rest)[0].rows(), (*first)[0].cols() * (*rest)[0].cols());
      for (const auto& [j, k, c] : h.comul_basis(i)) {
        SparseMatrix t = kron((*first)[j], (*rest)[k]);
        t *= c;
        m += t;
      }
      acts->push_back(std::move(m));
    }
  }
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->actions.emplace(key, acts).first->second;
}

DiagramType typecheck(const Diagram& d, const DiagramEnv& env) {
  auto word = [&](const ObjExpr& o) {
    Word w = normalize(o);
    for (const auto& l : w)
      if (!env.has_object(l.name)) throw DiagramTypeError("unbound object '" + l.name + "'", o.loc);
    return w;
  };
  auto cat = [](Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  switch (d.kind) {
    case Diagram::Kind::Id:
    case Diagram::Kind::Tw:
    case Diagram::Kind::TwInv: {
      Word a = word(d.args[0]);
      return {a, a};
    }
    case Diagram::Kind::Ev: {
      Word a = word(d.args[0]);
      return {cat(dual_word(a), a), {}};
    }
    case Diagram::Kind::Coev: {
      Word a = word(d.args[0]);
      return {{}, cat(a, dual_word(a))};
    }
    case Diagram::Kind::EvT: {
      Word a = word(d.args[0]);
      return {cat(a, dual_word(a)), {}};
    }
    case Diagram::Kind::CoevT: {
      Word a = word(d.args[0]);
      return {{}, cat(dual_word(a), a)};
    }
    case Diagram::Kind::Br: {
      Word a = word(d.args[0]), b = word(d.args[1]);
      return {cat(a, b), cat(b, a)};
    }
    case Diagram::Kind::BrInv: {
      Word a = word(d.args[0]), b = word(d.args[1]);
      return {cat(b, a), cat(a, b)};
    }
    case Diagram::Kind::Box: {
      if (!env.has_box(d.box)) throw DiagramTypeError("unbound box '" + d.box + "'", d.loc);
      const auto& b = env.box(d.box);
      return {b.dom, b.cod};
    }
    case Diagram::Kind::Tensor: {
      DiagramType t;
      for (const auto& p : d.parts) {
        DiagramType q = typecheck(p, env);
        t.dom = cat(t.dom, q.dom);
        t.cod = cat(t.cod, q.cod);
      }
      return t;
    }
    case Diagram::Kind::Compose: {
      DiagramType t = typecheck(d.parts[0], env);
      for (std::size_t i = 1; i < d.parts.size(); ++i) {
        DiagramType q = typecheck(d.parts[i], env);
        if (q.dom != t.cod)
          throw DiagramTypeError("factor " + std::to_string(i + 1) + " expects " + word_str(q.dom) +
                                     " but the previous factor produces " + word_str(t.cod),
                                 d.parts[i].loc);
        t.cod = q.cod;
      }
      return t;
    }
  }
  throw DiagramTypeError("unknown diagram node", d.loc);
}

namespace {

// Per-letter coefficient K[a][b] of the structural maps, a indexing the
// dual-side letter and b the letter itself.
enum class Pairing { Ev, CoevT, Coev, EvT };

Matrix letter_pairing(const DiagramEnv& env, const Letter& l, Pairing p) {
  const Module& m = env.object(l.name);
  const HopfAlgebra& h = env.cat().hopf();
  const std::size_t d = m.dim;
  bool delta = (p == Pairing::Ev || p == Pairing::Coev) ? !l.dual : l.dual;
  if (delta) return Matrix::identity(d);
  switch (p) {
    case Pairing::Ev: return m.act(h.pivot()).transpose();
    case Pairing::CoevT: return m.act(h.pivot_inv()).transpose();
    case Pairing::Coev: return m.act(h.pivot_inv());
    case Pairing::EvT: return m.act(h.pivot());
  }
  return {};
}

// Nested structural map on W* (x) W (dual_first) or W (x) W* as a sparse
// column (coevaluations) or row (evaluations).
SparseMatrix nested_pairing(const DiagramEnv& env, const Word& w, Pairing p) {
  const bool dual_first = p == Pairing::Ev || p == Pairing::CoevT;
  const bool is_row = p == Pairing::Ev || p == Pairing::EvT;
  const std::size_t k = w.size();
  std::vector<Matrix> ks;
  std::vector<std::uint64_t> dims;
  for (const auto& l : w) {
    ks.push_back(letter_pairing(env, l, p));
    dims.push_back(env.object(l.name).dim);
  }
  std::uint64_t wd = 1;
  for (auto d : dims) wd *= d;
  // Build the pair (dual index, word index) letter by letter: the word index
  // grows on the right, the dual index on the left (W* reverses the letters).
  struct Partial {
    std::uint64_t dual_idx, word_idx, dual_scale;
    Scalar c;
  };
  std::vector<Partial> cur{{0, 0, 1, Scalar(1)}};
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Partial> next;
    for (const auto& pt : cur)
      for (std::size_t a = 0; a < dims[j]; ++a)
        for (std::size_t b = 0; b < dims[j]; ++b) {
          const Scalar& v = ks[j](a, b);
          if (v.is_zero()) continue;
          next.push_back({a * pt.dual_scale + pt.dual_idx, pt.word_idx * dims[j] + b, pt.dual_scale * dims[j], pt.c * v});
        }
    cur = std::move(next);
  }
  const std::uint64_t total = wd * wd;
  SparseMatrix out = is_row ? SparseMatrix(1, total) : SparseMatrix(total, 1);
  for (const auto& pt : cur) {
    std::uint64_t idx = dual_first ? pt.dual_idx * wd + pt.word_idx : pt.word_idx * wd + pt.dual_idx;
    if (is_row)
      out.add(0, idx, pt.c);
    else
      out.add(idx, 0, pt.c);
  }
  out.finalize();
  return out;
}

class Compiler {
 public:
  explicit Compiler(const DiagramEnv& env) : env_(env) {}

  std::vector<Circuit::Op> run(const Diagram& d) {
    switch (d.kind) {
      case Diagram::Kind::Id: return {};
      case Diagram::Kind::Ev: return {linear(nested_pairing(env_, normalize(d.args[0]), Pairing::Ev))};
      case Diagram::Kind::Coev: return {linear(nested_pairing(env_, normalize(d.args[0]), Pairing::Coev))};
      case Diagram::Kind::EvT: return {linear(nested_pairing(env_, normalize(d.args[0]), Pairing::EvT))};
      case Diagram::Kind::CoevT: return {linear(nested_pairing(env_, normalize(d.args[0]), Pairing::CoevT))};
      case Diagram::Kind::Tw: return {act({normalize(d.args[0])}, env_.cat().hopf().ribbon_inv())};
      case Diagram::Kind::TwInv: return {act({normalize(d.args[0])}, env_.cat().hopf().ribbon())};
      case Diagram::Kind::Br: {
        Word a = normalize(d.args[0]), b = normalize(d.args[1]);
        return {act2({a, b}, env_.cat().hopf().R()), swap(env_.dim(a), env_.dim(b))};
      }
      case Diagram::Kind::BrInv: {
        Word a = normalize(d.args[0]), b = normalize(d.args[1]);
        return {swap(env_.dim(b), env_.dim(a)), act2({a, b}, env_.cat().hopf().R_inv())};
      }
      case Diagram::Kind::Box: return {linear(env_.box(d.box).matrix)};
      case Diagram::Kind::Compose: {
        std::vector<Circuit::Op> ops;
        for (const auto& p : d.parts) {
          auto q = run(p);
          ops.insert(ops.end(), q.begin(), q.end());
        }
        return ops;
      }
      case Diagram::Kind::Tensor: {
        // Factors run left to right; factor i sees the outputs of earlier
        // factors on its left and the inputs of later factors on its right.
        std::vector<DiagramType> types;
        for (const auto& p : d.parts) types.push_back(typecheck(p, env_));
        std::vector<Circuit::Op> ops;
        for (std::size_t i = 0; i < d.parts.size(); ++i) {
          std::uint64_t left = 1, right = 1;
          for (std::size_t j = 0; j < i; ++j) left *= env_.dim(types[j].cod);
          for (std::size_t j = i + 1; j < d.parts.size(); ++j) right *= env_.dim(types[j].dom);
          for (auto op : run(d.parts[i])) {
            op.pre *= left;
            op.post *= right;
            ops.push_back(std::move(op));
          }
        }
        return ops;
      }
    }
    return {};
  }

 private:
  Circuit::Op linear(SparseMatrix m) {
    Circuit::Op op;
    op.kind = Circuit::Op::Kind::Linear;
    op.span_in = m.cols();
    op.span_out = m.rows();
    op.matrix = std::make_shared<const SparseMatrix>(std::move(m));
    return op;
  }

  Circuit::Op swap(std::uint64_t a, std::uint64_t b) {
    Circuit::Op op;
    op.kind = Circuit::Op::Kind::Swap;
    op.a = a;
    op.b = b;
    op.span_in = op.span_out = a * b;
    return op;
  }

  std::shared_ptr<const std::vector<SparseMatrix>> group_action(const Word& w) { return env_.action(w); }

  Circuit::Op act(const std::vector<Word>& groups, const Elem& x) {
    TensorElem t(x.size(), 1);
    t.c = x;
    return act2(groups, t);
  }

  Circuit::Op act2(const std::vector<Word>& groups, const TensorElem& t) {
    Circuit::Op op;
    op.kind = Circuit::Op::Kind::Act;
    op.t = std::make_shared<const TensorElem>(t);
    std::uint64_t span = 1;
    for (const auto& g : groups) {
      op.group_dims.push_back(env_.dim(g));
      op.group_action.push_back(group_action(g));
      span *= env_.dim(g);
    }
    op.span_in = op.span_out = span;
    return op;
  }

  const DiagramEnv& env_;
};

SparseVec add_scaled(SparseVec acc, const SparseVec& v, const Scalar& c) {
  for (const auto& [i, x] : v) acc.emplace_back(i, x * c);
  return acc;
}

SparseVec apply_op(const Circuit::Op& op, const SparseVec& v) {
  switch (op.kind) {
    case Circuit::Op::Kind::Linear: return kernels::apply_span(v, op.span_in, op.post, *op.matrix);
    case Circuit::Op::Kind::Swap: return kernels::swap_blocks(v, op.a, op.b, op.post);
    case Circuit::Op::Kind::Act: {
      const TensorElem& t = *op.t;
      const std::size_t k = op.group_dims.size();
      std::vector<std::uint64_t> posts(k, op.post);
      for (std::size_t j = k - 1; j-- > 0;) posts[j] = posts[j + 1] * op.group_dims[j + 1];
      SparseVec out;
      for (std::size_t f = 0; f < t.c.size(); ++f) {
        if (t.c[f].is_zero()) continue;
        auto idx = t.split(f);
        SparseVec w = v;
        for (std::size_t j = 0; j < k && !w.empty(); ++j)
          w = kernels::apply_span(w, op.group_dims[j], posts[j], (*op.group_action[j])[idx[j]]);
        out = add_scaled(std::move(out), w, t.c[f]);
      }
      canonicalize(out);
      return out;
    }
  }
  return v;
}

}  // namespace

SparseVec Circuit::apply(const SparseVec& v) const {
  SparseVec cur = v;
  for (const auto& op : ops) {
    if (cur.empty()) break;
    cur = apply_op(op, cur);
  }
  return cur;
}

std::vector<SparseVec> Circuit::apply_batch(const std::vector<SparseVec>& vs) const {
  return kernels::parallel_map<SparseVec>(vs.size(), [&](std::size_t i) { return apply(vs[i]); });
}

std::vector<SparseVec> Circuit::apply_batch_serial(const std::vector<SparseVec>& vs) const {
  return kernels::serial_map<SparseVec>(vs.size(), [&](std::size_t i) { return apply(vs[i]); });
}

Matrix Circuit::to_matrix() const {
  std::vector<SparseVec> basis;
  for (std::uint64_t j = 0; j < dom_dim; ++j) basis.push_back({{j, Scalar(1)}});
  auto cols = apply_batch(basis);
  Matrix m(cod_dim, dom_dim);
  for (std::uint64_t j = 0; j < dom_dim; ++j)
    for (const auto& [i, c] : cols[j]) m(i, j) = c;
  return m;
}

Circuit compile(const Diagram& d, const DiagramEnv& env) {
  DiagramType t = typecheck(d, env);
  Circuit c;
  c.dom = t.dom;
  c.cod = t.cod;
  c.dom_dim = word_dim(env, t.dom);
  c.cod_dim = word_dim(env, t.cod);
  c.ops = Compiler(env).run(d);
  return c;
}

Matrix evaluate(const Diagram& d, const DiagramEnv& env) { return compile(d, env).to_matrix(); }

Matrix evaluate(const std::string& text, const DiagramEnv& env) { return evaluate(parse_diagram(text), env); }

}  // namespace mtc
