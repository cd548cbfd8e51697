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

#include "mtc/hopf.hpp"

#include <algorithm>
#include <sstream>

namespace mtc {
namespace {

void check_index(std::size_t i, std::size_t n, const char* field) {
  if (i >= n)
    throw ShapeError(std::string("index ") + std::to_string(i) + " out of range in '" + field +
                     "' (dim " + std::to_string(n) + ")");
}

bool lex_less(const Elem& a, const Elem& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (int c = Scalar::compare(a[k], b[k]); c != 0) return c < 0;
  return false;
}

}  // namespace

TensorElem::TensorElem(std::size_t dim, int k) : n(dim), order(k) {
  std::size_t size = 1;
  for (int i = 0; i < k; ++i) size *= dim;
  c.resize(size);
}

std::vector<std::size_t> TensorElem::split(std::size_t flat) const {
  std::vector<std::size_t> idx(order);
  for (int p = order; p-- > 0;) {
    idx[p] = flat % n;
    flat /= n;
  }
  return idx;
}

std::size_t TensorElem::join(const std::vector<std::size_t>& idx) const {
  std::size_t flat = 0;
  for (auto i : idx) flat = flat * n + i;
  return flat;
}

bool TensorElem::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Scalar& s) { return s.is_zero(); });
}

HopfAlgebra::HopfAlgebra(const HopfData& d)
    : name_(d.name), order_(d.cyclotomic_order), n_(d.basis.size()), labels_(d.basis) {
  if (n_ == 0) throw ShapeError("Hopf algebra must have positive dimension");
  std::vector<Algebra::Row> prods(n_ * n_);
  for (const auto& t : d.mult) {
    check_index(t.i, n_, "mult");
    check_index(t.j, n_, "mult");
    check_index(t.k, n_, "mult");
    prods[t.i * n_ + t.j].emplace_back(static_cast<std::uint32_t>(t.k), t.c);
  }
  for (auto& row : prods) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Algebra::Row merged;
    for (auto& e : row) {
      if (!merged.empty() && merged.back().first == e.first)
        merged.back().second += e.second;
      else
        merged.push_back(e);
    }
    std::erase_if(merged, [](const auto& e) { return e.second.is_zero(); });
    row = std::move(merged);
  }
  Elem unit(n_);
  for (const auto& [i, c] : d.unit) {
    check_index(i, n_, "unit");
    unit[i] += c;
  }
  alg_ = Algebra(n_, std::move(prods), std::move(unit));
  comult_.resize(n_);
  for (const auto& t : d.comult) {
    check_index(t.i, n_, "comult");
    check_index(t.j, n_, "comult");
    check_index(t.k, n_, "comult");
    if (!t.c.is_zero()) comult_[t.i].emplace_back(t.j, t.k, t.c);
  }
  counit_.assign(n_, Scalar());
  for (const auto& [i, c] : d.counit) {
    check_index(i, n_, "counit");
    counit_[i] += c;
  }
  s_ = Matrix(n_, n_);
  for (const auto& t : d.antipode) {
    check_index(t.i, n_, "antipode");
    check_index(t.j, n_, "antipode");
    s_(t.j, t.i) += t.c;
  }
  r_ = TensorElem(n_, 2);
  for (const auto& t : d.rmatrix) {
    check_index(t.i, n_, "rmatrix");
    check_index(t.j, n_, "rmatrix");
    r_.c[t.i * n_ + t.j] += t.c;
  }
  if (d.ribbon) {
    Elem v(n_);
    for (const auto& [i, c] : *d.ribbon) {
      check_index(i, n_, "ribbon");
      v[i] += c;
    }
    ribbon_ = std::move(v);
  }
  derive();
}

void HopfAlgebra::derive() {
  if (auto si = mtc::inverse(s_))
    s_inv_ = *si;
  else
    s_inv_ = Matrix();
  r_inv_ = apply_at(r_, 0, s_);
  u_ = Elem(n_);
  for (std::size_t f = 0; f < r_.c.size(); ++f) {
    if (r_.c[f].is_zero()) continue;
    Elem s2 = antipode(basis(f % n_));
    u_ = add(u_, scale(mul(s2, basis(f / n_)), r_.c[f]));
  }
  v_inv_.clear();
  g_.clear();
  g_inv_.clear();
  if (ribbon_) {
    if (auto vi = alg_.inverse(*ribbon_)) {
      v_inv_ = *vi;
      g_ = mul(u_, v_inv_);
      if (auto gi = alg_.inverse(g_)) g_inv_ = *gi;
    }
  }
}

HopfData HopfAlgebra::data() const {
  HopfData d;
  d.name = name_;
  d.cyclotomic_order = order_;
  d.basis = labels_;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (const auto& [k, c] : alg_.product(i, j)) d.mult.push_back({i, j, k, c});
  for (std::size_t i = 0; i < n_; ++i)
    if (!one()[i].is_zero()) d.unit.emplace_back(i, one()[i]);
  for (std::size_t i = 0; i < n_; ++i)
    for (const auto& [j, k, c] : comult_[i]) d.comult.push_back({i, j, k, c});
  for (std::size_t i = 0; i < n_; ++i)
    if (!counit_[i].is_zero()) d.counit.emplace_back(i, counit_[i]);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (!s_(j, i).is_zero()) d.antipode.push_back({i, j, s_(j, i)});
  for (std::size_t f = 0; f < r_.c.size(); ++f)
    if (!r_.c[f].is_zero()) d.rmatrix.push_back({f / n_, f % n_, r_.c[f]});
  if (ribbon_) {
    std::vector<std::pair<std::size_t, Scalar>> v;
    for (std::size_t i = 0; i < n_; ++i)
      if (!(*ribbon_)[i].is_zero()) v.emplace_back(i, (*ribbon_)[i]);
    d.ribbon = v;
  }
  return d;
}

TensorElem HopfAlgebra::comul(const Elem& a) const {
  TensorElem t(n_, 2);
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i].is_zero()) continue;
    for (const auto& [j, k, c] : comult_[i]) t.c[j * n_ + k] += a[i] * c;
  }
  return t;
}

Scalar HopfAlgebra::counit(const Elem& a) const {
  Scalar s;
  for (std::size_t i = 0; i < n_; ++i)
    if (!a[i].is_zero()) s += a[i] * counit_[i];
  return s;
}

Elem HopfAlgebra::antipode(const Elem& a) const { return (s_ * Matrix::column(a)).col(0); }

Elem HopfAlgebra::antipode_inv(const Elem& a) const {
  if (s_inv_.rows() == 0) throw ShapeError("antipode is not invertible");
  return (s_inv_ * Matrix::column(a)).col(0);
}

const Elem& HopfAlgebra::ribbon() const {
  if (!ribbon_) throw std::logic_error("no ribbon element selected for " + name_);
  return *ribbon_;
}

const Elem& HopfAlgebra::ribbon_inv() const {
  if (v_inv_.empty()) throw std::logic_error("ribbon element missing or not invertible");
  return v_inv_;
}

const Elem& HopfAlgebra::pivot() const {
  if (g_.empty()) throw std::logic_error("pivot undefined without an invertible ribbon element");
  return g_;
}

const Elem& HopfAlgebra::pivot_inv() const {
  if (g_inv_.empty()) throw std::logic_error("pivot is not invertible");
  return g_inv_;
}

HopfAlgebra HopfAlgebra::with_ribbon(const Elem& v) const {
  HopfAlgebra h = *this;
  h.ribbon_ = v;
  h.derive();
  return h;
}

HopfAlgebra HopfAlgebra::with_name(std::string name) const {
  HopfAlgebra h = *this;
  h.name_ = std::move(name);
  return h;
}

TensorElem HopfAlgebra::tensor_mul(const TensorElem& a, const TensorElem& b) const {
  if (a.order != b.order) throw ShapeError("tensor_mul: orders differ");
  TensorElem out(n_, a.order);
  std::vector<std::pair<std::size_t, Scalar>> cur, next;
  for (std::size_t fa = 0; fa < a.c.size(); ++fa) {
    if (a.c[fa].is_zero()) continue;
    auto ia = a.split(fa);
    for (std::size_t fb = 0; fb < b.c.size(); ++fb) {
      if (b.c[fb].is_zero()) continue;
      auto ib = b.split(fb);
      cur.assign(1, {0, a.c[fa] * b.c[fb]});
      for (int p = 0; p < a.order && !cur.empty(); ++p) {
        next.clear();
        const auto& row = alg_.product(ia[p], ib[p]);
        for (const auto& [f, s] : cur)
          for (const auto& [k, c] : row) next.emplace_back(f * n_ + k, s * c);
        std::swap(cur, next);
      }
      for (auto& [f, s] : cur) out.c[f] += s;
    }
  }
  return out;
}

TensorElem HopfAlgebra::comul_at(const TensorElem& t, int p) const {
  TensorElem out(n_, t.order + 1);
  for (std::size_t f = 0; f < t.c.size(); ++f) {
    if (t.c[f].is_zero()) continue;
    auto idx = t.split(f);
    for (const auto& [j, k, c] : comult_[idx[p]]) {
      std::vector<std::size_t> nidx(idx.begin(), idx.begin() + p);
      nidx.push_back(j);
      nidx.push_back(k);
      nidx.insert(nidx.end(), idx.begin() + p + 1, idx.end());
      out.c[out.join(nidx)] += t.c[f] * c;
    }
  }
  return out;
}

TensorElem HopfAlgebra::apply_at(const TensorElem& t, int p, const Matrix& m) const {
  TensorElem out(n_, t.order);
  for (std::size_t f = 0; f < t.c.size(); ++f) {
    if (t.c[f].is_zero()) continue;
    auto idx = t.split(f);
    const std::size_t col = idx[p];
    for (std::size_t r = 0; r < n_; ++r) {
      if (m(r, col).is_zero()) continue;
      idx[p] = r;
      out.c[out.join(idx)] += t.c[f] * m(r, col);
    }
  }
  return out;
}

TensorElem HopfAlgebra::insert_unit(const TensorElem& t, int p) const {
  TensorElem out(n_, t.order + 1);
  for (std::size_t f = 0; f < t.c.size(); ++f) {
    if (t.c[f].is_zero()) continue;
    auto idx = t.split(f);
    for (std::size_t k = 0; k < n_; ++k) {
      if (one()[k].is_zero()) continue;
      std::vector<std::size_t> nidx(idx.begin(), idx.begin() + p);
      nidx.push_back(k);
      nidx.insert(nidx.end(), idx.begin() + p, idx.end());
      out.c[out.join(nidx)] += t.c[f] * one()[k];
    }
  }
  return out;
}

TensorElem HopfAlgebra::permute(const TensorElem& t, const std::vector<int>& perm) const {
  TensorElem out(n_, t.order);
  std::vector<std::size_t> nidx(t.order);
  for (std::size_t f = 0; f < t.c.size(); ++f) {
    if (t.c[f].is_zero()) continue;
    auto idx = t.split(f);
    for (int q = 0; q < t.order; ++q) nidx[q] = idx[perm[q]];
    out.c[out.join(nidx)] = t.c[f];
  }
  return out;
}

TensorElem HopfAlgebra::pure(const std::vector<Elem>& factors) const {
  TensorElem out(n_, static_cast<int>(factors.size()));
  std::vector<std::pair<std::size_t, Scalar>> cur{{0, Scalar(1)}}, next;
  for (const auto& e : factors) {
    next.clear();
    for (const auto& [f, s] : cur)
      for (std::size_t k = 0; k < n_; ++k)
        if (!e[k].is_zero()) next.emplace_back(f * n_ + k, s * e[k]);
    std::swap(cur, next);
  }
  for (auto& [f, s] : cur) out.c[f] += s;
  return out;
}

Report verify_hopf_axioms(const HopfAlgebra& h) {
  Report rep;
  const std::size_t n = h.dim();
  auto first_failure = [&](const std::string& name, auto&& pred, int arity) {
    std::vector<std::size_t> idx(arity, 0);
    for (;;) {
      if (!pred(idx)) {
        std::string w = "(";
        for (int a = 0; a < arity; ++a) w += (a ? "," : "") + std::to_string(idx[a]);
        rep.fail(name, "violated at basis " + w + ")", {{"basis", w + ")"}});
        return;
      }
      int a = arity - 1;
      while (a >= 0 && ++idx[a] == n) idx[a--] = 0;
      if (a < 0) break;
    }
    rep.pass(name);
  };
  first_failure("associativity", [&](const auto& x) {
    Elem a = h.basis(x[0]), b = h.basis(x[1]), c = h.basis(x[2]);
    return h.mul(h.mul(a, b), c) == h.mul(a, h.mul(b, c));
  }, 3);
  first_failure("unit", [&](const auto& x) {
    Elem a = h.basis(x[0]);
    return h.mul(h.one(), a) == a && h.mul(a, h.one()) == a;
  }, 1);
  first_failure("coassociativity", [&](const auto& x) {
    TensorElem d = h.comul(h.basis(x[0]));
    return h.comul_at(d, 0) == h.comul_at(d, 1);
  }, 1);
  Matrix eps_row = Matrix::row(h.counit_vector());
  first_failure("counit", [&](const auto& x) {
    Elem a = h.basis(x[0]);
    TensorElem d = h.comul(a);
    Elem left(n), right(n);
    for (std::size_t f = 0; f < d.c.size(); ++f) {
      if (d.c[f].is_zero()) continue;
      left[f % n] += d.c[f] * h.counit_vector()[f / n];
      right[f / n] += d.c[f] * h.counit_vector()[f % n];
    }
    return left == a && right == a;
  }, 1);
  first_failure("comult_multiplicative", [&](const auto& x) {
    Elem a = h.basis(x[0]), b = h.basis(x[1]);
    return h.comul(h.mul(a, b)) == h.tensor_mul(h.comul(a), h.comul(b));
  }, 2);
  rep.expect("comult_unital", h.comul(h.one()) == h.pure({h.one(), h.one()}),
             "Delta(1) != 1 (x) 1");
  first_failure("counit_multiplicative", [&](const auto& x) {
    Elem a = h.basis(x[0]), b = h.basis(x[1]);
    return h.counit(h.mul(a, b)) == h.counit(a) * h.counit(b);
  }, 2);
  rep.expect("counit_unital", h.counit(h.one()).is_one(), "epsilon(1) != 1");
  first_failure("antipode", [&](const auto& x) {
    Elem a = h.basis(x[0]);
    TensorElem d = h.comul(a);
    Elem left(n), right(n);
    for (std::size_t f = 0; f < d.c.size(); ++f) {
      if (d.c[f].is_zero()) continue;
      Elem p = h.basis(f / n), q = h.basis(f % n);
      left = add(left, scale(h.mul(h.antipode(p), q), d.c[f]));
      right = add(right, scale(h.mul(p, h.antipode(q)), d.c[f]));
    }
    Elem expect = scale(h.one(), h.counit(a));
    return left == expect && right == expect;
  }, 1);
  return rep;
}

Report verify_quasitriangular(const HopfAlgebra& h) {
  Report rep;
  const std::size_t n = h.dim();
  const TensorElem& r = h.R();
  TensorElem one2 = h.pure({h.one(), h.one()});
  rep.expect("r_invertible",
             h.tensor_mul(r, h.R_inv()) == one2 && h.tensor_mul(h.R_inv(), r) == one2,
             "R (S (x) id)(R) != 1 (x) 1");
  bool ok = true;
  for (std::size_t i = 0; i < n && ok; ++i) {
    TensorElem d = h.comul(h.basis(i));
    if (h.tensor_mul(h.permute(d, {1, 0}), r) != h.tensor_mul(r, d)) {
      rep.fail("almost_cocommutative", "Delta^op(a) R != R Delta(a)",
               {{"basis", "(" + std::to_string(i) + ")"}});
      ok = false;
    }
  }
  if (ok) rep.pass("almost_cocommutative");
  TensorElem r13 = h.insert_unit(r, 1), r23 = h.insert_unit(r, 0), r12 = h.insert_unit(r, 2);
  rep.expect("hexagon_1", h.comul_at(r, 0) == h.tensor_mul(r13, r23),
             "(Delta (x) id)(R) != R13 R23");
  rep.expect("hexagon_2", h.comul_at(r, 1) == h.tensor_mul(r13, r12),
             "(id (x) Delta)(R) != R13 R12");
  return rep;
}

Report verify_ribbon(const HopfAlgebra& h) {
  Report rep;
  if (!h.has_ribbon()) {
    rep.fail("ribbon_present", "no ribbon element set; use solve_ribbon to choose one");
    return rep;
  }
  rep.pass("ribbon_present");
  const Elem& v = h.ribbon();
  rep.expect("ribbon_central", h.algebra().is_central(v), "v is not central");
  auto vi = h.inverse(v);
  rep.expect("ribbon_invertible", vi.has_value(), "v is not invertible");
  rep.expect("ribbon_antipode", h.antipode(v) == v, "S(v) != v");
  rep.expect("ribbon_counit", h.counit(v).is_one(), "epsilon(v) != 1");
  TensorElem r21r = h.tensor_mul(h.permute(h.R(), {1, 0}), h.R());
  rep.expect("ribbon_coproduct", h.tensor_mul(h.comul(v), r21r) == h.pure({v, v}),
             "Delta(v) R21 R != v (x) v");
  if (!vi) return rep;
  const Elem& g = h.pivot();
  rep.expect("pivot_grouplike", h.comul(g) == h.pure({g, g}) && h.counit(g).is_one(),
             "g = u v^-1 is not grouplike");
  bool conj = true;
  if (auto gi = h.inverse(g)) {
    for (std::size_t i = 0; i < h.dim() && conj; ++i) {
      Elem a = h.basis(i);
      conj = h.antipode(h.antipode(a)) == h.mul(h.mul(g, a), *gi);
    }
  } else {
    conj = false;
  }
  rep.expect("pivot_conjugation", conj, "S^2 != Ad(g)");
  return rep;
}

Algebra dual_algebra(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  std::vector<Algebra::Row> prods(n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [a, b, c] : h.comul_basis(k))
      prods[a * n + b].emplace_back(static_cast<std::uint32_t>(k), c);
  for (auto& row : prods)
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return Algebra(n, std::move(prods), h.counit_vector());
}

std::vector<Elem> grouplikes(const HopfAlgebra& h) {
  // A character chi of H* corresponds to g = sum_k chi(f^k) e_k.
  return algebra_characters(dual_algebra(h));
}

namespace {

std::vector<Elem> solve_twists(const HopfAlgebra& h, bool self_dual) {
  const std::size_t n = h.dim();
  // Linear conditions: central, counit one, and S-fixed when self_dual.
  std::vector<Matrix> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix comm = h.algebra().left_mult(h.basis(i)) - h.algebra().right_mult(h.basis(i));
    rows.push_back(comm);
  }
  if (self_dual) rows.push_back(h.antipode_matrix() - Matrix::identity(n));
  Matrix lin = vstack(rows);
  Matrix eps = Matrix::row(h.counit_vector());
  auto in_affine = [&](const Elem& v) {
    return (lin * Matrix::column(v)).is_zero() && (eps * Matrix::column(v))(0, 0).is_one();
  };
  // Every such v has u v^-1 grouplike, so the quadratic condition only needs
  // to be tested on u g^-1 for grouplikes g.
  std::vector<Elem> out;
  TensorElem r21r = h.tensor_mul(h.permute(h.R(), {1, 0}), h.R());
  for (const auto& g : grouplikes(h)) {
    auto gi = h.inverse(g);
    if (!gi) continue;
    Elem v = h.mul(h.drinfeld_u(), *gi);
    if (!in_affine(v)) continue;
    if (!h.inverse(v)) continue;
    if (h.tensor_mul(h.comul(v), r21r) != h.pure({v, v})) continue;
    out.push_back(v);
  }
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Elem> solve_ribbon(const HopfAlgebra& h) { return solve_twists(h, true); }

std::vector<Elem> solve_balancing(const HopfAlgebra& h) { return solve_twists(h, false); }

HopfAlgebra mirror(const HopfAlgebra& h) {
  HopfData d = h.data();
  d.name = "mirror(" + h.name() + ")";
  d.rmatrix.clear();
  TensorElem r = h.permute(h.R_inv(), {1, 0});
  for (std::size_t f = 0; f < r.c.size(); ++f)
    if (!r.c[f].is_zero()) d.rmatrix.push_back({f / h.dim(), f % h.dim(), r.c[f]});
  if (h.has_ribbon()) {
    std::vector<std::pair<std::size_t, Scalar>> v;
    const Elem& vi = h.ribbon_inv();
    for (std::size_t i = 0; i < h.dim(); ++i)
      if (!vi[i].is_zero()) v.emplace_back(i, vi[i]);
    d.ribbon = v;
  }
  return HopfAlgebra(d);
}

HopfAlgebra tensor_hopf(const HopfAlgebra& h, const HopfAlgebra& k) {
  if (h.cyclotomic_order() != k.cyclotomic_order())
    throw FieldError("tensor_hopf: factors use different cyclotomic orders");
  const std::size_t a = h.dim(), b = k.dim();
  auto ix = [b](std::size_t i, std::size_t j) { return i * b + j; };
  HopfData d;
  d.name = h.name() + " (x) " + k.name();
  d.cyclotomic_order = h.cyclotomic_order();
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      d.basis.push_back(h.basis_labels()[i] + "|" + k.basis_labels()[j]);
  HopfData hd = h.data(), kd = k.data();
  for (const auto& x : hd.mult)
    for (const auto& y : kd.mult) d.mult.push_back({ix(x.i, y.i), ix(x.j, y.j), ix(x.k, y.k), x.c * y.c});
  for (const auto& [i, c] : hd.unit)
    for (const auto& [j, e] : kd.unit) d.unit.emplace_back(ix(i, j), c * e);
  for (const auto& x : hd.comult)
    for (const auto& y : kd.comult) d.comult.push_back({ix(x.i, y.i), ix(x.j, y.j), ix(x.k, y.k), x.c * y.c});
  for (const auto& [i, c] : hd.counit)
    for (const auto& [j, e] : kd.counit) d.counit.emplace_back(ix(i, j), c * e);
  for (const auto& x : hd.antipode)
    for (const auto& y : kd.antipode) d.antipode.push_back({ix(x.i, y.i), ix(x.j, y.j), x.c * y.c});
  for (const auto& x : hd.rmatrix)
    for (const auto& y : kd.rmatrix) d.rmatrix.push_back({ix(x.i, y.i), ix(x.j, y.j), x.c * y.c});
  if (hd.ribbon && kd.ribbon) {
    std::vector<std::pair<std::size_t, Scalar>> v;
    for (const auto& [i, c] : *hd.ribbon)
      for (const auto& [j, e] : *kd.ribbon) v.emplace_back(ix(i, j), c * e);
    d.ribbon = v;
  }
  return HopfAlgebra(d);
}

HopfAlgebra drinfeld_double(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  const std::size_t N = n * n;
  auto ix = [n](std::size_t i, std::size_t j) { return i * n + j; };
  Algebra hstar = dual_algebra(h);
  HopfData d;
  d.name = "D(" + h.name() + ")";
  d.cyclotomic_order = h.cyclotomic_order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d.basis.push_back("f" + std::to_string(i) + "|" + h.basis_labels()[j]);

  // Coefficient of e_k in x, for x given by coordinates.
  // Cross term: e_j f^k = sum f^k(S^-1(a3) ? a1) (x) a2 over Delta^2(e_j).
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> prods(N * N);
  std::vector<Matrix> left(n), right(n);
  for (std::size_t i = 0; i < n; ++i) {
    left[i] = h.algebra().left_mult(h.basis(i));
    right[i] = h.algebra().right_mult(h.basis(i));
  }
  for (std::size_t j = 0; j < n; ++j) {
    TensorElem d2 = h.comul_at(h.comul(h.basis(j)), 0);
    for (std::size_t k = 0; k < n; ++k) {
      // cross[(m, a2)] = coefficient of f^m (x) e_a2 in e_j f^k
      std::vector<Scalar> cross(N);
      for (std::size_t f = 0; f < d2.c.size(); ++f) {
        if (d2.c[f].is_zero()) continue;
        auto idx = d2.split(f);
        Elem s3 = h.antipode_inv(h.basis(idx[2]));
        Matrix conj = h.algebra().left_mult(s3) * right[idx[0]];
        for (std::size_t m = 0; m < n; ++m)
          if (!conj(k, m).is_zero()) cross[ix(m, idx[1])] += d2.c[f] * conj(k, m);
      }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
          auto& out = prods[ix(i, j) * N + ix(k, l)];
          for (std::size_t m = 0; m < n; ++m)
            for (std::size_t a2 = 0; a2 < n; ++a2) {
              const Scalar& c = cross[ix(m, a2)];
              if (c.is_zero()) continue;
              for (const auto& [p, s] : hstar.product(i, m))
                for (const auto& [q, t] : h.algebra().product(a2, l))
                  out.emplace_back(ix(p, q), c * s * t);
            }
        }
    }
  }
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y) {
      auto& row = prods[x * N + y];
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (std::size_t r = 0; r < row.size();) {
        Scalar acc;
        std::size_t s = r;
        while (s < row.size() && row[s].first == row[r].first) acc += row[s++].second;
        if (!acc.is_zero()) d.mult.push_back({x, y, row[r].first, acc});
        r = s;
      }
    }
  // Unit epsilon (x) 1.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar c = h.counit_vector()[i] * h.one()[j];
      if (!c.is_zero()) d.unit.emplace_back(ix(i, j), c);
    }
  // Delta(f^i (x) e_j) = (f^i_2 (x) e_j1) (x) (f^i_1 (x) e_j2), where
  // Delta(f^i) = sum_{a,b} m_ab^i f^a (x) f^b.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Scalar mab;
        for (const auto& [k, c] : h.algebra().product(a, b))
          if (k == i) mab += c;
        if (mab.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
          for (const auto& [j1, j2, c] : h.comul_basis(j))
            d.comult.push_back({ix(i, j), ix(b, j1), ix(a, j2), mab * c});
      }
  // epsilon(f^i (x) e_j) = f^i(1) epsilon(e_j).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar c = h.one()[i] * h.counit_vector()[j];
      if (!c.is_zero()) d.counit.emplace_back(ix(i, j), c);
    }
  // S(f (x) a) = (eps (x) S(a)) (f o S^-1 (x) 1).
  {
    HopfData partial = d;
    partial.antipode.clear();
    partial.rmatrix.clear();
    HopfAlgebra tmp(partial);
    Matrix sinv_t = mtc::inverse(h.antipode_matrix())->transpose();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Elem left_factor(N), right_factor(N);
        Elem sa = h.antipode(h.basis(j));
        for (std::size_t q = 0; q < n; ++q)
          for (std::size_t p = 0; p < n; ++p)
            if (!h.counit_vector()[p].is_zero() && !sa[q].is_zero())
              left_factor[ix(p, q)] += h.counit_vector()[p] * sa[q];
        // f^i o S^-1 = sum_m (S^-1)_{i m} f^m
        for (std::size_t m = 0; m < n; ++m)
          for (std::size_t q = 0; q < n; ++q)
            if (!sinv_t(m, i).is_zero() && !h.one()[q].is_zero())
              right_factor[ix(m, q)] += sinv_t(m, i) * h.one()[q];
        Elem s = tmp.mul(left_factor, right_factor);
        for (std::size_t t = 0; t < N; ++t)
          if (!s[t].is_zero()) d.antipode.push_back({ix(i, j), t, s[t]});
      }
  }
  // R = sum_i (eps (x) e_i) (x) (f^i (x) 1).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        Scalar c1 = h.counit_vector()[p], c2 = h.one()[q];
        if (c1.is_zero() || c2.is_zero()) continue;
        d.rmatrix.push_back({ix(p, i), ix(i, q), c1 * c2});
      }
  return HopfAlgebra(d);
}

}  // namespace mtc
