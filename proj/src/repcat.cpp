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

#include "mtc/repcat.hpp"

#include <algorithm>
#include <numeric>

#include "mtc/roots.hpp"

namespace mtc {

Matrix Module::act(const Elem& a) const {
  Matrix out(dim, dim);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) out += action[i] * a[i];
  return out;
}

bool is_module(const Algebra& a, const Module& m) {
  const std::size_t n = a.dim();
  if (m.action.size() != n) return false;
  for (const auto& r : m.action)
    if (r.rows() != m.dim || r.cols() != m.dim) return false;
  if (m.act(a.unit()) != Matrix::identity(m.dim)) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix rhs(m.dim, m.dim);
      for (const auto& [k, c] : a.product(i, j)) rhs += m.action[k] * c;
      if (m.action[i] * m.action[j] != rhs) return false;
    }
  return true;
}

namespace {

bool in_span(const Matrix& basis, const Elem& v) {
  if (basis.cols() == 0) return is_zero(v);
  return solve_right(basis, Matrix::column(v)).has_value();
}

Matrix subalgebra_closure(const Algebra& a, const std::vector<std::size_t>& gens) {
  Matrix w = Matrix::column(a.unit());
  for (auto g : gens) w = column_basis(hstack({w, Matrix::column(a.basis(g))}));
  for (std::size_t prev = 0; prev != w.cols();) {
    prev = w.cols();
    std::vector<Matrix> more{w};
    for (std::size_t c = 0; c < w.cols(); ++c)
      for (auto g : gens) more.push_back(Matrix::column(a.mul(w.col(c), a.basis(g))));
    w = column_basis(hstack(more));
  }
  return w;
}

// Smallest monic p with p(x) = 0, computed with `one` as the unit.
Poly element_min_poly(const Algebra& a, const Elem& one, const Elem& x) {
  std::vector<Elem> powers{one};
  for (;;) {
    Elem next = a.mul(powers.back(), x);
    std::vector<Matrix> cols;
    for (const auto& p : powers) cols.push_back(Matrix::column(p));
    auto sol = solve_right(hstack(cols), Matrix::column(next));
    if (sol) {
      Poly m(powers.size() + 1);
      for (std::size_t i = 0; i < powers.size(); ++i) m[i] = -(*sol)(i, 0);
      m.back() = Scalar(1);
      return m;
    }
    powers.push_back(std::move(next));
  }
}

Elem eval_at(const Algebra& a, const Elem& one, const Elem& x, const Poly& p) {
  Elem acc = a.zero();
  for (std::size_t k = p.size(); k-- > 0;) acc = add(a.mul(acc, x), scale(one, p[k]));
  return acc;
}

// s, t with s a + t b = 1 for coprime a, b.
std::pair<Poly, Poly> bezout(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b, s0{Scalar(1)}, s1{}, t0{}, t1{Scalar(1)};
  poly_trim(r1);
  while (poly_degree(r1) >= 0) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    Poly t2 = poly_sub(t0, poly_mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
    poly_trim(r1);
  }
  if (poly_degree(r0) != 0) throw InternalInconsistency("bezout: polynomials not coprime");
  Scalar inv = r0[0].inverse();
  for (auto& c : s0) c *= inv;
  for (auto& c : t0) c *= inv;
  return {s0, t0};
}

// Idempotent of the generalized eigenspace of x for the root c, if x has
// another eigenvalue in the field.
std::optional<Elem> eigen_idempotent(const Algebra& a, const Elem& one, const Elem& x) {
  Poly m = element_min_poly(a, one, x);
  auto roots = roots_in_field(m);
  if (roots.empty()) return std::nullopt;
  const Scalar& c = roots.front();
  Poly lin{-c, Scalar(1)}, f{Scalar(1)}, h = m;
  for (;;) {
    auto [q, r] = poly_divmod(h, lin);
    poly_trim(r);
    if (poly_degree(r) >= 0) break;
    h = q;
    f = poly_mul(f, lin);
  }
  if (poly_degree(h) <= 0) return std::nullopt;
  auto [s, t] = bezout(f, h);
  return eval_at(a, one, x, poly_mul(t, h));
}

Matrix corner_basis(const Algebra& a, const Elem& p) {
  std::vector<Matrix> cols;
  for (std::size_t k = 0; k < a.dim(); ++k) cols.push_back(Matrix::column(a.mul(a.mul(p, a.basis(k)), p)));
  return column_basis(hstack(cols));
}

std::vector<Elem> candidates(const Matrix& basis) {
  std::vector<Elem> out;
  const std::size_t m = basis.cols();
  for (std::size_t i = 0; i < m; ++i) out.push_back(basis.col(i));
  for (long w = 1; w <= 3; ++w)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) out.push_back(add(basis.col(i), scale(basis.col(j), Scalar(w))));
  Elem mix(basis.rows());
  for (std::size_t i = 0; i < m; ++i) mix = add(mix, scale(basis.col(i), Scalar(static_cast<long>(i * i + 1))));
  out.push_back(std::move(mix));
  return out;
}

Elem primitive_in_block(const Algebra& b, Elem p) {
  for (;;) {
    Matrix corner = corner_basis(b, p);
    if (corner.cols() <= 1) return p;
    bool split = false;
    for (const auto& x : candidates(corner)) {
      auto e = eigen_idempotent(b, p, x);
      if (e && !is_zero(*e) && *e != p) {
        p = std::move(*e);
        split = true;
        break;
      }
    }
    if (!split) throw NonSplit("simple block does not split over the scalar field");
  }
}

int compare_elems(const Elem& a, const Elem& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    if (int c = Scalar::compare(a[i], b[i])) return c;
  return a.size() < b.size() ? -1 : (a.size() > b.size() ? 1 : 0);
}

Module regular_of(const Algebra& a, const std::string& name) {
  Module m{name, a.dim(), {}};
  for (std::size_t i = 0; i < a.dim(); ++i) m.action.push_back(a.left_mult(a.basis(i)));
  return m;
}

Matrix flip(std::size_t dx, std::size_t dy) {
  Matrix p(dx * dy, dx * dy);
  for (std::size_t x = 0; x < dx; ++x)
    for (std::size_t y = 0; y < dy; ++y) p(y * dx + x, x * dy + y) = Scalar(1);
  return p;
}

std::vector<Matrix> hom_basis_gens(const Module& x, const Module& y, const std::vector<std::size_t>& gens) {
  const std::size_t dx = x.dim, dy = y.dim, n = dx * dy;
  if (n == 0) return {};
  Matrix k = Matrix::identity(n);
  for (auto g : gens) {
    const Matrix& rx = x.action[g];
    const Matrix& ry = y.action[g];
    // (F rx - ry F)(a, c) as a linear form in F(a', b) at column a' * dx + b.
    Matrix c(n, n);
    for (std::size_t a = 0; a < dy; ++a)
      for (std::size_t col = 0; col < dx; ++col) {
        const std::size_t row = a * dx + col;
        for (std::size_t b = 0; b < dx; ++b)
          if (!rx(b, col).is_zero()) c(row, a * dx + b) += rx(b, col);
        for (std::size_t a2 = 0; a2 < dy; ++a2)
          if (!ry(a, a2).is_zero()) c(row, a2 * dx + col) -= ry(a, a2);
      }
    Matrix ck = c * k;
    Matrix ker = kernel_matrix(ck);
    if (ker.cols() == 0) return {};
    k = k * ker;
  }
  std::vector<Matrix> out;
  for (std::size_t j = 0; j < k.cols(); ++j) {
    Matrix f(dy, dx);
    for (std::size_t a = 0; a < dy; ++a)
      for (std::size_t b = 0; b < dx; ++b) f(a, b) = k(a * dx + b, j);
    out.push_back(std::move(f));
  }
  return out;
}

long to_count(const Scalar& s, const char* what) {
  auto q = s.as_rational();
  if (!q || q->get_den() != 1 || *q < 0 || !q->get_num().fits_slong_p())
    throw InternalInconsistency(std::string(what) + ": multiplicity is not a natural number");
  return q->get_num().get_si();
}

}  // namespace

std::vector<std::size_t> algebra_generators(const Algebra& a) {
  std::vector<std::size_t> gens;
  Matrix w = subalgebra_closure(a, gens);
  for (std::size_t i = 0; i < a.dim() && w.cols() < a.dim(); ++i) {
    if (in_span(w, a.basis(i))) continue;
    gens.push_back(i);
    w = subalgebra_closure(a, gens);
  }
  return gens;
}

Matrix jacobson_radical(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Scalar> tr(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 0; m < n; ++m)
      for (const auto& [idx, c] : a.product(k, m))
        if (idx == m) tr[k] += c;
  Matrix t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : a.product(i, j)) t(i, j) += c * tr[k];
  return kernel_matrix(t.transpose());
}

Module submodule(const Module& m, const Matrix& basis) {
  Module out{m.name, basis.cols(), {}};
  for (const auto& r : m.action) {
    auto x = solve_right(basis, r * basis);
    if (!x) throw InternalInconsistency("submodule: subspace is not invariant");
    out.action.push_back(std::move(*x));
  }
  return out;
}

Module quotient_module(const Module& m, const Matrix& sub_basis) {
  const std::size_t r = sub_basis.cols();
  Matrix full = hstack({sub_basis, Matrix::identity(m.dim)});
  std::vector<std::size_t> cols;
  for (auto c : independent_columns(full))
    if (c >= r) cols.push_back(c);
  std::vector<Matrix> comp;
  for (auto c : cols) comp.push_back(Matrix::column(full.col(c)));
  Matrix c = comp.empty() ? Matrix(m.dim, 0) : hstack(comp);
  Matrix q = hstack({sub_basis, c});
  auto qinv = inverse(q);
  if (!qinv) throw InternalInconsistency("quotient: basis is singular");
  Module out{m.name, c.cols(), {}};
  for (const auto& act : m.action) out.action.push_back((*qinv * act * c).block(r, 0, c.cols(), c.cols()));
  return out;
}

Module direct_sum(const Module& x, const Module& y) {
  Module out{x.name + " + " + y.name, x.dim + y.dim, {}};
  for (std::size_t i = 0; i < x.action.size(); ++i) {
    Matrix m(out.dim, out.dim);
    for (std::size_t a = 0; a < x.dim; ++a)
      for (std::size_t b = 0; b < x.dim; ++b) m(a, b) = x.action[i](a, b);
    for (std::size_t a = 0; a < y.dim; ++a)
      for (std::size_t b = 0; b < y.dim; ++b) m(x.dim + a, x.dim + b) = y.action[i](a, b);
    out.action.push_back(std::move(m));
  }
  return out;
}

Elem character(const Module& m) {
  Elem out;
  for (const auto& r : m.action) out.push_back(r.trace());
  return out;
}

Matrix module_radical(const Module& m, const Matrix& radical) {
  std::vector<Matrix> cols;
  for (std::size_t c = 0; c < radical.cols(); ++c) {
    Matrix r = m.act(radical.col(c));
    if (!r.is_zero()) cols.push_back(std::move(r));
  }
  if (cols.empty()) return Matrix(m.dim, 0);
  return column_basis(hstack(cols));
}

Matrix module_socle(const Module& m, const Matrix& radical) {
  if (radical.cols() == 0) return Matrix::identity(m.dim);
  std::vector<Matrix> rows;
  for (std::size_t c = 0; c < radical.cols(); ++c) rows.push_back(m.act(radical.col(c)));
  return kernel_matrix(vstack(rows));
}

SimplesData compute_simples(const Algebra& a) {
  const std::size_t n = a.dim();
  SimplesData sd;
  sd.radical = jacobson_radical(a);
  const std::size_t r = sd.radical.cols();

  // Quotient B = A / J on a complement spanned by standard basis vectors.
  Matrix full = hstack({sd.radical, Matrix::identity(n)});
  std::vector<std::size_t> comp;
  for (auto c : independent_columns(full))
    if (c >= r) comp.push_back(c - r);
  const std::size_t m = comp.size();
  Matrix q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < r; ++c) q(i, c) = sd.radical(i, c);
  for (std::size_t c = 0; c < m; ++c) q(comp[c], r + c) = Scalar(1);
  Matrix qinv = *inverse(q);
  auto project = [&](const Elem& x) {
    Matrix y = qinv * Matrix::column(x);
    Elem out(m);
    for (std::size_t c = 0; c < m; ++c) out[c] = y(r + c, 0);
    return out;
  };
  auto lift = [&](const Elem& y) {
    Elem out(n);
    for (std::size_t c = 0; c < m; ++c) out[comp[c]] = y[c];
    return out;
  };
  std::vector<Algebra::Row> prods(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Elem p = project(a.mul(a.basis(comp[i]), a.basis(comp[j])));
      for (std::size_t k = 0; k < m; ++k)
        if (!p[k].is_zero()) prods[i * m + j].push_back({static_cast<std::uint32_t>(k), p[k]});
    }
  Algebra b(m, std::move(prods), project(a.unit()));

  // Central primitive idempotents from the characters of Z(B).
  std::vector<Matrix> conds;
  for (std::size_t k = 0; k < m; ++k) conds.push_back(b.right_mult(b.basis(k)) - b.left_mult(b.basis(k)));
  Matrix z = kernel_matrix(vstack(conds));
  const std::size_t zd = z.cols();
  std::vector<Algebra::Row> zprods(zd * zd);
  Elem zunit = Elem(zd);
  {
    auto u = solve_right(z, Matrix::column(b.unit()));
    for (std::size_t k = 0; k < zd; ++k) zunit[k] = (*u)(k, 0);
  }
  for (std::size_t i = 0; i < zd; ++i)
    for (std::size_t j = 0; j < zd; ++j) {
      auto c = solve_right(z, Matrix::column(b.mul(z.col(i), z.col(j))));
      for (std::size_t k = 0; k < zd; ++k)
        if (!(*c)(k, 0).is_zero()) zprods[i * zd + j].push_back({static_cast<std::uint32_t>(k), (*c)(k, 0)});
    }
  Algebra zalg(zd, std::move(zprods), zunit);
  auto chars = algebra_characters(zalg);
  if (chars.size() != zd) throw NonSplit("center of the semisimple quotient does not split");
  Matrix x(zd, zd);
  for (std::size_t j = 0; j < zd; ++j)
    for (std::size_t k = 0; k < zd; ++k) x(j, k) = chars[j][k];
  Matrix xinv = *inverse(x);

  Module reg_b{"", m, {}};
  for (std::size_t i = 0; i < n; ++i) reg_b.action.push_back(b.left_mult(project(a.basis(i))));
  Module reg_a = regular_of(a, "");

  struct Entry {
    Module simple, cover;
    Elem idem;
    Elem chi;
  };
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < zd; ++i) {
    Elem central = (z * xinv.block(0, i, zd, 1)).col(0);
    Elem p = primitive_in_block(b, central);
    Module s = submodule(reg_b, column_basis(b.right_mult(p)));
    Elem e = lift(p);
    for (int it = 0; a.mul(e, e) != e; ++it) {
      if (it > 64) throw InternalInconsistency("idempotent lifting did not converge");
      Elem e2 = a.mul(e, e);
      e = sub(scale(e2, Scalar(3)), scale(a.mul(e2, e), Scalar(2)));
    }
    Module cover = submodule(reg_a, column_basis(a.right_mult(e)));
    Elem chi = character(s);
    entries.push_back({std::move(s), std::move(cover), std::move(e), std::move(chi)});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& l, const Entry& r) {
    if (l.simple.dim != r.simple.dim) return l.simple.dim < r.simple.dim;
    return compare_elems(l.chi, r.chi) < 0;
  });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    entries[i].simple.name = "S" + std::to_string(i);
    entries[i].cover.name = "P" + std::to_string(i);
    sd.simples.push_back(std::move(entries[i].simple));
    sd.projective_covers.push_back(std::move(entries[i].cover));
    sd.idempotents.push_back(std::move(entries[i].idem));
  }
  const std::size_t s = sd.simples.size();
  const auto gens = algebra_generators(a);
  sd.cartan.assign(s, std::vector<long>(s));
  for (std::size_t u = 0; u < s; ++u)
    for (std::size_t v = 0; v < s; ++v)
      sd.cartan[u][v] = static_cast<long>(hom_basis_gens(sd.projective_covers[v], sd.projective_covers[u], gens).size());
  return sd;
}

std::vector<long> decompose_semisimple(const Module& layer, const SimplesData& sd) {
  const std::size_t s = sd.simples.size();
  if (layer.dim == 0) return std::vector<long>(s);
  std::vector<Matrix> cols;
  for (const auto& m : sd.simples) cols.push_back(Matrix::column(character(m)));
  auto sol = solve_right(hstack(cols), Matrix::column(character(layer)));
  if (!sol) throw InternalInconsistency("layer character is not a combination of simple characters");
  std::vector<long> out(s);
  for (std::size_t i = 0; i < s; ++i) out[i] = to_count((*sol)(i, 0), "decompose");
  return out;
}

RepCat::RepCat(HopfAlgebra h) : h_(std::move(h)), gens_(algebra_generators(h_.algebra())) {}

Module RepCat::unit_object() const {
  Module m{"1", 1, {}};
  for (std::size_t i = 0; i < h_.dim(); ++i) {
    Matrix a(1, 1);
    a(0, 0) = h_.counit_vector()[i];
    m.action.push_back(std::move(a));
  }
  return m;
}

Module RepCat::regular() const { return regular_of(h_.algebra(), "H"); }

Module RepCat::tensor(const Module& x, const Module& y) const {
  Module out{x.name + " x " + y.name, x.dim * y.dim, {}};
  for (std::size_t i = 0; i < h_.dim(); ++i) {
    Matrix m(out.dim, out.dim);
    for (const auto& [j, k, c] : h_.comul_basis(i)) m += kron(x.action[j], y.action[k]) * c;
    out.action.push_back(std::move(m));
  }
  return out;
}

Module RepCat::dual(const Module& x) const {
  Module out{x.name + "*", x.dim, {}};
  for (std::size_t i = 0; i < h_.dim(); ++i) out.action.push_back(x.act(h_.antipode(h_.basis(i))).transpose());
  return out;
}

Matrix RepCat::ev(const Module& x) const {
  const std::size_t d = x.dim;
  Matrix m(1, d * d);
  for (std::size_t i = 0; i < d; ++i) m(0, i * d + i) = Scalar(1);
  return m;
}

Matrix RepCat::coev(const Module& x) const { return ev(x).transpose(); }

Matrix RepCat::evt(const Module& x) const {
  const std::size_t d = x.dim;
  Matrix g = x.act(h_.pivot());
  Matrix m(1, d * d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) m(0, j * d + i) = g(i, j);
  return m;
}

Matrix RepCat::coevt(const Module& x) const {
  const std::size_t d = x.dim;
  Matrix gi = x.act(h_.pivot_inv());
  Matrix m(d * d, 1);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) m(i * d + k, 0) = gi(k, i);
  return m;
}

namespace {

Matrix act_tensor2(const TensorElem& t, const Module& x, const Module& y) {
  Matrix m(x.dim * y.dim, x.dim * y.dim);
  for (std::size_t f = 0; f < t.c.size(); ++f) {
    if (t.c[f].is_zero()) continue;
    m += kron(x.action[f / t.n], y.action[f % t.n]) * t.c[f];
  }
  return m;
}

}  // namespace

Matrix RepCat::braid(const Module& x, const Module& y) const {
  return flip(x.dim, y.dim) * act_tensor2(h_.R(), x, y);
}

Matrix RepCat::braid_inv(const Module& x, const Module& y) const {
  return act_tensor2(h_.R_inv(), x, y) * flip(y.dim, x.dim);
}

Matrix RepCat::twist(const Module& x) const { return x.act(h_.ribbon_inv()); }
Matrix RepCat::twist_inv(const Module& x) const { return x.act(h_.ribbon()); }

bool RepCat::is_intertwiner(const Module& x, const Module& y, const Matrix& f) const {
  if (f.rows() != y.dim || f.cols() != x.dim) return false;
  for (auto g : gens_)
    if (f * x.action[g] != y.action[g] * f) return false;
  return true;
}

std::vector<Matrix> RepCat::hom_basis(const Module& x, const Module& y) const {
  return hom_basis_gens(x, y, gens_);
}

const SimplesData& RepCat::simples() const {
  std::call_once(simples_once_, [this] { simples_ = std::make_shared<SimplesData>(compute_simples(h_.algebra())); });
  return *simples_;
}

std::vector<long> RepCat::composition_factors(const Module& x) const {
  const auto& sd = simples();
  std::vector<long> total(sd.simples.size());
  Module m = x;
  while (m.dim > 0) {
    Matrix rad = module_radical(m, sd.radical);
    auto layer = decompose_semisimple(quotient_module(m, rad), sd);
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += layer[i];
    if (rad.cols() == m.dim) throw InternalInconsistency("radical filtration does not descend");
    m = rad.cols() == 0 ? Module{m.name, 0, {}} : submodule(m, rad);
  }
  return total;
}

std::vector<long> RepCat::composition_factors_socle(const Module& x) const {
  const auto& sd = simples();
  std::vector<long> total(sd.simples.size());
  Module m = x;
  while (m.dim > 0) {
    Matrix soc = module_socle(m, sd.radical);
    if (soc.cols() == 0) throw InternalInconsistency("socle filtration does not descend");
    auto layer = decompose_semisimple(submodule(m, soc), sd);
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += layer[i];
    m = quotient_module(m, soc);
  }
  return total;
}

std::vector<long> RepCat::composition_factors_idempotent(const Module& x) const {
  const auto& sd = simples();
  std::vector<long> out;
  for (const auto& e : sd.idempotents) out.push_back(static_cast<long>(rank(x.act(e))));
  return out;
}

std::size_t RepCat::simple_index(const Module& m) const {
  const auto& sd = simples();
  Elem chi = character(m);
  for (std::size_t i = 0; i < sd.simples.size(); ++i)
    if (sd.simples[i].dim == m.dim && character(sd.simples[i]) == chi) return i;
  throw InternalInconsistency("module is not isomorphic to a listed simple");
}

std::vector<std::vector<std::vector<long>>> RepCat::grothendieck_ring() const {
  const auto& sd = simples();
  const std::size_t s = sd.simples.size();
  std::vector<std::vector<std::vector<long>>> n(s, std::vector<std::vector<long>>(s));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) n[i][j] = composition_factors_idempotent(tensor(sd.simples[i], sd.simples[j]));
  return n;
}

}  // namespace mtc
