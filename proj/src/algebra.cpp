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

#include "mtc/algebra.hpp"

#include <algorithm>

#include "mtc/roots.hpp"

namespace mtc {

Algebra::Algebra(std::size_t n, std::vector<Row> products, Elem unit)
    : n_(n), products_(std::move(products)), unit_(std::move(unit)) {
  if (products_.size() != n_ * n_) throw ShapeError("algebra: product table has wrong size");
  if (unit_.size() != n_) throw ShapeError("algebra: unit has wrong size");
}

Elem Algebra::basis(std::size_t i) const {
  Elem e(n_);
  e[i] = 1;
  return e;
}

Elem Algebra::mul(const Elem& a, const Elem& b) const {
  Elem c(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (b[j].is_zero()) continue;
      Scalar ab = a[i] * b[j];
      for (const auto& [k, s] : product(i, j)) c[k] += ab * s;
    }
  }
  return c;
}

Matrix Algebra::left_mult(const Elem& x) const {
  Matrix m(n_, n_);
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t i = 0; i < n_; ++i) {
      if (x[i].is_zero()) continue;
      for (const auto& [k, s] : product(i, j)) m(k, j) += x[i] * s;
    }
  return m;
}

Matrix Algebra::right_mult(const Elem& x) const {
  Matrix m(n_, n_);
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t i = 0; i < n_; ++i) {
      if (x[i].is_zero()) continue;
      for (const auto& [k, s] : product(j, i)) m(k, j) += x[i] * s;
    }
  return m;
}

std::optional<Elem> Algebra::inverse(const Elem& x) const {
  auto y = solve_right(left_mult(x), Matrix::column(unit_));
  if (!y) return std::nullopt;
  Elem inv = y->col(0);
  if (mul(inv, x) != unit_) return std::nullopt;
  return inv;
}

bool Algebra::is_central(const Elem& x) const {
  for (std::size_t i = 0; i < n_; ++i) {
    Elem e = basis(i);
    if (mul(x, e) != mul(e, x)) return false;
  }
  return true;
}

Algebra Algebra::opposite() const {
  std::vector<Row> p(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) p[i * n_ + j] = product(j, i);
  return Algebra(n_, std::move(p), unit_);
}

Algebra Algebra::tensor(const Algebra& a, const Algebra& b) {
  const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  std::vector<Row> p(n * n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nb; ++l) {
          Row& out = p[(i * nb + j) * n + (k * nb + l)];
          for (const auto& [x, s] : a.product(i, k))
            for (const auto& [y, t] : b.product(j, l))
              out.emplace_back(static_cast<std::uint32_t>(x * nb + y), s * t);
        }
  Elem unit(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) unit[i * nb + j] = a.unit()[i] * b.unit()[j];
  return Algebra(n, std::move(p), std::move(unit));
}

Elem add(const Elem& a, const Elem& b) {
  Elem c = a;
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return c;
}

Elem sub(const Elem& a, const Elem& b) {
  Elem c = a;
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  return c;
}

Elem scale(const Elem& a, const Scalar& s) {
  Elem c = a;
  for (auto& x : c) x *= s;
  return c;
}

bool is_zero(const Elem& a) {
  return std::all_of(a.begin(), a.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::vector<Elem> algebra_characters(const Algebra& a) {
  // A character is a common left eigenvector of every left multiplication,
  // chi L_x = chi(x) chi, and it kills the commutator ideal I. On the rows
  // annihilating L_I the left multiplications commute, so the row space can
  // be split by joint eigenvalues one basis element at a time.
  const std::size_t n = a.dim();
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Elem c = sub(a.mul(a.basis(i), a.basis(j)), a.mul(a.basis(j), a.basis(i)));
      if (!is_zero(c)) gens.push_back(Matrix::column(c));
    }
  Matrix ideal = gens.empty() ? Matrix(n, 0) : column_basis(hstack(gens));
  for (std::size_t prev = 0; ideal.cols() != prev;) {
    prev = ideal.cols();
    std::vector<Matrix> more{ideal};
    for (std::size_t c = 0; c < ideal.cols(); ++c)
      for (std::size_t k = 0; k < n; ++k) {
        more.push_back(Matrix::column(a.mul(a.basis(k), ideal.col(c))));
        more.push_back(Matrix::column(a.mul(ideal.col(c), a.basis(k))));
      }
    ideal = column_basis(hstack(more));
  }
  Matrix start = Matrix::identity(n);
  if (ideal.cols() > 0) {
    std::vector<Matrix> ls;
    for (std::size_t c = 0; c < ideal.cols(); ++c) ls.push_back(a.left_mult(ideal.col(c)));
    auto ker = kernel_basis(hstack(ls).transpose());
    if (ker.empty()) return {};
    start = hstack(ker).transpose();
  }
  struct Branch {
    Matrix rows;  // basis of the joint eigenspace, one vector per row
    Elem values;
  };
  std::vector<Branch> branches{{start, Elem(n)}};
  for (std::size_t i = 0; i < n && !branches.empty(); ++i) {
    Matrix l = a.left_mult(a.basis(i));
    std::vector<Branch> next;
    for (auto& br : branches) {
      // Restrict w -> w L to the subspace: W L = C W.
      Matrix wl = br.rows * l;
      auto c = solve_left(br.rows, wl);
      if (!c) throw ShapeError("characters: subspace not invariant");
      for (const auto& ev : roots_in_field(minimal_polynomial(*c))) {
        Matrix shifted = *c - ev * Matrix::identity(c->rows());
        // Left kernel of the restricted operator, mapped back to full rows.
        auto ker = kernel_basis(shifted.transpose());
        if (ker.empty()) continue;
        Matrix coords = hstack(ker).transpose();
        Branch b{coords * br.rows, br.values};
        b.values[i] = ev;
        next.push_back(std::move(b));
      }
    }
    branches = std::move(next);
  }
  std::vector<Elem> out;
  for (auto& br : branches) {
    // The joint eigenvalues always define a character; check it anyway.
    const Elem& chi = br.values;
    Scalar at_unit;
    for (std::size_t k = 0; k < n; ++k) at_unit += a.unit()[k] * chi[k];
    if (!at_unit.is_one()) continue;
    out.push_back(chi);
  }
  std::sort(out.begin(), out.end(), [](const Elem& x, const Elem& y) {
    for (std::size_t k = 0; k < x.size(); ++k)
      if (int c = Scalar::compare(x[k], y[k]); c != 0) return c < 0;
    return false;
  });
  return out;
}

}  // namespace mtc
