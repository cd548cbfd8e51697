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

#include "mtc/matrix.hpp"

#include <algorithm>
#include <unordered_map>

#include "mtc/kernels.hpp"

namespace mtc {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::column(const std::vector<Scalar>& v) {
  Matrix m(v.size(), 1);
  m.data_ = v;
  return m;
}

Matrix Matrix::row(const std::vector<Scalar>& v) {
  Matrix m(1, v.size());
  m.data_ = v;
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Scalar Matrix::trace() const {
  if (!is_square()) throw ShapeError("trace of a non-square matrix");
  Scalar t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("block out of range");
  Matrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

std::vector<Scalar> Matrix::col(std::size_t j) const {
  std::vector<Scalar> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_)
    if (!x.is_zero()) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  const std::size_t work = a.rows() * a.cols() * b.cols();
  if (kernels::thread_count() > 1 && work >= 32768) return kernels::matmul_parallel(a, b);
  return kernels::matmul_serial(a, b);
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += (*this)(i, j).str();
    }
    out += "]";
  }
  return out + "]";
}

Matrix hstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return {};
  std::size_t rows = blocks[0].rows(), cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw ShapeError("hstack: row counts differ");
    cols += b.cols();
  }
  Matrix m(rows, cols);
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, c0 + j) = b(i, j);
    c0 += b.cols();
  }
  return m;
}

Matrix vstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return {};
  std::size_t cols = blocks[0].cols(), rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw ShapeError("vstack: column counts differ");
    rows += b.rows();
  }
  Matrix m(rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(r0 + i, j) = b(i, j);
    r0 += b.rows();
  }
  return m;
}

Echelon row_reduce(Matrix a) {
  Echelon e;
  std::size_t r = 0;
  const std::size_t rows = a.rows(), cols = a.cols();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(p, k), a(r, k));
    Scalar inv = a(r, c).inverse();
    for (std::size_t k = c; k < cols; ++k)
      if (!a(r, k).is_zero()) a(r, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (std::size_t k = c; k < cols; ++k)
        if (!a(r, k).is_zero()) a(i, k) -= f * a(r, k);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(a);
  return e;
}

std::size_t rank(const Matrix& a) { return row_reduce(a).pivots.size(); }

std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("solve_right: row counts differ");
  const std::size_t n = a.cols(), k = b.cols();
  Echelon e = row_reduce(hstack({a, b}));
  // Pivots in the B block mean the system is inconsistent.
  std::size_t r = 0;
  for (; r < e.pivots.size(); ++r)
    if (e.pivots[r] >= n) return std::nullopt;
  Matrix x(n, k);
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) x(e.pivots[i], j) = e.reduced(i, n + j);
  return x;
}

std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b) {
  auto xt = solve_right(a.transpose(), b.transpose());
  if (!xt) return std::nullopt;
  return xt->transpose();
}

std::vector<Matrix> kernel_basis(const Matrix& a) {
  Echelon e = row_reduce(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Matrix> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Matrix v(n, 1);
    v(f, 0) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      if (!e.reduced(i, f).is_zero()) v(e.pivots[i], 0) = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix kernel_matrix(const Matrix& a) {
  auto basis = kernel_basis(a);
  if (basis.empty()) return Matrix(a.cols(), 0);
  return hstack(basis);
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.is_square()) throw ShapeError("inverse of a non-square matrix");
  if (rank(a) != a.rows()) return std::nullopt;
  return solve_right(a, Matrix::identity(a.rows()));
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) m(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return m;
}

Matrix partial_trace_left(const Matrix& m, std::size_t d, std::size_t k_out, std::size_t k_in) {
  if (m.rows() != d * k_out || m.cols() != d * k_in)
    throw ShapeError("partial_trace_left: shape mismatch");
  Matrix t(k_out, k_in);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t a = 0; a < k_out; ++a)
      for (std::size_t b = 0; b < k_in; ++b) {
        const Scalar& x = m(i * k_out + a, i * k_in + b);
        if (!x.is_zero()) t(a, b) += x;
      }
  return t;
}

std::vector<std::size_t> independent_columns(const Matrix& a) { return row_reduce(a).pivots; }

Matrix column_basis(const Matrix& a) {
  auto idx = independent_columns(a);
  Matrix m(a.rows(), idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) m(i, j) = a(i, idx[j]);
  return m;
}

std::vector<Scalar> minimal_polynomial(const Matrix& a) {
  if (!a.is_square()) throw ShapeError("minimal polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Matrix> powers{Matrix::identity(n)};
  auto flat = [](const Matrix& m) { return Matrix::column(m.data()); };
  Matrix span = flat(powers[0]);
  for (std::size_t k = 1; k <= n; ++k) {
    powers.push_back(powers.back() * a);
    Matrix target = flat(powers.back());
    if (auto c = solve_right(span, target)) {
      std::vector<Scalar> p(k + 1);
      for (std::size_t i = 0; i < k; ++i) p[i] = -(*c)(i, 0);
      p[k] = 1;
      return p;
    }
    span = hstack({span, target});
  }
  throw ShapeError("minimal polynomial: degree exceeded dimension");
}

void canonicalize(SparseVec& v) {
  std::sort(v.begin(), v.end(),
            [](const SparseEntry& x, const SparseEntry& y) { return x.first < y.first; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < v.size();) {
    std::size_t s = r + 1;
    Scalar acc = std::move(v[r].second);
    while (s < v.size() && v[s].first == v[r].first) acc += v[s++].second;
    if (!acc.is_zero()) {
      v[w].first = v[r].first;
      v[w].second = std::move(acc);
      ++w;
    }
    r = s;
  }
  v.resize(w);
}

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) s.cols_data_[j].emplace_back(static_cast<std::uint32_t>(i), m(i, j));
  return s;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) s.cols_data_[i].emplace_back(static_cast<std::uint32_t>(i), Scalar(1));
  return s;
}

void SparseMatrix::add(std::size_t i, std::size_t j, const Scalar& s) {
  if (!s.is_zero()) cols_data_[j].emplace_back(static_cast<std::uint32_t>(i), s);
}

void SparseMatrix::finalize() {
  for (auto& c : cols_data_) {
    std::sort(c.begin(), c.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::size_t w = 0;
    for (std::size_t r = 0; r < c.size();) {
      std::size_t s = r + 1;
      Scalar acc = std::move(c[r].second);
      while (s < c.size() && c[s].first == c[r].first) acc += c[s++].second;
      if (!acc.is_zero()) {
        c[w].first = c[r].first;
        c[w].second = std::move(acc);
        ++w;
      }
      r = s;
    }
    c.resize(w);
  }
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : cols_data_) n += c.size();
  return n;
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(rows_, cols_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (const auto& [i, v] : cols_data_[j]) m(i, j) += v;
  return m;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (const auto& [i, v] : cols_data_[j]) t.cols_data_[i].emplace_back(static_cast<std::uint32_t>(j), v);
  return t;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("sparse product: inner dimensions differ");
  SparseMatrix c(a.rows_, b.cols_);
  for (std::size_t j = 0; j < b.cols_; ++j) {
    auto& out = c.cols_data_[j];
    for (const auto& [k, y] : b.cols_data_[j])
      for (const auto& [i, x] : a.cols_data_[k]) out.emplace_back(i, x * y);
  }
  c.finalize();
  return c;
}

SparseMatrix& SparseMatrix::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    for (auto& c : cols_data_) c.clear();
    return *this;
  }
  for (auto& c : cols_data_)
    for (auto& e : c) e.second *= s;
  return *this;
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("sparse sum: shape mismatch");
  for (std::size_t j = 0; j < cols_; ++j)
    cols_data_[j].insert(cols_data_[j].end(), o.cols_data_[j].begin(), o.cols_data_[j].end());
  finalize();
  return *this;
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix m(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t j = 0; j < a.cols_; ++j)
    for (std::size_t l = 0; l < b.cols_; ++l) {
      auto& out = m.cols_data_[j * b.cols_ + l];
      for (const auto& [i, x] : a.cols_data_[j])
        for (const auto& [k, y] : b.cols_data_[l])
          out.emplace_back(static_cast<std::uint32_t>(i * b.rows_ + k), x * y);
    }
  return m;
}

}  // namespace mtc
