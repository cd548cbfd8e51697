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

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mtc/scalar.hpp"

namespace mtc {

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/** Dense row-major matrix over the scalar field. */
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix column(const std::vector<Scalar>& v);
  static Matrix row(const std::vector<Scalar>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Scalar>& data() const { return data_; }
  std::vector<Scalar>& data() { return data_; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  Scalar trace() const;
  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  std::vector<Scalar> col(std::size_t j) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix hstack(const std::vector<Matrix>& blocks);
Matrix vstack(const std::vector<Matrix>& blocks);

/** Reduced row echelon form with leftmost pivots, first nonzero row swapped up. */
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each leading row
};
Echelon row_reduce(Matrix a);

std::size_t rank(const Matrix& a);
/** Some X with A X = B, or nothing when B leaves the column space of A. */
std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b);
/** Some X with X A = B, or nothing. */
std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b);
/** Basis of the null space as column vectors, one per free column. */
std::vector<Matrix> kernel_basis(const Matrix& a);
/** Kernel basis packed as the columns of one matrix. */
Matrix kernel_matrix(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a);
Matrix kron(const Matrix& a, const Matrix& b);
/**
 * Traces out the leftmost tensor factor of dimension d from a
 * (d*k_out) x (d*k_in) matrix.
 */
Matrix partial_trace_left(const Matrix& m, std::size_t d, std::size_t k_out, std::size_t k_in);
inline Matrix partial_trace_left(const Matrix& m, std::size_t d, std::size_t k) {
  return partial_trace_left(m, d, k, k);
}
/** Indices of a maximal independent prefix-greedy subset of the columns. */
std::vector<std::size_t> independent_columns(const Matrix& a);
/** Columns of a spanning its column space, in greedy order. */
Matrix column_basis(const Matrix& a);
/** Minimal polynomial of a square matrix, monic, low to high. */
std::vector<Scalar> minimal_polynomial(const Matrix& a);

/** Sorted sparse vector keyed by a mixed-radix basis index. */
using SparseEntry = std::pair<std::uint64_t, Scalar>;
using SparseVec = std::vector<SparseEntry>;

/** Sums duplicate keys, drops zeros, sorts by key. */
void canonicalize(SparseVec& v);

/** Column-compressed sparse matrix. */
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cols_data_(cols) {}
  static SparseMatrix from_dense(const Matrix& m);
  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<std::pair<std::uint32_t, Scalar>>& col(std::size_t j) const {
    return cols_data_[j];
  }
  /** Adds to entry (i, j); call finalize() after a batch of adds. */
  void add(std::size_t i, std::size_t j, const Scalar& s);
  void finalize();
  std::size_t nnz() const;

  Matrix to_dense() const;
  SparseMatrix transpose() const;
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  SparseMatrix& operator*=(const Scalar& s);
  SparseMatrix& operator+=(const SparseMatrix& o);
  friend SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> cols_data_;
};

}  // namespace mtc
