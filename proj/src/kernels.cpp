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

#include "mtc/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>

namespace mtc::kernels {
namespace {

std::atomic<int> g_override{0};

}  // namespace

int thread_count() {
  if (int o = g_override.load(); o > 0) return o;
  if (const char* env = std::getenv("MTC_THREADS")) {
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end != env && n > 0) return static_cast<int>(n);
  }
  return std::max(1, omp_get_max_threads());
}

void set_thread_count(int n) { g_override.store(std::max(0, n)); }

Matrix matmul_serial(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("matmul: inner dimensions differ");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
    }
  return c;
}

Matrix matmul_parallel(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("matmul: inner dimensions differ");
  Matrix c(a.rows(), b.cols());
  const long rows = static_cast<long>(a.rows());
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
  for (long i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
    }
  return c;
}

SparseVec apply_span(const SparseVec& v, std::uint64_t span_in, std::uint64_t post,
                     const SparseMatrix& m) {
  if (m.cols() != span_in) throw ShapeError("apply_span: block size mismatch");
  const std::uint64_t span_out = m.rows();
  SparseVec out;
  out.reserve(v.size());
  for (const auto& [idx, val] : v) {
    const std::uint64_t suffix = idx % post;
    const std::uint64_t rest = idx / post;
    const std::uint64_t mid = rest % span_in;
    const std::uint64_t prefix = rest / span_in;
    for (const auto& [r, c] : m.col(mid))
      out.emplace_back((prefix * span_out + r) * post + suffix, c * val);
  }
  canonicalize(out);
  return out;
}

SparseVec swap_blocks(const SparseVec& v, std::uint64_t a, std::uint64_t b, std::uint64_t post) {
  SparseVec out;
  out.reserve(v.size());
  for (const auto& [idx, val] : v) {
    const std::uint64_t suffix = idx % post;
    std::uint64_t rest = idx / post;
    const std::uint64_t j = rest % b;
    rest /= b;
    const std::uint64_t i = rest % a;
    const std::uint64_t prefix = rest / a;
    out.emplace_back(((prefix * b + j) * a + i) * post + suffix, val);
  }
  std::sort(out.begin(), out.end(),
            [](const SparseEntry& x, const SparseEntry& y) { return x.first < y.first; });
  return out;
}

namespace detail {

void run_parallel(std::size_t n, const std::function<void(std::size_t)>& body) {
  std::exception_ptr error;
  std::mutex mu;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
  for (long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace detail
}  // namespace mtc::kernels
