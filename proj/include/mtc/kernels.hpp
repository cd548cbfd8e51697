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
#include <exception>
#include <functional>
#include <mutex>
#include <vector>

#include "mtc/matrix.hpp"

namespace mtc::kernels {

/** Worker count: MTC_THREADS if set and positive, else the OpenMP default. */
int thread_count();
/** Overrides the worker count for this process; 0 restores the default. */
void set_thread_count(int n);

Matrix matmul_serial(const Matrix& a, const Matrix& b);
Matrix matmul_parallel(const Matrix& a, const Matrix& b);

/**
 * Applies m to a contiguous block of legs. An index decomposes as
 * (prefix * span_in + mid) * post + suffix; mid is replaced by the rows of
 * column mid of m.
 */
SparseVec apply_span(const SparseVec& v, std::uint64_t span_in, std::uint64_t post,
                     const SparseMatrix& m);
/** Exchanges two adjacent blocks of sizes a then b, followed by post states. */
SparseVec swap_blocks(const SparseVec& v, std::uint64_t a, std::uint64_t b, std::uint64_t post);

namespace detail {
void run_parallel(std::size_t n, const std::function<void(std::size_t)>& body);
}

/** out[i] = f(i), evaluated one at a time. Reference for parallel_map. */
template <class T, class F>
std::vector<T> serial_map(std::size_t n, F&& f) {
  std::vector<T> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
  return out;
}

/** out[i] = f(i), with iterations spread over thread_count() workers. */
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& f) {
  std::vector<T> out(n);
  detail::run_parallel(n, [&](std::size_t i) { out[i] = f(i); });
  return out;
}

}  // namespace mtc::kernels
