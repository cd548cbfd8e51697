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

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>
#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mtc {

using Rational = mpq_class;
using Coeffs = boost::container::small_vector<Rational, 2>;

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public FieldError {
 public:
  DivisionByZero() : FieldError("division by zero in exact scalar field") {}
};

class ScalarParseError : public FieldError {
 public:
  ScalarParseError(const std::string& what, std::size_t column)
      : FieldError(what + " (column " + std::to_string(column + 1) + ")"),
        column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/**
 * Element of Q(z)(D) where z is a primitive N-th root of unity for the
 * process-wide order N (see Field) and D is an optional adjoined square root
 * with D^2 in Q(z).
 *
 * Stored as base + ext * D, each part a coefficient vector over the power
 * basis 1, z, ..., z^(phi(N)-1). An empty vector denotes zero.
 */
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value);  // NOLINT(google-explicit-constructor)
  explicit Scalar(const Rational& value);

  /** z^k, reduced modulo the N-th cyclotomic polynomial. */
  static Scalar root_of_unity(long k);
  /** The adjoined square root D. Requires an active extension. */
  static Scalar sqrt_symbol();
  static Scalar parse(std::string_view text);

  std::string str() const;

  bool is_zero() const { return base_.empty() && ext_.empty(); }
  bool is_one() const;
  bool in_base_field() const { return ext_.empty(); }
  std::optional<Rational> as_rational() const;

  const Coeffs& base() const { return base_; }
  const Coeffs& ext() const { return ext_; }

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /** Total order on canonical coefficient vectors; used for tie-breaking. */
  static int compare(const Scalar& a, const Scalar& b);

  /** Numeric value under the embedding z -> exp(2 pi i k / N). */
  std::complex<long double> embed(long k = 1) const;

 private:
  Scalar(Coeffs base, Coeffs ext);
  void normalize();

  Coeffs base_;
  Coeffs ext_;
};

/**
 * Process-wide scalar field configuration. Configure once before building
 * any scalars; values built under a different configuration are invalid.
 */
class Field {
 public:
  static void configure(int cyclotomic_order);
  static int order();
  static int degree();
  static bool extended();
  /** D^2 when extended. */
  static const Scalar& extension_square();
  /** Drops the adjoined square root, keeping the cyclotomic order. */
  static void reset_extension();

  /**
   * A square root of x in Q(z): the root whose first nonzero coefficient is
   * positive. Empty if x is not a square in the base field.
   */
  static std::optional<Scalar> sqrt_in_field(const Scalar& x);
  /**
   * A square root of x, adjoining D with D^2 = x when no in-field root
   * exists. Fails if a different extension is already active.
   */
  static Scalar sqrt_adjoin(const Scalar& x);
};

}  // namespace mtc
