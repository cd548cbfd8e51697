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

#include "mtc/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

namespace mtc {
namespace {

using Cx = std::complex<long double>;

// Simultaneous iteration on a monic complex polynomial, then Newton polish.
std::vector<Cx> durand_kerner(const std::vector<Cx>& monic) {
  const int n = static_cast<int>(monic.size()) - 1;
  auto eval = [&](Cx x) {
    Cx acc = 0;
    for (int i = n; i >= 0; --i) acc = acc * x + monic[i];
    return acc;
  };
  long double radius = 1;
  for (int i = 0; i < n; ++i) radius = std::max(radius, 1 + std::abs(monic[i]));
  std::vector<Cx> z(n);
  for (int i = 0; i < n; ++i) z[i] = std::polar(radius * 0.5L, 0.4L + 6.2831853071795864769L * i / n);
  for (int iter = 0; iter < 2000; ++iter) {
    long double change = 0;
    for (int i = 0; i < n; ++i) {
      Cx den = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= z[i] - z[j];
      if (std::abs(den) == 0) den = 1e-30L;
      Cx step = eval(z[i]) / den;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-30L) break;
  }
  for (auto& r : z) {
    for (int k = 0; k < 5; ++k) {
      Cx p = 0, dp = 0;
      for (int i = n; i >= 0; --i) {
        dp = dp * r + p;
        p = p * r + monic[i];
      }
      if (std::abs(dp) == 0) break;
      r -= p / dp;
    }
  }
  return z;
}

// Best rational approximation by continued fractions.
std::optional<Rational> rationalize(long double x) {
  if (!std::isfinite(x)) return std::nullopt;
  const long double tol = 1e-11L * std::max<long double>(1, std::fabs(x));
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  long double r = x;
  for (int it = 0; it < 64; ++it) {
    long double a = std::floor(r);
    if (std::fabs(a) > 1e15L) return std::nullopt;
    mpz_class ai = static_cast<long>(a);
    mpz_class p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    Rational cand(p1, q1);
    cand.canonicalize();
    if (std::fabs(static_cast<long double>(cand.get_d()) - x) <= tol) return cand;
    long double frac = r - a;
    if (frac < 1e-18L) return std::nullopt;
    r = 1 / frac;
    if (q1 > 1000000000L) return std::nullopt;
  }
  return std::nullopt;
}

// Solves a small dense complex system by partial pivoting.
std::vector<Cx> complex_solve(std::vector<std::vector<Cx>> a, std::vector<Cx> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      Cx f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<Cx> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Cx s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
    x[i] = s / a[i][i];
  }
  return x;
}

}  // namespace

void poly_trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int poly_degree(const Poly& p) {
  for (std::size_t i = p.size(); i-- > 0;)
    if (!p[i].is_zero()) return static_cast<int>(i);
  return -1;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  poly_trim(c);
  return c;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  poly_trim(c);
  return c;
}

Poly poly_derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Scalar(static_cast<long>(i)));
  poly_trim(d);
  return d;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  const int db = poly_degree(b);
  if (db < 0) throw DivisionByZero();
  Poly r = a;
  poly_trim(r);
  Poly q(std::max<int>(0, poly_degree(r) - db + 1));
  Scalar lead_inv = b[db].inverse();
  for (int d = poly_degree(r); d >= db; d = poly_degree(r)) {
    Scalar c = r[d] * lead_inv;
    q[d - db] = c;
    for (int j = 0; j <= db; ++j) r[d - db + j] -= c * b[j];
    r[d] = Scalar();
    poly_trim(r);
  }
  poly_trim(q);
  return {q, r};
}

Poly poly_gcd(Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  Scalar li = a.back().inverse();
  for (auto& c : a) c *= li;
  return a;
}

bool poly_is_squarefree(const Poly& p) {
  return poly_degree(poly_gcd(p, poly_derivative(p))) <= 0;
}

Scalar poly_eval(const Poly& p, const Scalar& x) {
  Scalar acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

std::vector<Scalar> roots_in_field(const Poly& p_in) {
  Poly p = p_in;
  poly_trim(p);
  if (p.empty()) throw FieldError("roots of the zero polynomial");
  for (const auto& c : p)
    if (!c.in_base_field()) throw FieldError("root finding needs base-field coefficients");
  Poly g = poly_gcd(p, poly_derivative(p));
  if (poly_degree(g) > 0) p = poly_divmod(p, g).first;
  Scalar li = p.back().inverse();
  for (auto& c : p) c *= li;
  const int deg = poly_degree(p);
  std::vector<Scalar> out;
  if (deg <= 0) return out;
  if (deg == 1) return {-p[0]};

  const int n = Field::order();
  const int phi = Field::degree();
  std::vector<int> units;
  for (int k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) units.push_back(k);
  // One representative per conjugate pair; its partner's root is the conjugate.
  std::vector<int> reps;
  for (int k : units)
    if (2 * k <= n || n <= 2) reps.push_back(k);

  std::vector<std::vector<Cx>> rep_roots;
  for (int k : reps) {
    std::vector<Cx> monic(deg + 1);
    for (int i = 0; i <= deg; ++i) monic[i] = p[i].embed(k);
    rep_roots.push_back(durand_kerner(monic));
  }

  std::vector<std::vector<Cx>> vander(phi, std::vector<Cx>(phi));
  const long double two_pi = 6.2831853071795864769L;
  std::vector<int> rows;
  for (int k : units) rows.push_back(k);
  for (int r = 0; r < phi; ++r)
    for (int j = 0; j < phi; ++j)
      vander[r][j] = std::polar<long double>(1, two_pi * rows[r] * j / n);

  std::vector<std::size_t> choice(reps.size(), 0);
  for (;;) {
    std::vector<Cx> values(phi);
    for (int r = 0; r < phi; ++r) {
      int k = rows[r];
      auto it = std::find(reps.begin(), reps.end(), k);
      if (it != reps.end()) {
        values[r] = rep_roots[it - reps.begin()][choice[it - reps.begin()]];
      } else {
        int partner = (n - k) % n;
        auto jt = std::find(reps.begin(), reps.end(), partner);
        values[r] = std::conj(rep_roots[jt - reps.begin()][choice[jt - reps.begin()]]);
      }
    }
    std::vector<Cx> coeff = phi == 1 ? values : complex_solve(vander, values);
    bool ok = true;
    Scalar cand;
    for (int j = 0; j < phi && ok; ++j) {
      if (std::fabs(coeff[j].imag()) > 1e-8L * std::max<long double>(1, std::abs(coeff[j]))) {
        ok = false;
        break;
      }
      auto q = rationalize(coeff[j].real());
      if (!q) {
        ok = false;
        break;
      }
      cand += Scalar(*q) * Scalar::root_of_unity(j);
    }
    if (ok && poly_eval(p, cand).is_zero() &&
        std::none_of(out.begin(), out.end(), [&](const Scalar& s) { return s == cand; }))
      out.push_back(cand);

    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == static_cast<std::size_t>(deg)) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  std::sort(out.begin(), out.end(),
            [](const Scalar& a, const Scalar& b) { return Scalar::compare(a, b) < 0; });
  return out;
}

}  // namespace mtc
