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

#include "mtc/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "mtc/roots.hpp"

namespace mtc {
namespace {

struct FieldState {
  int order = 1;
  int degree = 1;
  std::vector<long> cyclo{-1, 1};  // monic, low to high
  bool extended = false;
  Scalar ext_square;
};

FieldState& state() {
  static FieldState s;
  return s;
}

std::vector<long> int_poly_div(std::vector<long> a,
                                    const std::vector<long>& b) {
  // b monic; exact division assumed
  const std::size_t db = b.size() - 1;
  std::vector<long> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    long c = a[i];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

std::vector<long> cyclotomic(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = int_poly_div(p, cyclotomic(d));
  return p;
}

// Reduces an arbitrary-length coefficient vector modulo the cyclotomic
// polynomial, producing exactly degree() entries.
Coeffs reduce(std::vector<Rational>& c) {
  const auto& st = state();
  const std::size_t phi = st.degree;
  for (std::size_t k = c.size(); k-- > phi;) {
    if (sgn(c[k]) == 0) continue;
    Rational t = c[k];
    for (std::size_t j = 0; j <= phi; ++j)
      if (st.cyclo[j] != 0) c[k - phi + j] -= t * st.cyclo[j];
  }
  Coeffs out(phi);
  for (std::size_t j = 0; j < phi && j < c.size(); ++j) out[j] = c[j];
  return out;
}

bool all_zero(const Coeffs& c) {
  return std::all_of(c.begin(), c.end(), [](const Rational& q) { return sgn(q) == 0; });
}

void add_into(Coeffs& a, const Coeffs& b, int sign) {
  if (b.empty()) return;
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (sign > 0)
      a[i] += b[i];
    else
      a[i] -= b[i];
  }
}

Coeffs mul_base(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  if (a.size() == 1 || b.size() == 1) {
    const Rational& k = a.size() == 1 ? a[0] : b[0];
    Coeffs out = a.size() == 1 ? b : a;
    for (auto& q : out) q *= k;
    return out;
  }
  std::vector<Rational> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (sgn(b[j]) != 0) c[i + j] += a[i] * b[j];
  }
  return reduce(c);
}

Coeffs neg(Coeffs a) {
  for (auto& q : a) q = -q;
  return a;
}

// Inverse in Q(z) by solving the multiplication-by-a system.
Coeffs inv_base(const Coeffs& a) {
  if (a.empty() || all_zero(a)) throw DivisionByZero();
  const std::size_t n = a.size();
  if (n == 1) return Coeffs{1 / a[0]};
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> zj(j + 1);
    zj[j] = 1;
    Coeffs col = mul_base(a, reduce(zj));
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
  }
  m[0][n] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (sgn(m[p][c]) == 0) ++p;
    std::swap(m[p], m[c]);
    Rational piv = m[c][c];
    for (std::size_t k = c; k <= n; ++k) m[c][k] /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      Rational f = m[r][c];
      for (std::size_t k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  Coeffs out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = m[i][n];
  return out;
}

int compare_coeffs(const Coeffs& a, const Coeffs& b) {
  const std::size_t n = std::max(a.size(), b.size());
  static const Rational zero;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& x = i < a.size() ? a[i] : zero;
    const Rational& y = i < b.size() ? b[i] : zero;
    int c = cmp(x, y);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string monomial(std::size_t j, bool with_d) {
  std::string m;
  if (j == 1) m = "z";
  if (j > 1) m = "z^" + std::to_string(j);
  if (with_d) m += m.empty() ? "D" : "*D";
  return m;
}

void append_term(std::string& out, const Rational& c, const std::string& mono) {
  std::string t;
  if (mono.empty())
    t = c.get_str();
  else if (c == 1)
    t = mono;
  else if (c == -1)
    t = "-" + mono;
  else
    t = c.get_str() + "*" + mono;
  if (out.empty()) {
    out = t;
  } else if (t[0] == '-') {
    out += " - " + t.substr(1);
  } else {
    out += " + " + t;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Scalar run() {
    skip();
    if (pos_ == s_.size()) fail("empty scalar literal");
    Scalar acc;
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = take() == '-' ? -1 : 1;
    }
    acc = sign > 0 ? term() : -term();
    for (;;) {
      skip();
      if (pos_ == s_.size()) break;
      char c = take();
      if (c == '+')
        acc += term();
      else if (c == '-')
        acc -= term();
      else
        fail(std::string("unexpected '") + c + "'", pos_ - 1);
    }
    return acc;
  }

 private:
  Scalar term() {
    Scalar t = factor();
    for (;;) {
      skip();
      if (peek() != '*') return t;
      take();
      t *= factor();
    }
  }

  Scalar factor() {
    skip();
    char c = peek();
    if (c == 'z') {
      take();
      long k = 1;
      skip();
      if (peek() == '^') {
        take();
        skip();
        bool negative = false;
        if (peek() == '-') {
          take();
          negative = true;
        }
        k = integer();
        if (negative) k = -k;
      }
      return Scalar::root_of_unity(k);
    }
    if (c == 'D') {
      std::size_t at = pos_;
      take();
      if (!Field::extended()) fail("'D' used but no square root is adjoined", at);
      return Scalar::sqrt_symbol();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) take();
      std::string num(s_.substr(start, pos_ - start));
      skip();
      if (peek() == '/') {
        take();
        skip();
        std::size_t ds = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) take();
        if (ds == pos_) fail("expected denominator");
        std::string den(s_.substr(ds, pos_ - ds));
        mpz_class dz(den);
        if (sgn(dz) == 0) fail("zero denominator", ds);
        Rational q(mpz_class(num), dz);
        q.canonicalize();
        return Scalar(q);
      }
      return Scalar(Rational(mpz_class(num)));
    }
    fail(pos_ == s_.size() ? "unexpected end of literal" : std::string("unexpected '") + c + "'");
  }

  long integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) take();
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char take() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) { fail(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) {
    throw ScalarParseError(msg + " in \"" + std::string(s_) + "\"", at);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar::Scalar(long value) {
  if (value != 0) {
    base_.resize(state().degree);
    base_[0] = value;
  }
}

Scalar::Scalar(const Rational& value) {
  if (sgn(value) != 0) {
    base_.resize(state().degree);
    base_[0] = value;
    base_[0].canonicalize();
  }
}

Scalar::Scalar(Coeffs base, Coeffs ext) : base_(std::move(base)), ext_(std::move(ext)) {
  normalize();
}

void Scalar::normalize() {
  if (!base_.empty() && all_zero(base_)) base_.clear();
  if (!ext_.empty() && all_zero(ext_)) ext_.clear();
}

Scalar Scalar::root_of_unity(long k) {
  const int n = state().order;
  long e = ((k % n) + n) % n;
  std::vector<Rational> c(e + 1);
  c[e] = 1;
  return Scalar(reduce(c), {});
}

Scalar Scalar::sqrt_symbol() {
  if (!state().extended) throw FieldError("no square root is adjoined");
  Coeffs one(state().degree);
  one[0] = 1;
  return Scalar({}, std::move(one));
}

Scalar Scalar::parse(std::string_view text) { return Parser(text).run(); }

std::string Scalar::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t j = 0; j < base_.size(); ++j)
    if (sgn(base_[j]) != 0) append_term(out, base_[j], monomial(j, false));
  for (std::size_t j = 0; j < ext_.size(); ++j)
    if (sgn(ext_[j]) != 0) append_term(out, ext_[j], monomial(j, true));
  return out;
}

bool Scalar::is_one() const {
  if (!ext_.empty() || base_.empty() || base_[0] != 1) return false;
  for (std::size_t j = 1; j < base_.size(); ++j)
    if (sgn(base_[j]) != 0) return false;
  return true;
}

std::optional<Rational> Scalar::as_rational() const {
  if (!ext_.empty()) return std::nullopt;
  if (base_.empty()) return Rational(0);
  for (std::size_t j = 1; j < base_.size(); ++j)
    if (sgn(base_[j]) != 0) return std::nullopt;
  return base_[0];
}

Scalar& Scalar::operator+=(const Scalar& o) {
  add_into(base_, o.base_, 1);
  add_into(ext_, o.ext_, 1);
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  add_into(base_, o.base_, -1);
  add_into(ext_, o.ext_, -1);
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero() || o.is_zero()) {
    base_.clear();
    ext_.clear();
    return *this;
  }
  if (ext_.empty() && o.ext_.empty()) {
    base_ = mul_base(base_, o.base_);
    normalize();
    return *this;
  }
  Coeffs b = mul_base(base_, o.base_);
  Coeffs bd = mul_base(mul_base(ext_, o.ext_), state().ext_square.base_);
  add_into(b, bd, 1);
  Coeffs e = mul_base(base_, o.ext_);
  add_into(e, mul_base(ext_, o.base_), 1);
  base_ = std::move(b);
  ext_ = std::move(e);
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const { return Scalar(neg(base_), neg(ext_)); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (ext_.empty()) return Scalar(inv_base(base_), {});
  // (a + bD)^-1 = (a - bD) / (a^2 - b^2 D^2)
  Coeffs norm = mul_base(base_, base_);
  add_into(norm, mul_base(mul_base(ext_, ext_), state().ext_square.base_), -1);
  Coeffs ni = inv_base(norm);
  return Scalar(mul_base(base_, ni), neg(mul_base(ext_, ni)));
}

bool operator==(const Scalar& a, const Scalar& b) {
  return compare_coeffs(a.base_, b.base_) == 0 && compare_coeffs(a.ext_, b.ext_) == 0;
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
  int c = compare_coeffs(a.base_, b.base_);
  return c != 0 ? c : compare_coeffs(a.ext_, b.ext_);
}

std::complex<long double> Scalar::embed(long k) const {
  using C = std::complex<long double>;
  const int n = state().order;
  const long double pi = std::numbers::pi_v<long double>;
  C w = std::polar<long double>(1.0L, 2.0L * pi * static_cast<long double>(k) / n);
  auto eval = [&](const Coeffs& c) {
    C acc = 0, p = 1;
    for (const auto& q : c) {
      acc += p * static_cast<long double>(q.get_d());
      p *= w;
    }
    return acc;
  };
  C v = eval(base_);
  if (!ext_.empty()) v += eval(ext_) * std::sqrt(state().ext_square.embed(k));
  return v;
}

void Field::configure(int cyclotomic_order) {
  if (cyclotomic_order < 1) throw FieldError("cyclotomic order must be positive");
  auto& st = state();
  st.order = cyclotomic_order;
  st.cyclo = cyclotomic(cyclotomic_order);
  st.degree = static_cast<int>(st.cyclo.size()) - 1;
  st.extended = false;
  st.ext_square = Scalar();
}

int Field::order() { return state().order; }
int Field::degree() { return state().degree; }
bool Field::extended() { return state().extended; }
const Scalar& Field::extension_square() { return state().ext_square; }

void Field::reset_extension() {
  state().extended = false;
  state().ext_square = Scalar();
}

std::optional<Scalar> Field::sqrt_in_field(const Scalar& x) {
  if (!x.in_base_field()) throw FieldError("square roots are only taken in the base field");
  if (x.is_zero()) return Scalar();
  auto roots = roots_in_field(Poly{-x, Scalar(0), Scalar(1)});
  for (const auto& r : roots) {
    for (const auto& q : r.base()) {
      if (sgn(q) == 0) continue;
      if (sgn(q) > 0) return r;
      break;
    }
  }
  return std::nullopt;
}

Scalar Field::sqrt_adjoin(const Scalar& x) {
  if (auto r = sqrt_in_field(x)) return *r;
  auto& st = state();
  if (st.extended) {
    if (st.ext_square == x) return Scalar::sqrt_symbol();
    throw FieldError("a different square root (of " + st.ext_square.str() +
                     ") is already adjoined");
  }
  st.extended = true;
  st.ext_square = x;
  return Scalar::sqrt_symbol();
}

}  // namespace mtc
