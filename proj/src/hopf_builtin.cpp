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

#include <map>

#include "mtc/hopf.hpp"

namespace mtc {
namespace {

long param(const std::vector<std::pair<std::string, long>>& params, const std::string& key,
           long fallback) {
  for (const auto& [k, v] : params)
    if (k == key) return v;
  return fallback;
}

HopfData trivial_data() {
  HopfData d;
  d.name = "trivial";
  d.cyclotomic_order = 1;
  d.basis = {"1"};
  d.mult = {{0, 0, 0, Scalar(1)}};
  d.unit = {{0, Scalar(1)}};
  d.comult = {{0, 0, 0, Scalar(1)}};
  d.counit = {{0, Scalar(1)}};
  d.antipode = {{0, 0, Scalar(1)}};
  d.rmatrix = {{0, 0, Scalar(1)}};
  d.ribbon = std::vector<std::pair<std::size_t, Scalar>>{{0, Scalar(1)}};
  return d;
}

// k[Z/n] with trivial R-matrix and v = 1.
HopfData group_data(long n) {
  if (n < 1) throw UnknownBuiltin("group_algebra needs n >= 1");
  HopfData d;
  d.name = "group_algebra(" + std::to_string(n) + ")";
  d.cyclotomic_order = static_cast<int>(n);
  const std::size_t m = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < m; ++i) d.basis.push_back(i == 0 ? "1" : "g^" + std::to_string(i));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) d.mult.push_back({i, j, (i + j) % m, Scalar(1)});
    d.comult.push_back({i, i, i, Scalar(1)});
    d.counit.emplace_back(i, Scalar(1));
    d.antipode.push_back({i, (m - i) % m, Scalar(1)});
  }
  d.unit = {{0, Scalar(1)}};
  d.rmatrix = {{0, 0, Scalar(1)}};
  d.ribbon = std::vector<std::pair<std::size_t, Scalar>>{{0, Scalar(1)}};
  return d;
}

// Sweedler's algebra on 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx.
HopfData sweedler_data() {
  HopfData d;
  d.name = "sweedler";
  d.cyclotomic_order = 1;
  d.basis = {"1", "g", "x", "gx"};
  const std::size_t one = 0, g = 1, x = 2, gx = 3;
  Scalar p(1), m(-1);
  for (std::size_t a = 0; a < 4; ++a) {
    d.mult.push_back({one, a, a, p});
    if (a != one) d.mult.push_back({a, one, a, p});
  }
  d.mult.push_back({g, g, one, p});
  d.mult.push_back({g, x, gx, p});
  d.mult.push_back({g, gx, x, p});
  d.mult.push_back({x, g, gx, m});
  d.mult.push_back({gx, g, x, m});
  d.unit = {{one, p}};
  d.comult = {{one, one, one, p}, {g, g, g, p}, {x, x, one, p}, {x, g, x, p},
              {gx, gx, g, p},     {gx, one, gx, p}};
  d.counit = {{one, p}, {g, p}};
  d.antipode = {{one, one, p}, {g, g, p}, {x, gx, m}, {gx, x, p}};
  Scalar h(Rational(1, 2)), mh(Rational(-1, 2));
  d.rmatrix = {{one, one, h}, {one, g, h}, {g, one, h}, {g, g, mh}};
  d.ribbon = std::vector<std::pair<std::size_t, Scalar>>{{one, p}};
  return d;
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"trivial", "group_algebra", "sweedler", "double_group_algebra", "double_z2",
          "double_sweedler"};
}

HopfAlgebra builtin(const std::string& name, const std::vector<std::pair<std::string, long>>& params) {
  // The field must be fixed before any structure constants are built.
  auto configured = [&](int default_order) {
    int order = static_cast<int>(param(params, "N", default_order));
    Field::configure(order);
    return order;
  };
  if (name == "trivial") {
    configured(1);
    return HopfAlgebra(trivial_data());
  }
  if (name == "group_algebra" || name == "double_group_algebra" || name == "double_z2") {
    long n = name == "double_z2" ? 2 : param(params, "n", 2);
    if (n < 1) throw UnknownBuiltin(name + " needs n >= 1");
    int order = configured(static_cast<int>(n));
    HopfData d = group_data(n);
    d.cyclotomic_order = order;
    HopfAlgebra g(d);
    if (name == "group_algebra") return g;
    return drinfeld_double(g).with_name(name == "double_z2" ? "double_z2" : "D(" + g.name() + ")");
  }
  if (name == "sweedler" || name == "double_sweedler") {
    int order = configured(name == "sweedler" ? 1 : 4);
    HopfData d = sweedler_data();
    d.cyclotomic_order = order;
    HopfAlgebra s(d);
    if (name == "sweedler") return s;
    return drinfeld_double(s).with_name("double_sweedler");
  }
  throw UnknownBuiltin("unknown builtin algebra '" + name + "'");
}

}  // namespace mtc
