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

#include "mtc/suite.hpp"

#include <array>
#include <chrono>
#include <functional>
#include <random>

#include "mtc/io.hpp"
#include "mtc/kernels.hpp"

namespace mtc {

namespace {

constexpr std::size_t kMaxTensorDim = 64;

void merge_prefixed(Report& into, const Report& from, const std::string& prefix) {
  for (Check c : from.checks()) {
    c.name = prefix + c.name;
    into.add(std::move(c));
  }
}

std::string label_of(const Module& m, std::size_t i) { return m.name.empty() ? "X" + std::to_string(i) : m.name; }

Matrix random_hom(std::mt19937& rng, const std::vector<Matrix>& basis, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> coef(-3, 3);
  Matrix m(r, c);
  for (const auto& b : basis) m += b * Scalar(coef(rng));
  return m;
}

const std::vector<std::pair<Stage, std::vector<Stage>>>& dependencies() {
  static const std::vector<std::pair<Stage, std::vector<Stage>>> deps = {
      {Stage::Hopf, {}},
      {Stage::Braiding, {Stage::Hopf}},
      {Stage::Ribbon, {Stage::Braiding}},
      {Stage::Category, {Stage::Ribbon}},
      {Stage::Coend, {Stage::Ribbon}},
      {Stage::Structure, {Stage::Coend}},
      {Stage::Integrals, {Stage::Structure}},
      {Stage::Modularity, {Stage::Structure}},
      {Stage::Transforms, {Stage::Integrals, Stage::Modularity}},
      {Stage::Characters, {Stage::Integrals, Stage::Modularity}},
      {Stage::Cutting, {Stage::Characters}},
      {Stage::Cardy, {Stage::Transforms, Stage::Characters, Stage::Cutting}},
  };
  return deps;
}

Status overall(const Report& r) {
  if (r.any_failed()) return Status::Fail;
  for (const auto& c : r.checks())
    if (c.status != Status::Skip) return Status::Pass;
  return r.checks().empty() ? Status::Pass : Status::Skip;
}

Report hopf_stage(Pipeline& p) {
  Report r;
  merge_prefixed(r, verify_hopf_axioms(p.hopf), "hopf.");
  p.usable[Stage::Hopf] = !r.any_failed();
  return r;
}

Report braiding_stage(Pipeline& p) {
  Report r;
  merge_prefixed(r, verify_quasitriangular(p.hopf), "braiding.");
  p.usable[Stage::Braiding] = !r.any_failed();
  return r;
}

Report ribbon_stage(Pipeline& p, const SuiteOptions& opts) {
  Report r;
  if (!p.hopf.has_ribbon()) {
    const std::size_t nr = solve_ribbon(p.hopf).size();
    std::string hint = nr ? std::to_string(nr) + " ribbon elements exist; choose one with --ribbon IDX"
                          : "no ribbon element exists; a balanced twist can be chosen with --balanced IDX";
    r.fail("ribbon.ribbon_present", hint);
    p.usable[Stage::Ribbon] = false;
    return r;
  }
  Report v = verify_ribbon(p.hopf);
  merge_prefixed(r, v, "ribbon.");
  bool usable = !v.any_failed();
  if (opts.balanced) {
    // A balanced twist only needs to fail self-duality; everything else must hold.
    usable = true;
    for (const auto& c : v.checks())
      if (c.status == Status::Fail && c.name != "ribbon_antipode") usable = false;
    r.pass("ribbon.balanced_twist", "S(v) = v is not required; later stages measure its effect");
  }
  p.usable[Stage::Ribbon] = usable;
  return r;
}

Report category_stage(Pipeline& p) {
  Report r = verify_category(*p.cat, certificate_objects(*p.cat));
  p.usable[Stage::Category] = !r.any_failed();
  return r;
}

Report coend_stage(Pipeline& p) {
  Report r;
  p.cd = build_coend(*p.cat);
  r.expect("coend.carrier_module", is_module(p.hopf.algebra(), p.cd.carrier));
  r.expect("coend.witness_invertible", inverse(p.cd.witness).has_value(),
           "iota_H o j is not invertible, so L is not generated by iota_H");
  p.usable[Stage::Coend] = !r.any_failed();
  return r;
}

Report structure_stage(Pipeline& p) {
  Report r = solve_structure_morphisms(p.cd);
  p.usable[Stage::Structure] = p.cd.structure_done;
  return r;
}

Report integrals_stage(Pipeline& p) {
  Report r = integrals_and_zeta(p.cd);
  p.usable[Stage::Integrals] = p.cd.integrals_done;
  if (p.cd.integrals_done) {
    p.facts["zeta"] = p.cd.zeta.str();
    p.facts["D"] = p.cd.D.str();
  }
  return r;
}

Report modularity_stage(Pipeline& p) {
  Report r;
  const bool modular = modularity_test(p.cd);
  r.expect("modularity.omega_nondegenerate", modular, "the Hopf pairing omega of L is degenerate");
  p.facts["modular"] = modular ? "true" : "false";
  p.usable[Stage::Modularity] = modular;
  return r;
}

Report transforms_stage(Pipeline& p) {
  Report r = radford_pairing(p.cd);
  r.merge(s_t_transforms(p.cd));
  r.expect("coend.omega_bar_from_antipode",
           p.cd.omega * kron(p.cd.antipode, Matrix::identity(p.cd.n)) == p.cd.omega_bar &&
               p.cd.omega * kron(Matrix::identity(p.cd.n), p.cd.antipode) == p.cd.omega_bar);
  p.usable[Stage::Transforms] = p.cd.st_done;
  return r;
}

bool is_cutting_check(const std::string& name) {
  return name.size() >= 8 && (name.ends_with(".cutting") || name.ends_with(".cutting_integral"));
}

Report characters_stage(Pipeline& p, Report& cutting) {
  const auto objs = certificate_objects(*p.cat);
  auto reps = kernels::parallel_map<Report>(objs.size(), [&](std::size_t i) {
    return verify_object(p.cd, objs[i], label_of(objs[i], i));
  });
  Report r;
  for (const auto& rep : reps)
    for (const auto& c : rep.checks()) (is_cutting_check(c.name) ? cutting : r).add(c);
  const auto& simples = p.cat->simples().simples;
  std::vector<Matrix> cochi;
  for (const auto& s : simples) cochi.push_back(characters(p.cd, s).cochi);
  r.expect("characters.cochi_independent", rank(hstack(cochi)) == simples.size(),
           "cocharacters of the simples are linearly dependent");
  p.usable[Stage::Characters] = !r.any_failed();
  return r;
}

Report cutting_stage(Pipeline& p, Report pending) {
  Module one = p.cat->unit_object();
  Cutting c = cutting_decomposition(p.cd, one);
  p.facts["cutting.m.unit"] = std::to_string(c.m);
  pending.expect("object.unit.cutting", c.m == 0 ? c.E.is_zero() : c.b * c.a == c.E);
  p.usable[Stage::Cutting] = !pending.any_failed();
  return pending;
}

Report cardy_stage(Pipeline& p, const SuiteOptions& opts) {
  const RepCat& cat = *p.cat;
  const CoendData& cd = p.cd;
  Report r;
  const auto& s = cat.simples().simples;
  const auto objs = certificate_objects(cat);
  Module one = cat.unit_object();

  std::vector<LModule> mods = {free_lmodule(cd, one), product_lmodule(cd, s.front(), s.back()),
                               product_lmodule(cd, s.back(), s.back())};
  for (const auto& k : {one, s.back()}) merge_prefixed(r, verify_adjunction(cd, k, mods), "");

  bool pairing = true;
  for (const auto& m : objs)
    for (const auto& n : objs) {
      if (m.dim * n.dim > kMaxTensorDim) continue;
      Annulus a = annulus_amplitude(cd, m, n);
      pairing = pairing && boundary_pairing(cd, m, n) == cd.zeta * (cd.lambda * a.open)(0, 0);
    }
  r.expect("cardy.boundary.pairing", pairing, "boundary pairing differs from zeta lambda of the annulus");

  TorusPartition tp = torus_partition(cd);
  r.expect("cardy.torus.cartan", tp.cartan == cat.simples().cartan);
  r.expect("cardy.torus.trace", tp.trace == static_cast<long>(cd.n), "sum C dim dim differs from dim L");

  DefectAlgebra da = defect_algebra(cd);
  r.expect("cardy.defect.span", da.span_dim == s.size(),
           "span of the defect operators has dimension " + std::to_string(da.span_dim));
  r.expect("cardy.defect.grothendieck", da.matches_grothendieck);
  r.expect("cardy.defect.semisimplicity", da.semisimple == da.hopf_semisimple,
           "trace-form semisimplicity of the defect algebra differs from that of H");
  if (!da.semisimple)
    r.expect("cardy.defect.non_diagonalisable", !da.non_diagonalisable.empty(),
             "no defect operator with a repeated root was found");
  p.facts["defect.semisimple"] = da.semisimple ? "true" : "false";
  if (!da.non_diagonalisable.empty()) p.facts["defect.non_diagonalisable"] = da.non_diagonalisable;
  std::string disagree;
  for (const auto& op : da.operators)
    if (!op.formulas_agree) disagree += (disagree.empty() ? "" : ",") + op.label;
  r.expect("cardy.defect.formulas_agree", disagree.empty(), "formulas differ for " + disagree);
  r.merge(verify_defect_composition(cd));

  std::mt19937 rng(opts.seed);
  std::vector<Module> ks = {one, objs.back()};
  std::size_t checked = 0;
  for (std::size_t t = 0; checked < opts.two_point_pairs && t < 40 * opts.two_point_pairs + 40; ++t) {
    const Module& x = objs[rng() % objs.size()];
    const Module& xb = objs[rng() % objs.size()];
    const Module& y = objs[rng() % objs.size()];
    const Module& yb = objs[rng() % objs.size()];
    const Module& k = ks[rng() % ks.size()];
    if (x.dim * xb.dim > kMaxTensorDim || y.dim * yb.dim > kMaxTensorDim) continue;
    auto fb = cat.hom_basis(cat.tensor(x, xb), k);
    auto gb = cat.hom_basis(k, cat.tensor(y, yb));
    if (fb.empty() || gb.empty()) continue;
    Matrix f = random_hom(rng, fb, k.dim, x.dim * xb.dim);
    Matrix g = random_hom(rng, gb, y.dim * yb.dim, k.dim);
    bulk_two_point(cd, x, xb, y, yb, k, f, g);
    ++checked;
  }
  r.expect("cardy.two_point", checked >= opts.two_point_pairs,
           "only " + std::to_string(checked) + " typed pairs found");
  p.facts["two_point.pairs"] = std::to_string(checked);
  p.usable[Stage::Cardy] = !r.any_failed();
  return r;
}

}  // namespace

const char* stage_name(Stage s) {
  switch (s) {
    case Stage::Hopf: return "hopf";
    case Stage::Braiding: return "braiding";
    case Stage::Ribbon: return "ribbon";
    case Stage::Category: return "category";
    case Stage::Coend: return "coend";
    case Stage::Structure: return "structure";
    case Stage::Integrals: return "integrals";
    case Stage::Modularity: return "modularity";
    case Stage::Transforms: return "transforms";
    case Stage::Characters: return "characters";
    case Stage::Cutting: return "cutting";
    case Stage::Cardy: return "cardy";
  }
  return "?";
}

bool Pipeline::ready(Stage s) const {
  auto it = usable.find(s);
  return it != usable.end() && it->second;
}

HopfAlgebra select_twist(const HopfAlgebra& h, const SuiteOptions& opts) {
  if (opts.ribbon && opts.balanced) throw ParseError("--ribbon and --balanced are exclusive");
  if (opts.ribbon) {
    auto all = solve_ribbon(h);
    if (*opts.ribbon >= all.size())
      throw ParseError("--ribbon " + std::to_string(*opts.ribbon) + ": only " + std::to_string(all.size()) +
                       " ribbon elements");
    return h.with_ribbon(all[*opts.ribbon]);
  }
  if (opts.balanced) {
    auto all = solve_balancing(h);
    if (*opts.balanced >= all.size())
      throw ParseError("--balanced " + std::to_string(*opts.balanced) + ": only " + std::to_string(all.size()) +
                       " balancing elements");
    return h.with_ribbon(all[*opts.balanced]);
  }
  return h;
}

Pipeline run_pipeline(const HopfAlgebra& h, const SuiteOptions& opts, Stage last) {
  Pipeline p;
  p.hopf = select_twist(h, opts);
  p.balanced = opts.balanced.has_value();
  Report cutting_pending;
  for (const auto& [stage, deps] : dependencies()) {
    if (static_cast<int>(stage) > static_cast<int>(last)) break;
    const std::string name = std::string("stage.") + stage_name(stage);
    std::string blocked;
    for (Stage d : deps)
      if (!p.ready(d)) blocked += (blocked.empty() ? "" : ",") + std::string(stage_name(d));
    if (!blocked.empty()) {
      p.usable[stage] = false;
      p.status[stage] = Status::Skip;
      p.report.skip(name, "prerequisite not usable: " + blocked);
      continue;
    }
    if (stage == Stage::Category || stage == Stage::Coend)
      if (!p.cat) p.cat = std::make_unique<RepCat>(p.hopf);
    const auto t0 = std::chrono::steady_clock::now();
    Report r;
    switch (stage) {
      case Stage::Hopf: r = hopf_stage(p); break;
      case Stage::Braiding: r = braiding_stage(p); break;
      case Stage::Ribbon: r = ribbon_stage(p, opts); break;
      case Stage::Category: r = category_stage(p); break;
      case Stage::Coend: r = coend_stage(p); break;
      case Stage::Structure: r = structure_stage(p); break;
      case Stage::Integrals: r = integrals_stage(p); break;
      case Stage::Modularity: r = modularity_stage(p); break;
      case Stage::Transforms: r = transforms_stage(p); break;
      case Stage::Characters: r = characters_stage(p, cutting_pending); break;
      case Stage::Cutting: r = cutting_stage(p, cutting_pending); break;
      case Stage::Cardy: r = cardy_stage(p, opts); break;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const Status st = overall(r);
    p.status[stage] = st;
    Check summary{name, st, "", {}, secs};
    if (st == Status::Fail && p.ready(stage)) summary.detail = "failures recorded; later stages still run";
    if (st == Status::Pass && !p.ready(stage)) {
      summary.status = Status::Fail;
      summary.detail = "outputs unusable by later stages";
    }
    p.report.add(std::move(summary));
    p.report.merge(r);
  }
  return p;
}

Report run_suite(const HopfAlgebra& h, const SuiteOptions& opts) { return run_pipeline(h, opts).report; }

Report verify_category(const RepCat& c, const std::vector<Module>& objs) {
  Report r;
  auto id = [](std::size_t d) { return Matrix::identity(d); };
  bool snakes = true, duals = true;
  for (const auto& x : objs) {
    const std::size_t d = x.dim;
    Module xd = c.dual(x);
    duals = duals && c.is_intertwiner(c.tensor(xd, x), c.unit_object(), c.ev(x)) &&
            c.is_intertwiner(c.unit_object(), c.tensor(x, xd), c.coev(x)) &&
            c.is_intertwiner(c.tensor(x, xd), c.unit_object(), c.evt(x)) &&
            c.is_intertwiner(c.unit_object(), c.tensor(xd, x), c.coevt(x));
    snakes = snakes && kron(id(d), c.ev(x)) * kron(c.coev(x), id(d)) == id(d) &&
             kron(c.ev(x), id(d)) * kron(id(d), c.coev(x)) == id(d) &&
             kron(c.evt(x), id(d)) * kron(id(d), c.coevt(x)) == id(d) &&
             kron(id(d), c.evt(x)) * kron(c.coevt(x), id(d)) == id(d);
  }
  r.expect("category.duality_maps_intertwine", duals);
  r.expect("category.snake", snakes, "a zig-zag composite is not the identity");

  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t j = 0; j < objs.size(); ++j)
      for (std::size_t k = 0; k < objs.size(); ++k)
        if (objs[i].dim * objs[j].dim * objs[k].dim <= kMaxTensorDim) triples.push_back({i, j, k});
  auto hex = kernels::parallel_map<int>(triples.size(), [&](std::size_t t) {
    const Module &x = objs[triples[t][0]], &y = objs[triples[t][1]], &z = objs[triples[t][2]];
    bool ok = c.braid(x, c.tensor(y, z)) == kron(id(y.dim), c.braid(x, z)) * kron(c.braid(x, y), id(z.dim)) &&
              c.braid(c.tensor(x, y), z) == kron(c.braid(x, z), id(y.dim)) * kron(id(x.dim), c.braid(y, z));
    return ok ? 1 : 0;
  });
  std::string bad_hex;
  for (std::size_t t = 0; t < triples.size(); ++t)
    if (!hex[t])
      bad_hex = std::to_string(triples[t][0]) + "," + std::to_string(triples[t][1]) + "," + std::to_string(triples[t][2]);
  if (bad_hex.empty())
    r.pass("category.hexagons", std::to_string(triples.size()) + " triples");
  else
    r.fail("category.hexagons", "hexagon fails", {{"objects", bad_hex}});

  bool natural = true, twist_product = true;
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t j = 0; j < objs.size(); ++j) {
      const Module &x = objs[i], &y = objs[j];
      if (x.dim * y.dim > kMaxTensorDim) continue;
      Matrix lhs = c.twist(c.tensor(x, y));
      twist_product = twist_product && lhs == c.braid(y, x) * c.braid(x, y) * kron(c.twist(x), c.twist(y));
      natural = natural && c.braid_inv(x, y) * c.braid(x, y) == id(x.dim * y.dim);
      for (const auto& f : c.hom_basis(x, y)) {
        natural = natural && c.twist(y) * f == f * c.twist(x);
        for (const auto& z : objs)
          if (z.dim * y.dim <= kMaxTensorDim)
            natural = natural && c.braid(y, z) * kron(f, id(z.dim)) == kron(id(z.dim), f) * c.braid(x, z);
      }
    }
  r.expect("category.naturality", natural);
  r.expect("category.twist_of_tensor", twist_product, "theta_{X(x)Y} differs from beta beta (theta (x) theta)");
  return r;
}

}  // namespace mtc
