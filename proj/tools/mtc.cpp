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

// Command-line front end. Exit codes: 0 all checks pass, 1 a check failed,
// 2 usage or input error, 3 internal inconsistency.

#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "mtc/diagram.hpp"
#include "mtc/io.hpp"
#include "mtc/suite.hpp"

namespace {

using namespace mtc;

constexpr int kPass = 0, kCheckFailed = 1, kUsage = 2, kInternal = 3;

struct Common {
  std::string algebra, builtin, format = "text", out;
  std::vector<std::string> params;
  std::optional<std::size_t> ribbon, balanced;
};

void add_common(CLI::App* cmd, Common& c) {
  auto* a = cmd->add_option("--algebra", c.algebra, "algebra spec file");
  auto* b = cmd->add_option("--builtin", c.builtin, "builtin algebra name");
  a->excludes(b);
  b->excludes(a);
  cmd->add_option("--param", c.params, "builtin parameter K=V")->allow_extra_args(false);
  auto* r = cmd->add_option("--ribbon", c.ribbon, "index into the ribbon elements");
  auto* bl = cmd->add_option("--balanced", c.balanced, "index into the balancing elements (need not be ribbon)");
  r->excludes(bl);
  cmd->add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", c.out, "output path (default stdout)");
}

AlgebraSource source(const Common& c) {
  AlgebraSource s;
  if (!c.algebra.empty()) s.file = c.algebra;
  if (!c.builtin.empty()) s.builtin = c.builtin;
  for (const auto& p : c.params) {
    auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("--param expects K=V, got '" + p + "'");
    long v = 0;
    try {
      std::size_t used = 0;
      v = std::stol(p.substr(eq + 1), &used);
      if (used != p.size() - eq - 1) throw std::invalid_argument(p);
    } catch (const std::exception&) {
      throw ParseError("--param " + p + ": value must be an integer");
    }
    s.params.emplace_back(p.substr(0, eq), v);
  }
  return s;
}

SuiteOptions options(const Common& c) {
  SuiteOptions o;
  o.ribbon = c.ribbon;
  o.balanced = c.balanced;
  return o;
}

std::vector<std::string> labels(const std::vector<Module>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.name);
  return out;
}

/** S_i, P_i (underscore optional), 1 or unit, or a module file. */
Module resolve_object(const RepCat& cat, const std::string& spec) {
  if (spec == "1" || spec == "unit") return cat.unit_object();
  const auto& sd = cat.simples();
  if (spec.size() >= 2 && (spec[0] == 'S' || spec[0] == 'P')) {
    std::string digits = spec.substr(spec[1] == '_' ? 2 : 1);
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
      std::size_t i = std::stoul(digits);
      const auto& list = spec[0] == 'S' ? sd.simples : sd.projective_covers;
      if (i >= list.size()) throw ParseError("object " + spec + ": only " + std::to_string(list.size()) + " simples");
      return list[i];
    }
  }
  Module m = read_module_file(spec, cat.hopf().dim());
  if (!is_module(cat.algebra(), m)) throw ParseError(spec + ": action matrices do not define a module");
  if (m.name.empty()) m.name = spec;
  return m;
}

/** Runs the pipeline far enough for coend-level commands; returns the failed report otherwise. */
bool complete(const Pipeline& p, Stage need, Document& doc) {
  if (p.ready(need)) return true;
  doc.report = p.report;
  doc.facts = p.facts;
  return false;
}

int finish(const Document& doc, const Common& c) {
  emit(doc, parse_format(c.format), c.out);
  if (doc.report && doc.report->any_failed()) return kCheckFailed;
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in module categories of finite ribbon Hopf algebras"};
  app.require_subcommand(1);
  Common c;

  auto* verify = app.add_subcommand("verify", "run the full dependency-ordered suite");
  add_common(verify, c);
  std::size_t pairs = 20;
  unsigned seed = 1;
  verify->add_option("--pairs", pairs, "random two-point pairs");
  verify->add_option("--seed", seed, "seed for the random pairs");

  auto* simples = app.add_subcommand("simples", "simple modules and their projective covers");
  add_common(simples, c);
  auto* cartan = app.add_subcommand("cartan", "Cartan matrix");
  add_common(cartan, c);
  auto* fusion = app.add_subcommand("fusion", "Grothendieck ring structure constants");
  add_common(fusion, c);
  auto* modular = app.add_subcommand("modular-data", "zeta, D and the S and T transforms of the coend");
  add_common(modular, c);

  auto* diagram = app.add_subcommand("diagram", "string diagrams");
  diagram->require_subcommand(1);
  auto* deval = diagram->add_subcommand("eval", "evaluate a diagram expression to a matrix");
  add_common(deval, c);
  std::vector<std::string> binds;
  std::string expr;
  deval->add_option("--bind", binds, "NAME=module.json or NAME=S_i")->allow_extra_args(false);
  deval->add_option("--expr", expr, "diagram expression")->required();

  auto* cardy = app.add_subcommand("cardy", "Cardy-case field theory data");
  cardy->require_subcommand(1);
  std::string object, direction = "out", m_obj, n_obj;
  bool all_pairs = false;
  int sf_n = 1;
  auto* bstate = cardy->add_subcommand("boundary-state", "boundary state of an object");
  add_common(bstate, c);
  bstate->add_option("--object", object)->required();
  bstate->add_option("--direction", direction)->check(CLI::IsMember({"out", "in"}));
  auto* annulus = cardy->add_subcommand("annulus", "annulus amplitude between two boundary conditions");
  add_common(annulus, c);
  annulus->add_option("--m", m_obj)->required();
  annulus->add_option("--n", n_obj)->required();
  auto* torus = cardy->add_subcommand("torus", "torus partition function and its certificate");
  add_common(torus, c);
  auto* defect = cardy->add_subcommand("defect", "defect operator of an object");
  add_common(defect, c);
  defect->add_option("--object", object)->required();
  defect->add_flag("--all-pairs", all_pairs, "check the composition law on all pairs of simples");
  auto* sf = cardy->add_subcommand("sf", "symplectic fermion fusion algebra");
  sf->add_option("--N", sf_n, "number of fermion pairs")->required();
  sf->add_option("--format", c.format)->check(CLI::IsMember({"json", "csv", "text"}));
  sf->add_option("--out", c.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    Document doc;
    if (*sf) {
      FusionAlgebra a = sf_fusion_algebra(sf_n);
      Table t{"products", {"left", "right"}, {}, false, {}};
      for (const auto& l : a.labels) t.header.push_back(l);
      for (std::size_t i = 0; i < a.labels.size(); ++i)
        for (std::size_t j = 0; j < a.labels.size(); ++j) {
          std::vector<Cell> row = {a.labels[i], a.labels[j]};
          for (const auto& x : a.constants[i][j]) row.emplace_back(x.str());
          t.rows.push_back(std::move(row));
        }
      doc.tables.push_back(std::move(t));
      doc.facts["N"] = std::to_string(sf_n);
      doc.facts["radical_dim"] = std::to_string(trace_form_radical(a));
      doc.facts["associative"] = is_associative(a) ? "true" : "false";
      return finish(doc, c);
    }

    const HopfAlgebra base = load_algebra(source(c));
    SuiteOptions opts = options(c);
    opts.two_point_pairs = pairs;
    opts.seed = seed;
    const HopfAlgebra h = select_twist(base, opts);
    if (*verify) {
      doc.facts["algebra"] = h.name();
      doc.facts["dim"] = std::to_string(h.dim());
      Pipeline p = run_pipeline(base, opts);
      doc.report = p.report;
      for (const auto& [k, v] : p.facts) doc.facts[k] = v;
      return finish(doc, c);
    }
    if (*simples || *cartan || *fusion) {
      RepCat cat(h);
      const auto& sd = cat.simples();
      const auto names = labels(sd.simples);
      if (*simples) {
        Table t{"simples", {"name", "dim", "cover", "cover_dim"}, {}, false, {}};
        for (std::size_t i = 0; i < sd.simples.size(); ++i)
          t.rows.push_back({sd.simples[i].name, static_cast<long>(sd.simples[i].dim), sd.projective_covers[i].name,
                            static_cast<long>(sd.projective_covers[i].dim)});
        doc.tables.push_back(std::move(t));
      } else if (*cartan) {
        doc.tables.push_back(integer_table("cartan", sd.cartan, names, names));
      } else {
        auto n = cat.grothendieck_ring();
        Table t{"fusion", {"i", "j", "k", "N"}, {}, false, {}};
        for (std::size_t i = 0; i < n.size(); ++i)
          for (std::size_t j = 0; j < n.size(); ++j)
            for (std::size_t k = 0; k < n.size(); ++k)
              if (n[i][j][k]) t.rows.push_back({names[i], names[j], names[k], n[i][j][k]});
        doc.tables.push_back(std::move(t));
      }
      return finish(doc, c);
    }
    if (*deval) {
      RepCat cat(h);
      DiagramEnv env(cat);
      for (const auto& b : binds) {
        auto eq = b.find('=');
        if (eq == std::string::npos || eq == 0) throw ParseError("--bind expects NAME=FILE, got '" + b + "'");
        env.bind(b.substr(0, eq), resolve_object(cat, b.substr(eq + 1)));
      }
      Matrix m = evaluate(expr, env);
      doc.tables.push_back(scalar_table("result", m));
      return finish(doc, c);
    }

    Stage need = *modular ? Stage::Transforms : Stage::Cutting;
    Pipeline p = run_pipeline(base, opts, need);
    if (!complete(p, need, doc)) {
      emit(doc, parse_format(c.format), c.out);
      return kCheckFailed;
    }
    const CoendData& cd = p.cd;
    const RepCat& cat = *p.cat;
    for (const auto& [k, v] : p.facts) doc.facts[k] = v;
    if (*modular) {
      doc.facts["antipode_source"] = cd.antipode_source;
      doc.facts["Delta_plus"] = cd.Delta_plus.str();
      doc.facts["Delta_minus"] = cd.Delta_minus.str();
      doc.tables.push_back(scalar_table("S", cd.S_transform));
      doc.tables.push_back(scalar_table("T", cd.T_transform));
      doc.report = p.report;
    } else if (*bstate) {
      Module x = resolve_object(cat, object);
      doc.facts["object"] = x.name;
      doc.facts["direction"] = direction;
      doc.tables.push_back(
          scalar_table("state", boundary_state(cd, x, direction == "out" ? Direction::Out : Direction::In)));
    } else if (*annulus) {
      Module m = resolve_object(cat, m_obj), n = resolve_object(cat, n_obj);
      Annulus a = annulus_amplitude(cd, m, n);
      doc.facts["pairing"] = boundary_pairing(cd, m, n).str();
      doc.tables.push_back(scalar_table("open", a.open));
      doc.tables.push_back(scalar_table("closed", a.closed));
    } else if (*torus) {
      TorusPartition tp = torus_partition(cd);
      const auto names = labels(cat.simples().simples);
      doc.tables.push_back(integer_table("cartan", tp.cartan, names, names));
      doc.tables.push_back(integer_table("multiplicity", tp.multiplicity, names, names));
      doc.facts["trace"] = std::to_string(tp.trace);
      Report r;
      r.expect("cardy.torus.cartan", tp.cartan == cat.simples().cartan);
      r.expect("cardy.torus.trace", tp.trace == static_cast<long>(cd.n));
      doc.report = r;
    } else if (*defect) {
      Module d = resolve_object(cat, object);
      DefectOperator op = defect_operator(cd, d, d.name);
      doc.facts["object"] = d.name;
      doc.facts["formulas_agree"] = op.formulas_agree ? "true" : "false";
      doc.facts["minimal_polynomial_repeated_root"] =
          has_repeated_root(minimal_polynomial(op.matrix)) ? "true" : "false";
      doc.tables.push_back(scalar_table("operator", op.matrix));
      doc.tables.push_back(scalar_table("alternative", op.alternative));
      Report r;
      r.expect("cardy.defect.formulas_agree", op.formulas_agree,
               "mu (cochi (x) id) differs from ((chi S) (x) id) Delta_Lambda");
      if (all_pairs) r.merge(verify_defect_composition(cd));
      doc.report = r;
    }
    return finish(doc, c);
  } catch (const AxiomError& e) {
    Document doc;
    doc.report = e.report();
    emit(doc, parse_format(c.format), c.out);
    std::cerr << "mtc: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const InternalInconsistency& e) {
    std::cerr << "mtc: internal inconsistency: " << e.what() << "\n";
    return kInternal;
  } catch (const ParseError& e) {
    std::cerr << "mtc: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "mtc: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "mtc: internal inconsistency: " << e.what() << "\n";
    return kInternal;
  }
}
