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

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "mtc/cardy.hpp"

namespace mtc {

struct SuiteOptions {
  /** Index into solve_ribbon; overrides a ribbon element stored with the algebra. */
  std::optional<std::size_t> ribbon;
  /** Index into solve_balancing: a balanced twist that need not be ribbon. */
  std::optional<std::size_t> balanced;
  std::size_t two_point_pairs = 20;
  unsigned seed = 1;
};

enum class Stage {
  Hopf,
  Braiding,
  Ribbon,
  Category,
  Coend,
  Structure,
  Integrals,
  Modularity,
  Transforms,
  Characters,
  Cutting,
  Cardy,
};
const char* stage_name(Stage s);

/** Applies the ribbon choice of the options. Throws ParseError on a bad or conflicting index. */
HopfAlgebra select_twist(const HopfAlgebra& h, const SuiteOptions& opts);

/**
 * State after running the stages up to some point. A stage runs only if
 * every prerequisite is usable; otherwise its checks are recorded as skips.
 */
struct Pipeline {
  HopfAlgebra hopf;
  std::unique_ptr<RepCat> cat;
  CoendData cd;
  Report report;
  std::map<Stage, Status> status;
  std::map<Stage, bool> usable;
  /** Scalar facts gathered on the way: zeta, D, cutting multiplicities. */
  std::map<std::string, std::string> facts;
  bool balanced = false;

  bool ready(Stage s) const;
};

/**
 * Runs hopf axioms, braiding, ribbon, category identities, coend build,
 * structure solve, integrals, modularity, S/T, characters, cutting and the
 * Cardy certificates, stopping after last.
 */
Pipeline run_pipeline(const HopfAlgebra& h, const SuiteOptions& opts, Stage last = Stage::Cardy);
Report run_suite(const HopfAlgebra& h, const SuiteOptions& opts);

/** Snake identities, hexagons, naturality and the twist of a tensor product on the given objects. */
Report verify_category(const RepCat& cat, const std::vector<Module>& objects);

}  // namespace mtc
