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
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "mtc/repcat.hpp"

namespace mtc {

/** Malformed input: bad JSON, a missing field or a shape mismatch. The message carries the location. */
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** A loaded algebra that fails the Hopf axioms; carries the verifier's report. */
class AxiomError : public std::runtime_error {
 public:
  AxiomError(const std::string& what, Report report) : std::runtime_error(what), report_(std::move(report)) {}
  const Report& report() const { return report_; }

 private:
  Report report_;
};

/**
 * Algebra spec text to raw data. Configures the scalar field from
 * scalar.cyclotomic_order before reading any coefficient.
 */
HopfData parse_algebra(const std::string& text);
/** Canonical text: sorted keys, sparse lists in index order, zero entries dropped. */
std::string serialize_algebra(const HopfData& data);
HopfAlgebra read_algebra_file(const std::string& path);
void write_algebra_file(const HopfAlgebra& h, const std::string& path);

/** Module text {name, dim, action: [[row, col, "coeff"], ...] per basis element}. */
Module parse_module(const std::string& text, std::size_t algebra_dim);
std::string serialize_module(const Module& m);
Module read_module_file(const std::string& path, std::size_t algebra_dim);

std::string read_text_file(const std::string& path);

/** Where the algebra comes from: exactly one of file and builtin. */
struct AlgebraSource {
  std::optional<std::string> file;
  std::optional<std::string> builtin;
  std::vector<std::pair<std::string, long>> params;
};

/**
 * Loads and checks the Hopf axioms. Throws ParseError for bad input and
 * AxiomError with the witness report when an axiom fails.
 */
HopfAlgebra load_algebra(const AlgebraSource& src);

enum class Format { Json, Csv, Text };
Format parse_format(const std::string& s);

using Cell = std::variant<long, std::string>;

/** A named table. Matrix tables render without a header row in CSV. */
struct Table {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
  bool matrix = false;
  std::vector<std::string> row_labels;
};

Table scalar_table(const std::string& name, const Matrix& m, std::vector<std::string> row_labels = {},
                   std::vector<std::string> col_labels = {});
Table integer_table(const std::string& name, const std::vector<std::vector<long>>& m,
                    std::vector<std::string> row_labels = {}, std::vector<std::string> col_labels = {});

/** Output payload: data tables, scalar facts and an optional report. Timings render separately. */
struct Document {
  std::map<std::string, std::string> facts;
  std::vector<Table> tables;
  std::optional<Report> report;
  bool with_timings = true;
};

std::string render(const Document& doc, Format fmt);
/** RFC-4180 field quoting. */
std::string csv_field(const std::string& s);
/** Writes to path, or to stdout when path is empty. */
void emit(const Document& doc, Format fmt, const std::string& path);

}  // namespace mtc
