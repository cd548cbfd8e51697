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

#include "mtc/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <tuple>

namespace mtc {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& field(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) bad(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(where, "missing field '" + key + "'");
  return *it;
}

std::size_t index_at(const json& v, std::size_t bound, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) bad(where, "expected a non-negative integer index");
  auto i = v.get<std::size_t>();
  if (i >= bound) bad(where, "index " + std::to_string(i) + " out of range for dimension " + std::to_string(bound));
  return i;
}

Scalar coeff_at(const json& v, const std::string& where) {
  try {
    if (v.is_string()) return Scalar::parse(v.get<std::string>());
    if (v.is_number_integer()) return Scalar(v.get<long>());
  } catch (const FieldError& e) {
    bad(where, e.what());
  }
  bad(where, "expected a scalar literal string");
}

// Entries [i_1, ..., i_k, "coeff"], each index below dim.
std::vector<std::pair<std::vector<std::size_t>, Scalar>> sparse(const json& obj, const std::string& key,
                                                                 std::size_t arity, std::size_t dim,
                                                                 const std::string& where) {
  const std::string base = where + "/" + key;
  const json& list = field(obj, key, where);
  if (!list.is_array()) bad(base, "expected a list of entries");
  std::vector<std::pair<std::vector<std::size_t>, Scalar>> out;
  for (std::size_t e = 0; e < list.size(); ++e) {
    const std::string at = base + "/" + std::to_string(e);
    const json& t = list[e];
    if (!t.is_array() || t.size() != arity + 1)
      bad(at, "expected " + std::to_string(arity) + " indices and a coefficient");
    std::vector<std::size_t> idx(arity);
    for (std::size_t a = 0; a < arity; ++a) idx[a] = index_at(t[a], dim, at + "/" + std::to_string(a));
    out.emplace_back(std::move(idx), coeff_at(t[arity], at + "/" + std::to_string(arity)));
  }
  return out;
}

std::vector<std::pair<std::size_t, Scalar>> vec_terms(const json& obj, const std::string& key, std::size_t dim,
                                                      const std::string& where) {
  std::vector<std::pair<std::size_t, Scalar>> out;
  for (auto& [idx, c] : sparse(obj, key, 1, dim, where)) out.emplace_back(idx[0], c);
  return out;
}

template <class T, class Key>
void canonical(std::vector<T>& v, Key key) {
  std::stable_sort(v.begin(), v.end(), [&](const T& a, const T& b) { return key(a) < key(b); });
  std::vector<T> merged;
  for (auto& t : v) {
    if (!merged.empty() && key(merged.back()) == key(t))
      merged.back().c += t.c;
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const T& t) { return t.c.is_zero(); });
  v = std::move(merged);
}

json pairs_json(std::vector<std::pair<std::size_t, Scalar>> v) {
  std::map<std::size_t, Scalar> acc;
  for (auto& [i, c] : v) acc[i] += c;
  json out = json::array();
  for (auto& [i, c] : acc)
    if (!c.is_zero()) out.push_back({i, c.str()});
  return out;
}

std::string cell_text(const Cell& c) {
  return std::holds_alternative<long>(c) ? std::to_string(std::get<long>(c)) : std::get<std::string>(c);
}

json cell_json(const Cell& c) {
  if (std::holds_alternative<long>(c)) return std::get<long>(c);
  return std::get<std::string>(c);
}

json table_json(const Table& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    json row = json::array();
    for (const auto& c : r) row.push_back(cell_json(c));
    rows.push_back(std::move(row));
  }
  json out = {{"rows", rows}};
  if (!t.header.empty()) out["header"] = t.header;
  if (!t.row_labels.empty()) out["row_labels"] = t.row_labels;
  return out;
}

json report_json(const Report& r) {
  json checks = json::array();
  long counts[3] = {0, 0, 0};
  for (const auto& c : r.checks()) {
    json j = {{"name", c.name}, {"status", status_name(c.status)}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (!c.witness.empty()) j["witness"] = c.witness;
    checks.push_back(std::move(j));
    ++counts[static_cast<int>(c.status)];
  }
  return {{"checks", checks}, {"summary", {{"pass", counts[0]}, {"fail", counts[1]}, {"skip", counts[2]}}}};
}

std::string witness_text(const std::map<std::string, std::string>& w) {
  std::string out;
  for (const auto& [k, v] : w) out += (out.empty() ? "" : "; ") + k + "=" + v;
  return out;
}

Table checks_table(const Report& r) {
  Table t{"checks", {"name", "status", "detail", "witness"}, {}, false, {}};
  for (const auto& c : r.checks()) t.rows.push_back({c.name, status_name(c.status), c.detail, witness_text(c.witness)});
  return t;
}

void text_table(std::ostringstream& os, const Table& t) {
  os << "[" << t.name << "]\n";
  std::vector<std::vector<std::string>> grid;
  const bool labelled = !t.row_labels.empty();
  if (!t.header.empty()) {
    std::vector<std::string> h;
    if (labelled) h.emplace_back();
    h.insert(h.end(), t.header.begin(), t.header.end());
    grid.push_back(std::move(h));
  }
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    std::vector<std::string> line;
    if (labelled) line.push_back(r < t.row_labels.size() ? t.row_labels[r] : "");
    for (const auto& c : t.rows[r]) line.push_back(cell_text(c));
    grid.push_back(std::move(line));
  }
  std::vector<std::size_t> width;
  for (const auto& line : grid)
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], line[c].size());
    }
  for (const auto& line : grid) {
    std::string s;
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) s += "  ";
      s += line[c];
      if (c + 1 < line.size()) s.append(width[c] - line[c].size(), ' ');
    }
    os << s << "\n";
  }
}

void csv_row(std::ostringstream& os, const std::vector<std::string>& cells) {
  for (std::size_t c = 0; c < cells.size(); ++c) os << (c ? "," : "") << csv_field(cells[c]);
  os << "\r\n";
}

}  // namespace

HopfData parse_algebra(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed algebra file at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  const std::string root = "algebra";
  HopfData d;
  const json& name = field(doc, "name", root);
  if (!name.is_string()) bad(root + "/name", "expected a string");
  d.name = name.get<std::string>();
  const json& order = field(field(doc, "scalar", root), "cyclotomic_order", root + "/scalar");
  if (!order.is_number_integer() || order.get<long>() < 1) bad(root + "/scalar/cyclotomic_order", "expected a positive integer");
  d.cyclotomic_order = order.get<int>();
  try {
    Field::configure(d.cyclotomic_order);
  } catch (const FieldError& e) {
    bad(root + "/scalar/cyclotomic_order", e.what());
  }
  const json& dim = field(doc, "dim", root);
  if (!dim.is_number_integer() || dim.get<long>() < 1) bad(root + "/dim", "expected a positive integer");
  const auto n = dim.get<std::size_t>();
  const json& basis = field(doc, "basis", root);
  if (!basis.is_array() || basis.size() != n)
    bad(root + "/basis", "expected " + std::to_string(n) + " labels");
  for (std::size_t i = 0; i < n; ++i) {
    if (!basis[i].is_string()) bad(root + "/basis/" + std::to_string(i), "expected a string");
    d.basis.push_back(basis[i].get<std::string>());
  }
  for (auto& [idx, c] : sparse(doc, "mult", 3, n, root)) d.mult.push_back({idx[0], idx[1], idx[2], c});
  d.unit = vec_terms(doc, "unit", n, root);
  for (auto& [idx, c] : sparse(doc, "comult", 3, n, root)) d.comult.push_back({idx[0], idx[1], idx[2], c});
  d.counit = vec_terms(doc, "counit", n, root);
  for (auto& [idx, c] : sparse(doc, "antipode", 2, n, root)) d.antipode.push_back({idx[0], idx[1], c});
  for (auto& [idx, c] : sparse(doc, "rmatrix", 2, n, root)) d.rmatrix.push_back({idx[0], idx[1], c});
  if (doc.contains("ribbon")) d.ribbon = vec_terms(doc, "ribbon", n, root);
  return d;
}

std::string serialize_algebra(const HopfData& data) {
  HopfData d = data;
  canonical(d.mult, [](const Term3& t) { return std::tie(t.i, t.j, t.k); });
  canonical(d.comult, [](const Term3& t) { return std::tie(t.i, t.j, t.k); });
  canonical(d.antipode, [](const Term2& t) { return std::tie(t.i, t.j); });
  canonical(d.rmatrix, [](const Term2& t) { return std::tie(t.i, t.j); });
  json j;
  j["name"] = d.name;
  j["scalar"] = {{"cyclotomic_order", d.cyclotomic_order}};
  j["dim"] = d.basis.size();
  j["basis"] = d.basis;
  auto triples = [](const std::vector<Term3>& v) {
    json out = json::array();
    for (const auto& t : v) out.push_back({t.i, t.j, t.k, t.c.str()});
    return out;
  };
  auto doubles = [](const std::vector<Term2>& v) {
    json out = json::array();
    for (const auto& t : v) out.push_back({t.i, t.j, t.c.str()});
    return out;
  };
  j["mult"] = triples(d.mult);
  j["unit"] = pairs_json(d.unit);
  j["comult"] = triples(d.comult);
  j["counit"] = pairs_json(d.counit);
  j["antipode"] = doubles(d.antipode);
  j["rmatrix"] = doubles(d.rmatrix);
  if (d.ribbon) j["ribbon"] = pairs_json(*d.ribbon);
  return j.dump(1) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

HopfAlgebra read_algebra_file(const std::string& path) {
  HopfData d;
  try {
    d = parse_algebra(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
  try {
    return HopfAlgebra(d);
  } catch (const std::invalid_argument& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const FieldError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_algebra_file(const HopfAlgebra& h, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot write file");
  out << serialize_algebra(h.data());
}

Module parse_module(const std::string& text, std::size_t algebra_dim) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed module file at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  const std::string root = "module";
  Module m;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) bad(root + "/name", "expected a string");
    m.name = doc["name"].get<std::string>();
  }
  const json& dim = field(doc, "dim", root);
  if (!dim.is_number_integer() || dim.get<long>() < 0) bad(root + "/dim", "expected a non-negative integer");
  m.dim = dim.get<std::size_t>();
  const json& action = field(doc, "action", root);
  if (!action.is_array() || action.size() != algebra_dim)
    bad(root + "/action", "expected one matrix per basis element (" + std::to_string(algebra_dim) + ")");
  for (std::size_t a = 0; a < algebra_dim; ++a) {
    json holder = {{"entries", action[a]}};
    Matrix mat(m.dim, m.dim);
    for (auto& [idx, c] : sparse(holder, "entries", 2, m.dim, root + "/action/" + std::to_string(a)))
      mat(idx[0], idx[1]) += c;
    m.action.push_back(std::move(mat));
  }
  return m;
}

std::string serialize_module(const Module& m) {
  json action = json::array();
  for (const auto& mat : m.action) {
    json entries = json::array();
    for (std::size_t i = 0; i < mat.rows(); ++i)
      for (std::size_t j = 0; j < mat.cols(); ++j)
        if (!mat(i, j).is_zero()) entries.push_back({i, j, mat(i, j).str()});
    action.push_back(std::move(entries));
  }
  json j = {{"name", m.name}, {"dim", m.dim}, {"action", action}};
  return j.dump(1) + "\n";
}

Module read_module_file(const std::string& path, std::size_t algebra_dim) {
  try {
    return parse_module(read_text_file(path), algebra_dim);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

HopfAlgebra load_algebra(const AlgebraSource& src) {
  if (src.file.has_value() == src.builtin.has_value())
    throw ParseError("exactly one of --algebra and --builtin is required");
  HopfAlgebra h;
  if (src.file) {
    if (!src.params.empty()) throw ParseError("--param applies only to --builtin");
    h = read_algebra_file(*src.file);
  } else {
    try {
      h = builtin(*src.builtin, src.params);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  Report axioms = verify_hopf_axioms(h);
  if (axioms.any_failed()) throw AxiomError(h.name() + ": Hopf axioms fail", axioms);
  return h;
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw ParseError("unknown format '" + s + "' (json, csv, text)");
}

Table scalar_table(const std::string& name, const Matrix& m, std::vector<std::string> row_labels,
                   std::vector<std::string> col_labels) {
  Table t{name, std::move(col_labels), {}, true, std::move(row_labels)};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<Cell> row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.emplace_back(m(i, j).str());
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table integer_table(const std::string& name, const std::vector<std::vector<long>>& m,
                    std::vector<std::string> row_labels, std::vector<std::string> col_labels) {
  Table t{name, std::move(col_labels), {}, true, std::move(row_labels)};
  for (const auto& r : m) t.rows.emplace_back(r.begin(), r.end());
  return t;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render(const Document& doc, Format fmt) {
  std::ostringstream os;
  std::map<std::string, double> timings;
  if (doc.report && doc.with_timings)
    for (const auto& c : doc.report->checks())
      if (c.seconds > 0) timings[c.name] = c.seconds;

  if (fmt == Format::Json) {
    json data = json::object();
    if (!doc.facts.empty()) data["facts"] = doc.facts;
    json tables = json::object();
    for (const auto& t : doc.tables) tables[t.name] = table_json(t);
    if (!doc.tables.empty()) data["tables"] = tables;
    if (doc.report) data["report"] = report_json(*doc.report);
    json out = {{"data", data}};
    if (!timings.empty()) {
      json tj = json::object();
      for (const auto& [k, v] : timings) {
        std::ostringstream s;
        s << std::fixed << std::setprecision(6) << v;
        tj[k] = s.str();
      }
      out["timings"] = tj;
    }
    os << out.dump(1) << "\n";
    return os.str();
  }

  std::vector<Table> tables = doc.tables;
  if (!doc.facts.empty()) {
    Table f{"facts", {"key", "value"}, {}, false, {}};
    for (const auto& [k, v] : doc.facts) f.rows.push_back({k, v});
    tables.insert(tables.begin(), std::move(f));
  }
  if (doc.report) tables.push_back(checks_table(*doc.report));

  if (fmt == Format::Csv) {
    // A single matrix stays a bare grid; several tables share one record set keyed by table name.
    if (tables.size() == 1) {
      const Table& t = tables[0];
      if (!t.matrix && !t.header.empty()) csv_row(os, t.header);
      for (const auto& r : t.rows) {
        std::vector<std::string> cells;
        for (const auto& c : r) cells.push_back(cell_text(c));
        csv_row(os, cells);
      }
    } else {
      std::size_t width = 0;
      for (const auto& t : tables)
        for (const auto& r : t.rows) width = std::max(width, r.size());
      std::vector<std::string> head = {"table", "row"};
      for (std::size_t c = 0; c < width; ++c) head.push_back("c" + std::to_string(c));
      csv_row(os, head);
      for (const auto& t : tables)
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
          std::vector<std::string> cells = {t.name, r < t.row_labels.size() ? t.row_labels[r] : std::to_string(r)};
          for (const auto& c : t.rows[r]) cells.push_back(cell_text(c));
          cells.resize(width + 2);
          csv_row(os, cells);
        }
    }
    return os.str();
  }

  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (i) os << "\n";
    text_table(os, tables[i]);
  }
  if (doc.report) {
    long counts[3] = {0, 0, 0};
    for (const auto& c : doc.report->checks()) ++counts[static_cast<int>(c.status)];
    os << "\nsummary: " << counts[0] << " pass, " << counts[1] << " fail, " << counts[2] << " skip\n";
  }
  if (!timings.empty()) {
    os << "\n[timings]\n";
    for (const auto& [k, v] : timings) os << k << "  " << std::fixed << std::setprecision(3) << v << "s\n";
  }
  return os.str();
}

void emit(const Document& doc, Format fmt, const std::string& path) {
  const std::string text = render(doc, fmt);
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot write file");
  out << text;
}

}  // namespace mtc
