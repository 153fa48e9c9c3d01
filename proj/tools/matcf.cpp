// Copyright 2026 The matcf authors
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

// Command-line front end. Talks to the library exclusively through the C
// API in matcf/matcf.h; all file parsing and formatting lives here.
//
// Exit codes: 0 success (tolerance met, or the generator ran out of terms),
// 1 usage/parse/dimension errors, 2 stopped at max terms, 3 singular
// denominator.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "matcf/matcf.h"

namespace {

using nlohmann::json;

// Failure that already knows its process exit code.
struct CliFailure {
  int exit_code;
  std::string message;
};

[[noreturn]] void die(int exit_code, const std::string& message) {
  throw CliFailure{exit_code, message};
}

// ---- C API handle plumbing ----

struct MatrixDeleter {
  void operator()(matcf_matrix* m) const { matcf_matrix_free(m); }
};
struct GeneratorDeleter {
  void operator()(matcf_generator* g) const { matcf_generator_free(g); }
};
struct EvalReportDeleter {
  void operator()(matcf_eval_report* r) const { matcf_eval_report_free(r); }
};
struct WorpitzkyDeleter {
  void operator()(matcf_worpitzky_report* r) const {
    matcf_worpitzky_report_free(r);
  }
};
struct DivergenceDeleter {
  void operator()(matcf_divergence_report* r) const {
    matcf_divergence_report_free(r);
  }
};
struct TableDeleter {
  void operator()(matcf_erf_table* t) const { matcf_erf_table_free(t); }
};

using MatrixPtr = std::unique_ptr<matcf_matrix, MatrixDeleter>;
using GeneratorPtr = std::unique_ptr<matcf_generator, GeneratorDeleter>;
using EvalReportPtr = std::unique_ptr<matcf_eval_report, EvalReportDeleter>;
using WorpitzkyPtr =
    std::unique_ptr<matcf_worpitzky_report, WorpitzkyDeleter>;
using DivergencePtr =
    std::unique_ptr<matcf_divergence_report, DivergenceDeleter>;
using TablePtr = std::unique_ptr<matcf_erf_table, TableDeleter>;

void check(matcf_status status) {
  if (status != MATCF_OK) {
    die(1, matcf_last_error());
  }
}

// Host-side copy of a matrix for parsing and formatting.
struct HostMatrix {
  int dim = 0;
  std::vector<double> data;  // row major

  double at(int i, int j) const {
    return data[static_cast<std::size_t>(i) * dim + j];
  }
};

MatrixPtr to_handle(const HostMatrix& m) {
  matcf_matrix* out = nullptr;
  check(matcf_matrix_create(m.dim, m.data.data(), &out));
  return MatrixPtr(out);
}

HostMatrix from_handle(const matcf_matrix* m) {
  HostMatrix out;
  out.dim = matcf_matrix_dim(m);
  out.data.resize(static_cast<std::size_t>(out.dim) * out.dim);
  check(matcf_matrix_copy_data(m, out.data.data()));
  return out;
}

// ---- number and matrix parsing ----

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) {
    return "";
  }
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

// Replaces the typographic minus U+2212 with '-' so published tables can be
// pasted verbatim.
std::string normalize_minus(std::string s) {
  static const std::string kMinus = "\xe2\x88\x92";
  std::size_t pos = 0;
  while ((pos = s.find(kMinus, pos)) != std::string::npos) {
    s.replace(pos, kMinus.size(), "-");
  }
  return s;
}

long long parse_integer(const std::string& text) {
  std::string t = trim(text);
  if (!t.empty() && t[0] == '+') {
    t.erase(0, 1);
  }
  long long value = 0;
  const auto* first = t.data();
  const auto* last = t.data() + t.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    die(1, "not an integer: '" + text + "'");
  }
  return value;
}

// Decimal literal, or an exact integer fraction like "1/3" or "-2/23"
// (numerator and denominator parsed exactly, one double division).
double parse_number(const std::string& raw) {
  const std::string text = trim(normalize_minus(raw));
  if (text.empty()) {
    die(1, "empty numeric field");
  }
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const long long num = parse_integer(text.substr(0, slash));
    const long long den = parse_integer(text.substr(slash + 1));
    if (den == 0) {
      die(1, "zero denominator in '" + text + "'");
    }
    return static_cast<double>(num) / static_cast<double>(den);
  }
  std::string t = text;
  if (t[0] == '+') {
    t.erase(0, 1);
  }
  double value = 0.0;
  const auto* first = t.data();
  const auto* last = t.data() + t.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    die(1, "not a number: '" + raw + "'");
  }
  return value;
}

HostMatrix rows_to_matrix(const std::vector<std::vector<double>>& rows,
                          const std::string& origin) {
  const int dim = static_cast<int>(rows.size());
  if (dim < 1) {
    die(1, origin + ": empty matrix");
  }
  HostMatrix m;
  m.dim = dim;
  m.data.reserve(static_cast<std::size_t>(dim) * dim);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != dim) {
      die(1, origin + ": matrix is not square (row of length " +
                 std::to_string(row.size()) + ", expected " +
                 std::to_string(dim) + ")");
    }
    m.data.insert(m.data.end(), row.begin(), row.end());
  }
  return m;
}

HostMatrix parse_matrix_csv(const std::string& text,
                            const std::string& origin) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      row.push_back(parse_number(cell));
    }
    rows.push_back(std::move(row));
  }
  return rows_to_matrix(rows, origin);
}

// A JSON matrix is either [[...], ...] or {"dim": m, "rows": [[...], ...]}.
// Entries are numbers or fraction strings.
HostMatrix parse_matrix_json(const json& j, const std::string& origin) {
  const json* rows_node = nullptr;
  if (j.is_array()) {
    rows_node = &j;
  } else if (j.is_object() && j.contains("rows")) {
    rows_node = &j.at("rows");
  } else {
    die(1, origin + ": expected a matrix (array of rows or {dim, rows})");
  }
  if (!rows_node->is_array()) {
    die(1, origin + ": 'rows' must be an array");
  }
  std::vector<std::vector<double>> rows;
  for (const auto& row_node : *rows_node) {
    if (!row_node.is_array()) {
      die(1, origin + ": each row must be an array");
    }
    std::vector<double> row;
    for (const auto& cell : row_node) {
      if (cell.is_number()) {
        row.push_back(cell.get<double>());
      } else if (cell.is_string()) {
        row.push_back(parse_number(cell.get<std::string>()));
      } else {
        die(1, origin + ": matrix entries must be numbers or strings");
      }
    }
    rows.push_back(std::move(row));
  }
  HostMatrix m = rows_to_matrix(rows, origin);
  if (j.is_object() && j.contains("dim") &&
      j.at("dim").get<int>() != m.dim) {
    die(1, origin + ": 'dim' disagrees with the row count");
  }
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    die(1, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json parse_json_text(const std::string& text, const std::string& origin) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    die(1, origin + ": invalid JSON");
  }
  return j;
}

bool looks_like_json(const std::string& path, const std::string& text) {
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    return true;
  }
  const std::string t = trim(text);
  return !t.empty() && (t[0] == '{' || t[0] == '[');
}

HostMatrix read_matrix_file(const std::string& path) {
  const std::string text = read_file(path);
  if (looks_like_json(path, text)) {
    return parse_matrix_json(parse_json_text(text, path), path);
  }
  return parse_matrix_csv(text, path);
}

// ---- generator files ----
//
// A generator file is JSON:
//   {"family": "erf", "argument": <matrix>}
//   {"family": "constant", "b": <matrix>, "a": <matrix>,
//    "length": <int, optional>, "a0": <matrix, optional>}
//   {"family": "terms", "terms": [{"b": <matrix>, "a": <matrix>}, ...],
//    "a0": <matrix, optional>}

GeneratorPtr generator_from_json(const json& j, const std::string& origin) {
  if (!j.is_object() || !j.contains("family")) {
    die(1, origin + ": generator file needs a 'family' field");
  }
  const std::string family = j.at("family").get<std::string>();
  matcf_generator* gen = nullptr;
  if (family == "erf") {
    if (!j.contains("argument")) {
      die(1, origin + ": erf family needs 'argument'");
    }
    MatrixPtr arg = to_handle(parse_matrix_json(j.at("argument"), origin));
    check(matcf_generator_erf(arg.get(), &gen));
  } else if (family == "constant") {
    if (!j.contains("b") || !j.contains("a")) {
      die(1, origin + ": constant family needs 'b' and 'a'");
    }
    MatrixPtr b = to_handle(parse_matrix_json(j.at("b"), origin));
    MatrixPtr a = to_handle(parse_matrix_json(j.at("a"), origin));
    MatrixPtr a0;
    if (j.contains("a0")) {
      a0 = to_handle(parse_matrix_json(j.at("a0"), origin));
    }
    const long length =
        j.contains("length") ? j.at("length").get<long>() : MATCF_UNBOUNDED;
    check(matcf_generator_constant(a0.get(), b.get(), a.get(), length, &gen));
  } else if (family == "terms") {
    if (!j.contains("terms") || !j.at("terms").is_array() ||
        j.at("terms").empty()) {
      die(1, origin + ": terms family needs a non-empty 'terms' array");
    }
    std::vector<MatrixPtr> storage;
    std::vector<const matcf_matrix*> bs;
    std::vector<const matcf_matrix*> as;
    for (const auto& term : j.at("terms")) {
      if (!term.contains("b") || !term.contains("a")) {
        die(1, origin + ": each term needs 'b' and 'a'");
      }
      storage.push_back(to_handle(parse_matrix_json(term.at("b"), origin)));
      bs.push_back(storage.back().get());
      storage.push_back(to_handle(parse_matrix_json(term.at("a"), origin)));
      as.push_back(storage.back().get());
    }
    MatrixPtr a0;
    if (j.contains("a0")) {
      a0 = to_handle(parse_matrix_json(j.at("a0"), origin));
    }
    check(matcf_generator_terms(a0.get(), bs.data(), as.data(),
                                static_cast<long>(bs.size()), &gen));
  } else {
    die(1, origin + ": unknown family '" + family + "'");
  }
  return GeneratorPtr(gen);
}

// ---- formatting ----

enum class Format { kPretty, kCsv, kJson };

// 17 significant digits: enough for exact double round-trips.
std::string fmt_full(double v) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

// 10 significant digits for human-facing output.
std::string fmt_human(double v) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 10);
  return std::string(buf, res.ptr);
}

void print_matrix_pretty(std::ostream& out, const HostMatrix& m,
                         const std::string& indent = "  ") {
  std::vector<std::string> cells(m.data.size());
  std::size_t width = 0;
  for (std::size_t i = 0; i < m.data.size(); ++i) {
    cells[i] = fmt_human(m.data[i]);
    width = std::max(width, cells[i].size());
  }
  for (int i = 0; i < m.dim; ++i) {
    out << indent;
    for (int j = 0; j < m.dim; ++j) {
      const std::string& cell = cells[static_cast<std::size_t>(i) * m.dim + j];
      out << std::string(width - cell.size() + (j ? 2 : 0), ' ') << cell;
    }
    out << "\n";
  }
}

void print_matrix_csv(std::ostream& out, const HostMatrix& m) {
  for (int i = 0; i < m.dim; ++i) {
    for (int j = 0; j < m.dim; ++j) {
      out << (j ? "," : "") << fmt_full(m.at(i, j));
    }
    out << "\n";
  }
}

json matrix_to_json(const HostMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim; ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim; ++j) {
      row.push_back(m.at(i, j));
    }
    rows.push_back(std::move(row));
  }
  return json{{"dim", m.dim}, {"rows", std::move(rows)}};
}

int exit_code_for(int termination) {
  switch (termination) {
    case MATCF_TERM_TOLERANCE_MET:
    case MATCF_TERM_GENERATOR_EXHAUSTED:
      return 0;  // a finite fraction running out of terms is normal
    case MATCF_TERM_MAX_TERMS:
      return 2;
    case MATCF_TERM_SINGULAR_DENOMINATOR:
      return 3;
    default:
      return 1;
  }
}

// ---- shared command options ----

struct CommonOptions {
  double tol = 1e-12;
  long max_terms = 64;
  std::string format = "pretty";
  bool oracle = false;
  bool history = false;

  Format parsed_format() const {
    if (format == "pretty") {
      return Format::kPretty;
    }
    if (format == "csv") {
      return Format::kCsv;
    }
    return Format::kJson;
  }
};

void add_common_options(CLI::App* cmd, CommonOptions* opts,
                        bool with_eval_opts = true) {
  if (with_eval_opts) {
    cmd->add_option("--tol", opts->tol, "Stopping tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--max-terms", opts->max_terms,
                    "Maximum number of partial quotients")
        ->check(CLI::Range(1L, 1000000L))
        ->capture_default_str();
  }
  cmd->add_option("--format", opts->format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "pretty"}))
      ->capture_default_str();
}

// ---- evaluation report emission shared by erf and cf-eval ----

struct EvalOutput {
  HostMatrix value;
  long terms_used = 0;
  int termination = 0;
  std::vector<double> deltas;
  std::vector<HostMatrix> history;
};

EvalOutput collect_eval(const matcf_eval_report* report) {
  EvalOutput out;
  matcf_matrix* value = nullptr;
  check(matcf_eval_report_value(report, &value));
  out.value = from_handle(MatrixPtr(value).get());
  out.terms_used = matcf_eval_report_terms_used(report);
  out.termination = matcf_eval_report_termination(report);
  out.deltas.resize(
      static_cast<std::size_t>(matcf_eval_report_delta_count(report)));
  if (!out.deltas.empty()) {
    check(matcf_eval_report_deltas(report, out.deltas.data()));
  }
  const long n_history = matcf_eval_report_history_count(report);
  for (long i = 0; i < n_history; ++i) {
    matcf_matrix* f = nullptr;
    check(matcf_eval_report_history(report, i, &f));
    out.history.push_back(from_handle(MatrixPtr(f).get()));
  }
  return out;
}

json eval_to_json(const EvalOutput& eval) {
  json j{{"value", matrix_to_json(eval.value)},
         {"termination", matcf_termination_name(eval.termination)},
         {"terms_used", eval.terms_used},
         {"deltas", eval.deltas}};
  if (!eval.history.empty()) {
    json hist = json::array();
    for (std::size_t i = 0; i < eval.history.size(); ++i) {
      hist.push_back(json{{"n", i + 1},
                          {"delta", eval.deltas[i]},
                          {"convergent", matrix_to_json(eval.history[i])}});
    }
    j["history"] = std::move(hist);
  }
  return j;
}

void print_eval_pretty(std::ostream& out, const EvalOutput& eval,
                       const char* value_label) {
  out << "dim: " << eval.value.dim << "\n";
  out << "terms used: " << eval.terms_used << "\n";
  out << "termination: " << matcf_termination_name(eval.termination) << "\n";
  out << value_label << ":\n";
  print_matrix_pretty(out, eval.value);
  if (!eval.history.empty()) {
    out << "history:\n";
    for (std::size_t i = 0; i < eval.history.size(); ++i) {
      out << "  F_" << (i + 1) << " (delta " << fmt_human(eval.deltas[i])
          << "):\n";
      print_matrix_pretty(out, eval.history[i], "    ");
    }
  }
}

// ---- erf command ----

int cmd_erf(const std::string& path, const CommonOptions& opts) {
  const HostMatrix input = read_matrix_file(path);
  MatrixPtr a = to_handle(input);

  matcf_matrix* value_raw = nullptr;
  matcf_eval_report* report_raw = nullptr;
  matcf_worpitzky_report* diag_raw = nullptr;
  int within_proved = 0;
  check(matcf_erf_matrix(a.get(), opts.tol, opts.max_terms, &value_raw,
                         &report_raw, &diag_raw, &within_proved));
  MatrixPtr value(value_raw);
  EvalReportPtr report(report_raw);
  WorpitzkyPtr diag(diag_raw);

  EvalOutput eval = collect_eval(report.get());
  const double norm = matcf_matrix_inf_norm(a.get());
  if (!within_proved) {
    std::cerr << "warning: outside proved region ||A|| < 1/2 (||A|| = "
              << fmt_human(norm) << "); the series still defines erf(A)\n";
  }

  HostMatrix oracle;
  double oracle_diff = 0.0;
  if (opts.oracle) {
    matcf_matrix* oracle_raw = nullptr;
    check(matcf_erf_matrix_taylor(a.get(), 1e-15, &oracle_raw));
    MatrixPtr oracle_ptr(oracle_raw);
    oracle = from_handle(oracle_ptr.get());
    matcf_matrix* diff_raw = nullptr;
    check(matcf_matrix_sub(value.get(), oracle_ptr.get(), &diff_raw));
    oracle_diff = matcf_matrix_inf_norm(MatrixPtr(diff_raw).get());
  }

  switch (opts.parsed_format()) {
    case Format::kPretty: {
      print_eval_pretty(std::cout, eval, "erf(A)");
      std::cout << "norm: " << fmt_human(norm) << "\n";
      std::cout << "within proved region: " << (within_proved ? "yes" : "no")
                << "\n";
      if (opts.oracle) {
        std::cout << "series oracle:\n";
        print_matrix_pretty(std::cout, oracle);
        std::cout << "||cf - series||: " << fmt_human(oracle_diff) << "\n";
      }
      break;
    }
    case Format::kCsv: {
      // stdout stays a plain matrix file; metadata goes to stderr.
      print_matrix_csv(std::cout, eval.value);
      std::cerr << "termination: " << matcf_termination_name(eval.termination)
                << ", terms used: " << eval.terms_used << "\n";
      if (opts.oracle) {
        std::cerr << "||cf - series||: " << fmt_full(oracle_diff) << "\n";
      }
      break;
    }
    case Format::kJson: {
      json j = eval_to_json(eval);
      j["command"] = "erf";
      j["norm"] = norm;
      j["within_proved_region"] = within_proved != 0;
      const long n_alpha = matcf_worpitzky_alpha_count(diag.get());
      const long n_beta = matcf_worpitzky_beta_count(diag.get());
      std::vector<double> alphas(static_cast<std::size_t>(n_alpha));
      std::vector<double> betas(static_cast<std::size_t>(n_beta));
      if (n_alpha > 0) {
        check(matcf_worpitzky_alphas(diag.get(), alphas.data()));
      }
      if (n_beta > 0) {
        check(matcf_worpitzky_betas(diag.get(), betas.data()));
      }
      j["worpitzky"] = json{
          {"alphas", alphas},
          {"betas", betas},
          {"alpha", matcf_worpitzky_alpha(diag.get())},
          {"beta", matcf_worpitzky_beta(diag.get())},
          {"satisfied", matcf_worpitzky_satisfied(diag.get()) != 0},
          {"singular_index", matcf_worpitzky_singular_index(diag.get())}};
      if (opts.oracle) {
        j["oracle"] = matrix_to_json(oracle);
        j["oracle_diff_norm"] = oracle_diff;
      }
      std::cout << j.dump(2) << "\n";
      break;
    }
  }
  return exit_code_for(eval.termination);
}

// ---- table command ----

struct ScalarTableRow {
  double x;
  long n;
  double f;
  double diff;
};

std::vector<ScalarTableRow> scalar_table(const std::vector<double>& xs,
                                         long n_max) {
  std::vector<ScalarTableRow> rows;
  for (double x : xs) {
    MatrixPtr a = to_handle(HostMatrix{1, {x}});
    matcf_erf_table* table_raw = nullptr;
    check(matcf_erf_convergent_table(a.get(), n_max, &table_raw));
    TablePtr table(table_raw);
    const long produced = matcf_erf_table_rows(table.get());
    for (long i = 0; i < produced; ++i) {
      matcf_matrix* f_raw = nullptr;
      matcf_matrix* d_raw = nullptr;
      check(matcf_erf_table_convergent(table.get(), i, &f_raw));
      MatrixPtr f(f_raw);
      check(matcf_erf_table_difference(table.get(), i, &d_raw));
      MatrixPtr d(d_raw);
      rows.push_back(ScalarTableRow{x, i + 1, from_handle(f.get()).data[0],
                                    from_handle(d.get()).data[0]});
    }
  }
  return rows;
}

int emit_scalar_table(const std::vector<double>& xs, long n_max,
                      Format format) {
  const std::vector<ScalarTableRow> rows = scalar_table(xs, n_max);
  switch (format) {
    case Format::kCsv:
      std::cout << "x,n,convergent,oracle_minus_convergent\n";
      for (const auto& r : rows) {
        std::cout << fmt_full(r.x) << "," << r.n << "," << fmt_full(r.f) << ","
                  << fmt_full(r.diff) << "\n";
      }
      break;
    case Format::kPretty:
      std::cout << "x            n   F_n             erf - F_n\n";
      for (const auto& r : rows) {
        std::printf("%-12s %-3ld %-15s %s\n", fmt_human(r.x).c_str(), r.n,
                    fmt_human(r.f).c_str(), fmt_human(r.diff).c_str());
      }
      break;
    case Format::kJson: {
      json out = json::array();
      for (const auto& r : rows) {
        out.push_back(json{{"x", r.x},
                           {"n", r.n},
                           {"convergent", r.f},
                           {"difference", r.diff}});
      }
      std::cout << json{{"command", "table"},
                        {"mode", "scalar"},
                        {"rows", std::move(out)}}
                       .dump(2)
                << "\n";
      break;
    }
  }
  return 0;
}

int emit_matrix_table(const std::string& path, long n_max, Format format) {
  MatrixPtr a = to_handle(read_matrix_file(path));
  matcf_erf_table* table_raw = nullptr;
  check(matcf_erf_convergent_table(a.get(), n_max, &table_raw));
  TablePtr table(table_raw);
  const long produced = matcf_erf_table_rows(table.get());
  std::vector<HostMatrix> fs;
  std::vector<HostMatrix> diffs;
  for (long i = 0; i < produced; ++i) {
    matcf_matrix* f_raw = nullptr;
    matcf_matrix* d_raw = nullptr;
    check(matcf_erf_table_convergent(table.get(), i, &f_raw));
    fs.push_back(from_handle(MatrixPtr(f_raw).get()));
    check(matcf_erf_table_difference(table.get(), i, &d_raw));
    diffs.push_back(from_handle(MatrixPtr(d_raw).get()));
  }
  if (matcf_erf_table_truncated(table.get())) {
    std::cerr << "warning: table truncated by a singular denominator at n = "
              << matcf_erf_table_singular_index(table.get()) << "\n";
  }
  switch (format) {
    case Format::kCsv:
      std::cout << "n,i,j,convergent,oracle_minus_convergent\n";
      for (long r = 0; r < produced; ++r) {
        const HostMatrix& f = fs[static_cast<std::size_t>(r)];
        const HostMatrix& d = diffs[static_cast<std::size_t>(r)];
        for (int i = 0; i < f.dim; ++i) {
          for (int j = 0; j < f.dim; ++j) {
            std::cout << (r + 1) << "," << (i + 1) << "," << (j + 1) << ","
                      << fmt_full(f.at(i, j)) << "," << fmt_full(d.at(i, j))
                      << "\n";
          }
        }
      }
      break;
    case Format::kPretty:
      for (long r = 0; r < produced; ++r) {
        std::cout << "F_" << (r + 1) << ":\n";
        print_matrix_pretty(std::cout, fs[static_cast<std::size_t>(r)]);
        std::cout << "erf - F_" << (r + 1) << ":\n";
        print_matrix_pretty(std::cout, diffs[static_cast<std::size_t>(r)]);
      }
      break;
    case Format::kJson: {
      json rows = json::array();
      for (long r = 0; r < produced; ++r) {
        rows.push_back(
            json{{"n", r + 1},
                 {"convergent",
                  matrix_to_json(fs[static_cast<std::size_t>(r)])},
                 {"difference",
                  matrix_to_json(diffs[static_cast<std::size_t>(r)])}});
      }
      std::cout << json{{"command", "table"},
                        {"mode", "matrix"},
                        {"truncated",
                         matcf_erf_table_truncated(table.get()) != 0},
                        {"rows", std::move(rows)}}
                       .dump(2)
                << "\n";
      break;
    }
  }
  return 0;
}

// (x, erf(x), F_1..F_3) over x in [-3, 3] step 0.01, as CSV. Plot fodder.
int emit_plot_data() {
  std::cout << "x,erf,f1,f2,f3\n";
  for (int i = -300; i <= 300; ++i) {
    const double x = static_cast<double>(i) / 100.0;
    MatrixPtr a = to_handle(HostMatrix{1, {x}});
    matcf_erf_table* table_raw = nullptr;
    check(matcf_erf_convergent_table(a.get(), 3, &table_raw));
    TablePtr table(table_raw);
    matcf_matrix* oracle_raw = nullptr;
    check(matcf_erf_table_oracle(table.get(), &oracle_raw));
    const double erf_x = from_handle(MatrixPtr(oracle_raw).get()).data[0];
    std::cout << fmt_full(x) << "," << fmt_full(erf_x);
    for (long r = 0; r < 3; ++r) {
      matcf_matrix* f_raw = nullptr;
      check(matcf_erf_table_convergent(table.get(), r, &f_raw));
      std::cout << "," << fmt_full(from_handle(MatrixPtr(f_raw).get()).data[0]);
    }
    std::cout << "\n";
  }
  return 0;
}

// The eleven scalar arguments of the reference difference table.
const std::vector<double> kPresetTableXs = {0.005, 0.05, 0.075, 0.1, 0.15,
                                            0.2,   0.25, 0.3,   0.35, 0.4,
                                            0.45};

// ---- diagnose command ----

int cmd_diagnose(const std::string& path, long depth,
                 const CommonOptions& opts) {
  const std::string text = read_file(path);
  GeneratorPtr gen;
  if (looks_like_json(path, text)) {
    const json j = parse_json_text(text, path);
    if (j.is_object() && j.contains("family")) {
      gen = generator_from_json(j, path);
    } else {
      MatrixPtr a = to_handle(parse_matrix_json(j, path));
      matcf_generator* g = nullptr;
      check(matcf_generator_erf(a.get(), &g));
      gen.reset(g);
    }
  } else {
    MatrixPtr a = to_handle(parse_matrix_csv(text, path));
    matcf_generator* g = nullptr;
    check(matcf_generator_erf(a.get(), &g));
    gen.reset(g);
  }

  matcf_worpitzky_report* worp_raw = nullptr;
  check(matcf_worpitzky(gen.get(), depth, &worp_raw));
  WorpitzkyPtr worp(worp_raw);
  const long n_alpha = matcf_worpitzky_alpha_count(worp.get());
  const long n_beta = matcf_worpitzky_beta_count(worp.get());
  std::vector<double> alphas(static_cast<std::size_t>(n_alpha));
  std::vector<double> betas(static_cast<std::size_t>(n_beta));
  if (n_alpha > 0) {
    check(matcf_worpitzky_alphas(worp.get(), alphas.data()));
  }
  if (n_beta > 0) {
    check(matcf_worpitzky_betas(worp.get(), betas.data()));
  }
  const double alpha = matcf_worpitzky_alpha(worp.get());
  const double beta = matcf_worpitzky_beta(worp.get());
  const bool satisfied = matcf_worpitzky_satisfied(worp.get()) != 0;
  const long singular_index = matcf_worpitzky_singular_index(worp.get());

  const long div_terms = std::max<long>(depth, 2 * depth);
  matcf_divergence_report* div_raw = nullptr;
  check(matcf_divergence(gen.get(), div_terms, &div_raw));
  DivergencePtr div(div_raw);
  std::vector<double> sums(
      static_cast<std::size_t>(matcf_divergence_count(div.get())));
  if (!sums.empty()) {
    check(matcf_divergence_partial_sums(div.get(), sums.data()));
  }
  const bool ordinary = matcf_divergence_is_ordinary(div.get()) != 0;
  const bool positive = matcf_divergence_positive_elements(div.get()) != 0;

  switch (opts.parsed_format()) {
    case Format::kPretty: {
      std::cout << "boundedness diagnostic over " << n_alpha
                << " index pairs\n";
      std::cout << "   k   alpha_k         beta_k\n";
      for (long k = 0; k < n_alpha; ++k) {
        std::printf("  %2ld   %-15s %s\n", k + 1,
                    fmt_human(alphas[static_cast<std::size_t>(k)]).c_str(),
                    k < n_beta
                        ? fmt_human(betas[static_cast<std::size_t>(k)]).c_str()
                        : "-");
      }
      std::cout << "alpha: " << fmt_human(alpha) << "\n";
      std::cout << "beta: " << fmt_human(beta) << "\n";
      std::cout << "alpha*beta: " << fmt_human(alpha * beta) << "\n";
      std::cout << "satisfied: " << (satisfied ? "yes" : "no") << "\n";
      if (singular_index >= 0) {
        std::cout << "singular element product at index " << singular_index
                  << "\n";
      }
      if (ordinary && positive) {
        std::cout << "positive-divergence hypotheses: met\n";
        std::cout << "partial sums of ||A_k||:";
        for (double s : sums) {
          std::cout << " " << fmt_human(s);
        }
        std::cout << "\n";
        std::cout << "note: growth of the partial sums is indicative only; "
                     "divergence cannot be decided from finitely many terms\n";
      } else {
        std::cout << "positive-divergence hypotheses: not met (";
        if (!ordinary) {
          std::cout << "numerator differs from I at k = "
                    << matcf_divergence_first_non_ordinary(div.get());
        }
        if (!positive) {
          std::cout << (!ordinary ? "; " : "")
                    << "denominator not symmetric positive at k = "
                    << matcf_divergence_first_non_positive(div.get());
        }
        std::cout << ")\n";
      }
      break;
    }
    case Format::kCsv: {
      const bool with_sums = ordinary && positive;
      std::cout << "k,alpha_k,beta_k" << (with_sums ? ",partial_sum" : "")
                << "\n";
      for (long k = 0; k < n_alpha; ++k) {
        std::cout << (k + 1) << ","
                  << fmt_full(alphas[static_cast<std::size_t>(k)]) << ","
                  << (k < n_beta
                          ? fmt_full(betas[static_cast<std::size_t>(k)])
                          : "");
        if (with_sums && k < static_cast<long>(sums.size())) {
          std::cout << "," << fmt_full(sums[static_cast<std::size_t>(k)]);
        }
        std::cout << "\n";
      }
      std::cerr << "alpha: " << fmt_full(alpha) << ", beta: " << fmt_full(beta)
                << ", satisfied: " << (satisfied ? "yes" : "no") << "\n";
      break;
    }
    case Format::kJson: {
      json j{{"command", "diagnose"},
             {"worpitzky",
              json{{"alphas", alphas},
                   {"betas", betas},
                   {"alpha", alpha},
                   {"beta", beta},
                   {"satisfied", satisfied},
                   {"singular_index", singular_index}}},
             {"positive_divergence",
              json{{"partial_sums", sums},
                   {"is_ordinary", ordinary},
                   {"first_non_ordinary",
                    matcf_divergence_first_non_ordinary(div.get())},
                   {"positive_elements", positive},
                   {"first_non_positive",
                    matcf_divergence_first_non_positive(div.get())}}}};
      std::cout << j.dump(2) << "\n";
      break;
    }
  }
  return singular_index >= 0 ? 3 : 0;
}

// ---- cf-eval command ----

int cmd_cf_eval(const std::string& path, const CommonOptions& opts) {
  const json j = parse_json_text(read_file(path), path);
  GeneratorPtr gen = generator_from_json(j, path);
  matcf_eval_report* report_raw = nullptr;
  check(matcf_evaluate(gen.get(), opts.tol, opts.max_terms,
                       opts.history ? 1 : 0, &report_raw));
  EvalReportPtr report(report_raw);
  EvalOutput eval = collect_eval(report.get());

  switch (opts.parsed_format()) {
    case Format::kPretty:
      print_eval_pretty(std::cout, eval, "value");
      break;
    case Format::kCsv:
      print_matrix_csv(std::cout, eval.value);
      std::cerr << "termination: " << matcf_termination_name(eval.termination)
                << ", terms used: " << eval.terms_used << "\n";
      break;
    case Format::kJson: {
      json out = eval_to_json(eval);
      out["command"] = "cf-eval";
      std::cout << out.dump(2) << "\n";
      break;
    }
  }
  return exit_code_for(eval.termination);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matcf: matrix continued fractions and the matrix error "
               "function"};
  app.require_subcommand(1);

  CommonOptions erf_opts;
  std::string erf_file;
  CLI::App* erf_cmd =
      app.add_subcommand("erf", "Evaluate erf(A) for a matrix file");
  erf_cmd->add_option("file", erf_file, "Matrix file (csv or json)")
      ->required();
  add_common_options(erf_cmd, &erf_opts);
  erf_cmd->add_flag("--oracle", erf_opts.oracle,
                    "Also evaluate the series oracle and print the gap");
  erf_cmd->add_flag("--history", erf_opts.history,
                    "Record every convergent");

  CommonOptions table_opts;
  std::string table_file;
  std::vector<std::string> table_xs;
  long n_max = 5;
  bool preset_table = false;
  bool plot_data = false;
  CLI::App* table_cmd = app.add_subcommand(
      "table", "Convergent tables F_n with oracle differences");
  table_cmd->add_option("file", table_file, "Matrix file (csv or json)");
  table_cmd->add_option("--x", table_xs,
                        "Scalar argument(s); repeatable, commas allowed");
  table_cmd->add_option("--n-max", n_max, "Number of convergents")
      ->check(CLI::Range(1L, 100000L))
      ->capture_default_str();
  table_cmd->add_flag("--paper-table", preset_table,
                      "Built-in preset: the eleven reference x values");
  table_cmd->add_flag("--emit-plot-data", plot_data,
                      "CSV of (x, erf, F_1..F_3) over [-3, 3] step 0.01");
  add_common_options(table_cmd, &table_opts);

  CommonOptions diag_opts;
  std::string diag_file;
  long depth = 8;
  CLI::App* diag_cmd = app.add_subcommand(
      "diagnose", "Convergence diagnostics for a matrix or generator file");
  diag_cmd->add_option("file", diag_file,
                       "Matrix file (diagnoses its erf fraction) or "
                       "generator file")
      ->required();
  diag_cmd->add_option("--depth", depth, "Number of index pairs K")
      ->check(CLI::Range(1L, 100000L))
      ->capture_default_str();
  add_common_options(diag_cmd, &diag_opts, /*with_eval_opts=*/false);

  CommonOptions cf_opts;
  std::string cf_file;
  CLI::App* cf_cmd = app.add_subcommand(
      "cf-eval", "Evaluate a continued fraction from a generator file");
  cf_cmd->add_option("file", cf_file, "Generator file (json)")->required();
  add_common_options(cf_cmd, &cf_opts);
  cf_cmd->add_flag("--history", cf_opts.history, "Record every convergent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    app.exit(e);
    return 1;
  }

  try {
    if (erf_cmd->parsed()) {
      return cmd_erf(erf_file, erf_opts);
    }
    if (table_cmd->parsed()) {
      const int modes = (table_file.empty() ? 0 : 1) +
                        (table_xs.empty() ? 0 : 1) + (preset_table ? 1 : 0) +
                        (plot_data ? 1 : 0);
      if (modes != 1) {
        die(1,
            "table needs exactly one of: a matrix file, --x, --paper-table, "
            "--emit-plot-data");
      }
      if (plot_data) {
        return emit_plot_data();
      }
      if (preset_table) {
        return emit_scalar_table(kPresetTableXs, n_max,
                                 table_opts.parsed_format());
      }
      if (!table_xs.empty()) {
        std::vector<double> xs;
        for (const auto& chunk : table_xs) {
          std::istringstream parts(chunk);
          std::string token;
          while (std::getline(parts, token, ',')) {
            xs.push_back(parse_number(token));
          }
        }
        return emit_scalar_table(xs, n_max, table_opts.parsed_format());
      }
      return emit_matrix_table(table_file, n_max, table_opts.parsed_format());
    }
    if (diag_cmd->parsed()) {
      return cmd_diagnose(diag_file, depth, diag_opts);
    }
    if (cf_cmd->parsed()) {
      return cmd_cf_eval(cf_file, cf_opts);
    }
  } catch (const CliFailure& failure) {
    std::cerr << "error: " << failure.message << "\n";
    return failure.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
