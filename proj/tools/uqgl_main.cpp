// Command-line front end: build, verify, classify, tensor, scan and dump over
// U_q[gl(2/1)] modules. Exit codes: 0 success / all checks pass, 1 a
// verification check failed, 2 bad input, 3 internal numeric error.

#include "uqgl/hopf.hpp"
#include "uqgl/json_io.hpp"
#include "uqgl/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace uqgl;

constexpr int exit_ok = 0;
constexpr int exit_verification_failed = 1;
constexpr int exit_bad_input = 2;
constexpr int exit_numeric_error = 3;

double parse_real_token(const std::string& token) {
  if (token == "e") return std::exp(1.0);
  if (token == "pi") return std::acos(-1.0);
  size_t used = 0;
  const double v = std::stod(token, &used);
  if (used != token.size())
    throw std::invalid_argument("cannot parse real value: " + token);
  return v;
}

int parse_strict_int(const std::string& token) {
  int v = 0;
  const auto* begin = token.data();
  const auto* end = token.data() + token.size();
  const auto res = std::from_chars(begin, end, v);
  if (res.ec != std::errc{} || res.ptr != end)
    throw std::invalid_argument("expected an integer, got: " + token);
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

/// Weight string "m13,m23,m33": the gl(2) labels must parse as integers, the
/// gl(1) label may be any decimal (or "pi"/"e").
Weight parse_weight(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 3)
    throw std::invalid_argument("weight must be m13,m23,m33");
  return {parse_strict_int(parts[0]), parse_strict_int(parts[1]),
          parse_real_token(parts[2])};
}

std::pair<int, int> parse_int_range(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 2)
    throw std::invalid_argument("range must be lo:hi, got: " + s);
  return {parse_strict_int(parts[0]), parse_strict_int(parts[1])};
}

double default_tolerance() {
  if (const char* env = std::getenv("UQGL_TOLERANCE")) {
    try {
      return parse_real_token(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("UQGL_TOLERANCE is not a number");
    }
  }
  return 1e-9;
}

struct CommonOpts {
  std::string weight;
  std::string q = "1.7";
  std::string mode = "generic";
  double a1 = 1.0, a2 = 1.0, a3 = 1.0;
  double tolerance = 1e-9;
  std::string out;
  std::string format = "json";

  QContext context() const {
    return QContext(parse_real_token(q), mode == "classical-limit"
                                             ? QMode::ClassicalLimit
                                             : QMode::Generic);
  }
  Weight parsed_weight() const { return parse_weight(weight); }
  Normalization normalization() const { return {a1, a2, a3}; }
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_weight) {
  auto* w = cmd->add_option("--weight", opts.weight,
                            "highest weight m13,m23,m33 (m33 may be decimal)");
  if (needs_weight) w->required();
  cmd->add_option("--q", opts.q, "deformation parameter (number, 'e' or 'pi')");
  cmd->add_option("--mode", opts.mode, "generic | classical-limit")
      ->check(CLI::IsMember({"generic", "classical-limit"}));
  cmd->add_option("--a1", opts.a1, "normalization constant a1");
  cmd->add_option("--a2", opts.a2, "normalization constant a2");
  cmd->add_option("--a3", opts.a3, "normalization constant a3");
  cmd->add_option("--tolerance", opts.tolerance,
                  "verification tolerance (default 1e-9, env UQGL_TOLERANCE)");
  cmd->add_option("--out", opts.out, "output file (default: stdout)");
  cmd->add_option("--format", opts.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << text;
}

int cmd_build(const CommonOpts& opts, const std::string& basis) {
  const QContext q = opts.context();
  const Weight hw = opts.parsed_weight();
  const Representation rep =
      basis == "induced" ? induced_representation(hw, q, opts.normalization())
                         : build_representation(hw, q, opts.normalization());
  write_output(opts.out, representation_to_json(rep).dump(2));
  return exit_ok;
}

int cmd_verify(const CommonOpts& opts) {
  const QContext q = opts.context();
  const Weight hw = opts.parsed_weight();
  const Representation rep = build_representation(hw, q, opts.normalization());
  const VerificationReport report = run_suite(rep, {opts.tolerance});
  write_output(opts.out, report_to_json(report).dump(2));
  return report.all_pass() ? exit_ok : exit_verification_failed;
}

int cmd_classify(const CommonOpts& opts) {
  const QContext q = opts.context();
  const Weight hw = opts.parsed_weight();
  const TypicalityReport cls = classify(hw, q);
  json j = classification_to_json(cls);
  j["weight"] = json::array({hw.m13, hw.m23, hw.m33});
  j["q"] = q.q();
  const auto dims = subspace_dims(hw);
  j["dimensions"] = {{"total", reduced_dim(hw)}, {"subspaces", dims}};
  if (cls.cls == TypicalityClass::NonTypicalClass1 ||
      cls.cls == TypicalityClass::NonTypicalClass2) {
    const int cut = static_cast<int>(cls.invariant_subspace.size());
    j["dimensions"]["factor"] = reduced_dim(hw) - cut;
  }
  write_output(opts.out, j.dump(2));
  return exit_ok;
}

int cmd_dump(const CommonOpts& opts, const std::string& generator,
             const std::string& basis) {
  const auto gen = parse_generator(generator);
  if (!gen)
    throw std::invalid_argument("unknown generator label: " + generator);
  const QContext q = opts.context();
  const Weight hw = opts.parsed_weight();
  const Representation rep =
      basis == "induced" ? induced_representation(hw, q, opts.normalization())
                         : build_representation(hw, q, opts.normalization());
  const Matrix& m = rep.matrix(*gen);
  if (opts.format == "csv") {
    write_output(opts.out, matrix_to_csv(m));
  } else {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
      rows.push_back(std::move(row));
    }
    json j;
    j["generator"] = generator;
    j["weight"] = json::array({hw.m13, hw.m23, hw.m33});
    j["basis_kind"] = basis;
    j["matrix"] = std::move(rows);
    write_output(opts.out, j.dump(2));
  }
  return exit_ok;
}

int cmd_tensor(const CommonOpts& opts, const std::string& left,
               bool with_matrices) {
  const QContext q = opts.context();
  const Weight hw = opts.parsed_weight();
  json j;
  if (left == "T0" || left == "T1" || left == "T2") {
    // Clebsch-Gordan decomposition of T_i x V^q
    const int component = left[1] - '0';
    const EvenModule t = theta_sector_module(component, q);
    const EvenModule v = gz_module(even_part(hw), q);
    const auto summands = cg_decompose(t, v, opts.tolerance);
    j["left"] = left;
    j["weight"] = json::array({hw.m13, hw.m23, hw.m33});
    j["q"] = q.q();
    json list = json::array();
    for (const auto& s : summands) {
      json entry;
      entry["signature"] =
          json::array({s.signature.m12, s.signature.m22, s.signature.m32});
      entry["dimension"] = s.signature.dim();
      json vec = json::array();
      for (int t2 = 0; t2 < s.highest_vector.size(); ++t2)
        vec.push_back(s.highest_vector(t2));
      entry["highest_vector"] = std::move(vec);
      list.push_back(std::move(entry));
    }
    j["summands"] = std::move(list);
  } else {
    const Weight lw = parse_weight(left);
    const Representation a = build_representation(lw, q, opts.normalization());
    const Representation b = build_representation(hw, q, opts.normalization());
    const Representation prod = tensor_representation(a, b);
    j["left"] = json::array({lw.m13, lw.m23, lw.m33});
    j["right"] = json::array({hw.m13, hw.m23, hw.m33});
    j["q"] = q.q();
    j["dim"] = prod.dim();
    j["parities"] = prod.parities;
    if (with_matrices) {
      json mats;
      for (Gen g : all_generators) {
        json rows = json::array();
        const Matrix& m = prod.matrix(g);
        for (int r = 0; r < m.rows(); ++r) {
          json row = json::array();
          for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
          rows.push_back(std::move(row));
        }
        mats[to_string(g)] = std::move(rows);
      }
      j["matrices"] = std::move(mats);
    }
  }
  write_output(opts.out, j.dump(2));
  return exit_ok;
}

struct ScanCell {
  Weight hw;
  double qv = 0.0;
  int dim = 0;
  std::string cls;
  double max_dev = 0.0;
  bool pass = false;
  std::string error;
};

int cmd_scan(const CommonOpts& opts, const std::string& d_range, int m23,
             const std::string& m33_range, const std::string& m33_extra,
             const std::string& q_list) {
  const auto [dlo, dhi] = parse_int_range(d_range);
  const auto [mlo, mhi] = parse_int_range(m33_range);
  std::vector<double> m33s;
  for (int m = mlo; m <= mhi; ++m) m33s.push_back(m);
  if (!m33_extra.empty())
    for (const auto& tok : split(m33_extra, ','))
      m33s.push_back(parse_real_token(tok));
  std::vector<double> qs;
  for (const auto& tok : split(q_list, ','))
    qs.push_back(parse_real_token(tok));
  const QMode mode =
      opts.mode == "classical-limit" ? QMode::ClassicalLimit : QMode::Generic;
  const Normalization a = opts.normalization();
  const double tol = opts.tolerance;

  std::vector<ScanCell> cells;
  for (int d = std::max(dlo, 0); d <= dhi; ++d)
    for (double m33 : m33s)
      for (double qv : qs) cells.push_back({{m23 + d, m23, m33}, qv});

  // independent cells, evaluated concurrently
  std::vector<std::future<void>> jobs;
  jobs.reserve(cells.size());
  for (auto& cell : cells) {
    jobs.push_back(std::async(std::launch::async, [&cell, mode, a, tol]() {
      try {
        const QContext q(cell.qv, mode);
        const Representation rep = build_representation(cell.hw, q, a);
        const VerificationReport report = run_suite(rep, {tol});
        cell.dim = rep.dim();
        cell.cls = to_string(rep.classification.cls);
        cell.max_dev = report.max_deviation();
        cell.pass = report.all_pass();
      } catch (const std::exception& e) {
        cell.error = e.what();
      }
    }));
  }
  for (auto& job : jobs) job.get();

  bool all_pass = true;
  json rows = json::array();
  std::ostringstream csv;
  csv << "m13,m23,m33,q,dim,class,max_deviation,pass\n";
  for (const auto& cell : cells) {
    if (!cell.error.empty() || !cell.pass) all_pass = false;
    json row;
    row["weight"] = json::array({cell.hw.m13, cell.hw.m23, cell.hw.m33});
    row["q"] = cell.qv;
    if (cell.error.empty()) {
      row["dim"] = cell.dim;
      row["class"] = cell.cls;
      row["max_deviation"] = cell.max_dev;
      row["pass"] = cell.pass;
    } else {
      row["error"] = cell.error;
    }
    rows.push_back(std::move(row));
    csv << cell.hw.m13 << "," << cell.hw.m23 << "," << cell.hw.m33 << ","
        << cell.qv << "," << cell.dim << ","
        << (cell.error.empty() ? cell.cls : ("error: " + cell.error)) << ","
        << cell.max_dev << "," << (cell.pass ? "1" : "0") << "\n";
  }

  if (opts.format == "csv") {
    write_output(opts.out, csv.str());
  } else {
    json j;
    j["cells"] = std::move(rows);
    j["all_pass"] = all_pass;
    write_output(opts.out, j.dump(2));
  }
  return all_pass ? exit_ok : exit_verification_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-dimensional U_q[gl(2/1)] modules: construction, "
               "verification and classification"};
  app.require_subcommand(1);

  CommonOpts opts;
  try {
    opts.tolerance = default_tolerance();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_bad_input;
  }

  std::string basis = "reduced";
  std::string generator = "E32";
  std::string left = "T1";
  bool with_matrices = false;
  std::string d_range = "0:10";
  int m23 = 0;
  std::string m33_range = "-5:5";
  std::string m33_extra;
  std::string q_list = "0.5,1.7";

  auto* build = app.add_subcommand(
      "build", "build a module and dump basis labels plus all matrices");
  add_common(build, opts, true);
  build->add_option("--basis", basis, "reduced | induced")
      ->check(CLI::IsMember({"reduced", "induced"}));

  auto* verify = app.add_subcommand(
      "verify", "run the full relation suite against a module");
  add_common(verify, opts, true);

  auto* classify_cmd = app.add_subcommand(
      "classify", "typicality class, brackets and invariant subspace");
  add_common(classify_cmd, opts, true);

  auto* tensor = app.add_subcommand(
      "tensor",
      "decompose T_i x V (--left T0|T1|T2) or build a tensor product of two "
      "modules (--left m13,m23,m33)");
  add_common(tensor, opts, true);
  tensor->add_option("--left", left, "T0 | T1 | T2 | weight");
  tensor->add_flag("--matrices", with_matrices,
                   "include generator matrices in the tensor dump");

  auto* scan = app.add_subcommand(
      "scan", "classify and verify a grid of weights and q values");
  add_common(scan, opts, false);
  scan->add_option("--d", d_range, "m13-m23 range lo:hi (default 0:10)");
  scan->add_option("--m23", m23, "fixed m23 (default 0)");
  scan->add_option("--m33", m33_range, "integer m33 range lo:hi");
  scan->add_option("--m33-extra", m33_extra,
                   "extra m33 values, comma separated (decimals, 'pi', 'e')");
  scan->add_option("--q-list", q_list, "comma-separated q values");

  auto* dump = app.add_subcommand("dump", "dump a single generator matrix");
  add_common(dump, opts, true);
  dump->add_option("--generator", generator, "generator label, e.g. E32");
  dump->add_option("--basis", basis, "reduced | induced")
      ->check(CLI::IsMember({"reduced", "induced"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return exit_bad_input;
  }

  try {
    if (build->parsed()) return cmd_build(opts, basis);
    if (verify->parsed()) return cmd_verify(opts);
    if (classify_cmd->parsed()) return cmd_classify(opts);
    if (tensor->parsed()) return cmd_tensor(opts, left, with_matrices);
    if (scan->parsed())
      return cmd_scan(opts, d_range, m23, m33_range, m33_extra, q_list);
    if (dump->parsed()) return cmd_dump(opts, generator, basis);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_bad_input;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_bad_input;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_numeric_error;
  }
  return exit_ok;
}
