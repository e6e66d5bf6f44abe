#include "uqgl/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace uqgl {

using nlohmann::json;

namespace {

constexpr const char* schema_tag = "uqgl.representation/1";

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("matrix must be a non-empty array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j.at(0).size());
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const auto& row = j.at(r);
    if (static_cast<int>(row.size()) != cols)
      throw std::invalid_argument("ragged matrix rows");
    for (int c = 0; c < cols; ++c) m(r, c) = row.at(c).get<double>();
  }
  return m;
}

json reduced_label(const Weight& hw, const ReducedBasisVector& bv) {
  const EvenWeight& sig = bv.pattern.top;
  return json{{"k", bv.k},
              {"pattern",
               json::array({json::array({hw.m13, hw.m23, hw.m33}),
                            json::array({sig.m12, sig.m22, sig.m32}),
                            json::array({bv.pattern.m11, 0, bv.pattern.m31()})})}};
}

json induced_label(const InducedBasisVector& bv) {
  const EvenWeight& sig = bv.pattern.top;
  return json{{"theta", json::array({bv.theta.theta1, bv.theta.theta2})},
              {"pattern",
               json::array({json::array({sig.m12, sig.m22, sig.m32}),
                            json::array({bv.pattern.m11, 0, bv.pattern.m31()})})}};
}

}  // namespace

json classification_to_json(const TypicalityReport& report) {
  return json{{"class", to_string(report.cls)},
              {"brackets", json::array({report.bracket1, report.bracket2})},
              {"invariant_subspace", report.invariant_subspace}};
}

json representation_to_json(const Representation& rep) {
  json j;
  j["schema"] = schema_tag;
  j["weight"] = json::array({rep.weight.m13, rep.weight.m23, rep.weight.m33});
  j["q"] = rep.q.q();
  j["mode"] = rep.q.classical() ? "classical-limit" : "generic";
  j["normalization"] = json::array({rep.a.a1, rep.a.a2, rep.a.a3});
  j["basis_kind"] = to_string(rep.kind);
  j["classification"] = classification_to_json(rep.classification);

  json dims;
  dims["total"] = rep.dim();
  if (rep.kind == BasisKind::Reduced || rep.kind == BasisKind::Factor) {
    std::array<int, 4> counts = {0, 0, 0, 0};
    for (const auto& bv : rep.reduced_basis) counts[bv.k]++;
    dims["subspaces"] = counts;
  }
  j["dimensions"] = std::move(dims);

  json basis = json::array();
  if (rep.kind == BasisKind::Induced) {
    for (const auto& bv : rep.induced_basis) basis.push_back(induced_label(bv));
  } else {
    for (const auto& bv : rep.reduced_basis)
      basis.push_back(reduced_label(rep.weight, bv));
  }
  j["basis"] = std::move(basis);

  json mats;
  for (Gen g : all_generators)
    mats[to_string(g)] = matrix_to_json(rep.matrix(g));
  j["matrices"] = std::move(mats);
  return j;
}

Representation representation_from_json(const json& j) {
  try {
    if (j.at("schema").get<std::string>() != schema_tag)
      throw std::invalid_argument("unknown schema tag");

    const auto& w = j.at("weight");
    const Weight hw{w.at(0).get<int>(), w.at(1).get<int>(),
                    w.at(2).get<double>()};
    const std::string mode = j.at("mode").get<std::string>();
    const QContext q(j.at("q").get<double>(), mode == "classical-limit"
                                                  ? QMode::ClassicalLimit
                                                  : QMode::Generic);
    const auto& na = j.at("normalization");
    const Normalization a{na.at(0).get<double>(), na.at(1).get<double>(),
                          na.at(2).get<double>()};

    Representation rep{hw, q, a};
    const std::string kind = j.at("basis_kind").get<std::string>();
    if (kind == "reduced") {
      rep.kind = BasisKind::Reduced;
    } else if (kind == "induced") {
      rep.kind = BasisKind::Induced;
    } else if (kind == "factor") {
      rep.kind = BasisKind::Factor;
    } else {
      throw std::invalid_argument("unsupported basis kind: " + kind);
    }

    for (const auto& entry : j.at("basis")) {
      const auto& pattern = entry.at("pattern");
      if (rep.kind == BasisKind::Induced) {
        const auto& theta = entry.at("theta");
        const auto& sig = pattern.at(0);
        const EvenWeight top{sig.at(0).get<int>(), sig.at(1).get<int>(),
                             sig.at(2).get<double>()};
        rep.induced_basis.push_back(
            {{theta.at(0).get<int>(), theta.at(1).get<int>()},
             {top, pattern.at(1).at(0).get<int>()}});
        rep.parities.push_back(rep.induced_basis.back().theta.parity());
      } else {
        const int k = entry.at("k").get<int>();
        const auto& sig = pattern.at(1);
        const EvenWeight top{sig.at(0).get<int>(), sig.at(1).get<int>(),
                             sig.at(2).get<double>()};
        rep.reduced_basis.push_back({k, {top, pattern.at(2).at(0).get<int>()}});
        rep.parities.push_back(k == 1 || k == 2);
      }
    }

    const auto& cls = j.at("classification");
    const std::string cname = cls.at("class").get<std::string>();
    if (cname == "typical") {
      rep.classification.cls = TypicalityClass::Typical;
    } else if (cname == "nontypical-class-1") {
      rep.classification.cls = TypicalityClass::NonTypicalClass1;
    } else if (cname == "nontypical-class-2") {
      rep.classification.cls = TypicalityClass::NonTypicalClass2;
    } else {
      rep.classification.cls = TypicalityClass::Unclassified;
    }
    rep.classification.bracket1 = cls.at("brackets").at(0).get<double>();
    rep.classification.bracket2 = cls.at("brackets").at(1).get<double>();
    rep.classification.invariant_subspace =
        cls.at("invariant_subspace").get<std::vector<int>>();

    const auto& mats = j.at("matrices");
    for (Gen g : all_generators)
      rep.matrix(g) = matrix_from_json(mats.at(to_string(g)));

    const int n = rep.dim();
    for (Gen g : all_generators)
      if (rep.matrix(g).rows() != n || rep.matrix(g).cols() != n)
        throw std::invalid_argument("generator matrices disagree in shape");
    if (static_cast<int>(rep.parities.size()) != n)
      throw std::invalid_argument("basis length disagrees with matrix shape");
    return rep;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed representation dump: ") +
                                e.what());
  }
}

json report_to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back(json{{"relation", to_string(c.id)},
                          {"deviation", c.deviation},
                          {"pass", c.pass}});
  return json{
      {"tolerance", report.tolerance},
      {"weight", json::array({report.weight.m13, report.weight.m23,
                              report.weight.m33})},
      {"q", report.q_value},
      {"mode", report.mode == QMode::ClassicalLimit ? "classical-limit"
                                                    : "generic"},
      {"normalization", json::array({report.a.a1, report.a.a2, report.a.a3})},
      {"basis_kind", to_string(report.kind)},
      {"all_pass", report.all_pass()},
      {"max_deviation", report.max_deviation()},
      {"checks", std::move(checks)}};
}

std::string matrix_to_csv(const Matrix& m) {
  std::ostringstream out;
  out.precision(17);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out << ",";
      out << m(i, j);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace uqgl
