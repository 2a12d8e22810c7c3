#include "ncorlicz/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace nco {

using nlohmann::json;

OrliczFunction phi_from_json(const json& j) {
  if (!j.is_object() || !j.contains("family"))
    throw std::invalid_argument("phi_from_json: missing family");
  const std::string family = j.at("family").get<std::string>();
  if (family == "power") return OrliczFunction::power(j.at("alpha").get<double>());
  if (family == "expm") return OrliczFunction::expm();
  if (family == "linlog") return OrliczFunction::linlog();
  if (family == "table")
    return OrliczFunction::tabulated(j.at("u").get<std::vector<double>>(),
                                     j.at("phi").get<std::vector<double>>());
  if (family == "intermediate")
    return OrliczFunction::intermediate(phi_from_json(j.at("phi1")), phi_from_json(j.at("phi2")),
                                        j.at("s").get<double>());
  throw std::invalid_argument("phi_from_json: unknown family '" + family + "'");
}

TracialAlgebra algebra_from_json(const json& j) {
  std::vector<AlgebraBlock> blocks;
  for (const auto& b : j.at("blocks"))
    blocks.push_back({b.at("dim").get<int>(), b.at("trace_scale").get<double>()});
  return TracialAlgebra(std::move(blocks));
}

json algebra_to_json(const TracialAlgebra& algebra) {
  json blocks = json::array();
  for (const auto& b : algebra.blocks())
    blocks.push_back({{"dim", b.dim}, {"trace_scale", b.trace_scale}});
  return {{"blocks", blocks}};
}

Operator operator_from_json(const json& j) {
  const TracialAlgebra algebra = algebra_from_json(j.at("algebra"));
  const auto& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != algebra.blocks().size())
    throw std::invalid_argument("operator_from_json: entries/blocks mismatch");
  std::vector<Eigen::MatrixXcd> blocks;
  for (size_t b = 0; b < entries.size(); ++b) {
    const int d = algebra.blocks()[b].dim;
    Eigen::MatrixXcd m(d, d);
    const auto& rows = entries[b];
    if (static_cast<int>(rows.size()) != d)
      throw std::invalid_argument("operator_from_json: row count mismatch");
    for (int r = 0; r < d; ++r) {
      const auto& row = rows[static_cast<size_t>(r)];
      if (static_cast<int>(row.size()) != d)
        throw std::invalid_argument("operator_from_json: column count mismatch");
      for (int c = 0; c < d; ++c) {
        const auto& cell = row[static_cast<size_t>(c)];
        if (!cell.is_array() || cell.size() != 2)
          throw std::invalid_argument("operator_from_json: entry must be [re, im]");
        m(r, c) = std::complex<double>(cell[0].get<double>(), cell[1].get<double>());
      }
    }
    blocks.push_back(std::move(m));
  }
  return Operator(algebra, std::move(blocks));
}

json operator_to_json(const Operator& op) {
  json entries = json::array();
  for (int b = 0; b < op.block_count(); ++b) {
    const auto& m = op.block(b);
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
      rows.push_back(std::move(row));
    }
    entries.push_back(std::move(rows));
  }
  return {{"algebra", algebra_to_json(op.algebra())}, {"entries", entries}};
}

namespace {

double exponent_from_json(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
    throw std::invalid_argument("tuple_space_from_json: bad exponent string '" + s + "'");
  }
  return j.get<double>();
}

}  // namespace

TupleSpace tuple_space_from_json(const json& j) {
  std::vector<TupleComponent> components;
  for (const auto& c : j.at("components"))
    components.push_back({phi_from_json(c.at("phi")), algebra_from_json(c.at("algebra"))});
  const auto weights = j.at("weights").get<std::vector<double>>();
  const double p = exponent_from_json(j.at("p"));
  const std::string gauge = j.value("gauge", "luxemburg");
  if (gauge != "luxemburg" && gauge != "orlicz")
    throw std::invalid_argument("tuple_space_from_json: gauge must be luxemburg or orlicz");
  return TupleSpace(std::move(components), weights, p,
                    gauge == "luxemburg" ? Gauge::luxemburg : Gauge::orlicz);
}

TupleLinearOperator tuple_linear_operator_from_json(const json& j) {
  const auto& coeffs = j.at("coeffs");
  const int rows = static_cast<int>(coeffs.size());
  const int cols = rows > 0 ? static_cast<int>(coeffs[0].size()) : 0;
  Eigen::MatrixXcd m(rows, cols);
  for (int k = 0; k < rows; ++k)
    for (int c = 0; c < cols; ++c) {
      const auto& cell = coeffs[static_cast<size_t>(k)][static_cast<size_t>(c)];
      m(k, c) = std::complex<double>(cell.at("re").get<double>(), cell.at("im").get<double>());
    }
  TupleLinearOperator t(std::move(m));
  auto load_side = [&](const char* key, bool is_left) {
    if (!j.contains(key) || j.at(key).is_null()) return;
    const auto& side = j.at(key);
    for (int k = 0; k < rows; ++k)
      for (int c = 0; c < cols; ++c) {
        const auto& cell = side[static_cast<size_t>(k)][static_cast<size_t>(c)];
        if (cell.is_null()) continue;
        if (is_left)
          t.set_left(k, c, operator_from_json(cell));
        else
          t.set_right(k, c, operator_from_json(cell));
      }
  };
  load_side("left", true);
  load_side("right", false);
  return t;
}

json tuple_linear_operator_to_json(const TupleLinearOperator& t) {
  json coeffs = json::array();
  bool any_left = false, any_right = false;
  for (int k = 0; k < t.rows(); ++k) {
    json row = json::array();
    for (int c = 0; c < t.cols(); ++c) {
      row.push_back({{"re", t.coeffs()(k, c).real()}, {"im", t.coeffs()(k, c).imag()}});
      any_left = any_left || t.left(k, c).has_value();
      any_right = any_right || t.right(k, c).has_value();
    }
    coeffs.push_back(std::move(row));
  }
  json out;
  out["coeffs"] = coeffs;
  auto dump_side = [&](bool is_left) -> json {
    json side = json::array();
    for (int k = 0; k < t.rows(); ++k) {
      json row = json::array();
      for (int c = 0; c < t.cols(); ++c) {
        const auto& slot = is_left ? t.left(k, c) : t.right(k, c);
        row.push_back(slot ? operator_to_json(*slot) : json(nullptr));
      }
      side.push_back(std::move(row));
    }
    return side;
  };
  out["left"] = any_left ? dump_side(true) : json(nullptr);
  out["right"] = any_right ? dump_side(false) : json(nullptr);
  return out;
}

}  // namespace nco
