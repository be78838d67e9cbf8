#include "cluster/json_io.hpp"

#include <cmath>
#include <fstream>

namespace cluster {

using nlohmann::json;

json quiver_to_json(const Quiver& q) {
  json arrows = json::array();
  for (const Arrow& a : q.arrows())
    arrows.push_back({a.tail + 1, a.head + 1});
  return json{{"n", q.vertex_count()}, {"arrows", arrows}};
}

Quiver quiver_from_json(const json& j) {
  if (!j.contains("n") || !j.contains("arrows"))
    throw InvalidQuiver("quiver JSON needs fields 'n' and 'arrows'");
  int n = j.at("n").get<int>();
  std::vector<Arrow> arrows;
  for (const auto& a : j.at("arrows")) {
    if (!a.is_array() || a.size() != 2)
      throw InvalidQuiver("arrow entries must be pairs");
    arrows.push_back(Arrow{a.at(0).get<int>() - 1, a.at(1).get<int>() - 1});
  }
  return Quiver(n, std::move(arrows));
}

json matrix_to_json(const ExchangeMatrix& b) { return json(b.data()); }

ExchangeMatrix matrix_from_json(const json& j) {
  const json& arr = j.is_object() && j.contains("b") ? j.at("b") : j;
  if (!arr.is_array()) throw InvalidQuiver("matrix JSON must be an array");
  std::vector<int> data = arr.get<std::vector<int>>();
  int n = (int)std::lround(std::sqrt((double)data.size()));
  if ((size_t)n * n != data.size())
    throw InvalidQuiver("matrix JSON length is not a perfect square");
  return ExchangeMatrix(n, std::move(data));
}

json rep_to_json(const Rep& m) {
  json mats = json::array();
  for (const QMat& a : m.matrices) {
    json rows = json::array();
    for (int i = 0; i < a.rows(); ++i) {
      json row = json::array();
      for (int j = 0; j < a.cols(); ++j) row.push_back(a.at(i, j).get_str());
      rows.push_back(std::move(row));
    }
    mats.push_back(std::move(rows));
  }
  return json{{"quiver", quiver_to_json(m.quiver)},
              {"dims", m.dims},
              {"matrices", mats}};
}

json qp_to_json(const QP& qp) {
  json cycles = json::array();
  for (const auto& [p, c] : qp.potential.cycles())
    cycles.push_back({{"cycle", p}, {"coeff", c.get_str()}});
  return json{{"quiver", quiver_to_json(qp.quiver)}, {"potential", cycles}};
}

json decorated_to_json(const DecoratedRep& dec) {
  json j = rep_to_json(dec.m);
  j["potential"] = qp_to_json(dec.qp)["potential"];
  j["decoration"] = dec.v;
  return j;
}

ExchangeMatrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidQuiver("cannot read input file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InvalidQuiver(std::string("invalid JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("arrows"))
    return quiver_to_matrix(quiver_from_json(j));
  return matrix_from_json(j);
}

}  // namespace cluster
