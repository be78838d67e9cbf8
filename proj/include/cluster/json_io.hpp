#pragma once

#include "cluster/qp.hpp"
#include "cluster/quiver.hpp"
#include "cluster/rep.hpp"

#include <json.hpp>

#include <string>

namespace cluster {

// Vertices are 1-based in all JSON payloads, 0-based internally.

nlohmann::json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const ExchangeMatrix& b);
ExchangeMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json rep_to_json(const Rep& m);
nlohmann::json qp_to_json(const QP& qp);
nlohmann::json decorated_to_json(const DecoratedRep& dec);

// Reads a quiver or matrix JSON file and returns the exchange matrix.
// Accepts {"n": .., "arrows": [[..],..]}, a bare row-major integer array,
// or {"b": [..]}.  Throws InvalidQuiver on malformed input.
ExchangeMatrix load_matrix_file(const std::string& path);

}  // namespace cluster
