#pragma once

// JSON form of a presentation:
//   {"cells": [{"id", "dim", "name"}, ...],
//    "faces": {"<id>": [[<surjection word>, <generator id>], ...], ...}}

#include "json.hpp"

#include "sset/simplicial_set.hpp"

namespace sset {

nlohmann::json to_json(const SimplicialSet& X);
/// Throws SimplicialSetError (or nlohmann::json::exception) on malformed input.
SimplicialSet from_json(const nlohmann::json& j);

nlohmann::json to_json(const FormalSimplex& x);

}  // namespace sset
