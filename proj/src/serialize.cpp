#include "sset/serialize.hpp"

#include <string>

namespace sset {

nlohmann::json to_json(const FormalSimplex& x) {
  return nlohmann::json::array({surjection_to_word(x.epi).indices, x.generator});
}

nlohmann::json to_json(const SimplicialSet& X) {
  nlohmann::json cells = nlohmann::json::array();
  nlohmann::json faces = nlohmann::json::object();
  for (CellId c = 0; c < X.size(); ++c) {
    cells.push_back({{"id", c}, {"dim", X.dim(c)}, {"name", X.cell(c).name}});
    if (X.dim(c) == 0)
      continue;
    nlohmann::json list = nlohmann::json::array();
    for (const FormalSimplex& f : X.faces(c))
      list.push_back(to_json(f));
    faces[std::to_string(c)] = std::move(list);
  }
  return {{"cells", std::move(cells)}, {"faces", std::move(faces)}};
}

SimplicialSet from_json(const nlohmann::json& j) {
  SimplicialSetBuilder b;
  const auto& cells = j.at("cells");
  const auto& faces = j.at("faces");
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const auto& cell = cells[k];
    if (cell.at("id").get<std::size_t>() != k)
      throw SimplicialSetError("cell ids must be 0, 1, 2, ... in order");
    const auto dim = cell.at("dim").get<Degree>();
    auto name = cell.at("name").get<std::string>();
    if (dim == 0) {
      b.add_vertex(std::move(name));
      continue;
    }
    const auto& list = faces.at(std::to_string(k));
    if (list.size() != dim + 1)
      throw SimplicialSetError("cell " + std::to_string(k) + " needs " + std::to_string(dim + 1) +
                               " faces");
    std::vector<FormalSimplex> fs;
    for (const auto& entry : list) {
      const auto gen = entry.at(1).get<CellId>();
      if (gen >= b.size())
        throw SimplicialSetError("face of cell " + std::to_string(k) + " names a later cell");
      SurjectionWord w{entry.at(0).get<std::vector<Degree>>()};
      MonotoneMap epi = word_to_surjection(w, dim - 1);
      if (epi.target_degree() != b.dim(gen))
        throw SimplicialSetError("face of cell " + std::to_string(k) + " has the wrong degree");
      fs.push_back({std::move(epi), gen});
    }
    b.add_cell(std::move(name), std::move(fs));
  }
  return std::move(b).build();
}

}  // namespace sset
