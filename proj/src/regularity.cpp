#include "sset/regularity.hpp"

#include <stdexcept>

namespace sset {

namespace {

RegularityReport fail(CellId c, Degree index, std::optional<FormalSimplex> x = std::nullopt) {
  return {false, Violation{c, index, std::move(x)}};
}

}  // namespace

RegularityReport is_strongly_regular(const SimplicialSet& X) {
  for (CellId c = 0; c < X.size(); ++c) {
    const auto faces = X.faces(c);
    for (Degree i = 0; i < faces.size(); ++i)
      if (is_degenerate(faces[i]))
        return fail(c, i);
  }
  return {};
}

RegularityReport is_regular(const SimplicialSet& X) {
  for (CellId c = 0; c < X.size(); ++c) {
    const FormalSimplex x = X.simplex(c);
    for (Degree i = 0; i < X.dim(c); ++i)
      if (is_degenerate(elementary_edge(X, x, i)))
        return fail(c, i);
  }
  return {};
}

Degree default_pr_cap(const SimplicialSet& X, Degree r) {
  return static_cast<Degree>(std::max(0, X.dimension())) + r + 1;
}

bool is_iterated_degeneracy(const FormalSimplex& x, Degree i, Degree r) {
  for (Degree j = i; j < i + r; ++j)
    if (x.epi(j) != x.epi(j + 1))
      return false;
  return true;
}

RegularityReport satisfies_pr(const SimplicialSet& X, Degree r, Degree cap) {
  if (r == 0)
    throw std::invalid_argument("P_r needs r >= 1");
  if (static_cast<int>(cap) < X.dimension())
    throw std::invalid_argument("degree cap " + std::to_string(cap) +
                                " is below the dimension of the set");
  // Cells first, then degrees: the least violation in (cell, degree, simplex, i) order.
  for (CellId c = 0; c < X.size(); ++c) {
    for (Degree d = std::max(X.dim(c), r); d <= cap; ++d) {
      for (const auto& epi : all_surjections(d, X.dim(c))) {
        const FormalSimplex x{epi, c};
        for (Degree i = 0; i + r <= d; ++i) {
          const FormalSimplex e = apply_map(X, edge_map(i, r, d), x);
          if (is_degenerate(e) && !is_iterated_degeneracy(x, i, r))
            return fail(c, i, x);
        }
      }
    }
  }
  return {};
}

RegularityReport satisfies_edge_criterion(const SimplicialSet& X, Degree cap) {
  for (CellId c = 0; c < X.size(); ++c) {
    for (Degree d = std::max<Degree>(X.dim(c), 1); d <= cap; ++d) {
      for (const auto& epi : all_surjections(d, X.dim(c))) {
        const FormalSimplex x{epi, c};
        bool edges_nondegenerate = true;
        for (Degree i = 0; i < d && edges_nondegenerate; ++i)
          edges_nondegenerate = !is_degenerate(elementary_edge(X, x, i));
        if (edges_nondegenerate == is_degenerate(x))
          return fail(c, d, x);
      }
    }
  }
  return {};
}

Degree count_efficient_edges(const SimplicialSet& X, const FormalSimplex& x) {
  if (x.degree() == 0)
    throw std::invalid_argument("a vertex has no elementary edges");
  Degree count = 0;
  for (Degree i = 0; i < x.degree(); ++i)
    if (!is_degenerate(elementary_edge(X, x, i)))
      ++count;
  return count;
}

std::string describe(const SimplicialSet& X, const RegularityReport& report) {
  if (report.verdict)
    return "holds";
  const Violation& v = *report.witness;
  std::string s = "fails at cell '" + X.cell(v.cell).name + "' index " + std::to_string(v.index);
  if (v.simplex)
    s += " simplex " + v.simplex->to_string();
  return s;
}

}  // namespace sset
