#pragma once

// Decision procedures for regularity of finite simplicial sets.

#include <optional>
#include <string>

#include "sset/simplicial_set.hpp"

namespace sset {

struct Violation {
  CellId cell;
  /// Face index, elementary-edge index or P_r edge origin, depending on the check.
  Degree index;
  /// The offending simplex when it is not the cell itself (P_r checks).
  std::optional<FormalSimplex> simplex;
};

struct RegularityReport {
  bool verdict = true;
  std::optional<Violation> witness;  // present iff verdict is false

  explicit operator bool() const { return verdict; }
};

/// Every face of every nondegenerate cell is nondegenerate.
RegularityReport is_strongly_regular(const SimplicialSet& X);

/// Every elementary edge of every nondegenerate cell is nondegenerate.
RegularityReport is_regular(const SimplicialSet& X);

/// The default bound for satisfies_pr: dim X + r + 1.
Degree default_pr_cap(const SimplicialSet& X, Degree r);

/// Bounded check of P_r: for every simplex x of degree <= cap and every i with
/// X(phi(i, i+r)) x degenerate, x is an r-fold degeneracy s_{i+r-1} ... s_i y.
/// Throws std::invalid_argument if r == 0 or cap < dim X.
RegularityReport satisfies_pr(const SimplicialSet& X, Degree r, Degree cap);

/// Bounded check that a simplex is nondegenerate iff all its elementary edges are.
RegularityReport satisfies_edge_criterion(const SimplicialSet& X, Degree cap);

/// Number of indices i with a nondegenerate elementary edge X(phi(i, i+1)) x.
Degree count_efficient_edges(const SimplicialSet& X, const FormalSimplex& x);

/// x = s_{i+r-1} ... s_i y for some y, read off the normal form of x.
bool is_iterated_degeneracy(const FormalSimplex& x, Degree i, Degree r);

std::string describe(const SimplicialSet& X, const RegularityReport& report);

}  // namespace sset
