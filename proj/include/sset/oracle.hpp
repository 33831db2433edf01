#pragma once

// Slow reference computations, independent of the lattice-path engine.

#include <cstdint>
#include <stdexcept>

#include "sset/simplicial_set.hpp"

namespace sset {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Number of simplicial maps Δ^p x U -> X, found by backtracking over the
/// cells of product(delta(p), U). Throws BudgetExceeded after `node_budget`
/// search nodes rather than return a partial count.
std::uint64_t brute_force_hom_count(const SimplicialSet& U, const SimplicialSet& X, Degree p,
                                    std::uint64_t node_budget = 20'000'000);

/// Same with U = Δ^n.
std::uint64_t brute_force_hom_count(Degree n, const SimplicialSet& X, Degree p,
                                    std::uint64_t node_budget = 20'000'000);

/// Number of monotone maps [p] x [n] -> [q].
std::uint64_t count_monotone_grid_maps(Degree p, Degree n, Degree q);

}  // namespace sset
