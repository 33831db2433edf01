#pragma once

// The internal Hom(U, X) of finite simplicial sets.
//
// A p-simplex of Hom(Δ^n, X) is a map Δ^p x Δ^n -> X, given by one
// (p+n)-simplex of X per maximal path of the grid [p] x [n], subject to
// agreement across every square flip.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sset/lattice_path.hpp"
#include "sset/regularity.hpp"
#include "sset/simplicial_set.hpp"

namespace sset {

struct HomSimplex {
  Degree p;
  Degree n;
  /// Indexed by the lexicographic rank of the path in path_catalog(p, n).
  std::vector<FormalSimplex> assignment;

  const FormalSimplex& at(const LatticePath& a) const;
  friend bool operator==(const HomSimplex&, const HomSimplex&) = default;
};

class RegularityViolation : public std::runtime_error {
 public:
  RegularityViolation(const std::string& what, FormalSimplex offending)
      : std::runtime_error(what), simplex(std::move(offending)) {}
  FormalSimplex simplex;
};

class CapRequired : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// True iff the assignment is total and agrees across every square flip.
bool is_compatible(const SimplicialSet& X, const HomSimplex& f);

/// Visits the p-simplices of Hom(Δ^n, X) in lexicographic order of their
/// assignments (candidates per path ordered by generator, then surjection word).
/// The visitor returns false to stop early.
void for_each_hom_simplex(const SimplicialSet& X, Degree n, Degree p,
                          const std::function<bool(const HomSimplex&)>& visit);

std::vector<HomSimplex> enumerate_hom_simplices(const SimplicialSet& X, Degree n, Degree p);
std::uint64_t count_hom_simplices(const SimplicialSet& X, Degree n, Degree p);

/// Precomposition with theta x mu : Δ^p' x Δ^n' -> Δ^p x Δ^n.
HomSimplex hom_pullback(const SimplicialSet& X, const HomSimplex& f, const MonotoneMap& theta,
                        const MonotoneMap& mu);
/// Precomposition with theta x id.
HomSimplex hom_reindex(const SimplicialSet& X, const HomSimplex& f, const MonotoneMap& theta);
HomSimplex hom_face(const SimplicialSet& X, const HomSimplex& f, Degree i);
HomSimplex hom_degeneracy(const SimplicialSet& X, const HomSimplex& f, Degree k);

/// The 1-simplex of X obtained by restricting f to the segment from a to b
/// (a <= b componentwise, a != b).
FormalSimplex restrict_to_segment(const SimplicialSet& X, const HomSimplex& f, GridPoint a,
                                  GridPoint b);
/// The vertex f(point).
FormalSimplex restrict_to_point(const SimplicialSet& X, const HomSimplex& f, GridPoint q);

/// Every horizontal edge (k, j) -> (k+1, j) goes to a degenerate 1-simplex.
bool almost_degenerate_at(const SimplicialSet& X, const HomSimplex& f, Degree k);
std::optional<Degree> almost_degenerate_column(const SimplicialSet& X, const HomSimplex& f);

/// Builds g with hom_degeneracy(g, k) == f from a k-almost-degenerate f.
/// Throws std::invalid_argument if f is not k-almost-degenerate and
/// RegularityViolation if some f(a) fails to be the expected degeneracy.
HomSimplex lemma4_witness(const SimplicialSet& X, const HomSimplex& f, Degree k);

/// f == s_k d_k f for some k.
bool is_degenerate_hom(const SimplicialSet& X, const HomSimplex& f);

/// is_degenerate_hom, additionally asserting agreement with the
/// almost-degenerate criterion when `x_regular`. Throws std::logic_error on
/// disagreement.
bool is_degenerate_checked(const SimplicialSet& X, const HomSimplex& f, bool x_regular);

struct HomDimension {
  /// -1 when Hom is empty.
  long long value;
  /// False when value is only a lower bound.
  bool exact;
  std::string to_string() const;
};

/// Dimension of Hom(Δ^n, X). For regular X the search starts at (n+1) dim X
/// (or at cap, if smaller) and is exact unless it stops at the cap. Otherwise a
/// cap is mandatory and the answer is a lower bound.
HomDimension dim_hom(const SimplicialSet& X, Degree n, std::optional<Degree> cap = std::nullopt);

/// Whether Hom(Δ^n, X)_p has a nondegenerate simplex; the first one found.
/// With `x_regular` degeneracy is decided by the almost-degenerate criterion,
/// otherwise by the round trip at each almost-degenerate column.
std::optional<HomSimplex> find_nondegenerate(const SimplicialSet& X, Degree n, Degree p,
                                             bool x_regular);

// ---------------------------------------------------------------------------
// General source U

/// A p-simplex of Hom(U, X): one component per cell of U (indexed by cell id),
/// the component of a d-cell being a p-simplex of Hom(Δ^d, X).
struct HomFamily {
  Degree p;
  std::vector<HomSimplex> components;
  friend bool operator==(const HomFamily&, const HomFamily&) = default;
};

void for_each_hom_family(const SimplicialSet& U, const SimplicialSet& X, Degree p,
                         const std::function<bool(const HomFamily&)>& visit);
std::vector<HomFamily> hom_general(const SimplicialSet& U, const SimplicialSet& X, Degree p);
std::uint64_t count_hom_families(const SimplicialSet& U, const SimplicialSet& X, Degree p);

bool is_degenerate_family(const SimplicialSet& X, const HomFamily& f);

/// Largest p <= limit with a nondegenerate p-simplex of Hom(U, X). When
/// `stop_at_gap`, scanning upward stops at the first degree without one (valid
/// whenever Hom(U, X) is regular).
HomDimension hom_general_dimension(const SimplicialSet& U, const SimplicialSet& X, Degree limit,
                                   bool stop_at_gap);

/// Sum over nondegenerate cells u of U of (|u| + 1) * dim X.
std::uint64_t theorem1bis_bound(const SimplicialSet& U, const SimplicialSet& X);

/// Regularity of Hom(Δ^n, X) through degree max_p: every elementary edge of
/// every nondegenerate simplex is nondegenerate. The witness names the
/// degree (cell field) and edge index.
RegularityReport hom_is_regular_through(const SimplicialSet& X, Degree n, Degree max_p);

}  // namespace sset
