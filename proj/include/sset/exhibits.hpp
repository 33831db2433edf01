#pragma once

// Explicit constructions: the tight simplices of Hom(Δ^n, Δ^q), the infinite
// nondegenerate tower in Hom(Δ^1, Δ^q/F), and a seeded corpus of finite sets.

#include <cstdint>
#include <string>
#include <vector>

#include "sset/hom.hpp"
#include "sset/simplicial_set.hpp"

namespace sset {

/// A monotone map [p] x [n] -> [q], i.e. a p-simplex of Hom(Δ^n, Δ^q).
struct LatticeFunction {
  Degree p;
  Degree n;
  Degree q;
  std::vector<Degree> values;  // row-major by column: values[i * (n + 1) + j]

  Degree operator()(Degree i, Degree j) const { return values[i * (n + 1) + j]; }
  std::vector<Degree> column(Degree i) const;
  /// sigma(i) = f(i, 0) + ... + f(i, n).
  Degree column_sum(Degree i) const;
  bool is_monotone() const;
  /// Degenerate iff two adjacent columns agree.
  bool is_degenerate() const;
};

/// The nondegenerate ((n+1)q)-simplex of Hom(Δ^n, Δ^q).
LatticeFunction tight_simplex(Degree n, Degree q);

/// The Hom simplex of a lattice function, in X = delta(q).
HomSimplex to_hom_simplex(const SimplicialSet& delta_q, const LatticeFunction& f);
/// Inverse of to_hom_simplex (reads vertex labels of delta(q)).
LatticeFunction to_lattice_function(const SimplicialSet& delta_q, const HomSimplex& f, Degree q);

/// Clamps i to [0, q].
Degree coupe(long long i, Degree q);

struct LurieFamily {
  SimplicialSet quotient;                 // Δ^q / F
  std::vector<MonotoneMap> z;             // z_u : [p+1] -> [q], u = 0..p
  std::vector<FormalSimplex> components;  // images of z_u in the quotient
  HomSimplex simplex;                     // the p-simplex of Hom(Δ^1, Δ^q/F)
};

/// F is the union of the faces of Δ^q with the given vertex lists; it must
/// contain the facets opposite a and a+1 and not the top simplex. Requires
/// q >= 3, 0 < a < q - 1 and p > q. Throws std::invalid_argument otherwise.
LurieFamily lurie_family(Degree q, Degree a, const std::vector<std::vector<Degree>>& F, Degree p);

/// Vertex lists of the facets of Δ^q opposite the given vertices.
std::vector<std::vector<Degree>> facets_opposite(Degree q, const std::vector<Degree>& vertices);

/// Components f_0..f_p of a p-simplex of Hom(Δ^1, X): f_u sits on the path
/// that climbs at column u.
std::vector<FormalSimplex> hom1_components(const HomSimplex& f);
HomSimplex hom1_from_components(const std::vector<FormalSimplex>& components);

/// Whether f = s_k g: f_u = s_{k+1} g_u for u <= k and f_u = s_k g_{u-1} for
/// u > k, for some compatible family g. Throws std::invalid_argument if the f_u
/// are incompatible.
bool hom1_degeneracy_test(const SimplicialSet& X, const std::vector<FormalSimplex>& f, Degree k);
bool hom1_is_degenerate(const SimplicialSet& X, const std::vector<FormalSimplex>& f);

// ---------------------------------------------------------------------------
// Corpus

enum class KnownRegularity { regular, not_regular, unknown };

struct CorpusEntry {
  std::string name;
  SimplicialSet set;
  KnownRegularity known;
};

/// Δ^n collapsed along the faces with the given vertex lists.
SimplicialSet delta_quotient(Degree n, const std::vector<std::vector<Degree>>& faces);

/// Deterministic from `seed`. Always starts with Δ^2/{0,2} and Δ^3/∂Δ^3; every
/// member has at most `budget` nondegenerate cells.
std::vector<CorpusEntry> corpus(std::uint64_t seed, std::size_t count, std::size_t budget = 40);

}  // namespace sset
