#pragma once

// Finite simplicial sets presented by their nondegenerate cells and face data.
//
// Every simplex is carried in Eilenberg-Zilber normal form: a surjection out of
// its degree together with a nondegenerate generating cell.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sset/delta.hpp"

namespace sset {

using CellId = std::uint32_t;

class SimplicialSetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cells of dimension above this bound are rejected: each cell stores the
/// normal form of every one of its faces (2^(dim+1) entries).
inline constexpr Degree kMaxCellDimension = 16;

struct FormalSimplex {
  MonotoneMap epi;  // surjective [degree] -> [dim generator]
  CellId generator;

  Degree degree() const { return epi.source_degree(); }

  friend bool operator==(const FormalSimplex&, const FormalSimplex&) = default;
  std::string to_string() const;
};

/// Nondegenerate iff the surjection is an identity.
inline bool is_degenerate(const FormalSimplex& x) { return !x.epi.is_identity(); }

/// The nondegenerate simplex carried by cell c (of dimension d).
FormalSimplex cell_simplex(CellId c, Degree d);

struct Cell {
  Degree dim;
  std::string name;
};

class SimplicialSetBuilder;

class SimplicialSet {
 public:
  SimplicialSet();

  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  /// -1 for the empty set.
  int dimension() const;

  const Cell& cell(CellId c) const { return cells_.at(c); }
  Degree dim(CellId c) const { return cells_.at(c).dim; }
  FormalSimplex simplex(CellId c) const { return cell_simplex(c, dim(c)); }
  std::vector<CellId> cells_of_dimension(Degree d) const;
  std::size_t count_of_dimension(Degree d) const;

  /// d_i of cell c, in normal form. Empty for vertices.
  std::span<const FormalSimplex> faces(CellId c) const { return faces_.at(c); }

  /// X(m)(c) for the injection m into [dim c] with image `mask`.
  const FormalSimplex& subface(CellId c, std::uint64_t mask) const {
    return subfaces_[c][mask];
  }

  std::optional<CellId> find(std::string_view name) const;

  /// Identity token shared by copies; used to tell ambient sets apart.
  std::uint64_t uid() const { return uid_; }

 private:
  friend class SimplicialSetBuilder;

  std::vector<Cell> cells_;
  std::vector<std::vector<FormalSimplex>> faces_;
  std::vector<std::vector<FormalSimplex>> subfaces_;
  std::unordered_map<std::string, CellId> by_name_;
  std::uint64_t uid_;
};

/// Accumulates cells bottom-up. Faces must reference cells added earlier and be
/// in normal form; build() fills the face-lookup tables and checks the
/// simplicial identities.
class SimplicialSetBuilder {
 public:
  CellId add_vertex(std::string name);
  CellId add_cell(std::string name, std::vector<FormalSimplex> faces);
  std::size_t size() const { return set_.cells_.size(); }
  Degree dim(CellId c) const { return set_.cells_.at(c).dim; }
  SimplicialSet build() &&;

 private:
  void check_name(const std::string& name) const;
  SimplicialSet set_;
};

/// X(phi)(x) for phi : [p] -> [q] and x of degree q, in normal form.
FormalSimplex apply_map(const SimplicialSet& X, const MonotoneMap& phi, const FormalSimplex& x);

/// d_i x.
FormalSimplex face(const SimplicialSet& X, const FormalSimplex& x, Degree i);

/// s_i x.
FormalSimplex degeneracy(const SimplicialSet& X, const FormalSimplex& x, Degree i);

/// X(phi(i, i+1))(x) for 0 <= i < degree x.
FormalSimplex elementary_edge(const SimplicialSet& X, const FormalSimplex& x, Degree i);

/// All simplices of degree d, ordered by generator then by surjection word.
std::vector<FormalSimplex> simplices_of_degree(const SimplicialSet& X, Degree d);

/// Every d_i d_j c == d_{j-1} d_i c for i < j. Returns false on the first failure.
bool satisfies_simplicial_identities(const SimplicialSet& X);

// ---------------------------------------------------------------------------
// Constructors

SimplicialSet delta(Degree n);
SimplicialSet boundary_delta(Degree n);
/// The k-th horn: the boundary of delta(n) without the facet opposite vertex k.
SimplicialSet horn(Degree n, Degree k);

SimplicialSet product(const SimplicialSet& X, const SimplicialSet& Y);
SimplicialSet disjoint_sum(const SimplicialSet& X, const SimplicialSet& Y);

/// A face-closed set of cells of one ambient simplicial set.
class Subcomplex {
 public:
  /// The face closure of `generators`.
  static Subcomplex closure(const SimplicialSet& ambient, std::span<const CellId> generators);
  /// Throws SimplicialSetError unless `cells` is already face-closed.
  static Subcomplex exactly(const SimplicialSet& ambient, std::span<const CellId> cells);

  bool contains(CellId c) const { return member_.at(c); }
  std::vector<CellId> cells() const;
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::uint64_t ambient_uid() const { return ambient_uid_; }

  /// Union of subcomplexes of one ambient set; throws on mixed ambients.
  static Subcomplex unite(std::span<const Subcomplex> parts);

 private:
  Subcomplex(std::uint64_t uid, std::vector<bool> member)
      : ambient_uid_(uid), member_(std::move(member)) {}

  std::uint64_t ambient_uid_;
  std::vector<bool> member_;
};

/// The subcomplex as a simplicial set in its own right (cell names kept).
SimplicialSet restrict_to(const SimplicialSet& X, const Subcomplex& A);
SimplicialSet subcomplex(const SimplicialSet& X, std::span<const CellId> generators);
SimplicialSet union_of(const SimplicialSet& X, std::span<const Subcomplex> parts);

/// X/A: the cells of A collapse to a fresh vertex "*" (cell 0). A must be
/// nonempty and face-closed.
SimplicialSet quotient(const SimplicialSet& X, const Subcomplex& A);
SimplicialSet quotient(const SimplicialSet& X, std::span<const CellId> cells);

/// A finite partial order on {0, ..., size-1}; less[a][b] means a < b.
struct Poset {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> less;

  std::size_t size() const { return names.size(); }
  /// Builds the transitive closure of generating relations. Throws on cycles.
  static Poset generated_by(std::vector<std::string> names,
                            std::span<const std::pair<std::size_t, std::size_t>> relations);
};

/// Cells are strict chains x0 < ... < xq. Throws unless `order` is irreflexive
/// and transitive (hence antisymmetric).
SimplicialSet nerve_poset(const Poset& order);

/// Isomorphism of presentations (bijection on cells matching all face data).
bool isomorphic(const SimplicialSet& X, const SimplicialSet& Y);

}  // namespace sset

template <>
struct std::hash<sset::FormalSimplex> {
  std::size_t operator()(const sset::FormalSimplex& x) const noexcept {
    return x.epi.hash() * 31u + x.generator;
  }
};
