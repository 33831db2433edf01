#pragma once

// Maximal monotone paths (0,0) -> (p,n) in the grid [p] x [n].

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sset/delta.hpp"

namespace sset {

struct GridPoint {
  Degree x;
  Degree y;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// A word of p horizontal (H) and n vertical (V) steps. Point s of the path is
/// the grid point reached after s steps, so a path through (i, j) visits it at
/// s = i + j.
class LatticePath {
 public:
  LatticePath(Degree p, Degree n, std::uint64_t vertical_steps);
  /// Parses a word over {H, V}.
  static LatticePath from_word(std::string_view word);

  Degree p() const { return p_; }
  Degree n() const { return n_; }
  Degree length() const { return p_ + n_; }
  bool vertical(Degree step) const { return vsteps_ >> step & 1u; }
  std::uint64_t vertical_steps() const { return vsteps_; }
  GridPoint point(Degree s) const;
  bool passes_through(GridPoint q) const;
  std::string word() const;

  /// Copy with an H step inserted before step s.
  LatticePath insert_horizontal(Degree s) const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
  /// Lexicographic order of words with H < V.
  friend bool operator<(const LatticePath& a, const LatticePath& b);

 private:
  Degree p_;
  Degree n_;
  std::uint64_t vsteps_;  // bit s set iff step s is V
};

/// All C(p+n, p) maximal paths in lexicographic word order.
std::vector<LatticePath> all_paths(Degree p, Degree n);

/// Two paths that agree except around the unit square with lower-left corner
/// `corner`: `lower` turns H then V there, `upper` turns V then H. They share
/// every point except the one at index corner.x + corner.y + 1.
struct SquareFlip {
  std::size_t lower;
  std::size_t upper;
  GridPoint corner;
  Degree face_index() const { return corner.x + corner.y + 1; }
};

/// Paths of [p] x [n] with their lexicographic ranks and flip adjacencies.
class PathCatalog {
 public:
  PathCatalog(Degree p, Degree n);

  Degree p() const { return p_; }
  Degree n() const { return n_; }
  std::size_t size() const { return paths_.size(); }
  const LatticePath& operator[](std::size_t k) const { return paths_[k]; }
  const std::vector<LatticePath>& paths() const { return paths_; }
  std::size_t index_of(const LatticePath& a) const;
  const std::vector<SquareFlip>& flips() const { return flips_; }

  /// The lexicographically least path through an increasing chain of points.
  LatticePath least_path_through(const std::vector<GridPoint>& chain) const;

 private:
  Degree p_, n_;
  std::vector<LatticePath> paths_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::vector<SquareFlip> flips_;
};

/// Shared, lazily built catalog for (p, n). Thread-safe.
const PathCatalog& path_catalog(Degree p, Degree n);

/// The decomposition a = e + b(alpha, t, beta) + c of a path around column k.
struct PathSplit {
  Degree k;
  Degree alpha;
  Degree t;
  Degree beta;
  /// Prefix from (0,0) to (k, alpha), arriving horizontally (empty when k = 0).
  LatticePath e;
  /// Suffix from (k+1, beta) to (p, n), leaving horizontally, in local coordinates
  /// (empty when k = p - 1).
  LatticePath c;
};

/// Requires 0 <= k < p.
PathSplit split_path_at_column(const LatticePath& a, Degree k);

/// Reassembles e + b(alpha, t, beta) + c.
LatticePath join_split(const PathSplit& s);

}  // namespace sset
