#include "sset/lattice_path.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace sset {

LatticePath::LatticePath(Degree p, Degree n, std::uint64_t vertical_steps)
    : p_(p), n_(n), vsteps_(vertical_steps) {
  if (p + n > 63)
    throw std::invalid_argument("lattice paths longer than 63 steps are not supported");
  if (static_cast<Degree>(std::popcount(vertical_steps)) != n ||
      (p + n < 64 && (vertical_steps >> (p + n)) != 0))
    throw std::invalid_argument("path does not have exactly n vertical steps");
}

LatticePath LatticePath::from_word(std::string_view word) {
  Degree p = 0, n = 0;
  std::uint64_t v = 0;
  for (std::size_t s = 0; s < word.size(); ++s) {
    if (word[s] == 'V') {
      v |= std::uint64_t{1} << s;
      ++n;
    } else if (word[s] == 'H') {
      ++p;
    } else {
      throw std::invalid_argument("path words use only H and V");
    }
  }
  return LatticePath(p, n, v);
}

GridPoint LatticePath::point(Degree s) const {
  const std::uint64_t below = s >= 64 ? vsteps_ : vsteps_ & ((std::uint64_t{1} << s) - 1);
  const auto y = static_cast<Degree>(std::popcount(below));
  return {s - y, y};
}

bool LatticePath::passes_through(GridPoint q) const {
  if (q.x > p_ || q.y > n_)
    return false;
  return point(q.x + q.y) == q;
}

std::string LatticePath::word() const {
  std::string w;
  for (Degree s = 0; s < length(); ++s)
    w += vertical(s) ? 'V' : 'H';
  return w;
}

LatticePath LatticePath::insert_horizontal(Degree s) const {
  const std::uint64_t low = vsteps_ & ((std::uint64_t{1} << s) - 1);
  const std::uint64_t high = vsteps_ >> s;
  return LatticePath(p_ + 1, n_, low | (high << (s + 1)));
}

bool operator<(const LatticePath& a, const LatticePath& b) {
  const Degree len = std::min(a.length(), b.length());
  for (Degree s = 0; s < len; ++s)
    if (a.vertical(s) != b.vertical(s))
      return b.vertical(s);
  return a.length() < b.length();
}

std::vector<LatticePath> all_paths(Degree p, Degree n) {
  std::vector<LatticePath> out;
  // Depth-first with H before V yields lexicographic order directly.
  auto rec = [&](auto&& self, Degree h, Degree v, std::uint64_t bits) -> void {
    if (h == p && v == n) {
      out.emplace_back(p, n, bits);
      return;
    }
    if (h < p)
      self(self, h + 1, v, bits);
    if (v < n)
      self(self, h, v + 1, bits | (std::uint64_t{1} << (h + v)));
  };
  rec(rec, 0, 0, 0);
  return out;
}

PathCatalog::PathCatalog(Degree p, Degree n) : p_(p), n_(n), paths_(all_paths(p, n)) {
  for (std::size_t k = 0; k < paths_.size(); ++k)
    index_.emplace(paths_[k].vertical_steps(), k);
  for (std::size_t k = 0; k < paths_.size(); ++k) {
    const LatticePath& a = paths_[k];
    for (Degree s = 0; s + 1 < a.length(); ++s) {
      // H at s then V at s+1: flipping to V H moves across the square at point(s).
      if (!a.vertical(s) && a.vertical(s + 1)) {
        const std::uint64_t flipped =
            (a.vertical_steps() & ~(std::uint64_t{1} << (s + 1))) | (std::uint64_t{1} << s);
        flips_.push_back({k, index_.at(flipped), a.point(s)});
      }
    }
  }
}

std::size_t PathCatalog::index_of(const LatticePath& a) const {
  if (a.p() != p_ || a.n() != n_)
    throw std::invalid_argument("path belongs to a different grid");
  return index_.at(a.vertical_steps());
}

LatticePath PathCatalog::least_path_through(const std::vector<GridPoint>& chain) const {
  std::uint64_t bits = 0;
  GridPoint at{0, 0};
  auto walk_to = [&](GridPoint q) {
    if (q.x < at.x || q.y < at.y || q.x > p_ || q.y > n_)
      throw std::invalid_argument("points do not form an increasing chain in the grid");
    at.x = q.x;  // all H steps first
    while (at.y < q.y) {
      bits |= std::uint64_t{1} << (at.x + at.y);
      ++at.y;
    }
  };
  for (const GridPoint& q : chain)
    walk_to(q);
  walk_to({p_, n_});
  return LatticePath(p_, n_, bits);
}

const PathCatalog& path_catalog(Degree p, Degree n) {
  static std::mutex mutex;
  static std::map<std::pair<Degree, Degree>, std::unique_ptr<PathCatalog>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, n}];
  if (!slot)
    slot = std::make_unique<PathCatalog>(p, n);
  return *slot;
}

PathSplit split_path_at_column(const LatticePath& a, Degree k) {
  const Degree p = a.p(), n = a.n();
  if (k >= p)
    throw std::invalid_argument("column " + std::to_string(k) + " out of range");
  // Height of the horizontal step leaving column x.
  auto crossing = [&a](Degree x) {
    for (Degree s = 0; s < a.length(); ++s)
      if (!a.vertical(s) && a.point(s).x == x)
        return a.point(s).y;
    throw std::logic_error("path never leaves column");
  };
  const Degree t = crossing(k);
  const Degree alpha = k == 0 ? 0 : crossing(k - 1);
  const Degree beta = k + 1 == p ? n : crossing(k + 1);

  std::uint64_t e_bits = 0;
  for (Degree s = 0; s < k + alpha; ++s)
    if (a.vertical(s))
      e_bits |= std::uint64_t{1} << s;
  std::uint64_t c_bits = 0;
  const Degree c_start = k + 1 + beta;
  for (Degree s = c_start; s < a.length(); ++s)
    if (a.vertical(s))
      c_bits |= std::uint64_t{1} << (s - c_start);
  return {k, alpha, t, beta, LatticePath(k, alpha, e_bits), LatticePath(p - k - 1, n - beta, c_bits)};
}

LatticePath join_split(const PathSplit& s) {
  if (!(s.alpha <= s.t && s.t <= s.beta))
    throw std::invalid_argument("split ordinates must satisfy alpha <= t <= beta");
  std::uint64_t bits = s.e.vertical_steps();
  Degree pos = s.e.length();
  for (Degree y = s.alpha; y < s.t; ++y)
    bits |= std::uint64_t{1} << pos++;
  ++pos;  // the crossing (k, t) -> (k+1, t)
  for (Degree y = s.t; y < s.beta; ++y)
    bits |= std::uint64_t{1} << pos++;
  bits |= s.c.vertical_steps() << pos;
  const Degree p = s.k + 1 + s.c.p();
  const Degree n = s.beta + s.c.n();
  return LatticePath(p, n, bits);
}

}  // namespace sset
