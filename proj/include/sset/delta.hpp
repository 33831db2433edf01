#pragma once

// The simplex category: monotone maps between finite ordinals [p] = {0, ..., p}.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sset {

using Degree = std::uint32_t;

/// Largest supported source degree. Values are stored inline so that maps are
/// cheap to copy inside the enumeration loops.
inline constexpr Degree kMaxDegree = 47;

class DeltaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An order-preserving map [p] -> [q].
class MonotoneMap {
 public:
  /// Throws DeltaError unless `values` is nonempty, weakly increasing and
  /// bounded by `target`.
  MonotoneMap(std::span<const Degree> values, Degree target);
  MonotoneMap(std::initializer_list<Degree> values, Degree target)
      : MonotoneMap(std::span<const Degree>(values.begin(), values.size()), target) {}

  static MonotoneMap identity(Degree p);
  /// The coface map d^i : [p-1] -> [p] that skips i.
  static MonotoneMap coface(Degree i, Degree p);
  /// The codegeneracy s^i : [p+1] -> [p] that hits i twice.
  static MonotoneMap codegeneracy(Degree i, Degree p);
  static MonotoneMap constant(Degree p, Degree target, Degree value);

  Degree source_degree() const { return size_ - 1; }
  Degree target_degree() const { return target_; }
  Degree operator()(Degree i) const { return values_[i]; }
  std::vector<Degree> values() const;

  bool is_identity() const;
  bool is_surjective() const;
  bool is_injective() const;

  std::string to_string() const;

  friend bool operator==(const MonotoneMap& a, const MonotoneMap& b) {
    return a.size_ == b.size_ && a.target_ == b.target_ && a.values_ == b.values_;
  }
  friend std::strong_ordering operator<=>(const MonotoneMap& a, const MonotoneMap& b);

  std::size_t hash() const;

 private:
  MonotoneMap() = default;
  friend MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g);

  std::array<std::uint8_t, kMaxDegree + 1> values_{};
  Degree size_ = 0;
  Degree target_ = 0;
};

/// f o g. Requires source_degree(f) == target_degree(g).
MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g);

/// The edge [1] -> [p] sending 0 to i and 1 to i + r.
MonotoneMap edge_map(Degree i, Degree r, Degree p);

struct EpiMono {
  MonotoneMap epi;
  MonotoneMap mono;
};

/// The unique factorization f = mono o epi with epi surjective and mono injective.
EpiMono epi_mono_factor(const MonotoneMap& f);

/// Bitmask of the image of f (bit v set iff v is hit). Requires target < 64.
std::uint64_t image_mask(const MonotoneMap& f);

/// The injection [k] -> [q] whose image is the set bits of `mask`.
MonotoneMap mono_from_mask(std::uint64_t mask, Degree target);

/// A surjection written as s_{i1} s_{i2} ... s_{im} with i1 > i2 > ... > im.
struct SurjectionWord {
  std::vector<Degree> indices;

  friend bool operator==(const SurjectionWord&, const SurjectionWord&) = default;
  friend auto operator<=>(const SurjectionWord&, const SurjectionWord&) = default;
};

/// Throws DeltaError if f is not surjective.
SurjectionWord surjection_to_word(const MonotoneMap& f);

/// Decodes a word as a composite of codegeneracies out of [p]. Throws
/// DeltaError if the word is not strictly decreasing or an index is >= p.
MonotoneMap word_to_surjection(const SurjectionWord& w, Degree p);

/// All surjections [p] -> [q] in increasing order of their values.
std::vector<MonotoneMap> all_surjections(Degree p, Degree q);

/// All monotone maps [p] -> [q] in lexicographic order of their values.
std::vector<MonotoneMap> all_monotone_maps(Degree p, Degree q);

}  // namespace sset

template <>
struct std::hash<sset::MonotoneMap> {
  std::size_t operator()(const sset::MonotoneMap& f) const noexcept { return f.hash(); }
};
