#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sset/exhibits.hpp"
#include "sset/simplicial_set.hpp"

namespace sset::testing {

inline MonotoneMap random_monotone(std::mt19937_64& rng, Degree p, Degree q) {
  std::vector<Degree> v(p + 1);
  for (auto& x : v)
    x = static_cast<Degree>(rng() % (q + 1));
  std::sort(v.begin(), v.end());
  return MonotoneMap(v, q);
}

inline Poset powerset_poset(Degree k) {
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t a = 0; a < (1u << k); ++a) {
    names.push_back("s" + std::to_string(a));
    for (std::size_t b = 0; b < (1u << k); ++b)
      if (a != b && (a & b) == a)
        rel.emplace_back(a, b);
  }
  return Poset::generated_by(names, rel);
}

inline Poset chain_poset(std::vector<std::string> names,
                         std::vector<std::pair<std::size_t, std::size_t>> rel) {
  return Poset::generated_by(std::move(names), rel);
}

struct Named {
  std::string name;
  SimplicialSet set;
};

/// Small regular sets of dimension <= 2, cheap enough for exhaustive Hom work
/// with n <= 2.
inline std::vector<Named> regular_hom_corpus() {
  std::vector<Named> out;
  out.push_back({"delta 0", delta(0)});
  out.push_back({"delta 1", delta(1)});
  out.push_back({"delta 2", delta(2)});
  out.push_back({"boundary 2", boundary_delta(2)});
  out.push_back({"horn 2 1", horn(2, 1)});
  out.push_back({"delta 2 / {0 2}", delta_quotient(2, {{0, 2}})});
  out.push_back({"nerve a<b a<c", nerve_poset(chain_poset({"a", "b", "c"}, {{0, 1}, {0, 2}}))});
  out.push_back({"nerve powerset 2", nerve_poset(powerset_poset(2))});
  out.push_back({"delta 1 x delta 1", product(delta(1), delta(1))});
  out.push_back({"delta 1 + delta 2", disjoint_sum(delta(1), delta(2))});
  out.push_back({"nerve a<b<c, d<c", nerve_poset(chain_poset({"a", "b", "c", "d"},
                                                             {{0, 1}, {1, 2}, {3, 2}}))});
  return out;
}

/// The two sets named in the text plus a seeded random corpus.
inline std::vector<CorpusEntry> default_corpus(std::size_t count = 60) { return corpus(2024, count); }

}  // namespace sset::testing
