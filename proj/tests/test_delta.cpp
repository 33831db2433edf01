#include <random>
#include <set>

#include "doctest.h"
#include "sset/delta.hpp"
#include "support.hpp"

using namespace sset;

TEST_CASE("monotone map validation") {
  CHECK_THROWS_AS(MonotoneMap({1, 0}, 2), DeltaError);
  CHECK_THROWS_AS(MonotoneMap({0, 3}, 2), DeltaError);
  CHECK_NOTHROW(MonotoneMap({0, 0, 2}, 2));
  const MonotoneMap f({0, 0, 2}, 2);
  CHECK(f.source_degree() == 2);
  CHECK(f.target_degree() == 2);
  CHECK_FALSE(f.is_surjective());
  CHECK_FALSE(f.is_injective());
}

TEST_CASE("compose examples") {
  CHECK(compose(MonotoneMap::identity(2), MonotoneMap::identity(2)) == MonotoneMap::identity(2));
  // s^0 d^0 = id
  CHECK(compose(MonotoneMap::codegeneracy(0, 0), MonotoneMap::coface(0, 1)) ==
        MonotoneMap::identity(0));
  // s^1 o phi(0,2) = phi(0,1)
  CHECK(compose(MonotoneMap::codegeneracy(1, 1), edge_map(0, 2, 2)) == edge_map(0, 1, 1));
  CHECK_THROWS_AS(compose(MonotoneMap::identity(2), MonotoneMap::identity(3)), DeltaError);
}

TEST_CASE("edge_map") {
  CHECK(edge_map(0, 1, 1) == MonotoneMap::identity(1));
  CHECK(edge_map(2, 1, 4).values() == std::vector<Degree>{2, 3});
  CHECK(edge_map(1, 2, 3).values() == std::vector<Degree>{1, 3});
  CHECK_THROWS(edge_map(2, 2, 3));
}

TEST_CASE("epi mono factorization") {
  {
    const EpiMono em = epi_mono_factor(MonotoneMap::identity(3));
    CHECK(em.epi == MonotoneMap::identity(3));
    CHECK(em.mono == MonotoneMap::identity(3));
  }
  {
    const EpiMono em = epi_mono_factor(MonotoneMap({0, 0}, 0));
    CHECK(em.epi == MonotoneMap::codegeneracy(0, 0));
    CHECK(em.mono == MonotoneMap::identity(0));
  }
  {
    const EpiMono em = epi_mono_factor(MonotoneMap({0, 0, 2}, 2));
    CHECK(em.epi == MonotoneMap::codegeneracy(0, 1));
    CHECK(em.mono == MonotoneMap::coface(1, 2));
  }
}

TEST_CASE("epi mono round trip, exhaustive for small degrees") {
  for (Degree p = 0; p <= 5; ++p)
    for (Degree q = 0; q <= 5; ++q)
      for (const MonotoneMap& f : all_monotone_maps(p, q)) {
        const EpiMono em = epi_mono_factor(f);
        CHECK(em.epi.is_surjective());
        CHECK(em.mono.is_injective());
        CHECK(compose(em.mono, em.epi) == f);
      }
}

TEST_CASE("composition is associative and unital on random maps") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const Degree a = rng() % 9, b = rng() % 9, c = rng() % 9, d = rng() % 9;
    const MonotoneMap h = testing::random_monotone(rng, a, b);
    const MonotoneMap g = testing::random_monotone(rng, b, c);
    const MonotoneMap f = testing::random_monotone(rng, c, d);
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    CHECK(compose(MonotoneMap::identity(d), f) == f);
    CHECK(compose(f, MonotoneMap::identity(c)) == f);
  }
}

TEST_CASE("surjection words") {
  CHECK(surjection_to_word(MonotoneMap::identity(2)).indices.empty());
  CHECK(surjection_to_word(MonotoneMap::codegeneracy(0, 0)).indices == std::vector<Degree>{0});
  const MonotoneMap f({0, 0, 1, 1}, 1);
  CHECK(surjection_to_word(f).indices == std::vector<Degree>{2, 0});
  // s_2 s_0 = X(s^0 o s^2)
  CHECK(compose(MonotoneMap::codegeneracy(0, 1), MonotoneMap::codegeneracy(2, 2)) == f);
  CHECK(word_to_surjection({{2, 0}}, 3) == f);
  CHECK_THROWS_AS(surjection_to_word(MonotoneMap::coface(0, 1)), DeltaError);
  CHECK_THROWS_AS(word_to_surjection({{0, 2}}, 3), DeltaError);
  CHECK_THROWS_AS(word_to_surjection({{3}}, 3), DeltaError);
}

namespace {
std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}
}  // namespace

TEST_CASE("surjection word codec is a bijection for p <= 7") {
  for (Degree p = 0; p <= 7; ++p)
    for (Degree q = 0; q <= p; ++q) {
      const auto surj = all_surjections(p, q);
      CHECK(surj.size() == binom(p, q));
      std::set<std::vector<Degree>> words;
      for (const MonotoneMap& f : surj) {
        const SurjectionWord w = surjection_to_word(f);
        REQUIRE(w.indices.size() == p - q);
        for (std::size_t k = 0; k < w.indices.size(); ++k) {
          CHECK(w.indices[k] < p);
          if (k > 0)
            CHECK(w.indices[k - 1] > w.indices[k]);
        }
        CHECK(word_to_surjection(w, p) == f);
        words.insert(w.indices);
      }
      // Distinct surjections give distinct words, and there are C(p, p-q)
      // decreasing words of length p-q below p.
      CHECK(words.size() == binom(p, p - q));
    }
}

TEST_CASE("degeneracy table: s^k o phi(i, i+r)") {
  for (Degree p = 1; p <= 6; ++p)
    for (Degree r = 1; r <= p; ++r)
      for (Degree i = 0; i + r <= p; ++i)
        for (Degree k = 0; k < p; ++k) {
          const MonotoneMap lhs = compose(MonotoneMap::codegeneracy(k, p - 1), edge_map(i, r, p));
          if (k < i)
            CHECK(lhs == edge_map(i - 1, r, p - 1));
          else if (k < i + r)
            CHECK(lhs == edge_map(i, r - 1, p - 1));
          else
            CHECK(lhs == edge_map(i, r, p - 1));
        }
}

TEST_CASE("face table: d^k o phi(l, l+1)") {
  for (Degree p = 1; p <= 6; ++p)
    for (Degree l = 0; l + 1 <= p; ++l)
      for (Degree k = 0; k <= p + 1; ++k) {
        const MonotoneMap lhs = compose(MonotoneMap::coface(k, p + 1), edge_map(l, 1, p));
        if (k <= l)
          CHECK(lhs == edge_map(l + 1, 1, p + 1));
        else if (k == l + 1)
          CHECK(lhs == edge_map(l, 2, p + 1));
        else
          CHECK(lhs == edge_map(l, 1, p + 1));
      }
}

TEST_CASE("cosimplicial identities") {
  for (Degree p = 1; p <= 6; ++p) {
    for (Degree j = 0; j <= p; ++j)
      for (Degree i = 0; i < j; ++i)
        CHECK(compose(MonotoneMap::coface(j, p + 1), MonotoneMap::coface(i, p)) ==
              compose(MonotoneMap::coface(i, p + 1), MonotoneMap::coface(j - 1, p)));
    for (Degree j = 0; j < p; ++j) {
      CHECK(compose(MonotoneMap::codegeneracy(j, p - 1), MonotoneMap::coface(j, p)) ==
            MonotoneMap::identity(p - 1));
      CHECK(compose(MonotoneMap::codegeneracy(j, p - 1), MonotoneMap::coface(j + 1, p)) ==
            MonotoneMap::identity(p - 1));
    }
  }
}
