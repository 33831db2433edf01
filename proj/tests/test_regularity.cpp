#include "doctest.h"
#include "sset/regularity.hpp"
#include "support.hpp"

using namespace sset;

namespace {

SimplicialSet delta3_mod_boundary() { return delta_quotient(3, facets_opposite(3, {0, 1, 2, 3})); }

Degree cap_for(const SimplicialSet& X, Degree extra) {
  return static_cast<Degree>(std::max(0, X.dimension())) + extra;
}

}  // namespace

TEST_CASE("strong regularity") {
  for (Degree n = 0; n <= 4; ++n)
    CHECK(is_strongly_regular(delta(n)).verdict);
  const SimplicialSet Q = delta_quotient(2, {{0, 2}});
  const RegularityReport r = is_strongly_regular(Q);
  CHECK_FALSE(r.verdict);
  REQUIRE(r.witness);
  CHECK(Q.cell(r.witness->cell).name == "0 1 2");
  CHECK(r.witness->index == 1);
  CHECK(is_degenerate(Q.faces(r.witness->cell)[r.witness->index]));
}

TEST_CASE("regularity") {
  CHECK(is_regular(delta_quotient(2, {{0, 2}})).verdict);
  CHECK_FALSE(is_regular(delta_quotient(2, {{0, 2}})).witness);
  const SimplicialSet X = delta3_mod_boundary();
  const RegularityReport r = is_regular(X);
  CHECK_FALSE(r.verdict);
  REQUIRE(r.witness);
  CHECK(X.dim(r.witness->cell) == 3);
  CHECK(r.witness->index == 0);
  CHECK(is_degenerate(elementary_edge(X, X.simplex(r.witness->cell), r.witness->index)));
  CHECK(describe(X, r).find("0 1 2 3") != std::string::npos);
}

TEST_CASE("P_r checks") {
  for (Degree r = 1; r <= 3; ++r)
    CHECK(satisfies_pr(delta(3), r, 6).verdict);
  const SimplicialSet Q = delta_quotient(2, {{0, 2}});
  const RegularityReport r2 = satisfies_pr(Q, 2, 6);
  CHECK_FALSE(r2.verdict);
  REQUIRE(r2.witness);
  REQUIRE(r2.witness->simplex);
  const FormalSimplex& x = *r2.witness->simplex;
  CHECK(is_degenerate(apply_map(Q, edge_map(r2.witness->index, 2, x.degree()), x)));
  CHECK_FALSE(is_iterated_degeneracy(x, r2.witness->index, 2));
  CHECK(satisfies_pr(Q, 1, 6).verdict);

  CHECK_THROWS_AS(satisfies_pr(Q, 0, 6), std::invalid_argument);
  CHECK_THROWS_AS(satisfies_pr(delta(3), 1, 2), std::invalid_argument);
  CHECK(default_pr_cap(delta(3), 2) == 6);
}

TEST_CASE("efficient edges") {
  const SimplicialSet D3 = delta(3);
  for (CellId c = 0; c < D3.size(); ++c)
    if (D3.dim(c) > 0)
      CHECK(count_efficient_edges(D3, D3.simplex(c)) == D3.dim(c));
  CHECK(count_efficient_edges(D3, FormalSimplex{MonotoneMap::codegeneracy(0, 0), 0}) == 0);

  // At most q efficient edges on a simplex generated by a q-cell.
  for (const auto& entry : testing::default_corpus(40))
    for (Degree d = 1; d <= 5; ++d)
      for (const FormalSimplex& x : simplices_of_degree(entry.set, d))
        CHECK(count_efficient_edges(entry.set, x) <= entry.set.dim(x.generator));
}

TEST_CASE("iterated degeneracies have degenerate long edges") {
  for (const auto& entry : testing::default_corpus(40)) {
    const SimplicialSet& X = entry.set;
    for (Degree r = 1; r <= 3; ++r)
      for (Degree m = 0; m + r <= 6; ++m)
        for (const FormalSimplex& y : simplices_of_degree(X, m))
          for (Degree i = 0; i <= m; ++i) {
            FormalSimplex x = y;
            for (Degree k = i; k < i + r; ++k)
              x = degeneracy(X, x, k);
            CHECK(is_iterated_degeneracy(x, i, r));
            CHECK(is_degenerate(apply_map(X, edge_map(i, r, m + r), x)));
          }
  }
}

TEST_CASE("three characterizations of regularity agree on the corpus") {
  for (const auto& entry : testing::default_corpus()) {
    const SimplicialSet& X = entry.set;
    const bool ii = is_regular(X).verdict;
    CHECK(satisfies_pr(X, 1, cap_for(X, 2)).verdict == ii);
    CHECK(satisfies_edge_criterion(X, cap_for(X, 2)).verdict == ii);
    if (entry.known == KnownRegularity::regular)
      CHECK(ii);
    if (entry.known == KnownRegularity::not_regular)
      CHECK_FALSE(ii);
  }
}

TEST_CASE("strong regularity is P_1 and P_2") {
  for (const auto& entry : testing::default_corpus()) {
    const SimplicialSet& X = entry.set;
    const bool strong = is_strongly_regular(X).verdict;
    if (strong)
      for (Degree r = 1; r <= 3; ++r)
        CHECK(satisfies_pr(X, r, cap_for(X, 3)).verdict);
    const bool p1p2 = satisfies_pr(X, 1, cap_for(X, 3)).verdict && satisfies_pr(X, 2, cap_for(X, 3)).verdict;
    CHECK(p1p2 == strong);
  }
}

TEST_CASE("witnesses are genuine") {
  for (const auto& entry : testing::default_corpus()) {
    const SimplicialSet& X = entry.set;
    if (const RegularityReport r = is_regular(X); !r.verdict) {
      REQUIRE(r.witness);
      CHECK(is_degenerate(elementary_edge(X, X.simplex(r.witness->cell), r.witness->index)));
    }
    if (const RegularityReport r = is_strongly_regular(X); !r.verdict) {
      REQUIRE(r.witness);
      CHECK(is_degenerate(X.faces(r.witness->cell)[r.witness->index]));
    } else {
      CHECK_FALSE(r.witness);
    }
  }
}

TEST_CASE("closure of regular sets") {
  std::vector<SimplicialSet> regular;
  for (const auto& entry : testing::default_corpus())
    if (is_regular(entry.set).verdict && entry.set.size() <= 12)
      regular.push_back(entry.set);
  REQUIRE(regular.size() >= 10);
  for (std::size_t a = 0; a < regular.size(); ++a) {
    const SimplicialSet& X = regular[a];
    const SimplicialSet& Y = regular[(a * 7 + 3) % regular.size()];
    CHECK(is_regular(disjoint_sum(X, Y)).verdict);
    if (X.size() * Y.size() <= 120)
      CHECK(is_regular(product(X, Y)).verdict);
    for (CellId c = 0; c < X.size(); ++c) {
      const std::vector<CellId> g{c};
      CHECK(is_regular(subcomplex(X, g)).verdict);
      const std::vector<CellId> h{static_cast<CellId>((c * 5 + 1) % X.size())};
      const std::vector<Subcomplex> parts{Subcomplex::closure(X, g), Subcomplex::closure(X, h)};
      CHECK(is_regular(union_of(X, parts)).verdict);
    }
  }
  for (std::uint64_t seed = 0; seed < 30; ++seed)
    for (const auto& entry : corpus(seed, 8))
      if (entry.name.rfind("nerve", 0) == 0)
        CHECK(is_regular(entry.set).verdict);
}
