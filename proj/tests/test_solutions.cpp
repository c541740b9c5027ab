#include <catch_amalgamated.hpp>

#include <random>

#include "dsr/oracle.hpp"
#include "dsr/scoring.hpp"
#include "dsr/solutions.hpp"

using namespace dsr;

namespace {

PreferenceRelation condorcet_ties() {
  RelationBuilder b(AlternativeSet({"a", "b", "c", "d"}));
  b.beat("a", "b").beat("a", "c").beat("a", "d").beat("c", "b").beat("b", "d").tie("c", "d");
  return b.build();
}

PreferenceRelation six_tournament() {
  return validate_relation({{0, 1, -1, 1, 1, -1},
                            {-1, 0, 1, -1, 1, 1},
                            {1, -1, 0, 1, -1, 1},
                            {-1, 1, -1, 0, -1, 1},
                            {-1, -1, 1, 1, 0, -1},
                            {1, -1, -1, -1, 1, 0}});
}

PreferenceRelation four_tournament() {
  return validate_relation({{0, 1, 1, -1}, {-1, 0, 1, 1}, {-1, -1, 0, 1}, {1, -1, -1, 0}});
}

PreferenceRelation cycle3() { return validate_relation({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}); }

PreferenceRelation linear(std::size_t m) {
  std::vector<Index> order(m);
  std::iota(order.begin(), order.end(), Index{0});
  return weak_order_to_relation(WeakOrder::linear(AlternativeSet::letters(m), order));
}

}  // namespace

TEST_CASE("Condorcet winner and loser") {
  REQUIRE(condorcet_winner(condorcet_ties()) == Index{0});
  REQUIRE_FALSE(condorcet_loser(condorcet_ties()));
  REQUIRE_FALSE(condorcet_winner(cycle3()));
  REQUIRE_FALSE(condorcet_loser(cycle3()));
  REQUIRE(condorcet_loser(linear(4)) == Index{3});
  const PreferenceRelation ties(AlternativeSet::letters(3));
  REQUIRE_FALSE(condorcet_winner(ties));
  REQUIRE_FALSE(condorcet_loser(ties));
}

TEST_CASE("Smith set") {
  REQUIRE(smith_set(four_tournament()).members == Block{0, 1, 2, 3});
  REQUIRE(smith_set(six_tournament()).members == Block{0, 1, 2, 3, 4, 5});
  REQUIRE(smith_set(linear(5)).members == Block{0});
  REQUIRE(smith_set(condorcet_ties()).members == Block{0});
  REQUIRE(smith_set(PreferenceRelation(AlternativeSet::letters(3))).members == Block{0, 1, 2});
}

TEST_CASE("top cycle") {
  REQUIRE(top_cycle(four_tournament()).members == Block{0, 1, 2, 3});
  REQUIRE(top_cycle(condorcet_ties()).members == Block{0});
  REQUIRE(top_cycle(cycle3()).members == Block{0, 1, 2});
}

TEST_CASE("Schwartz set") {
  REQUIRE(schwartz_set(four_tournament()).members == smith_set(four_tournament()).members);
  REQUIRE(schwartz_set(condorcet_ties()).members == Block{0});
  REQUIRE(schwartz_set(PreferenceRelation(AlternativeSet::letters(4))).members == Block{0, 1, 2, 3});
  // a ~ b, both beat c: Smith keeps {a,b}; each of a, b is undominated alone.
  RelationBuilder b(AlternativeSet::letters(3));
  b.tie(0, 1).beat(0, 2).beat(1, 2);
  REQUIRE(schwartz_set(b.build()).members == Block{0, 1});
  REQUIRE(smith_set(b.build()).members == Block{0, 1});
}

TEST_CASE("Schwartz set can be smaller than the Smith set with ties") {
  // a beats b, b ties c, c ties a: Smith is everything, Schwartz is {a, c}.
  RelationBuilder b(AlternativeSet::letters(3));
  b.beat(0, 1).tie(1, 2).tie(0, 2);
  const auto r = b.build();
  REQUIRE(smith_set(r).members == Block{0, 1, 2});
  REQUIRE(schwartz_set(r).members == Block{0, 2});
}

TEST_CASE("covering") {
  const auto r = four_tournament();
  REQUIRE_FALSE(covers(r, 0, 2));
  REQUIRE(covers(r, 1, 2));
  REQUIRE(uncovered_set(r).members == Block{0, 1, 3});
  REQUIRE(uncovered_set(six_tournament()).members == Block{0, 1, 2, 3, 4, 5});
  REQUIRE(uncovered_set(linear(4)).members == Block{0});
  for (Index y = 1; y < 4; ++y) REQUIRE(covers(linear(4), 0, y));
  REQUIRE_THROWS_AS(covers(condorcet_ties(), 0, 1), TiesPresent);
  REQUIRE_THROWS_AS(uncovered_set(condorcet_ties()), TiesPresent);
  REQUIRE_THROWS_AS(covers(r, 1, 1), InvalidArgument);
}

TEST_CASE("Copeland") {
  RelationBuilder b(AlternativeSet::letters(3));
  b.beat(0, 1).beat(1, 2).tie(0, 2);
  for (const auto& alpha : {Rational(0), Rational(1, 2), Rational(1)}) {
    const auto c = copeland(b.build(), alpha);
    REQUIRE(c.scores == std::vector<Rational>{Rational(1) + alpha, Rational(1), alpha});
  }
  REQUIRE(copeland(four_tournament(), Rational(1, 2)).winners.members == Block{0, 1});
  const auto lin = copeland(linear(5), Rational(1, 2));
  REQUIRE(lin.scores[0] == Rational(4));
  REQUIRE(lin.winners.members == Block{0});
  REQUIRE_THROWS_AS(copeland(four_tournament(), Rational(2)), InvalidArgument);
}

TEST_CASE("The four-alternative tournament containments") {
  const auto r = four_tournament();
  const auto dsr = winner_set(compute_scores(r));
  REQUIRE(dsr.subset_of(copeland(r, Rational(1, 2)).winners));
  REQUIRE(dsr.subset_of(uncovered_set(r)));
  REQUIRE(dsr.subset_of(smith_set(r)));
}

TEST_CASE("solution sets agree with subset search on random relations") {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 600; ++k) {
    const auto r = oracle::random_relation(rng, 2 + k % 5, k % 3 == 0 ? 0.0 : 0.35);
    REQUIRE(smith_set(r).members == oracle::smith(r));
    REQUIRE(schwartz_set(r).members == oracle::schwartz(r));
    REQUIRE(top_cycle(r).members == oracle::top_cycle(r));
    if (r.is_tournament()) {
      REQUIRE(smith_set(r).members == schwartz_set(r).members);
      REQUIRE(smith_set(r).members == top_cycle(r).members);
    }
  }
}

TEST_CASE("Copeland scores in a tournament are integers in range") {
  oracle::for_each_tournament(4, [](const PreferenceRelation& r) {
    const auto c = copeland(r, Rational(1, 2));
    for (const auto& s : c.scores) {
      REQUIRE(s.denominator() == 1);
      REQUIRE(s >= Rational(0));
      REQUIRE(s <= Rational(3));
    }
  });
}
