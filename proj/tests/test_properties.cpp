#include <catch_amalgamated.hpp>

#include <random>

#include "dsr/majority.hpp"
#include "dsr/oracle.hpp"
#include "dsr/scoring.hpp"
#include "dsr/solutions.hpp"

using namespace dsr;

namespace {

std::vector<Index> random_perm(std::mt19937_64& rng, std::size_t m) {
  std::vector<Index> p(m);
  std::iota(p.begin(), p.end(), Index{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

const std::vector<Rational> kAlphas{Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};

}  // namespace

TEST_CASE("relabeling permutes scores and winners") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 300; ++k) {
    const auto r = oracle::random_relation(rng, 2 + k % 8, 0.3);
    const auto perm = random_perm(rng, r.size());
    const auto pr = permute(r, perm);
    const auto a = compute_scores(r), b = compute_scores(pr);
    for (Index z = 0; z < r.size(); ++z) {
      REQUIRE(a.total(z) == b.total(perm[z]));
      for (Index x = 0; x < r.size(); ++x) REQUIRE(a.score(z, x) == b.score(perm[z], perm[x]));
    }
    Block mapped;
    for (Index w : winner_set(a).members) mapped.push_back(perm[w]);
    std::sort(mapped.begin(), mapped.end());
    REQUIRE(mapped == winner_set(b).members);
  }
}

TEST_CASE("ballot order does not matter") {
  std::mt19937_64 rng(12);
  for (const auto& p : oracle::random_profiles({4, 200, 3, 6, 2, 9})) {
    auto ballots = p.ballots();
    std::shuffle(ballots.begin(), ballots.end(), rng);
    const Profile q(p.alternatives(), ballots);
    REQUIRE(compute_scores(majority_relation(p)) == compute_scores(majority_relation(q)));
  }
}

TEST_CASE("an ordering input is reproduced for every alpha") {
  for (std::size_t m = 2; m <= 4; ++m) {
    for (const auto& w : oracle::enumerate_weak_orders(m)) {
      const auto r = weak_order_to_relation(w);
      REQUIRE(is_transitive(r));
      for (const auto& alpha : kAlphas) {
        const auto t = compute_scores(r, ScoringConfig{alpha});
        for (Index x = 0; x < m; ++x) {
          for (Index y = 0; y < m; ++y) {
            if (w.rank(x) < w.rank(y)) REQUIRE(t.total(x) > t.total(y));
            if (w.rank(x) == w.rank(y)) REQUIRE(t.total(x) == t.total(y));
          }
        }
        REQUIRE(social_ranking(t) == WeakOrder(r.alternatives(), w.tiers()));
      }
    }
  }
}

TEST_CASE("restricting an ordering keeps the ranking of what remains") {
  std::mt19937_64 rng(77);
  for (int k = 0; k < 200; ++k) {
    const auto alts = AlternativeSet::letters(3 + k % 5);
    const auto w = oracle::random_weak_order(rng, alts, k % 2 == 0);
    const auto r = weak_order_to_relation(w);
    auto subset = random_perm(rng, alts.size());
    subset.resize(2 + k % (alts.size() - 1));
    std::sort(subset.begin(), subset.end());
    const auto full = compute_scores(r);
    const auto part = compute_scores(restrict(r, subset));
    for (Index i = 0; i < subset.size(); ++i) {
      for (Index j = 0; j < subset.size(); ++j) {
        const bool before = full.total(subset[i]) > full.total(subset[j]);
        REQUIRE(before == (part.total(i) > part.total(j)));
      }
    }
  }
}

TEST_CASE("Condorcet winner and loser on random relations") {
  std::mt19937_64 rng(19);
  int winners = 0, losers = 0;
  for (int k = 0; k < 2000; ++k) {
    const auto r = oracle::random_relation(rng, 3 + k % 6, k % 2 ? 0.15 : 0.0);
    const auto t = compute_scores(r, ScoringConfig{kAlphas[k % kAlphas.size()]});
    if (auto cw = condorcet_winner(r)) {
      ++winners;
      REQUIRE(winner_set(t).members == Block{*cw});
    }
    if (auto cl = condorcet_loser(r)) {
      ++losers;
      for (Index y = 0; y < r.size(); ++y) {
        if (y != *cl) REQUIRE(t.total(*cl) < t.total(y));
      }
    }
  }
  REQUIRE(winners > 50);
  REQUIRE(losers > 50);
}

TEST_CASE("covering and uncovered containment on larger random tournaments") {
  std::mt19937_64 rng(101);
  for (int k = 0; k < 300; ++k) {
    const auto r = oracle::random_relation(rng, 7 + k % 4, 0.0);
    const auto t = compute_scores(r);
    for (Index x = 0; x < r.size(); ++x) {
      for (Index y = 0; y < r.size(); ++y) {
        if (x != y && covers(r, x, y)) REQUIRE(t.total(x) > t.total(y));
      }
    }
    REQUIRE(winner_set(t).subset_of(uncovered_set(r)));
    REQUIRE(winner_set(t).subset_of(smith_set(r)));
  }
}

TEST_CASE("dominating sets outscore their complement on random relations") {
  std::mt19937_64 rng(55);
  for (int k = 0; k < 1000; ++k) {
    const auto r = oracle::random_relation(rng, 3 + k % 5, 0.2);
    const auto t = compute_scores(r, ScoringConfig{kAlphas[k % kAlphas.size()]});
    for (const auto& a : oracle::dominating_sets(r)) {
      for (Index x : a) {
        for (Index y = 0; y < r.size(); ++y) {
          if (!std::binary_search(a.begin(), a.end(), y)) REQUIRE(t.total(x) > t.total(y));
        }
      }
    }
  }
}
