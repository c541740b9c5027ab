#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "dsr/majority.hpp"
#include "dsr/oracle.hpp"
#include "dsr/scoring.hpp"
#include "dsr/verify.hpp"

using namespace dsr;

namespace {

// Ordered Bell numbers via a(n) = sum_k C(n,k) a(n-k).
std::uint64_t fubini(std::size_t n) {
  std::vector<std::uint64_t> a(n + 1, 0);
  a[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    std::uint64_t c = 1;  // C(i, k)
    for (std::size_t k = 1; k <= i; ++k) {
      c = c * (i - k + 1) / k;
      a[i] += c * a[i - k];
    }
  }
  return a[n];
}

std::string key(const PreferenceRelation& r) {
  std::string s;
  for (Index i = 0; i < r.size(); ++i) {
    for (Index j = 0; j < r.size(); ++j) s += static_cast<char>('1' + static_cast<int>(r(i, j)));
  }
  return s;
}

}  // namespace

TEST_CASE("tournament enumeration counts and uniqueness") {
  REQUIRE(oracle::enumerate_tournaments(2).size() == 2);
  REQUIRE(oracle::enumerate_tournaments(3).size() == 8);
  const auto t4 = oracle::enumerate_tournaments(4);
  REQUIRE(t4.size() == 64);
  std::set<std::string> seen;
  for (const auto& r : t4) {
    REQUIRE(r.is_tournament());
    seen.insert(key(r));
  }
  REQUIRE(seen.size() == 64);
  std::size_t n5 = 0;
  oracle::for_each_tournament(5, [&](const PreferenceRelation&) { ++n5; });
  REQUIRE(n5 == 1024);
  REQUIRE_THROWS_AS(oracle::enumerate_tournaments(7), TooLarge);
  REQUIRE_THROWS_AS(oracle::enumerate_tournaments(1), DimensionError);
}

TEST_CASE("weak order enumeration matches ordered Bell numbers") {
  REQUIRE(fubini(2) == 3);
  REQUIRE(fubini(3) == 13);
  REQUIRE(fubini(4) == 75);
  for (std::size_t m = 2; m <= 5; ++m) {
    const auto all = oracle::enumerate_weak_orders(m);
    REQUIRE(all.size() == fubini(m));
    std::set<std::string> seen;
    for (const auto& w : all) seen.insert(key(weak_order_to_relation(w)));
    REQUIRE(seen.size() == all.size());
  }
  REQUIRE_THROWS_AS(oracle::enumerate_weak_orders(6), TooLarge);
}

TEST_CASE("reference scores on the worked examples") {
  RelationBuilder e2(AlternativeSet({"x", "y", "z", "u"}));
  e2.beat("x", "y").beat("z", "x").beat("u", "x").beat("y", "z").beat("y", "u").beat("z", "u");
  REQUIRE(oracle::psi(e2.build()) == std::vector<Rational>{Rational(0), Rational(3), Rational(4), Rational(1)});

  RelationBuilder e4(AlternativeSet({"a", "b", "c"}));
  e4.beat("a", "b").beat("c", "a").beat("c", "b");
  REQUIRE(oracle::psi(e4.build()) == std::vector<Rational>{Rational(2), Rational(0), Rational(5)});

  REQUIRE(oracle::psi(PreferenceRelation(AlternativeSet::letters(4))) == std::vector<Rational>(4, Rational(0)));
  REQUIRE_THROWS_AS(oracle::psi(PreferenceRelation(AlternativeSet::letters(9))), TooLarge);
}

TEST_CASE("reference score and clause check agree with production") {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 400; ++k) {
    const auto r = oracle::random_relation(rng, 2 + k % 6, 0.3);
    for (const auto& alpha : {Rational(0), Rational(1, 3), Rational(1)}) {
      REQUIRE(oracle::psi(r, alpha) == compute_scores(r, ScoringConfig{alpha}).totals());
    }
    for (Index z = 0; z < r.size(); ++z) {
      const auto ref = oracle::seek_partition_by_definition(r, z);
      const auto got = seek_partition(r, z);
      REQUIRE((ref.kind == 0) == !got.has_value());
      if (got) {
        REQUIRE(ref.kind == static_cast<int>(got->kind) + 1);
        std::vector<oracle::Mask> blocks;
        for (const auto& b : got->blocks) blocks.push_back(oracle::to_mask(b));
        REQUIRE(ref.blocks == blocks);
      }
    }
  }
}

TEST_CASE("random profiles are reproducible and well formed") {
  oracle::ProfileSpec spec{77, 3, 3, 5, 1, 9};
  const auto a = oracle::random_profiles(spec), b = oracle::random_profiles(spec);
  REQUIRE(a == b);
  spec.seed = 78;
  REQUIRE_FALSE(oracle::random_profiles(spec) == a);

  oracle::ProfileSpec fixed{5, 50, 4, 4, 7, 7};
  for (const auto& p : oracle::random_profiles(fixed)) {
    REQUIRE(p.voter_count() == 7);
    const auto t = tally(p);
    for (Index i = 0; i < 4; ++i) {
      for (Index j = 0; j < 4; ++j) REQUIRE(t.wins(i, j) + t.wins(j, i) <= 7);
    }
    const bool strict = std::all_of(p.ballots().begin(), p.ballots().end(),
                                    [](const Ballot& bl) { return bl.order.is_strict(); });
    if (strict) REQUIRE(majority_relation(p).is_tournament());
  }
  REQUIRE_THROWS_AS(oracle::random_profiles({1, 1, 4, 3, 1, 1}), InvalidArgument);
}

TEST_CASE("dominating sets by subset search") {
  const auto lin = weak_order_to_relation(WeakOrder::linear(AlternativeSet::letters(4), Block{0, 1, 2, 3}));
  REQUIRE(oracle::dominating_sets(lin) == std::vector<Block>{{0}, {0, 1}, {0, 1, 2}});
  const auto cyc = validate_relation({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}});
  REQUIRE(oracle::dominating_sets(cyc).empty());
}

TEST_CASE("property suite on the three-voter cycle profile") {
  // Every voter puts z above u; the suite must see weak Pareto hold there.
  const AlternativeSet alts({"x", "y", "z", "u"});
  const Profile p(alts, {{WeakOrder::from_labels(alts, {{"x"}, {"y"}, {"z"}, {"u"}}), 1},
                         {WeakOrder::from_labels(alts, {{"y"}, {"z"}, {"u"}, {"x"}}), 1},
                         {WeakOrder::from_labels(alts, {{"z"}, {"u"}, {"x"}, {"y"}}), 1}});
  const auto t = compute_scores(majority_relation(p));
  REQUIRE(t.total(2) > t.total(3));
  REQUIRE(t.total(2) == Rational(4));
  REQUIRE(t.total(3) == Rational(1));

  std::vector<CheckResult> out;
  detail::check_instance({0, majority_relation(p), p}, ScoringConfig{}, out);
  const auto wp = std::find_if(out.begin(), out.end(), [](const CheckResult& c) { return c.name == "weak pareto"; });
  REQUIRE(wp != out.end());
  REQUIRE(wp->passed == 1);
  REQUIRE(wp->failed == 0);
}

TEST_CASE("property suite small runs") {
  EnumerationSpec spec;
  spec.mode = EnumerationMode::AllTournaments;
  spec.m_min = 3;
  spec.m_max = 4;
  const auto r = check_theorem_suite(spec, {}, 2);
  REQUIRE(r.instances == 8 + 64);
  REQUIRE(r.all_passed());
  const auto* prop7 = r.find("winners lie in the copeland winners (m <= 5)");
  REQUIRE(prop7);
  REQUIRE(prop7->passed == 72);

  spec.mode = EnumerationMode::AllWeakOrders;
  spec.m_min = 2;
  spec.m_max = 4;
  const auto w = check_theorem_suite(spec);
  REQUIRE(w.instances == 3 + 13 + 75);
  REQUIRE(w.all_passed());
  REQUIRE(w.find("all-tie input scores zero")->passed == 3);

  spec.mode = EnumerationMode::RandomProfiles;
  spec.m_min = 3;
  spec.m_max = 5;
  spec.count = 200;
  const auto p1 = check_theorem_suite(spec, {}, 1);
  const auto p3 = check_theorem_suite(spec, {}, 3);
  REQUIRE(p1.all_passed());
  REQUIRE(p1.checks.size() == p3.checks.size());
  for (std::size_t k = 0; k < p1.checks.size(); ++k) {
    REQUIRE(p1.checks[k].name == p3.checks[k].name);
    REQUIRE(p1.checks[k].passed == p3.checks[k].passed);
  }
}

TEST_CASE("property suite size guards") {
  EnumerationSpec spec;
  spec.m_min = 3;
  spec.m_max = 7;
  REQUIRE_THROWS_AS(check_theorem_suite(spec), TooLarge);
  spec.mode = EnumerationMode::AllWeakOrders;
  spec.m_max = 6;
  REQUIRE_THROWS_AS(check_theorem_suite(spec), TooLarge);
  spec.m_min = 4;
  spec.m_max = 3;
  REQUIRE_THROWS_AS(check_theorem_suite(spec), InvalidArgument);
}

TEST_CASE("a failing check records the first counterexample") {
  std::vector<CheckResult> out;
  const auto cyc = validate_relation({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}});
  const detail::Instance inst{4, cyc, std::nullopt, false};
  detail::Recorder rec(inst);
  rec.check(out, "always fails", false);
  rec.check(out, "always fails", true);
  REQUIRE(out.size() == 1);
  REQUIRE(out[0].failed == 1);
  REQUIRE(out[0].passed == 1);
  REQUIRE(out[0].first_failure == 4u);
  REQUIRE(out[0].counterexample == "3\n0 1 -1\n-1 0 1\n1 -1 0\n");
}
