#include <catch_amalgamated.hpp>

#include "dsr/core.hpp"
#include "dsr/rational.hpp"

using namespace dsr;

namespace {

// a beats everyone, c beats b, b beats d, c and d tie.
PreferenceRelation condorcet_ties() {
  RelationBuilder b(AlternativeSet({"a", "b", "c", "d"}));
  b.beat("a", "b").beat("a", "c").beat("a", "d").beat("c", "b").beat("b", "d").tie("c", "d");
  return b.build();
}

}  // namespace

TEST_CASE("alternative set validates its roster") {
  REQUIRE(AlternativeSet({"a", "b"}).size() == 2);
  REQUIRE_THROWS_AS(AlternativeSet({"a"}), DimensionError);
  REQUIRE_THROWS_AS(AlternativeSet(std::vector<std::string>{}), DimensionError);
  REQUIRE_THROWS_AS(AlternativeSet({"a", "a"}), InvalidRoster);
  REQUIRE_THROWS_AS(AlternativeSet({"a", ""}), InvalidRoster);

  const auto alts = AlternativeSet({"x", "y", "z"});
  REQUIRE(alts.index_of("z") == 2);
  REQUIRE_FALSE(alts.find("w").has_value());
  REQUIRE_THROWS_AS(alts.index_of("w"), UnknownAlternative);
}

TEST_CASE("default letters") {
  REQUIRE(AlternativeSet::letters(3).names() == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(AlternativeSet::letters(27).name(26) == "x27");
}

TEST_CASE("relation builder keeps both cells consistent") {
  const auto r = condorcet_ties();
  REQUIRE(r.beats(0, 1));
  REQUIRE(r(1, 0) == Outcome::Lose);
  REQUIRE(r.ties(2, 3));
  REQUIRE(r.ties(3, 2));
  REQUIRE(r(0, 0) == Outcome::Self);
  REQUIRE_FALSE(r.is_tournament());
  REQUIRE(r.weakly_beats(2, 3));
  REQUIRE_FALSE(r.weakly_beats(1, 0));

  RelationBuilder b(AlternativeSet::letters(2));
  REQUIRE_THROWS_AS(b.set(0, 0, Outcome::Beat), InvalidEntry);
  REQUIRE_THROWS_AS(b.set(0, 1, Outcome::Self), InvalidEntry);
  REQUIRE_THROWS_AS(b.set(0, 5, Outcome::Beat), UnknownAlternative);
}

TEST_CASE("validate_relation accepts the four-alternative tournament matrix") {
  const auto r = validate_relation({{0, 1, 1, -1}, {-1, 0, 1, 1}, {-1, -1, 0, 1}, {1, -1, -1, 0}});
  REQUIRE(r.is_tournament());
  REQUIRE(r.beats(3, 0));
  REQUIRE(r.alternatives().name(3) == "d");
}

TEST_CASE("validate_relation rejects malformed tables") {
  REQUIRE_THROWS_AS(validate_relation({{0, 1}, {0, 0}}), InconsistentPair);
  REQUIRE_THROWS_AS(validate_relation({{0, 1, 1}, {-1, 0}}), DimensionError);
  REQUIRE_THROWS_AS(validate_relation({{0}}), DimensionError);
  REQUIRE_THROWS_AS(validate_relation({{0, 2}, {-2, 0}}), InvalidEntry);
  REQUIRE_THROWS_AS(validate_relation({{1, 1}, {-1, 0}}), InvalidEntry);
  REQUIRE_THROWS_AS(validate_relation({{0, 1}, {-1, 0}}, AlternativeSet({"a", "b", "c"})), DimensionError);
}

TEST_CASE("transitivity check") {
  REQUIRE(is_transitive(weak_order_to_relation(WeakOrder::from_labels(AlternativeSet::letters(3), {{"a"}, {"b", "c"}}))));
  REQUIRE_FALSE(is_transitive(validate_relation({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}})));
  // a ~ b, b ~ c but a beats c breaks the tie clause
  REQUIRE_FALSE(is_transitive(validate_relation({{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}})));
  REQUIRE_FALSE(is_transitive(condorcet_ties()));
}

TEST_CASE("weak order coverage") {
  const auto alts = AlternativeSet::letters(3);
  const auto w = WeakOrder::from_labels(alts, {{"b"}, {"a", "c"}});
  REQUIRE(w.rank(1) == 0);
  REQUIRE(w.rank(0) == 1);
  REQUIRE(w.rank(2) == 1);
  REQUIRE_FALSE(w.is_strict());
  REQUIRE_THROWS_AS(WeakOrder::from_labels(alts, {{"a"}, {"b"}}), CoverageError);
  REQUIRE_THROWS_AS(WeakOrder::from_labels(alts, {{"a"}, {"b", "a"}, {"c"}}), CoverageError);
  REQUIRE_THROWS_AS(WeakOrder::from_labels(alts, {{"a"}, {"b"}, {"q"}}), UnknownAlternative);

  const auto r = weak_order_to_relation(w);
  REQUIRE(r.beats(1, 0));
  REQUIRE(r.ties(0, 2));
}

TEST_CASE("approval ballots become two-tier weak orders") {
  const auto alts = AlternativeSet::letters(3);
  const auto w = approval_to_weak_order(std::vector<std::string>{"b", "c"}, alts);
  REQUIRE(w == WeakOrder::from_labels(alts, {{"b", "c"}, {"a"}}));
  REQUIRE(approval_to_weak_order(std::vector<std::string>{}, alts).tiers().size() == 1);
  REQUIRE(approval_to_weak_order(std::vector<std::string>{"a", "b", "c"}, alts).tiers().size() == 1);
  REQUIRE_THROWS_AS(approval_to_weak_order(std::vector<std::string>{"z"}, alts), UnknownAlternative);
}

TEST_CASE("profiles check multiplicities and rosters") {
  const auto alts = AlternativeSet::letters(2);
  const auto w = WeakOrder::from_labels(alts, {{"a"}, {"b"}});
  REQUIRE(Profile(alts, {{w, 3}, {w, 2}}).voter_count() == 5);
  REQUIRE_THROWS_AS(Profile(alts, {}), InvalidArgument);
  REQUIRE_THROWS_AS(Profile(alts, {{w, 0}}), InvalidArgument);
  REQUIRE_THROWS_AS(Profile(AlternativeSet::letters(3), {{w, 1}}), CoverageError);
  REQUIRE_THROWS_AS(ApprovalProfile(alts, {{{0, 0}, 1}}), CoverageError);
}

TEST_CASE("restrict and permute") {
  const auto r = condorcet_ties();
  const auto sub = restrict(r, std::vector<std::string>{"c", "d"});
  REQUIRE(sub.size() == 2);
  REQUIRE(sub.ties(0, 1));
  REQUIRE(sub.alternatives().name(0) == "c");
  REQUIRE_THROWS_AS(restrict(r, Block{}), EmptySubset);
  REQUIRE_THROWS_AS(restrict(r, Block{2}), SingletonSubset);
  REQUIRE_THROWS_AS(restrict(r, std::vector<std::string>{"a", "q"}), UnknownAlternative);

  const Block perm{3, 2, 1, 0};
  const auto p = permute(r, perm);
  REQUIRE(p.alternatives().name(3) == "a");
  for (Index i = 0; i < 4; ++i) {
    for (Index j = 0; j < 4; ++j) REQUIRE(p(perm[i], perm[j]) == r(i, j));
  }
}

TEST_CASE("rational helpers") {
  REQUIRE(to_string(Rational(3)) == "3/1");
  REQUIRE(to_display(Rational(3)) == "3");
  REQUIRE(to_display(Rational(2, 4)) == "1/2");
  REQUIRE(parse_rational("3/4") == Rational(3, 4));
  REQUIRE(parse_rational("1") == Rational(1));
  REQUIRE(parse_rational("-2/6") == Rational(-1, 3));
  REQUIRE_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  REQUIRE_THROWS_AS(parse_rational("x"), InvalidArgument);
  REQUIRE_THROWS_AS(parse_rational("0.5"), InvalidArgument);
  REQUIRE_THROWS_AS(parse_rational(""), InvalidArgument);
}

TEST_CASE("choice set helpers") {
  const ChoiceSet a{{1, 2}, "x"}, b{{0, 1, 2}, "y"};
  REQUIRE(a.subset_of(b));
  REQUIRE_FALSE(b.subset_of(a));
  REQUIRE(a.contains(2));
  REQUIRE(format_set(AlternativeSet::letters(3), a.members) == "{b,c}");
}
