#ifndef DSR_SCORING_HPP
#define DSR_SCORING_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "dsr/core.hpp"
#include "dsr/partitions.hpp"
#include "dsr/rational.hpp"

namespace dsr {

struct ScoringConfig {
  /// Points for a tie in a single comparison.
  Rational alpha{1, 2};

  static ScoringConfig with_alpha(Rational a) {
    ScoringConfig c{a};
    c.validate();
    return c;
  }

  void validate() const {
    if (alpha < Rational(0) || alpha > Rational(1)) {
      throw InvalidArgument("alpha must lie in [0,1], got " + to_display(alpha));
    }
  }
};

/// Single-comparison points: 1 for a win, alpha for a tie, 0 otherwise.
inline Rational mu(const PreferenceRelation& rel, Index x, Index y, const ScoringConfig& config = {}) {
  switch (rel(x, y)) {
    case Outcome::Beat: return Rational(1);
    case Outcome::Tie: return config.alpha;
    default: return Rational(0);
  }
}

namespace detail {

// wins + alpha * ties of x against z and against every member of `against`.
inline Rational points(const PreferenceRelation& rel, Index x, Index z, std::span<const Index> against,
                       const Rational& alpha) {
  std::int64_t wins = 0, ties = 0;
  auto tally = [&](Index y) {
    const auto o = rel(x, y);
    if (o == Outcome::Beat) ++wins;
    else if (o == Outcome::Tie) ++ties;
  };
  tally(z);
  for (Index w : against) tally(w);
  return Rational(wins) + alpha * ties;
}

}  // namespace detail

/// score_z(x) for every x, derived from the block structure of `p` alone.
/// A partition whose bottom block is {pivot} pays mu(x, z) to the top block;
/// any other partition pays mu(x, z) plus the points against the bottom
/// block to every alternative outside it.
inline std::vector<Rational> score_column(const PreferenceRelation& rel, const SpecificPartition& p,
                                          const ScoringConfig& config = {}) {
  std::vector<Rational> col(rel.size(), Rational(0));
  const Index z = p.pivot;
  const Block& bottom = p.bottom();
  const bool pivot_at_bottom = bottom.size() == 1 && bottom.front() == z;
  for (std::size_t k = 0; k + 1 < p.blocks.size(); ++k) {
    for (Index x : p.blocks[k]) {
      if (pivot_at_bottom) {
        col[x] = mu(rel, x, z, config);
      } else {
        col[x] = detail::points(rel, x, z, bottom, config.alpha);
      }
    }
  }
  return col;
}

/// Per-pivot scores and their totals.
class ScoreTable {
 public:
  ScoreTable() = default;
  ScoreTable(AlternativeSet alts, std::vector<Rational> per_pivot,
             std::vector<std::optional<SpecificPartition>> partitions)
      : alts_(std::move(alts)), per_pivot_(std::move(per_pivot)), partitions_(std::move(partitions)) {
    const auto m = alts_.size();
    totals_.assign(m, Rational(0));
    for (Index z = 0; z < m; ++z) {
      for (Index x = 0; x < m; ++x) totals_[x] += per_pivot_[z * m + x];
    }
  }

  const AlternativeSet& alternatives() const { return alts_; }
  std::size_t size() const { return alts_.size(); }

  /// score_z(x).
  const Rational& score(Index z, Index x) const { return per_pivot_[z * size() + x]; }
  /// psi(x).
  const Rational& total(Index x) const { return totals_[x]; }
  const std::vector<Rational>& totals() const { return totals_; }
  const std::optional<SpecificPartition>& partition(Index z) const { return partitions_[z]; }
  const std::vector<std::optional<SpecificPartition>>& partitions() const { return partitions_; }

  bool operator==(const ScoreTable&) const = default;

 private:
  AlternativeSet alts_;
  std::vector<Rational> per_pivot_;  // row z, column x
  std::vector<Rational> totals_;
  std::vector<std::optional<SpecificPartition>> partitions_;
};

inline ScoreTable compute_scores(const PreferenceRelation& rel, const ScoringConfig& config = {}) {
  config.validate();
  const auto m = rel.size();
  std::vector<Rational> per_pivot(m * m, Rational(0));
  std::vector<std::optional<SpecificPartition>> parts(m);
  for (Index z = 0; z < m; ++z) {
    parts[z] = seek_partition(rel, z);
    if (!parts[z]) continue;
    const auto col = score_column(rel, *parts[z], config);
    std::copy(col.begin(), col.end(), per_pivot.begin() + static_cast<std::ptrdiff_t>(z * m));
  }
  return ScoreTable(rel.alternatives(), std::move(per_pivot), std::move(parts));
}

/// Tiers of equal totals, highest total first.
inline WeakOrder social_ranking(const ScoreTable& table) {
  std::vector<Index> order(table.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return table.total(a) > table.total(b); });
  std::vector<Block> tiers;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k == 0 || table.total(order[k]) != table.total(order[k - 1])) tiers.emplace_back();
    tiers.back().push_back(order[k]);
  }
  return WeakOrder(table.alternatives(), std::move(tiers));
}

inline ChoiceSet winner_set(const ScoreTable& table) {
  return ChoiceSet{social_ranking(table).tiers().front(), "DSR"};
}

/// Total of the alternative in position i counted from the bottom of a
/// strict linear order (i = 1 is last).
inline Rational linear_order_score(std::int64_t i) {
  if (i < 1) throw InvalidArgument("position must be >= 1");
  return Rational((i - 1) * (i + 2) / 2);
}

}  // namespace dsr

#endif  // DSR_SCORING_HPP
