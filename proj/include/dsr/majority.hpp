#ifndef DSR_MAJORITY_HPP
#define DSR_MAJORITY_HPP

#include <cstdint>
#include <vector>

#include "dsr/core.hpp"

namespace dsr {

/// Pairwise comparison matrix: wins(i, j) voters rank i strictly above j.
class PairwiseTally {
 public:
  PairwiseTally(AlternativeSet alts, std::uint64_t voters)
      : alts_(std::move(alts)), voters_(voters), wins_(alts_.size() * alts_.size(), 0) {}

  const AlternativeSet& alternatives() const { return alts_; }
  std::size_t size() const { return alts_.size(); }
  std::uint64_t voter_count() const { return voters_; }

  std::uint64_t wins(Index i, Index j) const { return wins_[i * size() + j]; }
  std::uint64_t ties(Index i, Index j) const { return i == j ? 0 : voters_ - wins(i, j) - wins(j, i); }

  void add(Index i, Index j, std::uint64_t count) { wins_[i * size() + j] += count; }

  bool operator==(const PairwiseTally&) const = default;

 private:
  AlternativeSet alts_;
  std::uint64_t voters_;
  std::vector<std::uint64_t> wins_;
};

inline PairwiseTally tally(const Profile& profile) {
  PairwiseTally t(profile.alternatives(), profile.voter_count());
  const auto m = profile.alternatives().size();
  for (const auto& ballot : profile.ballots()) {
    for (Index i = 0; i < m; ++i) {
      for (Index j = 0; j < m; ++j) {
        if (ballot.order.rank(i) < ballot.order.rank(j)) t.add(i, j, ballot.count);
      }
    }
  }
  return t;
}

/// Simple majority: i beats j iff more voters put i above j than j above i.
inline PreferenceRelation majority_relation(const PairwiseTally& t) {
  RelationBuilder b(t.alternatives());
  for (Index i = 0; i < t.size(); ++i) {
    for (Index j = i + 1; j < t.size(); ++j) {
      const auto ij = t.wins(i, j), ji = t.wins(j, i);
      b.set(i, j, ij > ji ? Outcome::Beat : ij < ji ? Outcome::Lose : Outcome::Tie);
    }
  }
  return b.build();
}

inline PreferenceRelation majority_relation(const Profile& profile) { return majority_relation(tally(profile)); }

}  // namespace dsr

#endif  // DSR_MAJORITY_HPP
