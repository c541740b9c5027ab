#ifndef DSR_CORE_HPP
#define DSR_CORE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dsr/error.hpp"

namespace dsr {

/// Alternatives are referenced by their position in the roster.
using Index = std::size_t;

/// Sorted list of alternative indices.
using Block = std::vector<Index>;

/// Ordered roster of distinct, non-empty labels; at least two of them.
class AlternativeSet {
 public:
  AlternativeSet() = default;

  explicit AlternativeSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() < 2) {
      throw DimensionError("need at least two alternatives, got " + std::to_string(names_.size()));
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& n : names_) {
      if (n.empty()) throw InvalidRoster("empty alternative label");
      if (!seen.insert(n).second) throw InvalidRoster("duplicate alternative label '" + n + "'");
    }
  }

  /// a, b, c, ... for m <= 26; x1, x2, ... otherwise.
  static AlternativeSet letters(std::size_t m) {
    std::vector<std::string> names;
    names.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      names.push_back(m <= 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i + 1));
    }
    return AlternativeSet(std::move(names));
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(Index i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<Index> find(std::string_view label) const {
    for (Index i = 0; i < names_.size(); ++i) {
      if (names_[i] == label) return i;
    }
    return std::nullopt;
  }

  Index index_of(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw UnknownAlternative("unknown alternative '" + std::string(label) + "'");
  }

  bool operator==(const AlternativeSet&) const = default;

 private:
  std::vector<std::string> names_;
};

/// Pairwise outcome of (x, y) from x's point of view. Self marks the
/// diagonal and is never read by scoring.
enum class Outcome : std::int8_t { Lose = -1, Tie = 0, Beat = 1, Self = 2 };

constexpr Outcome reversed(Outcome o) {
  switch (o) {
    case Outcome::Beat: return Outcome::Lose;
    case Outcome::Lose: return Outcome::Beat;
    default: return o;
  }
}

/// Complete pairwise relation over a roster. Immutable once built.
class PreferenceRelation {
 public:
  PreferenceRelation() = default;

  /// All-tie relation.
  explicit PreferenceRelation(AlternativeSet alts)
      : alts_(std::move(alts)), m_(alts_.size()), cells_(m_ * m_, Outcome::Tie) {
    for (Index i = 0; i < m_; ++i) cells_[i * m_ + i] = Outcome::Self;
  }

  const AlternativeSet& alternatives() const { return alts_; }
  std::size_t size() const { return m_; }

  Outcome operator()(Index x, Index y) const { return cells_[x * m_ + y]; }
  bool beats(Index x, Index y) const { return (*this)(x, y) == Outcome::Beat; }
  bool ties(Index x, Index y) const { return (*this)(x, y) == Outcome::Tie; }
  /// x beats or ties y, for x != y.
  bool weakly_beats(Index x, Index y) const {
    const auto o = (*this)(x, y);
    return o == Outcome::Beat || o == Outcome::Tie;
  }

  bool is_tournament() const {
    return std::none_of(cells_.begin(), cells_.end(), [](Outcome o) { return o == Outcome::Tie; });
  }

  bool operator==(const PreferenceRelation&) const = default;

 private:
  friend class RelationBuilder;

  AlternativeSet alts_;
  std::size_t m_ = 0;
  std::vector<Outcome> cells_;
};

/// Mutable staging area for a PreferenceRelation. Every set() writes both
/// ordered cells, so the antisymmetry invariant holds by construction.
class RelationBuilder {
 public:
  explicit RelationBuilder(AlternativeSet alts) : rel_(std::move(alts)) {}

  RelationBuilder& set(Index x, Index y, Outcome o) {
    const auto m = rel_.m_;
    if (x >= m || y >= m) throw UnknownAlternative("alternative index out of range");
    if (x == y) {
      if (o != Outcome::Self) throw InvalidEntry("diagonal cell must be Self");
      return *this;
    }
    if (o == Outcome::Self) throw InvalidEntry("off-diagonal cell cannot be Self");
    rel_.cells_[x * m + y] = o;
    rel_.cells_[y * m + x] = reversed(o);
    return *this;
  }
  RelationBuilder& beat(Index x, Index y) { return set(x, y, Outcome::Beat); }
  RelationBuilder& tie(Index x, Index y) { return set(x, y, Outcome::Tie); }

  RelationBuilder& beat(std::string_view x, std::string_view y) {
    return beat(rel_.alts_.index_of(x), rel_.alts_.index_of(y));
  }
  RelationBuilder& tie(std::string_view x, std::string_view y) {
    return tie(rel_.alts_.index_of(x), rel_.alts_.index_of(y));
  }

  PreferenceRelation build() const { return rel_; }

 private:
  PreferenceRelation rel_;
};

/// Builds a relation from a tournament-matrix style table:
/// [i][j] = 1 means i beats j, -1 means j beats i, 0 off the diagonal a tie.
inline PreferenceRelation validate_relation(const std::vector<std::vector<int>>& table,
                                            std::optional<AlternativeSet> alts = std::nullopt) {
  const auto m = table.size();
  if (m < 2) throw DimensionError("relation table needs m >= 2, got " + std::to_string(m));
  for (Index i = 0; i < m; ++i) {
    if (table[i].size() != m) {
      throw DimensionError("row " + std::to_string(i + 1) + " has " + std::to_string(table[i].size()) +
                           " entries, expected " + std::to_string(m));
    }
  }
  AlternativeSet roster = alts ? std::move(*alts) : AlternativeSet::letters(m);
  if (roster.size() != m) {
    throw DimensionError("roster has " + std::to_string(roster.size()) + " labels but table is " +
                         std::to_string(m) + "x" + std::to_string(m));
  }
  RelationBuilder b(roster);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      const int v = table[i][j];
      if (v < -1 || v > 1) {
        throw InvalidEntry("entry [" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "] = " +
                           std::to_string(v) + " is not one of 1, -1, 0");
      }
      if (i == j) {
        if (v != 0) throw InvalidEntry("diagonal entry " + std::to_string(i + 1) + " must be 0");
        continue;
      }
      if (table[j][i] != -v) {
        throw InconsistentPair("entries [" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "] and [" +
                               std::to_string(j + 1) + "," + std::to_string(i + 1) + "] disagree");
      }
      if (i < j) b.set(i, j, v == 1 ? Outcome::Beat : v == -1 ? Outcome::Lose : Outcome::Tie);
    }
  }
  return b.build();
}

/// The four transitivity clauses, checked literally over all triples.
inline bool is_transitive(const PreferenceRelation& rel) {
  const auto m = rel.size();
  for (Index x = 0; x < m; ++x) {
    for (Index y = 0; y < m; ++y) {
      if (y == x) continue;
      for (Index z = 0; z < m; ++z) {
        if (z == x || z == y) continue;
        const bool xy_beat = rel.beats(x, y), xy_tie = rel.ties(x, y);
        const bool yz_beat = rel.beats(y, z), yz_tie = rel.ties(y, z);
        if (xy_beat && yz_beat && !rel.beats(x, z)) return false;
        if (xy_tie && yz_beat && !rel.beats(x, z)) return false;
        if (xy_beat && yz_tie && !rel.beats(x, z)) return false;
        if (xy_tie && yz_tie && !rel.ties(x, z)) return false;
      }
    }
  }
  return true;
}

/// Ordered list of indifference classes, most preferred first.
class WeakOrder {
 public:
  WeakOrder() = default;

  WeakOrder(AlternativeSet alts, std::vector<Block> tiers) : alts_(std::move(alts)), tiers_(std::move(tiers)) {
    const auto m = alts_.size();
    rank_.assign(m, m);
    for (std::size_t t = 0; t < tiers_.size(); ++t) {
      auto& tier = tiers_[t];
      if (tier.empty()) throw CoverageError("weak order has an empty tier");
      std::sort(tier.begin(), tier.end());
      for (Index i : tier) {
        if (i >= m) throw UnknownAlternative("alternative index out of range");
        if (rank_[i] != m) throw CoverageError("alternative '" + alts_.name(i) + "' appears twice");
        rank_[i] = t;
      }
    }
    for (Index i = 0; i < m; ++i) {
      if (rank_[i] == m) throw CoverageError("alternative '" + alts_.name(i) + "' is not ranked");
    }
  }

  /// Builds from label groups, e.g. {{"a"}, {"b", "c"}}.
  static WeakOrder from_labels(const AlternativeSet& alts, const std::vector<std::vector<std::string>>& groups) {
    std::vector<Block> tiers;
    for (const auto& g : groups) {
      Block tier;
      for (const auto& label : g) tier.push_back(alts.index_of(label));
      tiers.push_back(std::move(tier));
    }
    return WeakOrder(alts, std::move(tiers));
  }

  /// Strict order listing alternatives from best to worst.
  static WeakOrder linear(const AlternativeSet& alts, std::span<const Index> best_first) {
    std::vector<Block> tiers;
    for (Index i : best_first) tiers.push_back({i});
    return WeakOrder(alts, std::move(tiers));
  }

  const AlternativeSet& alternatives() const { return alts_; }
  const std::vector<Block>& tiers() const { return tiers_; }
  /// Zero-based tier position of alternative i.
  std::size_t rank(Index i) const { return rank_.at(i); }
  bool is_strict() const { return tiers_.size() == alts_.size(); }

  bool operator==(const WeakOrder& o) const { return alts_ == o.alts_ && tiers_ == o.tiers_; }

 private:
  AlternativeSet alts_;
  std::vector<Block> tiers_;
  std::vector<std::size_t> rank_;
};

inline PreferenceRelation weak_order_to_relation(const WeakOrder& order) {
  const auto& alts = order.alternatives();
  RelationBuilder b(alts);
  for (Index x = 0; x < alts.size(); ++x) {
    for (Index y = x + 1; y < alts.size(); ++y) {
      const auto rx = order.rank(x), ry = order.rank(y);
      b.set(x, y, rx < ry ? Outcome::Beat : rx > ry ? Outcome::Lose : Outcome::Tie);
    }
  }
  return b.build();
}

struct Ballot {
  WeakOrder order;
  std::uint64_t count = 1;

  bool operator==(const Ballot&) const = default;
};

/// Weak-order ballots with integer multiplicities over a shared roster.
class Profile {
 public:
  Profile() = default;

  Profile(AlternativeSet alts, std::vector<Ballot> ballots) : alts_(std::move(alts)), ballots_(std::move(ballots)) {
    if (ballots_.empty()) throw InvalidArgument("profile has no ballots");
    for (const auto& b : ballots_) {
      if (!(b.order.alternatives() == alts_)) throw CoverageError("ballot is over a different roster");
      if (b.count == 0) throw InvalidArgument("ballot multiplicity must be positive");
      voters_ += b.count;
    }
  }

  const AlternativeSet& alternatives() const { return alts_; }
  const std::vector<Ballot>& ballots() const { return ballots_; }
  std::uint64_t voter_count() const { return voters_; }

  bool operator==(const Profile&) const = default;

 private:
  AlternativeSet alts_;
  std::vector<Ballot> ballots_;
  std::uint64_t voters_ = 0;
};

struct ApprovalBallot {
  Block approved;
  std::uint64_t count = 1;

  bool operator==(const ApprovalBallot&) const = default;
};

/// Dichotomous ballots. An approved subset may be empty or the full roster.
class ApprovalProfile {
 public:
  ApprovalProfile() = default;

  ApprovalProfile(AlternativeSet alts, std::vector<ApprovalBallot> ballots)
      : alts_(std::move(alts)), ballots_(std::move(ballots)) {
    if (ballots_.empty()) throw InvalidArgument("approval profile has no ballots");
    for (auto& b : ballots_) {
      if (b.count == 0) throw InvalidArgument("ballot multiplicity must be positive");
      std::sort(b.approved.begin(), b.approved.end());
      for (std::size_t k = 0; k < b.approved.size(); ++k) {
        if (b.approved[k] >= alts_.size()) throw UnknownAlternative("alternative index out of range");
        if (k > 0 && b.approved[k] == b.approved[k - 1]) {
          throw CoverageError("alternative '" + alts_.name(b.approved[k]) + "' approved twice");
        }
      }
      voters_ += b.count;
    }
  }

  const AlternativeSet& alternatives() const { return alts_; }
  const std::vector<ApprovalBallot>& ballots() const { return ballots_; }
  std::uint64_t voter_count() const { return voters_; }

  bool operator==(const ApprovalProfile&) const = default;

 private:
  AlternativeSet alts_;
  std::vector<ApprovalBallot> ballots_;
  std::uint64_t voters_ = 0;
};

/// Two tiers [approved, disapproved]; a single tier when the ballot is
/// empty or approves everything.
inline WeakOrder approval_to_weak_order(std::span<const Index> approved, const AlternativeSet& alts) {
  std::vector<bool> in(alts.size(), false);
  for (Index i : approved) {
    if (i >= alts.size()) throw UnknownAlternative("alternative index out of range");
    in[i] = true;
  }
  Block top, bottom;
  for (Index i = 0; i < alts.size(); ++i) (in[i] ? top : bottom).push_back(i);
  if (top.empty() || bottom.empty()) {
    Block all(alts.size());
    std::iota(all.begin(), all.end(), Index{0});
    return WeakOrder(alts, {all});
  }
  return WeakOrder(alts, {top, bottom});
}

inline WeakOrder approval_to_weak_order(const std::vector<std::string>& approved, const AlternativeSet& alts) {
  Block idx;
  for (const auto& label : approved) idx.push_back(alts.index_of(label));
  return approval_to_weak_order(idx, alts);
}

inline Profile to_profile(const ApprovalProfile& ap) {
  std::vector<Ballot> ballots;
  for (const auto& b : ap.ballots()) {
    ballots.push_back({approval_to_weak_order(b.approved, ap.alternatives()), b.count});
  }
  return Profile(ap.alternatives(), std::move(ballots));
}

/// Relation over `subset` (in the given order) with cells copied from rel.
inline PreferenceRelation restrict(const PreferenceRelation& rel, std::span<const Index> subset) {
  if (subset.empty()) throw EmptySubset("restriction to an empty subset");
  if (subset.size() == 1) throw SingletonSubset("restriction to a single alternative");
  std::vector<std::string> names;
  for (Index i : subset) {
    if (i >= rel.size()) throw UnknownAlternative("alternative index out of range");
    names.push_back(rel.alternatives().name(i));
  }
  RelationBuilder b{AlternativeSet(std::move(names))};  // throws on repeated members
  for (Index i = 0; i < subset.size(); ++i) {
    for (Index j = i + 1; j < subset.size(); ++j) b.set(i, j, rel(subset[i], subset[j]));
  }
  return b.build();
}

inline PreferenceRelation restrict(const PreferenceRelation& rel, const std::vector<std::string>& labels) {
  Block idx;
  for (const auto& l : labels) idx.push_back(rel.alternatives().index_of(l));
  return restrict(rel, idx);
}

/// Relabels alternatives: alternative i of `rel` becomes alternative
/// perm[i] of the result. Labels move with their alternatives.
inline PreferenceRelation permute(const PreferenceRelation& rel, std::span<const Index> perm) {
  const auto m = rel.size();
  if (perm.size() != m) throw DimensionError("permutation size mismatch");
  std::vector<std::string> names(m);
  for (Index i = 0; i < m; ++i) names.at(perm[i]) = rel.alternatives().name(i);
  RelationBuilder b{AlternativeSet(std::move(names))};
  for (Index i = 0; i < m; ++i) {
    for (Index j = i + 1; j < m; ++j) b.set(perm[i], perm[j], rel(i, j));
  }
  return b.build();
}

/// Non-empty set of alternatives chosen by some rule.
struct ChoiceSet {
  Block members;
  std::string concept_name;

  bool contains(Index i) const { return std::binary_search(members.begin(), members.end(), i); }
  bool subset_of(const ChoiceSet& other) const {
    return std::includes(other.members.begin(), other.members.end(), members.begin(), members.end());
  }
  bool same_members(const ChoiceSet& other) const { return members == other.members; }
};

inline std::string format_set(const AlternativeSet& alts, std::span<const Index> members) {
  std::string out = "{";
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (k) out += ",";
    out += alts.name(members[k]);
  }
  return out + "}";
}

}  // namespace dsr

#endif  // DSR_CORE_HPP
