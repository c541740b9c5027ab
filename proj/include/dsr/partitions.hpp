#ifndef DSR_PARTITIONS_HPP
#define DSR_PARTITIONS_HPP

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dsr/core.hpp"
#include "dsr/rational.hpp"

namespace dsr {

namespace detail {

inline void require_blocks(std::size_t m, std::span<const Index> a, std::span<const Index> b) {
  if (a.empty() || b.empty()) throw EmptyBlock("blocks must be non-empty");
  std::vector<bool> in_a(m, false);
  for (Index i : a) {
    if (i >= m) throw UnknownAlternative("alternative index out of range");
    in_a[i] = true;
  }
  for (Index j : b) {
    if (j >= m) throw UnknownAlternative("alternative index out of range");
    if (in_a[j]) throw InvalidArgument("blocks must be disjoint");
  }
}

inline bool beats_all(const PreferenceRelation& rel, Index x, std::span<const Index> b) {
  return std::all_of(b.begin(), b.end(), [&](Index y) { return rel.beats(x, y); });
}

}  // namespace detail

/// Fraction of A whose members beat every member of B.
inline Rational beta(const PreferenceRelation& rel, std::span<const Index> a, std::span<const Index> b) {
  detail::require_blocks(rel.size(), a, b);
  const auto hits = std::count_if(a.begin(), a.end(), [&](Index x) { return detail::beats_all(rel, x, b); });
  return Rational(static_cast<std::int64_t>(hits), static_cast<std::int64_t>(a.size()));
}

/// Minimum over x in A of the fraction of B that x beats.
inline Rational gamma(const PreferenceRelation& rel, std::span<const Index> a, std::span<const Index> b) {
  detail::require_blocks(rel.size(), a, b);
  std::size_t worst = b.size();
  for (Index x : a) {
    const auto n = static_cast<std::size_t>(std::count_if(b.begin(), b.end(), [&](Index y) { return rel.beats(x, y); }));
    worst = std::min(worst, n);
    if (worst == 0) break;
  }
  return Rational(static_cast<std::int64_t>(worst), static_cast<std::int64_t>(b.size()));
}

enum class Dominance { Strict, Weak };

/// A > B (Strict) or A >= B (Weak): every a in A beats, or beats-or-ties,
/// every b in B.
inline bool block_dominates(const PreferenceRelation& rel, std::span<const Index> a, std::span<const Index> b,
                            Dominance mode) {
  detail::require_blocks(rel.size(), a, b);
  for (Index x : a) {
    for (Index y : b) {
      const bool ok = mode == Dominance::Strict ? rel.beats(x, y) : rel.weakly_beats(x, y);
      if (!ok) return false;
    }
  }
  return true;
}

/// Split of X \ {pivot} by outcome against the pivot.
struct Neighborhoods {
  Index pivot = 0;
  Block above;  // beat the pivot
  Block below;  // beaten by the pivot
  Block tied;   // tie the pivot

  Block above_or_tied() const {
    Block out;
    std::merge(above.begin(), above.end(), tied.begin(), tied.end(), std::back_inserter(out));
    return out;
  }
  /// above_or_tied plus the pivot itself.
  Block upper_with_pivot() const {
    Block out = above_or_tied();
    out.insert(std::upper_bound(out.begin(), out.end(), pivot), pivot);
    return out;
  }
};

inline Neighborhoods neighborhoods(const PreferenceRelation& rel, Index z) {
  if (z >= rel.size()) throw UnknownAlternative("pivot index out of range");
  Neighborhoods nb;
  nb.pivot = z;
  for (Index x = 0; x < rel.size(); ++x) {
    if (x == z) continue;
    switch (rel(x, z)) {
      case Outcome::Beat: nb.above.push_back(x); break;
      case Outcome::Lose: nb.below.push_back(x); break;
      default: nb.tied.push_back(x); break;
    }
  }
  return nb;
}

/// Which divisibility case produced a pivot partition.
///   k1: bottom-singleton bipartition <upper, {z}>, nothing below z
///   k2: bipartition <upper + z, below> with (upper + z) >= below
///   k3: same blocks as k2, admitted by gamma(upper + z, below) > 0
///   k4: tripartition <upper, {z}, below>, admitted by beta(upper, below) > 0
enum class PartitionKind { K1, K2, K3, K4 };

inline std::string to_string(PartitionKind k) {
  switch (k) {
    case PartitionKind::K1: return "k1";
    case PartitionKind::K2: return "k2";
    case PartitionKind::K3: return "k3";
    case PartitionKind::K4: return "k4";
  }
  return "?";
}

/// Ordered bipartition or tripartition of X attached to a pivot.
struct SpecificPartition {
  Index pivot = 0;
  PartitionKind kind = PartitionKind::K1;
  std::vector<Block> blocks;  // top, [middle], bottom

  bool is_tripartition() const { return blocks.size() == 3; }
  const Block& top() const { return blocks.front(); }
  const Block& bottom() const { return blocks.back(); }

  bool operator==(const SpecificPartition&) const = default;
};

/// Every condition of the pivot case analysis evaluated on its own, plus the
/// partition actually selected. Mirrors the row layout of a divisibility table.
struct DivisibilityTrace {
  Neighborhoods nb;
  bool below_nonempty = false;
  bool above_nonempty = false;
  bool upper_weakly_dominates = false;  // (upper + z) >= below
  bool gamma_positive = false;          // gamma(upper + z, below) > 0
  bool beta_positive = false;           // beta(upper, below) > 0
  bool bottom_singleton = false;        // k1 condition
  bool bipartition = false;             // k2/k3 condition
  bool tripartition = false;            // k4 condition
  std::optional<SpecificPartition> partition;
};

inline DivisibilityTrace trace_divisibility(const PreferenceRelation& rel, Index z) {
  DivisibilityTrace t;
  t.nb = neighborhoods(rel, z);
  const auto& nb = t.nb;
  t.below_nonempty = !nb.below.empty();
  t.above_nonempty = !nb.above.empty();
  const Block upper = nb.above_or_tied();
  const Block upper_z = nb.upper_with_pivot();
  if (t.below_nonempty) {
    t.upper_weakly_dominates = block_dominates(rel, upper_z, nb.below, Dominance::Weak);
    t.gamma_positive = is_positive(gamma(rel, upper_z, nb.below));
    if (!upper.empty()) t.beta_positive = is_positive(beta(rel, upper, nb.below));
  }
  t.bottom_singleton = !t.below_nonempty && t.above_nonempty;
  t.bipartition = t.below_nonempty && (t.upper_weakly_dominates || t.gamma_positive);
  t.tripartition = t.below_nonempty && t.above_nonempty && t.beta_positive;

  if (t.bottom_singleton) {
    t.partition = SpecificPartition{z, PartitionKind::K1, {upper, {z}}};
  } else if (t.bipartition) {
    t.partition = SpecificPartition{z, t.upper_weakly_dominates ? PartitionKind::K2 : PartitionKind::K3,
                                    {upper_z, nb.below}};
  } else if (t.tripartition) {
    t.partition = SpecificPartition{z, PartitionKind::K4, {upper, {z}, nb.below}};
  }
  return t;
}

/// Pivot-specific partition search for a single pivot. Cases are tried in
/// order k1, k2, k3, k4; when a bipartition and a tripartition both exist
/// the bipartition is returned. nullopt means X is not divisible w.r.t. z.
inline std::optional<SpecificPartition> seek_partition(const PreferenceRelation& rel, Index z) {
  const auto nb = neighborhoods(rel, z);
  const Block upper = nb.above_or_tied();
  if (nb.below.empty()) {
    if (nb.above.empty()) return std::nullopt;
    return SpecificPartition{z, PartitionKind::K1, {upper, {z}}};
  }
  const Block upper_z = nb.upper_with_pivot();
  if (block_dominates(rel, upper_z, nb.below, Dominance::Weak)) {
    return SpecificPartition{z, PartitionKind::K2, {upper_z, nb.below}};
  }
  if (is_positive(gamma(rel, upper_z, nb.below))) {
    return SpecificPartition{z, PartitionKind::K3, {upper_z, nb.below}};
  }
  if (!nb.above.empty() && is_positive(beta(rel, upper, nb.below))) {
    return SpecificPartition{z, PartitionKind::K4, {upper, {z}, nb.below}};
  }
  return std::nullopt;
}

/// seek_partition for every pivot in roster order.
inline std::vector<std::optional<SpecificPartition>> seek_partitions(const PreferenceRelation& rel) {
  std::vector<std::optional<SpecificPartition>> out;
  out.reserve(rel.size());
  for (Index z = 0; z < rel.size(); ++z) out.push_back(seek_partition(rel, z));
  return out;
}

inline bool specifically_divisible(const PreferenceRelation& rel) {
  for (Index z = 0; z < rel.size(); ++z) {
    if (seek_partition(rel, z)) return true;
  }
  return false;
}

inline std::string format_partition(const AlternativeSet& alts, const SpecificPartition& p) {
  std::string out = "<";
  for (std::size_t k = 0; k < p.blocks.size(); ++k) {
    if (k) out += ",";
    out += format_set(alts, p.blocks[k]);
  }
  return out + ">_" + alts.name(p.pivot);
}

}  // namespace dsr

#endif  // DSR_PARTITIONS_HPP
