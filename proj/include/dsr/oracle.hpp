#ifndef DSR_ORACLE_HPP
#define DSR_ORACLE_HPP

// Brute-force reference implementations. Nothing here calls into the
// partitions, scoring or solutions headers: relations are copied into
// bitmasks and every predicate is re-derived from its definition.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "dsr/core.hpp"
#include "dsr/rational.hpp"

namespace dsr::oracle {

using Mask = std::uint32_t;

/// Bitmask view of a relation: beat[x] has bit y set iff x beats y.
struct Bits {
  std::size_t m = 0;
  std::vector<Mask> beat, tie;

  explicit Bits(const PreferenceRelation& rel) : m(rel.size()), beat(m, 0), tie(m, 0) {
    for (Index x = 0; x < m; ++x) {
      for (Index y = 0; y < m; ++y) {
        if (x == y) continue;
        if (rel(x, y) == Outcome::Beat) beat[x] |= Mask{1} << y;
        if (rel(x, y) == Outcome::Tie) tie[x] |= Mask{1} << y;
      }
    }
  }

  Mask all() const { return m == 32 ? ~Mask{0} : (Mask{1} << m) - 1; }
  bool beats(Index x, Index y) const { return (beat[x] >> y) & 1u; }
  bool weak(Index x, Index y) const { return ((beat[x] | tie[x]) >> y) & 1u; }
};

inline bool has(Mask s, Index i) { return (s >> i) & 1u; }

inline Block to_block(Mask s) {
  Block out;
  for (Index i = 0; s; ++i, s >>= 1) {
    if (s & 1u) out.push_back(i);
  }
  return out;
}

inline Mask to_mask(std::span<const Index> b) {
  Mask s = 0;
  for (Index i : b) s |= Mask{1} << i;
  return s;
}

// ---- set predicates straight from their definitions ---------------------

/// A >= B: every a in A beats or ties every b in B.
inline bool weakly_dominates(const Bits& r, Mask a, Mask b) {
  for (Index x = 0; x < r.m; ++x) {
    if (has(a, x) && ((r.beat[x] | r.tie[x]) & b) != b) return false;
  }
  return true;
}

/// A > B: every a in A beats every b in B.
inline bool strictly_dominates(const Bits& r, Mask a, Mask b) {
  for (Index x = 0; x < r.m; ++x) {
    if (has(a, x) && (r.beat[x] & b) != b) return false;
  }
  return true;
}

/// beta(A, B) > 0: some a in A beats all of B.
inline bool beta_positive(const Bits& r, Mask a, Mask b) {
  for (Index x = 0; x < r.m; ++x) {
    if (has(a, x) && (r.beat[x] & b) == b) return true;
  }
  return false;
}

/// gamma(A, B) > 0: every a in A beats something in B.
inline bool gamma_positive(const Bits& r, Mask a, Mask b) {
  for (Index x = 0; x < r.m; ++x) {
    if (has(a, x) && (r.beat[x] & b) == 0) return false;
  }
  return true;
}

inline bool is_partition(const Bits& r, std::initializer_list<Mask> blocks) {
  Mask seen = 0;
  for (Mask b : blocks) {
    if (b == 0 || (seen & b)) return false;
    seen |= b;
  }
  return seen == r.all();
}

inline bool first_type_bipartition(const Bits& r, Mask a, Mask b) {
  return is_partition(r, {a, b}) && beta_positive(r, a, b) && weakly_dominates(r, a, b);
}

inline bool second_type_bipartition(const Bits& r, Mask a, Mask b) {
  return is_partition(r, {a, b}) && beta_positive(r, a, b) && gamma_positive(r, a, b);
}

inline bool tripartition(const Bits& r, Mask a, Mask b, Mask c) {
  return is_partition(r, {a, b, c}) && weakly_dominates(r, a, b) && strictly_dominates(r, b, c) &&
         beta_positive(r, a, b) && beta_positive(r, a, c);
}

struct AllPartitions {
  std::vector<std::pair<Mask, Mask>> first_type, second_type;
  std::vector<std::tuple<Mask, Mask, Mask>> tri;
};

/// Every bipartition and tripartition of X, by exhaustive block assignment.
inline AllPartitions enumerate_partitions(const PreferenceRelation& rel) {
  if (rel.size() > 10) throw TooLarge("partition enumeration is limited to m <= 10");
  const Bits r(rel);
  AllPartitions out;
  const Mask full = r.all();
  for (Mask a = 1; a < full; ++a) {
    const Mask rest = full & ~a;
    if (first_type_bipartition(r, a, rest)) out.first_type.emplace_back(a, rest);
    if (second_type_bipartition(r, a, rest)) out.second_type.emplace_back(a, rest);
    for (Mask b = rest; b; b = (b - 1) & rest) {
      const Mask c = rest & ~b;
      if (c && tripartition(r, a, b, c)) out.tri.emplace_back(a, b, c);
    }
  }
  return out;
}

/// Proper non-empty subsets whose members all beat all non-members.
inline std::vector<Block> dominating_sets(const PreferenceRelation& rel) {
  if (rel.size() > 16) throw TooLarge("dominating-set search is limited to m <= 16");
  const Bits r(rel);
  std::vector<Block> out;
  for (Mask a = 1; a < r.all(); ++a) {
    if (strictly_dominates(r, a, r.all() & ~a)) out.push_back(to_block(a));
  }
  return out;
}

// ---- pivot partitions, clause by clause ---------------------------------

struct PivotSets {
  Mask above = 0, below = 0, tied = 0;
  Mask upper() const { return above | tied; }
};

inline PivotSets pivot_sets(const Bits& r, Index z) {
  PivotSets s;
  for (Index x = 0; x < r.m; ++x) {
    if (x == z) continue;
    if (r.beats(x, z)) s.above |= Mask{1} << x;
    else if (r.beats(z, x)) s.below |= Mask{1} << x;
    else s.tied |= Mask{1} << x;
  }
  return s;
}

/// Which of the three pivot-partition clauses hold for z.
struct PivotClauses {
  bool bottom_singleton = false;  // clause (1)
  bool weak_bipartition = false;  // clause (2), via >=
  bool gamma_bipartition = false; // clause (2), via gamma
  bool tripartition = false;      // clause (3)
  PivotSets sets;
};

inline PivotClauses pivot_clauses(const PreferenceRelation& rel, Index z) {
  if (rel.size() > 16) throw TooLarge("pivot clause check is limited to m <= 16");
  const Bits r(rel);
  PivotClauses c;
  c.sets = pivot_sets(r, z);
  const auto& s = c.sets;
  const Mask zbit = Mask{1} << z;
  c.bottom_singleton = s.below == 0 && s.above != 0;
  if (s.below != 0) {
    c.weak_bipartition = weakly_dominates(r, s.upper() | zbit, s.below);
    c.gamma_bipartition = gamma_positive(r, s.upper() | zbit, s.below);
    c.tripartition = s.above != 0 && beta_positive(r, s.upper(), s.below);
  }
  return c;
}

/// The partition the pivot clauses admit, preferring a bipartition.
/// Result is {blocks as masks, kind 1..4}; kind 0 means none.
struct PivotPartition {
  int kind = 0;
  std::vector<Mask> blocks;
};

inline PivotPartition seek_partition_by_definition(const PreferenceRelation& rel, Index z) {
  const auto c = pivot_clauses(rel, z);
  const Mask zbit = Mask{1} << z;
  if (c.bottom_singleton) return {1, {c.sets.upper(), zbit}};
  if (c.weak_bipartition) return {2, {c.sets.upper() | zbit, c.sets.below}};
  if (c.gamma_bipartition) return {3, {c.sets.upper() | zbit, c.sets.below}};
  if (c.tripartition) return {4, {c.sets.upper(), zbit, c.sets.below}};
  return {};
}

// ---- the score as an indicator-weighted double sum ----------------------

/// psi(x) summed over pivots z with every condition bundle written out as
/// an indicator, as in the rewritten scoring formula.
inline std::vector<Rational> psi(const PreferenceRelation& rel, const Rational& alpha = Rational(1, 2)) {
  if (rel.size() > 8) throw TooLarge("reference score is limited to m <= 8");
  const Bits r(rel);
  const auto m = r.m;
  auto mu = [&](Index x, Index y) -> Rational {
    if (x == y) return Rational(0);
    if (r.beats(x, y)) return Rational(1);
    if (r.weak(x, y)) return alpha;
    return Rational(0);
  };
  auto delta = [](bool b) { return b ? 1 : 0; };

  std::vector<Rational> out(m, Rational(0));
  for (Index x = 0; x < m; ++x) {
    for (Index z = 0; z < m; ++z) {
      const auto s = pivot_sets(r, z);
      const Mask ge_ne = s.upper();
      const Mask ge = ge_ne | (Mask{1} << z);
      const Mask lt = s.below;

      const int first = delta(lt == 0 && s.above != 0) * delta(has(ge_ne, x));
      out[x] += mu(x, z) * first;

      const bool admitted = lt != 0 && (weakly_dominates(r, ge, lt) || gamma_positive(r, ge, lt) ||
                                        (s.above != 0 && beta_positive(r, ge_ne, lt)));
      const int second = delta(lt != 0) * delta(admitted) * delta(has(ge, x));
      if (second) {
        Rational sum = mu(x, z);
        for (Index y = 0; y < m; ++y) {
          if (has(lt, y)) sum += mu(x, y);
        }
        out[x] += sum * second;
      }
    }
  }
  return out;
}

// ---- solution sets by subset enumeration --------------------------------

/// Smallest non-empty A with A > X \ A.
inline Block smith(const PreferenceRelation& rel) {
  if (rel.size() > 12) throw TooLarge("brute-force Smith set is limited to m <= 12");
  const Bits r(rel);
  Mask best = r.all();
  for (Mask a = 1; a < r.all(); ++a) {
    if (std::popcount(a) < std::popcount(best) && strictly_dominates(r, a, r.all() & ~a)) best = a;
  }
  return to_block(best);
}

/// Union of the inclusion-minimal sets that no outsider beats into.
inline Block schwartz(const PreferenceRelation& rel) {
  if (rel.size() > 12) throw TooLarge("brute-force Schwartz set is limited to m <= 12");
  const Bits r(rel);
  const Mask full = r.all();
  auto undominated = [&](Mask a) {
    for (Index y = 0; y < r.m; ++y) {
      if (!has(a, y) && (r.beat[y] & a)) return false;
    }
    return true;
  };
  std::vector<Mask> sets;
  for (Mask a = 1; a <= full; ++a) {
    if (undominated(a)) sets.push_back(a);
  }
  Mask u = 0;
  for (Mask a : sets) {
    const bool minimal = std::none_of(sets.begin(), sets.end(), [&](Mask b) { return b != a && (b & a) == b; });
    if (minimal) u |= a;
  }
  return to_block(u);
}

/// Condorcet winner, else every alternative whose beats-or-ties reach
/// (breadth-first over bitmasks) is the whole set.
inline Block top_cycle(const PreferenceRelation& rel) {
  if (rel.size() > 16) throw TooLarge("brute-force top cycle is limited to m <= 16");
  const Bits r(rel);
  for (Index x = 0; x < r.m; ++x) {
    if ((r.beat[x] | (Mask{1} << x)) == r.all()) return {x};
  }
  Mask out = 0;
  for (Index x = 0; x < r.m; ++x) {
    Mask seen = Mask{1} << x, frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Index y = 0; y < r.m; ++y) {
        if (has(frontier, y)) next |= r.beat[y] | r.tie[y];
      }
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen == r.all()) out |= Mask{1} << x;
  }
  return to_block(out);
}

// ---- exhaustive and random instance generators --------------------------

/// Calls fn on every labeled tournament over m alternatives.
inline void for_each_tournament(std::size_t m, const std::function<void(const PreferenceRelation&)>& fn) {
  if (m < 2) throw DimensionError("need at least two alternatives");
  if (m > 6) throw TooLarge("tournament enumeration is limited to m <= 6");
  const auto alts = AlternativeSet::letters(m);
  const std::size_t pairs = m * (m - 1) / 2;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    RelationBuilder b(alts);
    std::size_t bit = 0;
    for (Index i = 0; i < m; ++i) {
      for (Index j = i + 1; j < m; ++j, ++bit) {
        if ((code >> bit) & 1u) b.beat(i, j);
        else b.beat(j, i);
      }
    }
    fn(b.build());
  }
}

inline std::vector<PreferenceRelation> enumerate_tournaments(std::size_t m) {
  std::vector<PreferenceRelation> out;
  for_each_tournament(m, [&](const PreferenceRelation& r) { out.push_back(r); });
  return out;
}

/// Every ordered set partition of the m alternatives.
inline std::vector<WeakOrder> enumerate_weak_orders(std::size_t m) {
  if (m < 2) throw DimensionError("need at least two alternatives");
  if (m > 5) throw TooLarge("weak-order enumeration is limited to m <= 5");
  const auto alts = AlternativeSet::letters(m);
  std::vector<WeakOrder> out;
  std::vector<std::size_t> rank(m, 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= m;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code, used = 0;
    for (Index i = 0; i < m; ++i) {
      rank[i] = c % m;
      c /= m;
      used |= std::size_t{1} << rank[i];
    }
    const auto tiers = static_cast<std::size_t>(std::popcount(used));
    if (used != (std::size_t{1} << tiers) - 1) continue;  // ranks must be 0..k-1
    std::vector<Block> groups(tiers);
    for (Index i = 0; i < m; ++i) groups[rank[i]].push_back(i);
    out.emplace_back(alts, std::move(groups));
  }
  return out;
}

/// Random complete relation; each pair ties with probability tie_prob and
/// otherwise goes either way with equal chance.
template <class Rng>
PreferenceRelation random_relation(Rng& rng, std::size_t m, double tie_prob) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  RelationBuilder b(AlternativeSet::letters(m));
  for (Index i = 0; i < m; ++i) {
    for (Index j = i + 1; j < m; ++j) {
      const double v = u(rng);
      if (v < tie_prob) b.tie(i, j);
      else if (v < tie_prob + (1.0 - tie_prob) / 2) b.beat(i, j);
      else b.beat(j, i);
    }
  }
  return b.build();
}

/// Random weak order: a shuffled roster cut into tiers at random gaps.
template <class Rng>
WeakOrder random_weak_order(Rng& rng, const AlternativeSet& alts, bool strict) {
  std::vector<Index> order(alts.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution cut(0.5);
  std::vector<Block> tiers{{order.front()}};
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (strict || cut(rng)) tiers.emplace_back();
    tiers.back().push_back(order[k]);
  }
  return WeakOrder(alts, std::move(tiers));
}

struct ProfileSpec {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::size_t m_min = 3, m_max = 6;
  std::uint64_t n_min = 1, n_max = 9;
};

/// Reproducible profiles. A third use strict ballots only, a third weak
/// ballots only, the rest a per-voter mix.
inline std::vector<Profile> random_profiles(const ProfileSpec& spec) {
  if (spec.m_min < 2 || spec.m_min > spec.m_max) throw InvalidArgument("bad alternative range");
  if (spec.n_min < 1 || spec.n_min > spec.n_max) throw InvalidArgument("bad voter range");
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<std::size_t> pick_m(spec.m_min, spec.m_max);
  std::uniform_int_distribution<std::uint64_t> pick_n(spec.n_min, spec.n_max);
  std::uniform_int_distribution<int> pick_style(0, 2);
  std::bernoulli_distribution coin(0.5);
  std::vector<Profile> out;
  out.reserve(spec.count);
  for (std::size_t k = 0; k < spec.count; ++k) {
    const auto alts = AlternativeSet::letters(pick_m(rng));
    const auto n = pick_n(rng);
    const int style = pick_style(rng);
    std::vector<Ballot> ballots;
    for (std::uint64_t v = 0; v < n; ++v) {
      const bool strict = style == 0 || (style == 2 && coin(rng));
      ballots.push_back({random_weak_order(rng, alts, strict), 1});
    }
    out.emplace_back(alts, std::move(ballots));
  }
  return out;
}

}  // namespace dsr::oracle

#endif  // DSR_ORACLE_HPP
