#ifndef DSR_SOLUTIONS_HPP
#define DSR_SOLUTIONS_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "dsr/core.hpp"
#include "dsr/rational.hpp"

namespace dsr {

inline std::optional<Index> condorcet_winner(const PreferenceRelation& rel) {
  for (Index x = 0; x < rel.size(); ++x) {
    bool all = true;
    for (Index y = 0; y < rel.size() && all; ++y) all = x == y || rel.beats(x, y);
    if (all) return x;
  }
  return std::nullopt;
}

inline std::optional<Index> condorcet_loser(const PreferenceRelation& rel) {
  for (Index x = 0; x < rel.size(); ++x) {
    bool all = true;
    for (Index y = 0; y < rel.size() && all; ++y) all = x == y || rel.beats(y, x);
    if (all) return x;
  }
  return std::nullopt;
}

namespace detail {

/// Tarjan's strongly connected components of the digraph with an edge
/// x -> y whenever edge(x, y). Returns the component id of every vertex.
inline std::vector<std::size_t> strong_components(std::size_t m, const std::function<bool(Index, Index)>& edge,
                                                  std::size_t& count) {
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(m, unvisited), low(m, 0), comp(m, unvisited);
  std::vector<Index> stack;
  std::vector<bool> on_stack(m, false);
  std::size_t next = 0;
  count = 0;

  std::function<void(Index)> visit = [&](Index v) {
    index[v] = low[v] = next++;
    stack.push_back(v);
    on_stack[v] = true;
    for (Index w = 0; w < m; ++w) {
      if (w == v || !edge(v, w)) continue;
      if (index[w] == unvisited) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      Index w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = count;
      } while (w != v);
      ++count;
    }
  };
  for (Index v = 0; v < m; ++v) {
    if (index[v] == unvisited) visit(v);
  }
  return comp;
}

/// Members of components that receive no edge from another component.
inline Block source_components(std::size_t m, const std::function<bool(Index, Index)>& edge) {
  std::size_t count = 0;
  const auto comp = strong_components(m, edge, count);
  std::vector<bool> entered(count, false);
  for (Index x = 0; x < m; ++x) {
    for (Index y = 0; y < m; ++y) {
      if (x != y && comp[x] != comp[y] && edge(x, y)) entered[comp[y]] = true;
    }
  }
  Block out;
  for (Index x = 0; x < m; ++x) {
    if (!entered[comp[x]]) out.push_back(x);
  }
  return out;
}

}  // namespace detail

/// Smallest non-empty set whose members all beat every non-member: the
/// unique source component of the beats-or-ties digraph.
inline ChoiceSet smith_set(const PreferenceRelation& rel) {
  auto members = detail::source_components(rel.size(), [&](Index x, Index y) { return rel.weakly_beats(x, y); });
  return ChoiceSet{std::move(members), "Smith"};
}

/// The Condorcet winner when there is one; otherwise every alternative
/// that reaches all others along beats-or-ties paths.
inline ChoiceSet top_cycle(const PreferenceRelation& rel) {
  if (auto cw = condorcet_winner(rel)) return ChoiceSet{{*cw}, "top cycle"};
  const auto m = rel.size();
  std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
  for (Index x = 0; x < m; ++x) {
    reach[x][x] = true;
    for (Index y = 0; y < m; ++y) {
      if (x != y && rel.weakly_beats(x, y)) reach[x][y] = true;
    }
  }
  for (Index k = 0; k < m; ++k) {
    for (Index i = 0; i < m; ++i) {
      if (!reach[i][k]) continue;
      for (Index j = 0; j < m; ++j) {
        if (reach[k][j]) reach[i][j] = true;
      }
    }
  }
  Block members;
  for (Index x = 0; x < m; ++x) {
    if (std::all_of(reach[x].begin(), reach[x].end(), [](bool b) { return b; })) members.push_back(x);
  }
  return ChoiceSet{std::move(members), "top cycle"};
}

/// Union of the source components of the strict-beat digraph.
inline ChoiceSet schwartz_set(const PreferenceRelation& rel) {
  auto members = detail::source_components(rel.size(), [&](Index x, Index y) { return rel.beats(x, y); });
  return ChoiceSet{std::move(members), "Schwartz"};
}

inline void require_tournament(const PreferenceRelation& rel) {
  if (!rel.is_tournament()) throw TiesPresent("covering is only defined for tournaments");
}

/// x covers y: x beats y and beats everything y beats.
inline bool covers(const PreferenceRelation& rel, Index x, Index y) {
  require_tournament(rel);
  if (x >= rel.size() || y >= rel.size()) throw UnknownAlternative("alternative index out of range");
  if (x == y) throw InvalidArgument("covering needs two distinct alternatives");
  if (!rel.beats(x, y)) return false;
  for (Index z = 0; z < rel.size(); ++z) {
    if (z != x && z != y && rel.beats(y, z) && !rel.beats(x, z)) return false;
  }
  return true;
}

inline ChoiceSet uncovered_set(const PreferenceRelation& rel) {
  require_tournament(rel);
  Block members;
  for (Index y = 0; y < rel.size(); ++y) {
    bool covered = false;
    for (Index x = 0; x < rel.size() && !covered; ++x) covered = x != y && covers(rel, x, y);
    if (!covered) members.push_back(y);
  }
  return ChoiceSet{std::move(members), "uncovered"};
}

struct CopelandResult {
  Rational alpha;
  std::vector<Rational> scores;
  ChoiceSet winners;
};

/// One point per pairwise win, alpha per pairwise tie.
inline CopelandResult copeland(const PreferenceRelation& rel, const Rational& alpha) {
  if (alpha < Rational(0) || alpha > Rational(1)) {
    throw InvalidArgument("alpha must lie in [0,1], got " + to_display(alpha));
  }
  const auto m = rel.size();
  CopelandResult r{alpha, std::vector<Rational>(m, Rational(0)), ChoiceSet{{}, "Copeland"}};
  for (Index x = 0; x < m; ++x) {
    std::int64_t wins = 0, ties = 0;
    for (Index y = 0; y < m; ++y) {
      if (rel.beats(x, y)) ++wins;
      else if (rel.ties(x, y)) ++ties;
    }
    r.scores[x] = Rational(wins) + alpha * ties;
  }
  const auto best = *std::max_element(r.scores.begin(), r.scores.end());
  for (Index x = 0; x < m; ++x) {
    if (r.scores[x] == best) r.winners.members.push_back(x);
  }
  return r;
}

}  // namespace dsr

#endif  // DSR_SOLUTIONS_HPP
