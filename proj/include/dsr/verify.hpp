#ifndef DSR_VERIFY_HPP
#define DSR_VERIFY_HPP

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "dsr/core.hpp"
#include "dsr/io.hpp"
#include "dsr/majority.hpp"
#include "dsr/oracle.hpp"
#include "dsr/partitions.hpp"
#include "dsr/scoring.hpp"
#include "dsr/solutions.hpp"

namespace dsr {

enum class EnumerationMode { AllTournaments, AllWeakOrders, RandomProfiles, RandomRelations };

inline std::string to_string(EnumerationMode mode) {
  switch (mode) {
    case EnumerationMode::AllTournaments: return "tournaments";
    case EnumerationMode::AllWeakOrders: return "weak-orders";
    case EnumerationMode::RandomProfiles: return "random";
    case EnumerationMode::RandomRelations: return "relations";
  }
  return "?";
}

inline EnumerationMode parse_mode(std::string_view s) {
  if (s == "tournaments") return EnumerationMode::AllTournaments;
  if (s == "weak-orders") return EnumerationMode::AllWeakOrders;
  if (s == "random") return EnumerationMode::RandomProfiles;
  if (s == "relations") return EnumerationMode::RandomRelations;
  throw InvalidArgument("unknown mode '" + std::string(s) + "'");
}

struct EnumerationSpec {
  EnumerationMode mode = EnumerationMode::AllTournaments;
  std::size_t m_min = 3, m_max = 3;
  std::uint64_t seed = 1;
  std::size_t count = 1000;  // random modes only
  std::uint64_t n_min = 1, n_max = 9;
  double tie_prob = 0.3;  // RandomRelations only

  void validate() const {
    if (m_min < 2 || m_min > m_max) throw InvalidArgument("alternative range must satisfy 2 <= lo <= hi");
    switch (mode) {
      case EnumerationMode::AllTournaments:
        if (m_max > 6) throw TooLarge("tournament enumeration is limited to m <= 6");
        break;
      case EnumerationMode::AllWeakOrders:
        if (m_max > 5) throw TooLarge("weak-order enumeration is limited to m <= 5");
        break;
      default:
        // brute-force dominating sets and the reference score cap the size
        if (m_max > 8) throw TooLarge("random instances are limited to m <= 8");
        if (n_min < 1 || n_min > n_max) throw InvalidArgument("voter range must satisfy 1 <= lo <= hi");
    }
  }
};

struct CheckResult {
  std::string name;
  bool asserted = true;  // false: reported as data, never fails the run
  std::uint64_t passed = 0, failed = 0;
  std::optional<std::uint64_t> first_failure;  // instance number
  std::string counterexample;
};

struct Report {
  EnumerationSpec spec;
  Rational alpha;
  std::uint64_t instances = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.asserted || c.failed == 0; });
  }
  const CheckResult* find(std::string_view name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

namespace detail {

/// One instance to check: a relation and, for profile modes, the profile
/// that induced it.
struct Instance {
  std::uint64_t number = 0;
  PreferenceRelation rel;
  std::optional<Profile> profile;
  bool from_weak_order = false;
};

class Recorder {
 public:
  explicit Recorder(const Instance& inst) : inst_(inst) {}

  void check(std::vector<CheckResult>& out, std::string_view name, bool ok, bool asserted = true) {
    auto it = std::find_if(out.begin(), out.end(), [&](const CheckResult& c) { return c.name == name; });
    if (it == out.end()) {
      out.push_back({std::string(name), asserted, 0, 0, std::nullopt, {}});
      it = out.end() - 1;
    }
    if (ok) {
      ++it->passed;
      return;
    }
    ++it->failed;
    if (!it->first_failure || inst_.number < *it->first_failure) {
      it->first_failure = inst_.number;
      it->counterexample = inst_.profile ? render_ballots(*inst_.profile) : render_matrix(inst_.rel);
    }
  }

 private:
  const Instance& inst_;
};

inline bool subset(const Block& a, const Block& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline void check_instance(const Instance& inst, const ScoringConfig& config, std::vector<CheckResult>& out) {
  Recorder rec(inst);
  const auto& rel = inst.rel;
  const auto m = rel.size();
  const auto table = compute_scores(rel, config);
  const auto& psi = table.totals();
  const auto winners = winner_set(table).members;

  if (auto cw = condorcet_winner(rel)) {
    bool ok = true;
    for (Index y = 0; y < m; ++y) ok = ok && (y == *cw || psi[*cw] > psi[y]);
    rec.check(out, "condorcet winner is the unique maximum", ok);
  }
  if (auto cl = condorcet_loser(rel)) {
    bool ok = true;
    for (Index y = 0; y < m; ++y) ok = ok && (y == *cl || psi[*cl] < psi[y]);
    rec.check(out, "condorcet loser is the strict minimum", ok);
  }
  for (const auto& a : oracle::dominating_sets(rel)) {
    bool ok = true;
    for (Index x : a) {
      for (Index y = 0; y < m; ++y) {
        if (!std::binary_search(a.begin(), a.end(), y)) ok = ok && psi[x] > psi[y];
      }
    }
    rec.check(out, "dominating set members outscore the rest", ok);
  }

  // Reference implementations.
  rec.check(out, "scores match the reference formula", oracle::psi(rel, config.alpha) == psi);
  bool same_partitions = true;
  for (Index z = 0; z < m; ++z) {
    const auto ref = oracle::seek_partition_by_definition(rel, z);
    const auto& got = table.partition(z);
    if (!got) {
      same_partitions = same_partitions && ref.kind == 0;
      continue;
    }
    std::vector<oracle::Mask> blocks;
    for (const auto& b : got->blocks) blocks.push_back(oracle::to_mask(b));
    same_partitions = same_partitions && ref.kind == static_cast<int>(got->kind) + 1 && ref.blocks == blocks;
  }
  rec.check(out, "partitions match the clause definitions", same_partitions);
  if (m <= 6) {
    rec.check(out, "smith set matches subset search", smith_set(rel).members == oracle::smith(rel));
    rec.check(out, "schwartz set matches subset search", schwartz_set(rel).members == oracle::schwartz(rel));
    rec.check(out, "top cycle matches path search", top_cycle(rel).members == oracle::top_cycle(rel));
  }

  if (rel.is_tournament()) {
    bool covering_ok = true;
    for (Index x = 0; x < m; ++x) {
      for (Index y = 0; y < m; ++y) {
        if (x != y && covers(rel, x, y)) covering_ok = covering_ok && psi[x] > psi[y];
      }
    }
    rec.check(out, "covering implies a higher score", covering_ok);
    const auto uc = uncovered_set(rel).members;
    const auto smith = smith_set(rel).members;
    const auto cope = copeland(rel, config.alpha).winners.members;
    rec.check(out, "winners lie in the uncovered set", subset(winners, uc));
    rec.check(out, "uncovered set lies in the smith set", subset(uc, smith));
    rec.check(out, "copeland winners lie in the uncovered set", subset(cope, uc));
    rec.check(out, "winners lie in the smith set", subset(winners, smith));
    rec.check(out, "smith set, top cycle and schwartz set coincide",
              smith == top_cycle(rel).members && smith == schwartz_set(rel).members);
    const bool in_copeland = subset(winners, cope);
    if (m <= 5) {
      rec.check(out, "winners lie in the copeland winners (m <= 5)", in_copeland);
    } else {
      rec.check(out, "winners lie in the copeland winners (m > 5, data only)", in_copeland, false);
    }
  }

  if (inst.from_weak_order) {
    const bool all_tie = std::all_of(psi.begin(), psi.end(), [&](const Rational& r) { return r == psi[0]; }) &&
                         std::all_of(table.partitions().begin(), table.partitions().end(),
                                     [](const auto& p) { return !p.has_value(); });
    bool indifferent = true;
    for (Index x = 0; x < m; ++x) {
      for (Index y = 0; y < m; ++y) indifferent = indifferent && (x == y || rel.ties(x, y));
    }
    if (indifferent) {
      rec.check(out, "all-tie input scores zero",
                all_tie && std::all_of(psi.begin(), psi.end(), [](const Rational& r) { return r == Rational(0); }));
    } else {
      bool ordered = true;
      for (Index x = 0; x < m; ++x) {
        for (Index y = 0; y < m; ++y) {
          if (rel.beats(x, y)) ordered = ordered && psi[x] > psi[y];
          if (x != y && rel.ties(x, y)) ordered = ordered && psi[x] == psi[y];
        }
      }
      rec.check(out, "score order reproduces the input order", ordered);
      const bool divisible = std::all_of(table.partitions().begin(), table.partitions().end(),
                                         [](const auto& p) { return p.has_value(); });
      rec.check(out, "every alternative admits a partition", divisible);
    }
  }

  if (inst.profile) {
    const auto& ballots = inst.profile->ballots();
    for (Index x = 0; x < m; ++x) {
      for (Index y = 0; y < m; ++y) {
        if (x == y) continue;
        bool all_strict = true, all_weak = true, some_strict = false;
        for (const auto& b : ballots) {
          const auto rx = b.order.rank(x), ry = b.order.rank(y);
          all_strict = all_strict && rx < ry;
          all_weak = all_weak && rx <= ry;
          some_strict = some_strict || rx < ry;
        }
        if (all_strict) rec.check(out, "weak pareto", psi[x] > psi[y]);
        if (all_weak && some_strict) rec.check(out, "strong pareto", psi[x] > psi[y]);
      }
    }
  }
}

inline void merge(std::vector<CheckResult>& into, const std::vector<CheckResult>& from) {
  for (const auto& c : from) {
    auto it = std::find_if(into.begin(), into.end(), [&](const CheckResult& d) { return d.name == c.name; });
    if (it == into.end()) {
      into.push_back(c);
      continue;
    }
    it->passed += c.passed;
    it->failed += c.failed;
    if (c.first_failure && (!it->first_failure || *c.first_failure < *it->first_failure)) {
      it->first_failure = c.first_failure;
      it->counterexample = c.counterexample;
    }
  }
}

inline std::vector<Instance> generate(const EnumerationSpec& spec) {
  std::vector<Instance> out;
  std::uint64_t number = 0;
  switch (spec.mode) {
    case EnumerationMode::AllTournaments:
      for (auto m = spec.m_min; m <= spec.m_max; ++m) {
        oracle::for_each_tournament(m, [&](const PreferenceRelation& r) { out.push_back({number++, r, std::nullopt, false}); });
      }
      break;
    case EnumerationMode::AllWeakOrders:
      for (auto m = spec.m_min; m <= spec.m_max; ++m) {
        for (const auto& w : oracle::enumerate_weak_orders(m)) {
          out.push_back({number++, weak_order_to_relation(w), std::nullopt, true});
        }
      }
      break;
    case EnumerationMode::RandomProfiles: {
      oracle::ProfileSpec ps{spec.seed, spec.count, spec.m_min, spec.m_max, spec.n_min, spec.n_max};
      for (auto& p : oracle::random_profiles(ps)) {
        auto rel = majority_relation(p);
        out.push_back({number++, std::move(rel), std::move(p), false});
      }
      break;
    }
    case EnumerationMode::RandomRelations: {
      std::mt19937_64 rng(spec.seed);
      std::uniform_int_distribution<std::size_t> pick_m(spec.m_min, spec.m_max);
      for (std::size_t k = 0; k < spec.count; ++k) {
        out.push_back({number++, oracle::random_relation(rng, pick_m(rng), spec.tie_prob), std::nullopt, false});
      }
      break;
    }
  }
  return out;
}

}  // namespace detail

/// Worker count: hardware concurrency, capped by DSR_VERIFY_THREADS.
inline unsigned verify_threads() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("DSR_VERIFY_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
  }
  return n;
}

/// Runs every applicable theorem check on every generated instance.
inline Report check_theorem_suite(const EnumerationSpec& spec, const ScoringConfig& config = {},
                                  unsigned threads = verify_threads()) {
  spec.validate();
  config.validate();
  const auto instances = detail::generate(spec);
  Report report{spec, config.alpha, instances.size(), {}};

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, instances.size()))));
  std::vector<std::vector<CheckResult>> partial(threads);
  auto work = [&](unsigned t) {
    for (std::size_t k = t; k < instances.size(); k += threads) detail::check_instance(instances[k], config, partial[t]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (const auto& p : partial) detail::merge(report.checks, p);
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return report;
}

}  // namespace dsr

#endif  // DSR_VERIFY_HPP
