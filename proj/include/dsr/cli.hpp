#ifndef DSR_CLI_HPP
#define DSR_CLI_HPP

#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dsr/core.hpp"
#include "dsr/io.hpp"
#include "dsr/majority.hpp"
#include "dsr/partitions.hpp"
#include "dsr/scoring.hpp"
#include "dsr/solutions.hpp"
#include "dsr/verify.hpp"

namespace dsr::cli {

using Json = nlohmann::ordered_json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Runs fn and maps failures to exit codes: 1 for input and usage errors,
/// 2 for anything else.
inline int guarded(const std::function<int()>& fn, std::ostream& err) {
  try {
    return fn();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

// ---- JSON ----------------------------------------------------------------

inline Json names_json(const AlternativeSet& alts, std::span<const Index> members) {
  Json a = Json::array();
  for (Index i : members) a.push_back(alts.name(i));
  return a;
}

inline Json relation_json(const PreferenceRelation& rel) {
  Json rows = Json::array();
  for (Index i = 0; i < rel.size(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < rel.size(); ++j) {
      const auto o = rel(i, j);
      row.push_back(o == Outcome::Beat ? 1 : o == Outcome::Lose ? -1 : 0);
    }
    rows.push_back(row);
  }
  return rows;
}

inline Json partition_json(const AlternativeSet& alts, const std::optional<SpecificPartition>& p) {
  if (!p) return nullptr;
  Json blocks = Json::array();
  for (const auto& b : p->blocks) blocks.push_back(names_json(alts, b));
  return Json{{"kind", to_string(p->kind)}, {"shape", p->is_tripartition() ? "tripartition" : "bipartition"},
              {"blocks", blocks}};
}

inline Json scores_json(const ScoreTable& t) {
  const auto& alts = t.alternatives();
  Json per_pivot = Json::object();
  for (Index z = 0; z < t.size(); ++z) {
    Json col = Json::object();
    for (Index x = 0; x < t.size(); ++x) col[alts.name(x)] = to_string(t.score(z, x));
    per_pivot[alts.name(z)] = Json{{"partition", partition_json(alts, t.partition(z))}, {"scores", col}};
  }
  Json totals = Json::object();
  for (Index x = 0; x < t.size(); ++x) totals[alts.name(x)] = to_string(t.total(x));
  Json ranking = Json::array();
  const auto order = social_ranking(t);
  for (const auto& tier : order.tiers()) ranking.push_back(names_json(alts, tier));
  return Json{{"pivots", per_pivot},
              {"totals", totals},
              {"ranking", ranking},
              {"winners", names_json(alts, winner_set(t).members)}};
}

// ---- text ----------------------------------------------------------------

inline std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }
inline std::string rpad(const std::string& s, std::size_t w) { return s.size() >= w ? s : std::string(w - s.size(), ' ') + s; }

/// Left column of row labels followed by one column per alternative.
inline void print_grid(std::ostream& out, const std::string& corner, const std::vector<std::string>& heads,
                       const std::vector<std::pair<std::string, std::vector<std::string>>>& rows) {
  std::size_t lw = corner.size();
  for (const auto& r : rows) lw = std::max(lw, r.first.size());
  std::vector<std::size_t> cw(heads.size());
  for (std::size_t c = 0; c < heads.size(); ++c) {
    cw[c] = heads[c].size();
    for (const auto& r : rows) cw[c] = std::max(cw[c], r.second[c].size());
  }
  out << pad(corner, lw);
  for (std::size_t c = 0; c < heads.size(); ++c) out << "  " << rpad(heads[c], cw[c]);
  out << "\n";
  for (const auto& r : rows) {
    out << pad(r.first, lw);
    for (std::size_t c = 0; c < heads.size(); ++c) out << "  " << rpad(r.second[c], cw[c]);
    out << "\n";
  }
}

inline std::string ranking_text(const AlternativeSet& alts, const WeakOrder& w) {
  std::string s;
  for (std::size_t t = 0; t < w.tiers().size(); ++t) {
    if (t) s += " > ";
    for (std::size_t k = 0; k < w.tiers()[t].size(); ++k) {
      if (k) s += " ~ ";
      s += alts.name(w.tiers()[t][k]);
    }
  }
  return s;
}

inline void print_relation(std::ostream& out, const PreferenceRelation& rel) {
  const auto& alts = rel.alternatives();
  std::vector<std::pair<std::string, std::vector<std::string>>> rows;
  for (Index i = 0; i < rel.size(); ++i) {
    std::vector<std::string> cells;
    for (Index j = 0; j < rel.size(); ++j) {
      const auto o = rel(i, j);
      cells.push_back(o == Outcome::Beat ? "1" : o == Outcome::Lose ? "-1" : o == Outcome::Tie ? "0" : ".");
    }
    rows.emplace_back(alts.name(i), cells);
  }
  print_grid(out, "", alts.names(), rows);
}

inline void print_scores(std::ostream& out, const ScoreTable& t) {
  const auto& alts = t.alternatives();
  out << "partitions:\n";
  for (Index z = 0; z < t.size(); ++z) {
    const auto& p = t.partition(z);
    out << "  " << alts.name(z) << ": ";
    if (p) out << to_string(p->kind) << " " << format_partition(alts, *p) << "\n";
    else out << "none\n";
  }
  out << "scores (row: pivot z, column: x, cell: score_z(x)):\n";
  std::vector<std::pair<std::string, std::vector<std::string>>> rows;
  for (Index z = 0; z < t.size(); ++z) {
    std::vector<std::string> cells;
    for (Index x = 0; x < t.size(); ++x) cells.push_back(to_display(t.score(z, x)));
    rows.emplace_back(alts.name(z), cells);
  }
  std::vector<std::string> totals;
  for (Index x = 0; x < t.size(); ++x) totals.push_back(to_display(t.total(x)));
  rows.emplace_back("psi", totals);
  print_grid(out, "", alts.names(), rows);
  out << "ranking: " << ranking_text(alts, social_ranking(t)) << "\n";
  out << "winners: " << format_set(alts, winner_set(t).members) << "\n";
}

// ---- subcommands ---------------------------------------------------------

struct Options {
  std::string file;
  std::string alpha = "1/2";
  std::string format = "text";
  std::string m = "3";
  std::string mode = "tournaments";
  std::uint64_t seed = 1;
  std::size_t count = 1000;
  std::uint64_t n_min = 1, n_max = 9;
};

inline ScoringConfig parse_alpha(const std::string& s) { return ScoringConfig::with_alpha(parse_rational(s)); }

inline PreferenceRelation load_relation(const std::string& text, std::optional<Profile>* profile = nullptr) {
  if (looks_like_ballots(text)) {
    auto p = as_profile(parse_ballots(text));
    auto rel = majority_relation(p);
    if (profile) *profile = std::move(p);
    return rel;
  }
  return parse_matrix(text);
}

inline int cmd_score(const Options& o, bool from_ballots, std::ostream& out) {
  const auto config = parse_alpha(o.alpha);
  const auto text = read_file(o.file);
  std::optional<Profile> profile;
  PreferenceRelation rel;
  if (from_ballots) {
    profile = as_profile(parse_ballots(text));
    rel = majority_relation(*profile);
  } else {
    rel = parse_matrix(text);
  }
  const auto table = compute_scores(rel, config);
  const auto& alts = rel.alternatives();
  if (o.format == "json") {
    Json j{{"alternatives", alts.names()}, {"alpha", to_string(config.alpha)}};
    if (profile) j["voters"] = profile->voter_count();
    j["relation"] = relation_json(rel);
    const auto scored = scores_json(table);
    for (const auto& [k, v] : scored.items()) j[k] = v;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << render_header(alts);
  if (profile) out << "voters: " << profile->voter_count() << "\n";
  out << "alpha: " << to_display(config.alpha) << "\n";
  out << (profile ? "majority relation" : "relation") << " (1: row beats column, 0: tie):\n";
  print_relation(out, rel);
  print_scores(out, table);
  return 0;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline int cmd_partitions(const Options& o, std::ostream& out) {
  const auto rel = load_relation(read_file(o.file));
  const auto& alts = rel.alternatives();
  std::vector<DivisibilityTrace> traces;
  for (Index z = 0; z < rel.size(); ++z) traces.push_back(trace_divisibility(rel, z));

  if (o.format == "json") {
    Json rows = Json::array();
    for (const auto& t : traces) {
      rows.push_back(Json{{"pivot", alts.name(t.nb.pivot)},
                          {"above_or_tied", names_json(alts, t.nb.above_or_tied())},
                          {"below", names_json(alts, t.nb.below)},
                          {"below_nonempty", t.below_nonempty},
                          {"upper_dominates_or_gamma_positive", t.upper_weakly_dominates || t.gamma_positive},
                          {"bipartition", t.bipartition},
                          {"above_nonempty", t.above_nonempty},
                          {"beta_positive", t.beta_positive},
                          {"tripartition", t.tripartition},
                          {"partition", partition_json(alts, t.partition)}});
    }
    out << Json{{"alternatives", alts.names()}, {"pivots", rows}}.dump(2) << "\n";
    return 0;
  }
  std::vector<std::string> heads;
  std::vector<std::pair<std::string, std::vector<std::string>>> rows(10);
  rows[0].first = "above or tied (upper)";
  rows[1].first = "pivot";
  rows[2].first = "below";
  rows[3].first = "below non-empty?";
  rows[4].first = "upper+pivot >= below or gamma > 0?";
  rows[5].first = "bipartition?";
  rows[6].first = "strictly above non-empty?";
  rows[7].first = "beta(upper, below) > 0?";
  rows[8].first = "tripartition?";
  rows[9].first = "partition";
  for (const auto& t : traces) {
    heads.push_back(alts.name(t.nb.pivot));
    rows[0].second.push_back(format_set(alts, t.nb.above_or_tied()));
    rows[1].second.push_back("{" + alts.name(t.nb.pivot) + "}");
    rows[2].second.push_back(format_set(alts, t.nb.below));
    rows[3].second.push_back(yes_no(t.below_nonempty));
    rows[4].second.push_back(yes_no(t.upper_weakly_dominates || t.gamma_positive));
    rows[5].second.push_back(yes_no(t.bipartition));
    rows[6].second.push_back(yes_no(t.above_nonempty));
    rows[7].second.push_back(yes_no(t.beta_positive));
    rows[8].second.push_back(yes_no(t.tripartition));
    rows[9].second.push_back(t.partition ? format_partition(alts, *t.partition) : "--");
  }
  print_grid(out, "", heads, rows);
  return 0;
}

inline int cmd_compare(const Options& o, std::ostream& out) {
  const auto config = parse_alpha(o.alpha);
  const auto rel = load_relation(read_file(o.file));
  const auto& alts = rel.alternatives();
  const auto table = compute_scores(rel, config);
  const auto dsr = winner_set(table);
  const auto cope = copeland(rel, config.alpha);
  const auto smith = smith_set(rel), top = top_cycle(rel), schwartz = schwartz_set(rel);
  const auto cw = condorcet_winner(rel), cl = condorcet_loser(rel);
  std::optional<ChoiceSet> uc;
  if (rel.is_tournament()) uc = uncovered_set(rel);

  auto opt_name = [&](const std::optional<Index>& i) -> std::string { return i ? alts.name(*i) : "none"; };

  if (o.format == "json") {
    Json cope_scores = Json::object();
    for (Index x = 0; x < rel.size(); ++x) cope_scores[alts.name(x)] = to_string(cope.scores[x]);
    Json contain{{"dsr_in_copeland", dsr.subset_of(cope.winners)},
                 {"dsr_in_smith", dsr.subset_of(smith)},
                 {"dsr_in_top_cycle", dsr.subset_of(top)},
                 {"dsr_in_schwartz", dsr.subset_of(schwartz)}};
    contain["dsr_in_uncovered"] = uc ? Json(dsr.subset_of(*uc)) : Json(nullptr);
    Json j{{"alternatives", alts.names()},
           {"alpha", to_string(config.alpha)},
           {"dsr", {{"totals", scores_json(table)["totals"]}, {"winners", names_json(alts, dsr.members)}}},
           {"copeland", {{"alpha", to_string(cope.alpha)}, {"scores", cope_scores},
                         {"winners", names_json(alts, cope.winners.members)}}},
           {"uncovered", uc ? names_json(alts, uc->members) : Json(nullptr)},
           {"smith", names_json(alts, smith.members)},
           {"top_cycle", names_json(alts, top.members)},
           {"schwartz", names_json(alts, schwartz.members)},
           {"condorcet_winner", cw ? Json(alts.name(*cw)) : Json(nullptr)},
           {"condorcet_loser", cl ? Json(alts.name(*cl)) : Json(nullptr)},
           {"containment", contain}};
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "DSR scores:";
  for (Index x = 0; x < rel.size(); ++x) out << " " << alts.name(x) << "=" << to_display(table.total(x));
  out << "\nDSR winners: " << format_set(alts, dsr.members) << "\n";
  out << "Copeland scores (alpha " << to_display(cope.alpha) << "):";
  for (Index x = 0; x < rel.size(); ++x) out << " " << alts.name(x) << "=" << to_display(cope.scores[x]);
  out << "\nCopeland winners: " << format_set(alts, cope.winners.members) << "\n";
  out << "uncovered set: " << (uc ? format_set(alts, uc->members) : "n/a (relation has ties)") << "\n";
  out << "Smith set: " << format_set(alts, smith.members) << "\n";
  out << "top cycle: " << format_set(alts, top.members) << "\n";
  out << "Schwartz set: " << format_set(alts, schwartz.members) << "\n";
  out << "Condorcet winner: " << opt_name(cw) << "\n";
  out << "Condorcet loser: " << opt_name(cl) << "\n";
  out << "DSR in Copeland: " << yes_no(dsr.subset_of(cope.winners)) << "\n";
  out << "DSR in uncovered: " << (uc ? yes_no(dsr.subset_of(*uc)) : "n/a") << "\n";
  out << "DSR in Smith: " << yes_no(dsr.subset_of(smith)) << "\n";
  out << "DSR in top cycle: " << yes_no(dsr.subset_of(top)) << "\n";
  out << "DSR in Schwartz: " << yes_no(dsr.subset_of(schwartz)) << "\n";
  return 0;
}

/// "K" or "LO-HI".
inline std::pair<std::size_t, std::size_t> parse_m_range(const std::string& s) {
  auto num = [&](std::string_view t) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
      throw InvalidArgument("--m expects K or LO-HI, got '" + s + "'");
    }
    return v;
  };
  const auto dash = s.find('-');
  if (dash == std::string::npos) {
    const auto k = num(s);
    return {k, k};
  }
  return {num(std::string_view(s).substr(0, dash)), num(std::string_view(s).substr(dash + 1))};
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  const auto config = parse_alpha(o.alpha);
  EnumerationSpec spec;
  spec.mode = parse_mode(o.mode);
  std::tie(spec.m_min, spec.m_max) = parse_m_range(o.m);
  spec.seed = o.seed;
  spec.count = o.count;
  spec.n_min = o.n_min;
  spec.n_max = o.n_max;
  const auto report = check_theorem_suite(spec, config);

  if (o.format == "json") {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      Json jc{{"name", c.name}, {"asserted", c.asserted}, {"passed", c.passed}, {"failed", c.failed}};
      jc["counterexample"] = c.first_failure ? Json{{"instance", *c.first_failure}, {"text", c.counterexample}}
                                             : Json(nullptr);
      checks.push_back(jc);
    }
    Json j{{"mode", to_string(spec.mode)}, {"m_min", spec.m_min}, {"m_max", spec.m_max},
           {"seed", spec.seed},            {"alpha", to_string(report.alpha)}, {"instances", report.instances},
           {"all_passed", report.all_passed()}, {"checks", checks}};
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "mode: " << to_string(spec.mode) << "  m: " << spec.m_min << "-" << spec.m_max << "  seed: " << spec.seed
      << "  alpha: " << to_display(report.alpha) << "\n";
  out << "instances: " << report.instances << "\n";
  for (const auto& c : report.checks) {
    const char* tag = !c.asserted ? "DATA" : c.failed == 0 ? "PASS" : "FAIL";
    out << "[" << tag << "] " << c.name << ": " << c.passed << " held, " << c.failed << " violated\n";
  }
  out << "result: " << (report.all_passed() ? "all asserted checks held" : "counterexamples found") << "\n";
  for (const auto& c : report.checks) {
    if (!c.first_failure) continue;
    out << "\nfirst counterexample for '" << c.name << "' (instance " << *c.first_failure << "):\n"
        << c.counterexample;
  }
  return 0;
}

/// Entry point shared by the dsr binary and the tests.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return guarded(
      [&]() -> int {
        CLI::App app{"Dominating-set-relaxed partition scoring"};
        app.require_subcommand(1);
        Options o;
        auto add_format = [&](CLI::App* sub) {
          sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        };
        auto add_alpha = [&](CLI::App* sub) { sub->add_option("--alpha", o.alpha, "tie point P/Q in [0,1]"); };

        auto* rank = app.add_subcommand("rank", "score a ballot file");
        rank->add_option("FILE", o.file, "ballot file")->required();
        add_alpha(rank);
        add_format(rank);

        auto* tour = app.add_subcommand("tournament", "score a matrix file");
        tour->add_option("FILE", o.file, "matrix file")->required();
        add_alpha(tour);
        add_format(tour);

        auto* parts = app.add_subcommand("partitions", "pivot partition table for a ballot or matrix file");
        parts->add_option("FILE", o.file)->required();
        add_format(parts);

        auto* cmp = app.add_subcommand("compare", "DSR winners next to classical solution concepts");
        cmp->add_option("FILE", o.file)->required();
        add_alpha(cmp);
        add_format(cmp);

        auto* ver = app.add_subcommand("verify", "run the property suite on generated instances");
        ver->add_option("--m", o.m, "alternative count K or range LO-HI");
        ver->add_option("--mode", o.mode, "tournaments, weak-orders, random or relations")
            ->check(CLI::IsMember({"tournaments", "weak-orders", "random", "relations"}));
        ver->add_option("--seed", o.seed);
        ver->add_option("--count", o.count, "instances for the random modes");
        ver->add_option("--n-min", o.n_min, "fewest voters per random profile");
        ver->add_option("--n-max", o.n_max, "most voters per random profile");
        add_alpha(ver);
        add_format(ver);

        try {
          app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
          const int code = app.exit(e, out, err);
          return code == 0 ? 0 : 1;
        }
        if (rank->parsed()) return cmd_score(o, true, out);
        if (tour->parsed()) return cmd_score(o, false, out);
        if (parts->parsed()) return cmd_partitions(o, out);
        if (cmp->parsed()) return cmd_compare(o, out);
        return cmd_verify(o, out);
      },
      err);
}

}  // namespace dsr::cli

#endif  // DSR_CLI_HPP
