#ifndef DSR_IO_HPP
#define DSR_IO_HPP

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dsr/core.hpp"
#include "dsr/majority.hpp"

namespace dsr {

/// A ballot file holds either weak-order ballots or approval ballots.
using BallotFile = std::variant<Profile, ApprovalProfile>;

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto p = s.find(sep, start);
    out.push_back(trim(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start)));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

/// Line number (1-based) and content with any # comment removed.
struct Line {
  std::size_t number;
  std::string_view text;
};

inline std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.push_back({number, line});
    start = end + 1;
  }
  return out;
}

inline bool valid_label(std::string_view s) {
  if (s.empty()) return false;
  return s.find_first_of(" \t,>={}:#") == std::string_view::npos;
}

inline std::uint64_t parse_count(std::string_view s, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(line, "ballot count '" + std::string(s) + "' is not a non-negative integer");
  }
  if (v == 0) throw ParseError(line, "ballot count must be positive");
  return v;
}

inline bool header_line(std::string_view s) { return s.starts_with("alternatives:"); }

inline AlternativeSet parse_header(const Line& l) {
  const auto body = trim(l.text.substr(std::string_view("alternatives:").size()));
  std::vector<std::string> names;
  for (auto tok : split(body, ',')) {
    if (!valid_label(tok)) throw ParseError(l.number, "bad alternative label '" + std::string(tok) + "'");
    names.emplace_back(tok);
  }
  try {
    return AlternativeSet(std::move(names));
  } catch (const DimensionError& e) {
    throw ParseError(l.number, e.what());
  } catch (const InvalidRoster& e) {
    throw ParseError(l.number, e.what());
  }
}

template <class E>
[[noreturn]] inline void rethrow_at(std::size_t line, const E& e) {
  throw E("line " + std::to_string(line) + ": " + e.what());
}

inline Index label_at(const AlternativeSet& alts, std::string_view tok, std::size_t line) {
  if (tok.empty()) throw ParseError(line, "empty alternative name");
  if (auto i = alts.find(tok)) return *i;
  throw UnknownAlternative("line " + std::to_string(line) + ": unknown alternative '" + std::string(tok) + "'");
}

}  // namespace detail

/// Parses the line-oriented ballot format:
///
///   alternatives: a,b,c
///   3: a > b=c        weak-order ballot, '=' joins a tied group
///   2: approve {a,b}  approval ballot
///
/// Blank lines and '#' comments are ignored. One file holds one ballot style.
inline BallotFile parse_ballots(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("empty input: expected an 'alternatives:' header");
  if (!detail::header_line(lines.front().text)) {
    throw ParseError(lines.front().number, "expected 'alternatives: a,b,...' header");
  }
  const auto alts = detail::parse_header(lines.front());

  std::vector<Ballot> orders;
  std::vector<ApprovalBallot> approvals;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto [n, s] = lines[k];
    const auto colon = s.find(':');
    if (colon == std::string_view::npos) throw ParseError(n, "expected 'COUNT: ballot'");
    const auto count = detail::parse_count(detail::trim(s.substr(0, colon)), n);
    const auto body = detail::trim(s.substr(colon + 1));

    if (body.starts_with("approve")) {
      if (!orders.empty()) throw MixedBallotStyles("line " + std::to_string(n) + ": approval ballot after ranked ballots");
      const auto set = detail::trim(body.substr(7));
      if (set.size() < 2 || set.front() != '{' || set.back() != '}') {
        throw ParseError(n, "expected 'approve {x,y,...}'");
      }
      const auto inner = detail::trim(set.substr(1, set.size() - 2));
      Block approved;
      if (!inner.empty()) {
        for (auto tok : detail::split(inner, ',')) approved.push_back(detail::label_at(alts, tok, n));
      }
      std::sort(approved.begin(), approved.end());
      if (std::adjacent_find(approved.begin(), approved.end()) != approved.end()) {
        throw CoverageError("line " + std::to_string(n) + ": alternative approved twice");
      }
      approvals.push_back({std::move(approved), count});
    } else {
      if (!approvals.empty()) throw MixedBallotStyles("line " + std::to_string(n) + ": ranked ballot after approval ballots");
      if (body.empty()) throw ParseError(n, "empty ballot");
      std::vector<Block> tiers;
      for (auto group : detail::split(body, '>')) {
        Block tier;
        for (auto tok : detail::split(group, '=')) tier.push_back(detail::label_at(alts, tok, n));
        tiers.push_back(std::move(tier));
      }
      try {
        orders.push_back({WeakOrder(alts, std::move(tiers)), count});
      } catch (const CoverageError& e) {
        detail::rethrow_at(n, e);
      }
    }
  }
  if (orders.empty() && approvals.empty()) throw ParseError(lines.back().number, "no ballots");
  if (!approvals.empty()) return ApprovalProfile(alts, std::move(approvals));
  return Profile(alts, std::move(orders));
}

inline Profile as_profile(const BallotFile& f) {
  if (const auto* p = std::get_if<Profile>(&f)) return *p;
  return to_profile(std::get<ApprovalProfile>(f));
}

inline std::string render_header(const AlternativeSet& alts) {
  std::string out = "alternatives: ";
  for (std::size_t i = 0; i < alts.size(); ++i) {
    if (i) out += ",";
    out += alts.name(i);
  }
  return out + "\n";
}

inline std::string render_ballots(const Profile& p) {
  std::string out = render_header(p.alternatives());
  for (const auto& b : p.ballots()) {
    out += std::to_string(b.count) + ": ";
    const auto& tiers = b.order.tiers();
    for (std::size_t t = 0; t < tiers.size(); ++t) {
      if (t) out += " > ";
      for (std::size_t k = 0; k < tiers[t].size(); ++k) {
        if (k) out += "=";
        out += p.alternatives().name(tiers[t][k]);
      }
    }
    out += "\n";
  }
  return out;
}

inline std::string render_ballots(const ApprovalProfile& p) {
  std::string out = render_header(p.alternatives());
  for (const auto& b : p.ballots()) {
    out += std::to_string(b.count) + ": approve " + format_set(p.alternatives(), b.approved) + "\n";
  }
  return out;
}

/// Parses a tournament-matrix file: an optional 'alternatives:' header,
/// then m, then m rows of m entries in {1, -1, 0}.
inline PreferenceRelation parse_matrix(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("empty input: expected a matrix size");
  std::size_t k = 0;
  std::optional<AlternativeSet> alts;
  if (detail::header_line(lines[0].text)) {
    alts = detail::parse_header(lines[0]);
    ++k;
  }
  if (k >= lines.size()) throw ParseError(lines.back().number, "missing matrix size");

  auto parse_int = [](std::string_view tok, std::size_t line) {
    long long v = 0;
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw ParseError(line, "'" + std::string(tok) + "' is not an integer");
    }
    return v;
  };
  auto tokens = [](std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
      while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == ',')) ++i;
      const auto start = i;
      while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != ',') ++i;
      if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
  };

  const auto size_toks = tokens(lines[k].text);
  if (size_toks.size() != 1) throw ParseError(lines[k].number, "expected the matrix size on its own line");
  const auto m = parse_int(size_toks[0], lines[k].number);
  if (m < 2) throw DimensionError("line " + std::to_string(lines[k].number) + ": need m >= 2, got " + std::to_string(m));
  if (m > 100000) throw DimensionError("line " + std::to_string(lines[k].number) + ": matrix size too large");
  ++k;

  const auto rows_available = lines.size() - k;
  if (rows_available != static_cast<std::size_t>(m)) {
    throw DimensionError("expected " + std::to_string(m) + " matrix rows, found " + std::to_string(rows_available));
  }
  std::vector<std::vector<int>> table;
  for (; k < lines.size(); ++k) {
    std::vector<int> row;
    for (auto tok : tokens(lines[k].text)) {
      const auto v = parse_int(tok, lines[k].number);
      if (v < -1 || v > 1) {
        throw InvalidEntry("line " + std::to_string(lines[k].number) + ": entry " + std::string(tok) +
                           " is not one of 1, -1, 0");
      }
      row.push_back(static_cast<int>(v));
    }
    if (row.size() != static_cast<std::size_t>(m)) {
      throw DimensionError("line " + std::to_string(lines[k].number) + ": row has " + std::to_string(row.size()) +
                           " entries, expected " + std::to_string(m));
    }
    table.push_back(std::move(row));
  }
  return validate_relation(table, std::move(alts));
}

/// Matrix file text for rel. Labels are written as a header unless they
/// are the default letters.
inline std::string render_matrix(const PreferenceRelation& rel) {
  std::string out;
  const auto m = rel.size();
  if (!(rel.alternatives() == AlternativeSet::letters(m))) out += render_header(rel.alternatives());
  out += std::to_string(m) + "\n";
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      if (j) out += " ";
      const auto o = rel(i, j);
      out += o == Outcome::Beat ? "1" : o == Outcome::Lose ? "-1" : "0";
    }
    out += "\n";
  }
  return out;
}

/// True when the text looks like a ballot file rather than a matrix file:
/// the first content line after the header contains a ':'.
inline bool looks_like_ballots(std::string_view text) {
  const auto lines = detail::content_lines(text);
  std::size_t k = 0;
  if (!lines.empty() && detail::header_line(lines[0].text)) ++k;
  return k < lines.size() && lines[k].text.find(':') != std::string_view::npos;
}

}  // namespace dsr

#endif  // DSR_IO_HPP
