#ifndef DSR_RATIONAL_HPP
#define DSR_RATIONAL_HPP

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "dsr/error.hpp"

namespace dsr {

/// Exact rational used for every score, parameter and fraction.
/// boost::rational keeps the denominator positive and the fraction reduced.
using Rational = boost::rational<std::int64_t>;

inline bool is_positive(const Rational& r) { return r.numerator() > 0; }

/// Canonical "num/den" form, also used for integers ("3/1").
inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Human form: integers without a denominator.
inline std::string to_display(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return to_string(r);
}

namespace detail {

inline std::int64_t parse_int64(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InvalidArgument("not a rational literal: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace detail

/// Parses "P/Q" or "P".
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(detail::parse_int64(text, text));
  }
  const auto num = detail::parse_int64(text.substr(0, slash), text);
  const auto den = detail::parse_int64(text.substr(slash + 1), text);
  if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace dsr

#endif  // DSR_RATIONAL_HPP
