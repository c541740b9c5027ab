#ifndef DSR_ERROR_HPP
#define DSR_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace dsr {

/// Base class for every user-facing failure: bad input, bad arguments,
/// violated preconditions. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-square table, or fewer than two alternatives.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// cell[i][j] is incompatible with cell[j][i].
class InconsistentPair : public Error {
 public:
  using Error::Error;
};

/// A table entry outside {1, -1, 0}, or a non-zero diagonal.
class InvalidEntry : public Error {
 public:
  using Error::Error;
};

/// Duplicate or empty alternative labels.
class InvalidRoster : public Error {
 public:
  using Error::Error;
};

class UnknownAlternative : public Error {
 public:
  using Error::Error;
};

class EmptySubset : public Error {
 public:
  using Error::Error;
};

class SingletonSubset : public Error {
 public:
  using Error::Error;
};

/// beta/gamma/block dominance called with an empty or overlapping block.
class EmptyBlock : public Error {
 public:
  using Error::Error;
};

/// Brute-force routine asked to run beyond its size guard.
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// Tournament-only concept applied to a relation with ties.
class TiesPresent : public Error {
 public:
  using Error::Error;
};

/// Ballot omits or repeats an alternative.
class CoverageError : public Error {
 public:
  using Error::Error;
};

class MixedBallotStyles : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what) {}

  std::optional<std::size_t> line() const { return line_; }

 private:
  std::optional<std::size_t> line_;
};

/// Broken internal invariant. The CLI maps this to exit code 2.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dsr

#endif  // DSR_ERROR_HPP
