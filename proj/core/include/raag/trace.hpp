#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

/// A monomial of the partially commutative polynomial ring: a positive word
/// up to swapping adjacent commuting letters, stored as its lexicographically
/// least representative.
class Trace {
 public:
  Trace() = default;

  /// Lexicographically least representative of the class of `letters`.
  /// Throws ParseError when a letter is not a vertex of `g`.
  static Trace canonical(std::span<const GeneratorId> letters, const Graph& g);

  /// Wraps letters already known to be canonical. Unchecked.
  static Trace from_canonical(std::vector<GeneratorId> letters) {
    Trace t;
    t.letters_ = std::move(letters);
    return t;
  }

  const std::vector<GeneratorId>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Number of occurrences of each generator.
  std::vector<unsigned> content(std::size_t vertex_count) const;

  /// Vertex names concatenated; separated by spaces when some name is longer
  /// than one character.
  std::string to_string(const Graph& g) const;

  /// Shortlex: length first, then lexicographic in vertex order.
  friend std::strong_ordering operator<=>(const Trace& a, const Trace& b) {
    if (a.letters_.size() != b.letters_.size()) return a.letters_.size() <=> b.letters_.size();
    return a.letters_ <=> b.letters_;
  }
  friend bool operator==(const Trace&, const Trace&) = default;

 private:
  std::vector<GeneratorId> letters_;
};

/// Canonical form of the concatenation a·b.
Trace concat(const Trace& a, const Trace& b, const Graph& g);

/// Parses the `to_string` format back (single-character names run together,
/// otherwise whitespace separated).
Trace parse_trace(std::string_view text, const Graph& g);

/// Letters that can be moved to the front of `t` by commutations, ascending.
std::vector<GeneratorId> front_letters(const Trace& t, const Graph& g);

/// `t` with the first occurrence of `v` removed; `v` must be a front letter.
Trace remove_front(const Trace& t, GeneratorId v, const Graph& g);

/// All distinct traces of length exactly n, sorted.
/// Throws ResourceLimitError past the state budget.
std::vector<Trace> enumerate_traces(const Graph& g, std::size_t n);

}  // namespace raag
