#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "raag/graph.hpp"

namespace raag {

struct Syllable {
  GeneratorId generator = 0;
  mpz_class exponent;

  friend bool operator==(const Syllable& a, const Syllable& b) {
    return a.generator == b.generator && a.exponent == b.exponent;
  }
  friend std::strong_ordering operator<=>(const Syllable& a, const Syllable& b) {
    if (a.generator != b.generator) return a.generator <=> b.generator;
    const int c = cmp(a.exponent, b.exponent);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
};

/// An element of the right-angled Artin group in canonical form: reduced
/// (no sequence of zero-drops, merges and commutations shortens it) and the
/// lexicographically least among its commutation class.
class GroupWord {
 public:
  GroupWord() = default;

  const std::vector<Syllable>& syllables() const { return syllables_; }
  std::size_t syllable_count() const { return syllables_.size(); }
  bool is_identity() const { return syllables_.empty(); }

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  friend std::strong_ordering operator<=>(const GroupWord& a, const GroupWord& b) {
    return std::lexicographical_compare_three_way(a.syllables_.begin(), a.syllables_.end(),
                                                  b.syllables_.begin(), b.syllables_.end());
  }

 private:
  friend GroupWord reduce_word(std::vector<Syllable> word, const Graph& g);
  std::vector<Syllable> syllables_;
};

GroupWord reduce_word(std::vector<Syllable> word, const Graph& g);
GroupWord multiply(const GroupWord& u, const GroupWord& v, const Graph& g);
GroupWord invert(const GroupWord& u, const Graph& g);
GroupWord power(const GroupWord& u, long exponent, const Graph& g);
/// x^-1 y^-1 x y.
GroupWord commutator(const GroupWord& x, const GroupWord& y, const Graph& g);
GroupWord generator_word(GeneratorId v, long exponent, const Graph& g);

/// Sum of |exponent| over the canonical syllables.
mpz_class word_length(const GroupWord& u);

/// Induced homomorphism of a graph morphism.
GroupWord apply_morphism(const GraphMorphism& m, const GroupWord& u);

/// Parses `a^2 b^-1 a`: whitespace-separated `gen` or `gen^exp`. An empty
/// string or "1" is the identity. Throws ParseError.
std::vector<Syllable> parse_syllables(std::string_view text, const Graph& g);
GroupWord parse_word(std::string_view text, const Graph& g);

/// Inverse of parse_word; the identity prints as "1".
std::string format_word(const GroupWord& u, const Graph& g);

struct GroupWordHash {
  std::size_t operator()(const GroupWord& u) const;
};

/// Every element of word length <= radius exactly once, sorted by
/// (word length, canonical form). Throws ResourceLimitError.
std::vector<GroupWord> ball(const Graph& g, std::size_t radius);

/// Breadth-first sphere sizes |S_0|, ..., |S_radius| over generators and inverses.
std::vector<std::size_t> sphere_sizes(const Graph& g, std::size_t radius);

}  // namespace raag
