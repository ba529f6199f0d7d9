#include "raag/group_word.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <unordered_set>

#include "raag/error.hpp"
#include "raag/limits.hpp"

namespace raag {
namespace {

// One insertion pass: each syllable travels left past commuting syllables
// and merges with a syllable of the same generator when it meets one.
std::vector<Syllable> insert_all(const std::vector<Syllable>& word, const Graph& g) {
  std::vector<Syllable> out;
  for (const auto& s : word) {
    if (s.exponent == 0) continue;
    bool merged = false;
    for (std::size_t k = out.size(); k-- > 0;) {
      if (out[k].generator == s.generator) {
        out[k].exponent += s.exponent;
        if (out[k].exponent == 0) out.erase(out.begin() + static_cast<std::ptrdiff_t>(k));
        merged = true;
        break;
      }
      if (!g.adjacent(out[k].generator, s.generator)) break;
    }
    if (!merged) out.push_back(s);
  }
  return out;
}

// Least syllable word in the commutation class, picking the smallest
// syllable that can be moved to the front at each step.
std::vector<Syllable> lex_least(std::vector<Syllable> rest, const Graph& g) {
  std::vector<Syllable> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    std::size_t best = rest.size();
    std::uint64_t blocked = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      const GeneratorId v = rest[i].generator;
      if ((blocked & ~g.neighbours(v)) == 0 && (best == rest.size() || rest[i] < rest[best])) {
        best = i;
      }
      blocked |= std::uint64_t{1} << v;
    }
    out.push_back(std::move(rest[best]));
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

}  // namespace

GroupWord reduce_word(std::vector<Syllable> word, const Graph& g) {
  for (const auto& s : word) {
    if (s.generator >= g.size()) {
      throw ParseError("generator " + std::to_string(s.generator) + " is not a vertex");
    }
  }
  std::vector<Syllable> current = insert_all(word, g);
  // Re-run until stable.
  for (;;) {
    std::vector<Syllable> next = insert_all(current, g);
    if (next == current) break;
    current = std::move(next);
  }
  GroupWord out;
  out.syllables_ = lex_least(std::move(current), g);
  return out;
}

GroupWord multiply(const GroupWord& u, const GroupWord& v, const Graph& g) {
  std::vector<Syllable> word = u.syllables();
  word.insert(word.end(), v.syllables().begin(), v.syllables().end());
  return reduce_word(std::move(word), g);
}

GroupWord invert(const GroupWord& u, const Graph& g) {
  std::vector<Syllable> word(u.syllables().rbegin(), u.syllables().rend());
  for (auto& s : word) s.exponent = -s.exponent;
  return reduce_word(std::move(word), g);
}

GroupWord power(const GroupWord& u, long exponent, const Graph& g) {
  const GroupWord base = exponent < 0 ? invert(u, g) : u;
  std::vector<Syllable> word;
  const long n = exponent < 0 ? -exponent : exponent;
  for (long i = 0; i < n; ++i) {
    word.insert(word.end(), base.syllables().begin(), base.syllables().end());
  }
  return reduce_word(std::move(word), g);
}

GroupWord commutator(const GroupWord& x, const GroupWord& y, const Graph& g) {
  std::vector<Syllable> word = invert(x, g).syllables();
  const auto yi = invert(y, g).syllables();
  word.insert(word.end(), yi.begin(), yi.end());
  word.insert(word.end(), x.syllables().begin(), x.syllables().end());
  word.insert(word.end(), y.syllables().begin(), y.syllables().end());
  return reduce_word(std::move(word), g);
}

GroupWord generator_word(GeneratorId v, long exponent, const Graph& g) {
  return reduce_word({Syllable{v, exponent}}, g);
}

mpz_class word_length(const GroupWord& u) {
  mpz_class total = 0;
  for (const auto& s : u.syllables()) total += abs(s.exponent);
  return total;
}

GroupWord apply_morphism(const GraphMorphism& m, const GroupWord& u) {
  m.validate();
  std::vector<Syllable> word;
  for (const auto& s : u.syllables()) {
    if (s.generator >= m.vertex_map.size()) throw InvalidArgument("word not over source graph");
    word.push_back(Syllable{m.vertex_map[s.generator], s.exponent});
  }
  return reduce_word(std::move(word), *m.target);
}

std::vector<Syllable> parse_syllables(std::string_view text, const Graph& g) {
  std::vector<Syllable> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    const std::string_view token = text.substr(i, j - i);
    i = j;
    const auto caret = token.find('^');
    const std::string_view name = token.substr(0, caret);
    if (name.empty()) throw ParseError("missing generator in token '" + std::string(token) + "'");
    if (caret == std::string_view::npos && name == "1" && !g.find("1")) continue;
    Syllable s{g.id(name), 1};
    if (caret != std::string_view::npos) {
      std::string exp(token.substr(caret + 1));
      const std::string digits = (!exp.empty() && (exp[0] == '-' || exp[0] == '+')) ? exp.substr(1) : exp;
      if (digits.empty() ||
          !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw ParseError("bad exponent in token '" + std::string(token) + "'");
      }
      if (exp[0] == '+') exp = exp.substr(1);
      s.exponent = mpz_class(exp, 10);
    }
    out.push_back(std::move(s));
  }
  return out;
}

GroupWord parse_word(std::string_view text, const Graph& g) {
  return reduce_word(parse_syllables(text, g), g);
}

std::string format_word(const GroupWord& u, const Graph& g) {
  if (u.is_identity()) return "1";
  std::string out;
  for (const auto& s : u.syllables()) {
    if (!out.empty()) out += ' ';
    out += g.name(s.generator);
    if (s.exponent != 1) out += "^" + s.exponent.get_str();
  }
  return out;
}

std::size_t GroupWordHash::operator()(const GroupWord& u) const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::size_t x) { h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& s : u.syllables()) {
    mix(s.generator);
    const mpz_srcptr z = s.exponent.get_mpz_t();
    mix(static_cast<std::size_t>(mpz_sgn(z) + 1));
    for (std::size_t i = 0; i < mpz_size(z); ++i) mix(static_cast<std::size_t>(mpz_getlimbn(z, i)));
  }
  return h;
}

namespace {

// Breadth-first layers; layer k holds the elements at distance exactly k.
std::vector<std::vector<GroupWord>> bfs_layers(const Graph& g, std::size_t radius) {
  std::vector<GroupWord> steps;
  for (std::size_t v = 0; v < g.size(); ++v) {
    steps.push_back(generator_word(static_cast<GeneratorId>(v), 1, g));
    steps.push_back(generator_word(static_cast<GeneratorId>(v), -1, g));
  }
  std::unordered_set<GroupWord, GroupWordHash> seen{GroupWord{}};
  std::vector<std::vector<GroupWord>> layers{{GroupWord{}}};
  for (std::size_t k = 0; k < radius; ++k) {
    std::vector<GroupWord> next;
    for (const auto& u : layers.back()) {
      for (const auto& s : steps) {
        GroupWord w = multiply(u, s, g);
        if (seen.insert(w).second) {
          next.push_back(std::move(w));
          check_state_budget(seen.size(), "ball");
        }
      }
    }
    std::sort(next.begin(), next.end());
    layers.push_back(std::move(next));
  }
  return layers;
}

}  // namespace

std::vector<GroupWord> ball(const Graph& g, std::size_t radius) {
  std::vector<GroupWord> out;
  for (auto& layer : bfs_layers(g, radius)) {
    out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
  }
  return out;
}

std::vector<std::size_t> sphere_sizes(const Graph& g, std::size_t radius) {
  std::vector<std::size_t> out;
  for (const auto& layer : bfs_layers(g, radius)) out.push_back(layer.size());
  return out;
}

}  // namespace raag
