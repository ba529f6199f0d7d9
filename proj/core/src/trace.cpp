#include "raag/trace.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "raag/error.hpp"
#include "raag/limits.hpp"

namespace raag {
namespace {

// Index of each letter that can be commuted to the front: it differs from
// and commutes with everything before it.
template <class Fn>
void for_each_front(const std::vector<GeneratorId>& w, const Graph& g, Fn&& fn) {
  // Letters seen so far; a vertex is never its own neighbour, so a repeated
  // letter is always blocked.
  std::uint64_t blocked = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const GeneratorId v = w[i];
    if ((blocked & ~g.neighbours(v)) == 0) fn(i, v);
    blocked |= std::uint64_t{1} << v;
  }
}

std::vector<GeneratorId> lex_least(std::vector<GeneratorId> rest, const Graph& g) {
  std::vector<GeneratorId> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    std::size_t best_index = rest.size();
    GeneratorId best = 0;
    for_each_front(rest, g, [&](std::size_t i, GeneratorId v) {
      if (best_index == rest.size() || v < best) {
        best_index = i;
        best = v;
      }
    });
    out.push_back(best);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best_index));
  }
  return out;
}

}  // namespace

Trace Trace::canonical(std::span<const GeneratorId> letters, const Graph& g) {
  for (const auto v : letters) {
    if (v >= g.size()) throw ParseError("letter " + std::to_string(v) + " is not a generator");
  }
  return from_canonical(lex_least({letters.begin(), letters.end()}, g));
}

std::vector<unsigned> Trace::content(std::size_t vertex_count) const {
  std::vector<unsigned> out(vertex_count, 0);
  for (const auto v : letters_) ++out.at(v);
  return out;
}

std::string Trace::to_string(const Graph& g) const {
  const bool single = std::all_of(g.names().begin(), g.names().end(),
                                  [](const std::string& n) { return n.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!single && i > 0) out += ' ';
    out += g.name(letters_[i]);
  }
  return out;
}

Trace concat(const Trace& a, const Trace& b, const Graph& g) {
  if (b.empty()) return a;
  if (a.empty()) return b;
  std::vector<GeneratorId> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return Trace::from_canonical(lex_least(std::move(letters), g));
}

Trace parse_trace(std::string_view text, const Graph& g) {
  const bool single = std::all_of(g.names().begin(), g.names().end(),
                                  [](const std::string& n) { return n.size() == 1; });
  std::vector<GeneratorId> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    if (!single) {
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    }
    letters.push_back(g.id(text.substr(i, j - i)));
    i = j;
  }
  return Trace::canonical(letters, g);
}

std::vector<GeneratorId> front_letters(const Trace& t, const Graph& g) {
  std::vector<GeneratorId> out;
  for_each_front(t.letters(), g, [&](std::size_t, GeneratorId v) { out.push_back(v); });
  std::sort(out.begin(), out.end());
  return out;
}

Trace remove_front(const Trace& t, GeneratorId v, const Graph& g) {
  std::vector<GeneratorId> letters = t.letters();
  std::optional<std::size_t> index;
  for_each_front(letters, g, [&](std::size_t i, GeneratorId u) {
    if (u == v) index = i;
  });
  if (!index) throw InvalidArgument("remove_front: letter cannot be moved to the front");
  letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(*index));
  return Trace::from_canonical(lex_least(std::move(letters), g));
}

std::vector<Trace> enumerate_traces(const Graph& g, std::size_t n) {
  std::set<Trace> level{Trace{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::set<Trace> next;
    for (const auto& t : level) {
      for (std::size_t v = 0; v < g.size(); ++v) {
        std::vector<GeneratorId> letters = t.letters();
        letters.push_back(static_cast<GeneratorId>(v));
        next.insert(Trace::from_canonical(lex_least(std::move(letters), g)));
      }
      check_state_budget(next.size(), "enumerate_traces");
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

}  // namespace raag
