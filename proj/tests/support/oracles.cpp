#include "oracles.hpp"

#include <algorithm>
#include <deque>

namespace raag::oracle {

std::vector<std::size_t> clique_counts(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> counts(n + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool clique = true;
    for (std::size_t v = 0; v < n && clique; ++v) {
      for (std::size_t w = v + 1; w < n && clique; ++w) {
        if (((mask >> v) & 1U) && ((mask >> w) & 1U)) {
          clique = g.adjacent(static_cast<GeneratorId>(v), static_cast<GeneratorId>(w));
        }
      }
    }
    if (clique) ++counts[static_cast<std::size_t>(__builtin_popcountll(mask))];
  }
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

std::set<Word> commutation_orbit(const Word& w, const Graph& g) {
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
      if (!g.adjacent(x[i], x[i + 1])) continue;
      std::swap(x[i], x[i + 1]);
      if (seen.insert(x).second) queue.push_back(x);
      std::swap(x[i], x[i + 1]);
    }
  }
  return seen;
}

Word orbit_min(const Word& w, const Graph& g) { return *commutation_orbit(w, g).begin(); }

std::set<Word> traces(const Graph& g, std::size_t n) {
  std::set<Word> out;
  Word w(n, 0);
  while (true) {
    out.insert(orbit_min(w, g));
    std::size_t i = n;
    while (i > 0 && w[i - 1] + 1U == g.size()) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
  }
  return out;
}

namespace {

void push_letter(Piles& p, GeneratorId x, int sign, const Graph& g) {
  const int piece = sign * (static_cast<int>(x) + 1);
  const bool cancels = !p[x].empty() && p[x].back() == -piece;
  for (GeneratorId y = 0; y < g.size(); ++y) {
    if (y == x || g.adjacent(x, y)) continue;
    if (cancels) {
      p[y].pop_back();
    } else {
      p[y].push_back(0);
    }
  }
  if (cancels) {
    p[x].pop_back();
  } else {
    p[x].push_back(piece);
  }
}

}  // namespace

Piles piles(const std::vector<std::pair<GeneratorId, long>>& letters, const Graph& g) {
  Piles p(g.size());
  for (const auto& [x, e] : letters) {
    for (long k = 0; k < std::abs(e); ++k) push_letter(p, x, e > 0 ? 1 : -1, g);
  }
  return p;
}

Piles piles(const GroupWord& w, const Graph& g) {
  std::vector<std::pair<GeneratorId, long>> letters;
  for (const auto& s : w.syllables()) letters.emplace_back(s.generator, s.exponent.get_si());
  return piles(letters, g);
}

std::vector<std::size_t> spheres(const Graph& g, std::size_t radius) {
  std::set<Piles> seen;
  std::vector<Piles> layer{Piles(g.size())};
  seen.insert(layer.front());
  std::vector<std::size_t> out{1};
  for (std::size_t r = 1; r <= radius; ++r) {
    std::vector<Piles> next;
    for (const auto& state : layer) {
      for (GeneratorId v = 0; v < g.size(); ++v) {
        for (const int sign : {1, -1}) {
          Piles p = state;
          push_letter(p, v, sign, g);
          if (seen.insert(p).second) next.push_back(std::move(p));
        }
      }
    }
    out.push_back(next.size());
    layer = std::move(next);
  }
  return out;
}

namespace {

mpz_class binomial(long e, unsigned k) {
  mpq_class c = 1;
  for (unsigned i = 0; i < k; ++i) c = c * (e - static_cast<long>(i)) / (i + 1);
  return c.get_num();
}

void expand(const std::vector<std::pair<GeneratorId, long>>& syllables, std::size_t i, Word& word,
            const mpz_class& coeff, const Graph& g, unsigned order, std::map<Word, mpz_class>& out) {
  if (i == syllables.size()) {
    out[orbit_min(word, g)] += coeff;
    return;
  }
  const auto [v, e] = syllables[i];
  for (unsigned k = 0; word.size() + k < order; ++k) {
    const mpz_class c = binomial(e, k);
    if (c == 0) break;
    word.insert(word.end(), k, v);
    expand(syllables, i + 1, word, coeff * c, g, order, out);
    word.resize(word.size() - k);
  }
}

}  // namespace

std::map<Word, mpz_class> magnus_expansion(const std::vector<std::pair<GeneratorId, long>>& syllables,
                                           const Graph& g, unsigned order) {
  std::map<Word, mpz_class> out;
  Word word;
  expand(syllables, 0, word, 1, g, order, out);
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

long witt(long k, long n) {
  auto mobius = [](long d) {
    int sign = 1;
    for (long q = 2; q * q <= d; ++q) {
      if (d % q != 0) continue;
      d /= q;
      if (d % q == 0) return 0;
      sign = -sign;
    }
    return d > 1 ? -sign : sign;
  };
  mpz_class total = 0;
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(n / d));
    total += mobius(d) * pw;
  }
  return mpz_class(total / n).get_si();
}

std::vector<mpz_class> divide(const std::vector<mpz_class>& num, const std::vector<mpz_class>& den,
                              std::size_t order) {
  std::vector<mpz_class> out(order);
  for (std::size_t n = 0; n < order; ++n) {
    mpz_class acc = n < num.size() ? num[n] : mpz_class(0);
    for (std::size_t k = 1; k <= n && k < den.size(); ++k) acc -= den[k] * out[n - k];
    out[n] = acc / den[0];
  }
  return out;
}

std::vector<mpz_class> poly_pow(const std::vector<mpz_class>& p, unsigned k) {
  std::vector<mpz_class> out{1};
  for (unsigned i = 0; i < k; ++i) {
    std::vector<mpz_class> next(out.size() + p.size() - 1);
    for (std::size_t a = 0; a < out.size(); ++a) {
      for (std::size_t b = 0; b < p.size(); ++b) next[a + b] += out[a] * p[b];
    }
    out = std::move(next);
  }
  return out;
}

std::size_t dense_rank(std::vector<std::vector<mpq_class>> rows, std::uint32_t p) {
  auto reduce = [p](mpq_class x) {
    if (p == 0) return x;
    mpz_class num = x.get_num() % p;
    mpz_class den = x.get_den() % p;
    if (num < 0) num += p;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t());
    return mpq_class((num * inv) % p);
  };
  for (auto& r : rows) {
    for (auto& x : r) x = reduce(x);
  }
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const mpq_class f = rows[r][c] / rows[rank][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = reduce(rows[r][k] - f * rows[rank][k]);
    }
    ++rank;
  }
  return rank;
}

}  // namespace raag::oracle

namespace raag::oracle {
namespace {

std::set<SyllableList> closure(const SyllableList& w, const Graph& g, bool shortening) {
  std::set<SyllableList> seen{w};
  std::deque<SyllableList> queue{w};
  auto visit = [&](SyllableList x) {
    if (seen.insert(x).second) queue.push_back(std::move(x));
  };
  while (!queue.empty()) {
    const SyllableList x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (shortening && x[i].second == 0) {
        SyllableList y = x;
        y.erase(y.begin() + static_cast<std::ptrdiff_t>(i));
        visit(std::move(y));
      }
      if (i + 1 == x.size()) continue;
      if (shortening && x[i].first == x[i + 1].first) {
        SyllableList y = x;
        y[i].second += y[i + 1].second;
        y.erase(y.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        visit(std::move(y));
      }
      if (g.adjacent(x[i].first, x[i + 1].first)) {
        SyllableList y = x;
        std::swap(y[i], y[i + 1]);
        visit(std::move(y));
      }
    }
  }
  return seen;
}

}  // namespace

std::set<SyllableList> move_closure(const SyllableList& w, const Graph& g) { return closure(w, g, true); }

std::set<SyllableList> swap_orbit(const SyllableList& w, const Graph& g) { return closure(w, g, false); }

SyllableList syllables_of(const GroupWord& w) {
  SyllableList out;
  for (const auto& s : w.syllables()) out.emplace_back(s.generator, s.exponent.get_si());
  return out;
}

}  // namespace raag::oracle
