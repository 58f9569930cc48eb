#include "ajcactus/racg.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace ajcactus {

RacgAlphabet::RacgAlphabet(std::vector<std::string> names, std::function<bool(int, int)> commutes)
    : names_(std::move(names)), commutes_(std::move(commutes)) {
  if (!commutes_) throw std::invalid_argument("alphabet: missing commutation predicate");
}

AlphabetPtr make_alphabet(int size, const std::vector<std::pair<int, int>>& commuting_pairs) {
  if (size < 0) throw std::invalid_argument("alphabet: negative size");
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(size));
  for (int g = 0; g < size; ++g) {
    std::string name;
    int v = g;
    do {
      name.insert(name.begin(), static_cast<char>('a' + v % 26));
      v = v / 26 - 1;
    } while (v >= 0);
    names.push_back(std::move(name));
  }
  auto table = std::make_shared<std::vector<char>>(static_cast<std::size_t>(size) * size, 0);
  for (auto [g, h] : commuting_pairs) {
    if (g < 0 || h < 0 || g >= size || h >= size || g == h)
      throw std::invalid_argument("alphabet: bad commuting pair");
    (*table)[static_cast<std::size_t>(g) * size + h] = 1;
    (*table)[static_cast<std::size_t>(h) * size + g] = 1;
  }
  return std::make_shared<RacgAlphabet>(
      std::move(names), [table, size](int g, int h) { return (*table)[static_cast<std::size_t>(g) * size + h] != 0; });
}

bool operator==(const RacgWord& a, const RacgWord& b) {
  return a.alphabet == b.alphabet && a.letters == b.letters;
}

static void check_letters(const RacgWord& w) {
  if (!w.alphabet) throw std::invalid_argument("word: missing alphabet");
  for (int g : w.letters)
    if (g < 0 || g >= w.alphabet->size()) throw std::invalid_argument("word: letter outside alphabet");
}

std::optional<RacgWord> apply_move(const RacgWord& w, Move m) {
  const auto len = static_cast<int>(w.letters.size());
  if (m.pos < 0 || m.pos + 1 >= len) return std::nullopt;
  const int g = w.letters[static_cast<std::size_t>(m.pos)];
  const int h = w.letters[static_cast<std::size_t>(m.pos) + 1];
  RacgWord out = w;
  if (m.kind == Move::Kind::kSwap) {
    if (g == h || !w.alphabet->commutes(g, h)) return std::nullopt;
    std::swap(out.letters[static_cast<std::size_t>(m.pos)], out.letters[static_cast<std::size_t>(m.pos) + 1]);
  } else {
    if (g != h) return std::nullopt;
    out.letters.erase(out.letters.begin() + m.pos, out.letters.begin() + m.pos + 2);
  }
  return out;
}

// Finds the cancellable pair with the smallest right index; for that index
// only the nearest equal letter on the left can work (a closer equal letter
// would itself block the path).
static bool find_cancellable_pair(const RacgWord& w, int* p_out, int* q_out) {
  const auto& ls = w.letters;
  const int len = static_cast<int>(ls.size());
  for (int q = 1; q < len; ++q) {
    const int g = ls[static_cast<std::size_t>(q)];
    int p = -1;
    for (int r = q - 1; r >= 0; --r) {
      if (ls[static_cast<std::size_t>(r)] == g) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    bool clear = true;
    for (int r = p + 1; r < q && clear; ++r)
      clear = w.alphabet->commutes(ls[static_cast<std::size_t>(r)], g);
    if (clear) {
      *p_out = p;
      *q_out = q;
      return true;
    }
  }
  return false;
}

Reduction reduce_geodesic(const RacgWord& w) {
  check_letters(w);
  Reduction red{w, {}};
  int p = 0, q = 0;
  while (find_cancellable_pair(red.word, &p, &q)) {
    for (int r = p; r + 1 < q; ++r) {
      red.trace.push_back({Move::Kind::kSwap, r});
      std::swap(red.word.letters[static_cast<std::size_t>(r)], red.word.letters[static_cast<std::size_t>(r) + 1]);
    }
    red.trace.push_back({Move::Kind::kCancel, q - 1});
    red.word.letters.erase(red.word.letters.begin() + (q - 1), red.word.letters.begin() + (q + 1));
  }
  return red;
}

bool is_geodesic(const RacgWord& w) {
  check_letters(w);
  int p = 0, q = 0;
  return !find_cancellable_pair(w, &p, &q);
}

RacgWord normal_form(const RacgWord& w) {
  RacgWord geo = reduce_geodesic(w).word;
  // Greedy lexicographic pick: a letter may be output once every letter
  // before it commutes with it; among the available letters take the least.
  std::vector<int> rest = std::move(geo.letters);
  std::vector<int> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    int best = -1;
    for (std::size_t idx = 0; idx < rest.size(); ++idx) {
      const int g = rest[idx];
      bool avail = true;
      for (std::size_t r = 0; r < idx && avail; ++r)
        avail = rest[r] != g && geo.alphabet->commutes(rest[r], g);
      if (avail && (best < 0 || g < rest[static_cast<std::size_t>(best)])) best = static_cast<int>(idx);
    }
    out.push_back(rest[static_cast<std::size_t>(best)]);
    rest.erase(rest.begin() + best);
  }
  geo.letters = std::move(out);
  return geo;
}

bool equal(const RacgWord& w1, const RacgWord& w2) {
  if (w1.alphabet != w2.alphabet) throw std::invalid_argument("equal: mismatched alphabets");
  return normal_form(w1).letters == normal_form(w2).letters;
}

namespace {
struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};
}  // namespace

SearchResult brute_force_equal(const RacgWord& w1, const RacgWord& w2, int max_length,
                               std::size_t node_budget) {
  if (w1.alphabet != w2.alphabet) throw std::invalid_argument("brute_force_equal: mismatched alphabets");
  check_letters(w1);
  check_letters(w2);
  if (static_cast<int>(w1.size()) > max_length || static_cast<int>(w2.size()) > max_length)
    throw std::invalid_argument("brute_force_equal: word longer than max_length");
  const RacgAlphabet& ab = *w1.alphabet;
  if (w1.letters == w2.letters) return SearchResult::kYes;

  std::unordered_set<std::vector<int>, VecHash> seen;
  std::deque<std::vector<int>> frontier;
  seen.insert(w1.letters);
  frontier.push_back(w1.letters);
  bool budget_hit = false;

  auto visit = [&](std::vector<int>&& next) -> bool {
    if (next == w2.letters) return true;
    if (seen.size() >= node_budget) {
      budget_hit = true;
      return false;
    }
    if (seen.insert(next).second) frontier.push_back(std::move(next));
    return false;
  };

  while (!frontier.empty()) {
    const std::vector<int> cur = std::move(frontier.front());
    frontier.pop_front();
    const int len = static_cast<int>(cur.size());
    for (int p = 0; p + 1 < len; ++p) {
      const int g = cur[static_cast<std::size_t>(p)];
      const int h = cur[static_cast<std::size_t>(p) + 1];
      if (g == h) {
        std::vector<int> next = cur;
        next.erase(next.begin() + p, next.begin() + p + 2);
        if (visit(std::move(next))) return SearchResult::kYes;
      } else if (ab.commutes(g, h)) {
        std::vector<int> next = cur;
        std::swap(next[static_cast<std::size_t>(p)], next[static_cast<std::size_t>(p) + 1]);
        if (visit(std::move(next))) return SearchResult::kYes;
      }
    }
    if (len + 2 <= max_length) {
      for (int p = 0; p <= len; ++p) {
        for (int g = 0; g < ab.size(); ++g) {
          std::vector<int> next = cur;
          next.insert(next.begin() + p, 2, g);
          if (visit(std::move(next))) return SearchResult::kYes;
        }
      }
    }
    if (budget_hit) break;
  }
  return budget_hit ? SearchResult::kInconclusive : SearchResult::kNo;
}

}  // namespace ajcactus
