#ifndef AJCACTUS_RACG_HPP_
#define AJCACTUS_RACG_HPP_

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ajcactus {

// Generator alphabet of a right-angled Coxeter group. Generators are opaque
// labels addressed by index; the index order is the fixed total order used
// for lexicographic normal forms. `commutes` is only queried on distinct
// generators (every generator is an involution by definition).
class RacgAlphabet {
 public:
  RacgAlphabet(std::vector<std::string> names, std::function<bool(int, int)> commutes);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int g) const { return names_[static_cast<std::size_t>(g)]; }
  bool commutes(int g, int h) const { return commutes_(g, h); }

 private:
  std::vector<std::string> names_;
  std::function<bool(int, int)> commutes_;
};

using AlphabetPtr = std::shared_ptr<const RacgAlphabet>;

// Convenience constructor for small test alphabets: commuting pairs listed
// explicitly, names "a", "b", ... by index.
AlphabetPtr make_alphabet(int size, const std::vector<std::pair<int, int>>& commuting_pairs);

// Word over a RACG alphabet; letters are generator indices.
struct RacgWord {
  AlphabetPtr alphabet;
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
};

bool operator==(const RacgWord& a, const RacgWord& b);

// Elementary moves of the trace rewriting: Swap transposes the commuting
// letters at pos,pos+1; Cancel deletes the equal letters at pos,pos+1.
// Positions are 0-based into the word state at the time of the move.
struct Move {
  enum class Kind { kSwap, kCancel };
  Kind kind;
  int pos;
};
using MoveTrace = std::vector<Move>;

// Applies one move if legal, otherwise nullopt.
std::optional<RacgWord> apply_move(const RacgWord& w, Move m);

struct Reduction {
  RacgWord word;
  MoveTrace trace;
};

// Rewrites w to a geodesic: repeatedly finds the leftmost cancellable pair
// (equal letters whose intervening letters all commute with them), swaps
// them together and cancels. The trace replays legally from w to the result.
Reduction reduce_geodesic(const RacgWord& w);

bool is_geodesic(const RacgWord& w);

// Lexicographically least geodesic representative under the alphabet order;
// unique per group element, idempotent.
RacgWord normal_form(const RacgWord& w);

bool equal(const RacgWord& w1, const RacgWord& w2);

enum class SearchResult { kNo, kYes, kInconclusive };

// Independent bounded oracle: breadth-first search over Swap, Cancel and
// Insert (insert an equal adjacent pair) moves, words capped at max_length.
// kNo is definitive (state space exhausted); kInconclusive means the node
// budget ran out first.
SearchResult brute_force_equal(const RacgWord& w1, const RacgWord& w2, int max_length,
                               std::size_t node_budget = 200000);

}  // namespace ajcactus

#endif  // AJCACTUS_RACG_HPP_
