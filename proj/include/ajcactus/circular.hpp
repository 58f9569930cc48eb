#ifndef AJCACTUS_CIRCULAR_HPP_
#define AJCACTUS_CIRCULAR_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "ajcactus/perm.hpp"

namespace ajcactus {

// The circular interval [i,j]_c = (i, i+1, ..., j) with wraparound mod n.
// Requires i != j, so sizes run from 2 to n.
class CircularInterval {
 public:
  CircularInterval(int n, int i, int j);

  int n() const { return n_; }
  int i() const { return i_; }
  int j() const { return j_; }
  int size() const { return ((j_ - i_) % n_ + n_) % n_ + 1; }
  std::vector<int> elements() const;
  bool contains(int p) const;

  friend bool operator==(const CircularInterval&, const CircularInterval&) = default;

 private:
  int n_, i_, j_;
};

// True iff seq lists a subset of {1..n} in cyclic order starting from seq[0],
// i.e. the offsets (seq[m] - seq[0]) mod n are strictly increasing.
bool is_circular(const std::vector<int>& seq, int n);

// An ordered circular subset of {1..n} with at least two elements. Equality
// is exact sequence equality: two rotations of the same underlying subset
// are distinct values (they index distinct AD_n generators).
class CircularSet {
 public:
  CircularSet(int n, std::vector<int> seq);  // throws unless circular and |seq| >= 2
  static CircularSet of_interval(const CircularInterval& iv);

  int n() const { return n_; }
  const std::vector<int>& seq() const { return seq_; }
  int size() const { return static_cast<int>(seq_.size()); }
  std::uint64_t mask() const { return mask_; }  // element bitmask, bit p-1 for strand p

  friend bool operator==(const CircularSet&, const CircularSet&) = default;
  friend bool operator<(const CircularSet& a, const CircularSet& b) {
    return a.seq_ < b.seq_;
  }

 private:
  int n_;
  std::vector<int> seq_;
  std::uint64_t mask_;
};

// I c-subset of J: I.seq is a subsequence of J.seq.
bool csubset(const CircularSet& I, const CircularSet& J);
bool disjoint(const CircularSet& I, const CircularSet& J);

// Commutation relation of the AD_n presentation: disjoint or nested either way.
bool commute_ad(const CircularSet& I, const CircularSet& J);

// Action of the transposition (m, m+1 mod n): fixes I when both endpoints lie
// in I, otherwise applies the transposition elementwise keeping positional
// order. The image is provably circular; violation throws logic_error.
CircularSet act_adjacent(int m, const CircularSet& I);

// Action of an arbitrary permutation via adjacent_decomposition, innermost
// factor first. Well-definedness across decompositions is a tested property.
CircularSet act_perm(const Permutation& s, const CircularSet& I);

// All circular sets with size >= min_size, ordered by size then
// lexicographically on seq. For min_size = 2 the count is n*2^(n-1) - n.
std::vector<CircularSet> enumerate_circular_sets(int n, int min_size);

// Text form "(i1,i2,...,ik)@n".
std::string to_string(const CircularSet& I);

}  // namespace ajcactus

#endif  // AJCACTUS_CIRCULAR_HPP_
