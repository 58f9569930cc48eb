#include "ajcactus/circular.hpp"

#include <algorithm>
#include <stdexcept>

namespace ajcactus {

CircularInterval::CircularInterval(int n, int i, int j) : n_(n), i_(i), j_(j) {
  if (n < 2 || n > 64) throw std::invalid_argument("circular interval: n out of supported range");
  if (i < 1 || i > n || j < 1 || j > n) throw std::invalid_argument("circular interval: strand out of range");
  if (i == j) throw std::invalid_argument("circular interval: i and j must differ");
}

std::vector<int> CircularInterval::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int t = 0; t < size(); ++t) out.push_back(mod_strand(i_ + t, n_));
  return out;
}

bool CircularInterval::contains(int p) const {
  return ((p - i_) % n_ + n_) % n_ < size();
}

bool is_circular(const std::vector<int>& seq, int n) {
  if (n < 1 || n > 64) throw std::invalid_argument("is_circular: n out of supported range");
  if (seq.empty()) throw std::invalid_argument("is_circular: empty sequence");
  std::uint64_t seen = 0;
  for (int v : seq) {
    if (v < 1 || v > n) throw std::invalid_argument("is_circular: entry out of range");
    const std::uint64_t bit = std::uint64_t{1} << (v - 1);
    if (seen & bit) throw std::invalid_argument("is_circular: repeated entry");
    seen |= bit;
  }
  for (std::size_t m = 1; m < seq.size(); ++m) {
    const int prev = ((seq[m - 1] - seq[0]) % n + n) % n;
    const int cur = ((seq[m] - seq[0]) % n + n) % n;
    if (cur <= prev) return false;
  }
  return true;
}

CircularSet::CircularSet(int n, std::vector<int> seq) : n_(n), seq_(std::move(seq)), mask_(0) {
  if (seq_.size() < 2) throw std::invalid_argument("circular set: needs at least two elements");
  if (!is_circular(seq_, n)) throw std::invalid_argument("circular set: sequence is not circular");
  for (int v : seq_) mask_ |= std::uint64_t{1} << (v - 1);
}

CircularSet CircularSet::of_interval(const CircularInterval& iv) {
  return CircularSet(iv.n(), iv.elements());
}

bool csubset(const CircularSet& I, const CircularSet& J) {
  if (I.n() != J.n()) throw std::invalid_argument("csubset: mismatched n");
  if ((I.mask() & J.mask()) != I.mask()) return false;
  std::size_t pos = 0;
  for (int v : I.seq()) {
    while (pos < J.seq().size() && J.seq()[pos] != v) ++pos;
    if (pos == J.seq().size()) return false;
    ++pos;
  }
  return true;
}

bool disjoint(const CircularSet& I, const CircularSet& J) {
  if (I.n() != J.n()) throw std::invalid_argument("disjoint: mismatched n");
  return (I.mask() & J.mask()) == 0;
}

bool commute_ad(const CircularSet& I, const CircularSet& J) {
  if (I.n() != J.n()) throw std::invalid_argument("commute_ad: mismatched n");
  const std::uint64_t meet = I.mask() & J.mask();
  if (meet == 0) return true;
  if (meet == I.mask() && csubset(I, J)) return true;
  if (meet == J.mask() && csubset(J, I)) return true;
  return false;
}

CircularSet act_adjacent(int m, const CircularSet& I) {
  const int n = I.n();
  if (m < 1 || m > n) throw std::invalid_argument("act_adjacent: index out of range");
  const int a = m;
  const int b = mod_strand(m + 1, n);
  const std::uint64_t pair = (std::uint64_t{1} << (a - 1)) | (std::uint64_t{1} << (b - 1));
  if ((I.mask() & pair) == pair) return I;
  std::vector<int> out = I.seq();
  for (int& v : out) {
    if (v == a)
      v = b;
    else if (v == b)
      v = a;
  }
  if (!is_circular(out, n)) throw std::logic_error("act_adjacent: image is not circular");
  return CircularSet(n, std::move(out));
}

CircularSet act_perm(const Permutation& s, const CircularSet& I) {
  if (s.n() != I.n()) throw std::invalid_argument("act_perm: mismatched n");
  const std::vector<int> decomp = adjacent_decomposition(s);
  CircularSet out = I;
  for (auto it = decomp.rbegin(); it != decomp.rend(); ++it) out = act_adjacent(*it, out);
  return out;
}

std::vector<CircularSet> enumerate_circular_sets(int n, int min_size) {
  if (n < 2) throw std::invalid_argument("enumerate_circular_sets: n must be >= 2");
  if (min_size < 2 || min_size > n) throw std::invalid_argument("enumerate_circular_sets: min_size out of range");
  if (n > 24) throw std::invalid_argument("enumerate_circular_sets: n too large to enumerate");
  std::vector<CircularSet> out;
  for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << n); ++sub) {
    std::vector<int> elems;
    for (int p = 1; p <= n; ++p)
      if (sub & (std::uint32_t{1} << (p - 1))) elems.push_back(p);
    if (static_cast<int>(elems.size()) < min_size) continue;
    // one circular set per rotation of the sorted element list
    for (std::size_t r = 0; r < elems.size(); ++r) {
      std::vector<int> seq;
      seq.reserve(elems.size());
      for (std::size_t t = 0; t < elems.size(); ++t) seq.push_back(elems[(r + t) % elems.size()]);
      out.emplace_back(n, std::move(seq));
    }
  }
  std::sort(out.begin(), out.end(), [](const CircularSet& a, const CircularSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.seq() < b.seq();
  });
  return out;
}

std::string to_string(const CircularSet& I) {
  std::string out = "(";
  for (std::size_t t = 0; t < I.seq().size(); ++t) {
    if (t) out += ',';
    out += std::to_string(I.seq()[t]);
  }
  out += ")@";
  out += std::to_string(I.n());
  return out;
}

}  // namespace ajcactus
