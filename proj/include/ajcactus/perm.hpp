#ifndef AJCACTUS_PERM_HPP_
#define AJCACTUS_PERM_HPP_

#include <string>
#include <vector>

namespace ajcactus {

// Exact permutation of {1..n}. Values and arguments are 1-based throughout;
// `images()[p-1]` is the image of strand p.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);  // throws if not a bijection of {1..n}
  static Permutation identity(int n);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int p) const { return images_[static_cast<std::size_t>(p) - 1]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// Normalizes an arbitrary integer into the strand range {1..n}.
int mod_strand(long long x, int n);

// s_{k,l}: reverses the circular interval [k,l]_c and fixes everything else.
// s(p) = ((k+l-p-1) mod n) + 1 for p in [k,l]_c. An involution.
Permutation interval_reversal(int n, int k, int l);

// Right-to-left function composition: compose(s,t)(p) = s(t(p)).
Permutation compose(const Permutation& s, const Permutation& t);

// Indices m_1..m_r with 1 <= m_t <= n-1 such that
// s = rho_{m_1} o ... o rho_{m_r}, rho_m the transposition (m, m+1) and the
// rightmost factor applied first. Bubble-sort construction.
std::vector<int> adjacent_decomposition(const Permutation& s);

// One-line image list, e.g. "[3,2,1,4]".
std::string to_string(const Permutation& s);

}  // namespace ajcactus

#endif  // AJCACTUS_PERM_HPP_
