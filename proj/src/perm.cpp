#include "ajcactus/perm.hpp"

#include <algorithm>
#include <stdexcept>

namespace ajcactus {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  if (n < 1) throw std::invalid_argument("permutation: empty image list");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : images_) {
    if (v < 1 || v > n) throw std::invalid_argument("permutation: image out of range");
    if (seen[static_cast<std::size_t>(v) - 1]) throw std::invalid_argument("permutation: repeated image");
    seen[static_cast<std::size_t>(v) - 1] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("permutation: n must be >= 1");
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p) im[static_cast<std::size_t>(p) - 1] = p;
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int p = 1; p <= n(); ++p)
    if ((*this)(p) != p) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int p = 1; p <= n(); ++p) im[static_cast<std::size_t>((*this)(p)) - 1] = p;
  return Permutation(std::move(im));
}

int mod_strand(long long x, int n) {
  long long r = (x - 1) % n;
  if (r < 0) r += n;
  return static_cast<int>(r) + 1;
}

Permutation interval_reversal(int n, int k, int l) {
  if (n < 2) throw std::invalid_argument("interval_reversal: n must be >= 2");
  if (k < 1 || k > n || l < 1 || l > n) throw std::invalid_argument("interval_reversal: strand out of range");
  if (k == l) throw std::invalid_argument("interval_reversal: k and l must differ");
  const int len = ((l - k) % n + n) % n + 1;  // size of [k,l]_c
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p) im[static_cast<std::size_t>(p) - 1] = p;
  for (int t = 0; t < len; ++t) {
    const int p = mod_strand(k + t, n);
    im[static_cast<std::size_t>(p) - 1] = mod_strand(static_cast<long long>(k) + l - p, n);
  }
  return Permutation(std::move(im));
}

Permutation compose(const Permutation& s, const Permutation& t) {
  if (s.n() != t.n()) throw std::invalid_argument("compose: mismatched n");
  std::vector<int> im(static_cast<std::size_t>(s.n()));
  for (int p = 1; p <= s.n(); ++p) im[static_cast<std::size_t>(p) - 1] = s(t(p));
  return Permutation(std::move(im));
}

std::vector<int> adjacent_decomposition(const Permutation& s) {
  // Bubble-sort the image table; swapping positions p,p+1 multiplies by
  // rho_p on the right, so the swap sequence reversed recomposes to s.
  std::vector<int> im = s.images();
  const int n = s.n();
  std::vector<int> swaps;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int p = 0; p + 1 < n; ++p) {
      if (im[static_cast<std::size_t>(p)] > im[static_cast<std::size_t>(p) + 1]) {
        std::swap(im[static_cast<std::size_t>(p)], im[static_cast<std::size_t>(p) + 1]);
        swaps.push_back(p + 1);
        moved = true;
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

std::string to_string(const Permutation& s) {
  std::string out = "[";
  for (int p = 1; p <= s.n(); ++p) {
    if (p > 1) out += ',';
    out += std::to_string(s(p));
  }
  out += ']';
  return out;
}

}  // namespace ajcactus
