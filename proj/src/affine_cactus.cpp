#include "ajcactus/affine_cactus.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace ajcactus {

CactusWord::CactusWord(int n, std::vector<CactusLetter> letters) : n_(n), letters_(std::move(letters)) {
  if (n < 2) throw std::invalid_argument("cactus word: n must be >= 2");
  for (const CactusLetter& l : letters_) {
    if (l.i < 1 || l.i > n || l.j < 1 || l.j > n) throw std::invalid_argument("cactus word: strand out of range");
    if (l.i == l.j) throw std::invalid_argument("cactus word: letter with i = j");
  }
}

CactusWord CactusWord::reversed() const {
  std::vector<CactusLetter> out(letters_.rbegin(), letters_.rend());
  return CactusWord(n_, std::move(out));
}

CactusWord CactusWord::operator*(const CactusWord& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("cactus word: mismatched n");
  std::vector<CactusLetter> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return CactusWord(n_, std::move(out));
}

CactusWord CactusWord::power(long long m) const {
  const CactusWord base = m < 0 ? reversed() : *this;
  if (m < 0) m = -m;
  std::vector<CactusLetter> out;
  out.reserve(letters_.size() * static_cast<std::size_t>(m));
  for (long long t = 0; t < m; ++t) out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return CactusWord(n_, std::move(out));
}

CircularInterval letter_support(int n, CactusLetter l) { return CircularInterval(n, l.i, l.j); }

int support_size(int n, CactusLetter l) { return letter_support(n, l).size(); }

ClassicCactusWord::ClassicCactusWord(int n, std::vector<CactusLetter> letters)
    : n_(n), letters_(std::move(letters)) {
  if (n < 2) throw std::invalid_argument("classic cactus word: n must be >= 2");
  for (const CactusLetter& l : letters_) {
    if (l.i < 1 || l.j > n || l.i >= l.j)
      throw std::invalid_argument("classic cactus word: letters need 1 <= i < j <= n");
  }
}

ClassicCactusWord ClassicCactusWord::reversed() const {
  std::vector<CactusLetter> out(letters_.rbegin(), letters_.rend());
  return ClassicCactusWord(n_, std::move(out));
}

ClassicCactusWord ClassicCactusWord::operator*(const ClassicCactusWord& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("classic cactus word: mismatched n");
  std::vector<CactusLetter> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return ClassicCactusWord(n_, std::move(out));
}

// ---------------------------------------------------------------------------
// Affine permutations of the cover

AffinePerm AffinePerm::identity(int n) {
  if (n < 1) throw std::invalid_argument("affine perm: n must be >= 1");
  std::vector<long long> im(static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p) im[static_cast<std::size_t>(p) - 1] = p;
  return AffinePerm(n, std::move(im));
}

AffinePerm AffinePerm::window_reflection(int n, int start, int length) {
  if (start < 1 || start > n) throw std::invalid_argument("window reflection: start out of range");
  if (length < 1 || length > n) throw std::invalid_argument("window reflection: bad length");
  std::vector<long long> im(static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p) {
    const int off = ((p - start) % n + n) % n;
    im[static_cast<std::size_t>(p) - 1] = off < length ? p + length - 1 - 2 * off : p;
  }
  return AffinePerm(n, std::move(im));
}

long long AffinePerm::operator()(long long x) const {
  long long r = (x - 1) % n_;
  if (r < 0) r += n_;
  const long long q = (x - 1 - r) / n_;
  return images_[static_cast<std::size_t>(r)] + q * n_;
}

AffinePerm AffinePerm::inverse() const {
  std::vector<long long> inv(static_cast<std::size_t>(n_));
  for (int p = 1; p <= n_; ++p) {
    const long long y = images_[static_cast<std::size_t>(p) - 1];
    long long r = (y - 1) % n_;
    if (r < 0) r += n_;
    inv[static_cast<std::size_t>(r)] = p - (y - 1 - r);  // F^{-1}(r+1) = p - n*q
  }
  return AffinePerm(n_, std::move(inv));
}

Permutation AffinePerm::base() const {
  std::vector<int> im(static_cast<std::size_t>(n_));
  for (int p = 1; p <= n_; ++p) im[static_cast<std::size_t>(p) - 1] = mod_strand(images_[static_cast<std::size_t>(p) - 1], n_);
  return Permutation(std::move(im));
}

AffinePerm compose(const AffinePerm& f, const AffinePerm& g) {
  if (f.n_ != g.n_) throw std::invalid_argument("affine perm: mismatched n");
  std::vector<long long> im(static_cast<std::size_t>(f.n_));
  for (int p = 1; p <= f.n_; ++p) im[static_cast<std::size_t>(p) - 1] = f(g(p));
  return AffinePerm(f.n_, std::move(im));
}

// ---------------------------------------------------------------------------
// Diagram letters on the cover

static LiftSet normalize_lift(LiftSet s, int n) {
  if (s.empty()) throw std::invalid_argument("lift set: empty");
  std::sort(s.begin(), s.end());
  long long r = (s.front() - 1) % n;
  if (r < 0) r += n;
  const long long shift = s.front() - 1 - r;
  if (shift != 0)
    for (long long& x : s) x -= shift;
  return s;
}

static std::uint64_t residue_mask(int n, const LiftSet& s) {
  std::uint64_t mask = 0;
  for (long long x : s) mask |= std::uint64_t{1} << (mod_strand(x, n) - 1);
  return mask;
}

static bool contains_all(const LiftSet& inner, const LiftSet& outer, long long shift) {
  // inner subset of outer + shift, both sorted
  std::size_t pos = 0;
  for (long long x : inner) {
    while (pos < outer.size() && outer[pos] + shift < x) ++pos;
    if (pos == outer.size() || outer[pos] + shift != x) return false;
  }
  return true;
}

static bool intersects(const LiftSet& a, const LiftSet& b, long long shift) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j] + shift) return true;
    if (a[i] < b[j] + shift)
      ++i;
    else
      ++j;
  }
  return false;
}

bool lifts_commute(int n, const LiftSet& a, const LiftSet& b) {
  if ((residue_mask(n, a) & residue_mask(n, b)) == 0) return true;
  // every period copy of b must be nested with or disjoint from a
  const long long lo = (a.front() - b.back() - 1) / n - 1;
  const long long hi = (a.back() - b.front() + 1) / n + 1;
  for (long long t = lo; t <= hi; ++t) {
    const long long shift = t * n;
    if (!intersects(a, b, shift)) continue;
    if (contains_all(a, b, shift) || contains_all(b, a, -shift)) continue;
    return false;
  }
  return true;
}

static bool lift_nested(int n, const LiftSet& inner, const LiftSet& outer) {
  const long long lo = (inner.front() - outer.back() - 1) / n - 1;
  const long long hi = (inner.back() - outer.front() + 1) / n + 1;
  for (long long t = lo; t <= hi; ++t)
    if (contains_all(inner, outer, t * n)) return true;
  return false;
}

std::vector<int> lift_shadow(int n, const LiftSet& s) {
  std::vector<int> out;
  out.reserve(s.size());
  for (long long x : s) out.push_back(mod_strand(x, n));
  return out;
}

struct LiftLetters::Data {
  int n;
  std::deque<LiftSet> sets;
  std::map<LiftSet, int> ids;
  AlphabetPtr snapshot;
  std::size_t snapshot_size = 0;
  std::mutex mu;

  // deque references stay valid across growth; the lock only serializes
  // indexing against concurrent registration
  const LiftSet& at(int id) {
    std::lock_guard<std::mutex> lock(mu);
    return sets.at(static_cast<std::size_t>(id));
  }
};

LiftLetters::LiftLetters(int n) : data_(std::make_shared<Data>()), n_(n) {
  if (n < 2) throw std::invalid_argument("lift letters: n must be >= 2");
  data_->n = n;
}

int LiftLetters::id_of(LiftSet s) {
  s = normalize_lift(std::move(s), n_);
  std::lock_guard<std::mutex> lock(data_->mu);
  auto it = data_->ids.find(s);
  if (it != data_->ids.end()) return it->second;
  const int id = static_cast<int>(data_->sets.size());
  data_->sets.push_back(s);
  data_->ids.emplace(std::move(s), id);
  return id;
}

const LiftSet& LiftLetters::set_of(int id) const { return data_->at(id); }

bool LiftLetters::commutes(int id1, int id2) const {
  return lifts_commute(n_, set_of(id1), set_of(id2));
}

std::string LiftLetters::name(int id) const {
  const LiftSet& s = set_of(id);
  std::string out = "t(";
  for (std::size_t t = 0; t < s.size(); ++t) {
    if (t) out += ',';
    const int r = mod_strand(s[t], n_);
    out += std::to_string(r);
    const long long wind = (s[t] - r) / n_;
    if (wind > 0) {
      out += '+';
      out += std::to_string(wind * n_);
    }
  }
  out += ')';
  return out;
}

AlphabetPtr LiftLetters::alphabet() {
  std::lock_guard<std::mutex> lock(data_->mu);
  if (!data_->snapshot || data_->snapshot_size != data_->sets.size()) {
    std::vector<std::string> names;
    names.reserve(data_->sets.size());
    for (std::size_t id = 0; id < data_->sets.size(); ++id) {
      const LiftSet& s = data_->sets[id];
      std::string nm = "t(";
      for (std::size_t t = 0; t < s.size(); ++t) {
        if (t) nm += ',';
        const int r = mod_strand(s[t], data_->n);
        nm += std::to_string(r);
        const long long wind = (s[t] - r) / data_->n;
        if (wind > 0) {
          nm += '+';
          nm += std::to_string(wind * data_->n);
        }
      }
      nm += ')';
      names.push_back(std::move(nm));
    }
    auto data = data_;
    data_->snapshot = std::make_shared<RacgAlphabet>(std::move(names), [data](int g, int h) {
      return lifts_commute(data->n, data->at(g), data->at(h));
    });
    data_->snapshot_size = data_->sets.size();
  }
  return data_->snapshot;
}

RacgWord LiftLetters::word(std::vector<int> letters) { return RacgWord{alphabet(), std::move(letters)}; }

void LiftLetters::refresh(RacgWord* w) { w->alphabet = alphabet(); }

LiftLetters& lift_letters(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<LiftLetters>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<LiftLetters>(n);
  return *slot;
}

// ---------------------------------------------------------------------------
// AD_n alphabet (presentation level: circular sets)

AdAlphabet::AdAlphabet(int n) : n_(n) {
  if (n < 2 || n > 16) throw std::invalid_argument("ad alphabet: n outside supported range 2..16");
  sets_ = enumerate_circular_sets(n, 2);
  index_.assign((std::size_t{1} << n) * static_cast<std::size_t>(n), -1);
  std::vector<std::string> names;
  names.reserve(sets_.size());
  for (std::size_t id = 0; id < sets_.size(); ++id) {
    const CircularSet& s = sets_[id];
    index_[static_cast<std::size_t>(s.mask()) * n + (s.seq().front() - 1)] = static_cast<int>(id);
    std::string name = "t(";
    for (std::size_t t = 0; t < s.seq().size(); ++t) {
      if (t) name += ',';
      name += std::to_string(s.seq()[t]);
    }
    name += ')';
    names.push_back(std::move(name));
  }
  auto sets = std::make_shared<std::vector<CircularSet>>(sets_);
  alphabet_ = std::make_shared<RacgAlphabet>(std::move(names), [sets](int g, int h) {
    return commute_ad((*sets)[static_cast<std::size_t>(g)], (*sets)[static_cast<std::size_t>(h)]);
  });
}

int AdAlphabet::id_of(const CircularSet& s) const {
  if (s.n() != n_) throw std::invalid_argument("ad alphabet: mismatched n");
  const int id = index_[static_cast<std::size_t>(s.mask()) * n_ + (s.seq().front() - 1)];
  if (id < 0) throw std::invalid_argument("ad alphabet: set not in alphabet");
  return id;
}

int AdAlphabet::interval_id(CactusLetter l) const {
  return id_of(CircularSet::of_interval(CircularInterval(n_, l.i, l.j)));
}

int AdAlphabet::act(const Permutation& s, int id) const {
  return id_of(act_perm(s, set_of(id)));
}

const AdAlphabet& ad_alphabet(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<AdAlphabet>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<AdAlphabet>(n);
  return *slot;
}

// ---------------------------------------------------------------------------
// D_n alphabet

DnAlphabet::DnAlphabet(int n) : n_(n) {
  if (n < 2 || n > 16) throw std::invalid_argument("dn alphabet: n outside supported range 2..16");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
    if (std::popcount(mask) >= 2) masks_.push_back(mask);
  std::sort(masks_.begin(), masks_.end(), [](std::uint64_t a, std::uint64_t b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    return a < b;
  });
  ids_by_mask_.assign(std::size_t{1} << n, -1);
  std::vector<std::string> names;
  names.reserve(masks_.size());
  for (std::size_t id = 0; id < masks_.size(); ++id) {
    ids_by_mask_[masks_[id]] = static_cast<int>(id);
    std::string name = "t{";
    bool first = true;
    for (int p = 1; p <= n; ++p) {
      if (masks_[id] & (std::uint64_t{1} << (p - 1))) {
        if (!first) name += ',';
        name += std::to_string(p);
        first = false;
      }
    }
    name += '}';
    names.push_back(std::move(name));
  }
  auto masks = std::make_shared<std::vector<std::uint64_t>>(masks_);
  alphabet_ = std::make_shared<RacgAlphabet>(std::move(names), [masks](int g, int h) {
    const std::uint64_t a = (*masks)[static_cast<std::size_t>(g)];
    const std::uint64_t b = (*masks)[static_cast<std::size_t>(h)];
    const std::uint64_t meet = a & b;
    return meet == 0 || meet == a || meet == b;
  });
}

int DnAlphabet::id_of_mask(std::uint64_t mask) const {
  if (mask >= ids_by_mask_.size() || ids_by_mask_[mask] < 0)
    throw std::invalid_argument("dn alphabet: set not in alphabet");
  return ids_by_mask_[mask];
}

int DnAlphabet::interval_id(CactusLetter l) const {
  if (l.i >= l.j) throw std::invalid_argument("dn alphabet: letter needs i < j");
  std::uint64_t mask = 0;
  for (int p = l.i; p <= l.j; ++p) mask |= std::uint64_t{1} << (p - 1);
  return id_of_mask(mask);
}

int DnAlphabet::act(const Permutation& s, int id) const {
  if (s.n() != n_) throw std::invalid_argument("dn alphabet: mismatched n");
  std::uint64_t out = 0;
  for (int p = 1; p <= n_; ++p)
    if (mask_of(id) & (std::uint64_t{1} << (p - 1))) out |= std::uint64_t{1} << (s(p) - 1);
  return id_of_mask(out);
}

const DnAlphabet& dn_alphabet(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<DnAlphabet>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<DnAlphabet>(n);
  return *slot;
}

// ---------------------------------------------------------------------------
// The morphisms

SemidirectElement sd_identity(int n) {
  return SemidirectElement{lift_letters(n).word({}), AffinePerm::identity(n), Permutation::identity(n)};
}

SemidirectElement sd_multiply(const SemidirectElement& x, const SemidirectElement& y) {
  const int n = x.perm.n();
  if (n != y.perm.n()) throw std::invalid_argument("semidirect product: mismatched n");
  LiftLetters& reg = lift_letters(n);
  const AffinePerm pull = x.evolution.inverse();
  std::vector<int> letters = x.diagram.letters;
  letters.reserve(letters.size() + y.diagram.letters.size());
  for (int g : y.diagram.letters) {
    const LiftSet& s = reg.set_of(g);
    LiftSet moved;
    moved.reserve(s.size());
    for (long long v : s) moved.push_back(pull(v));
    letters.push_back(reg.id_of(std::move(moved)));
  }
  return SemidirectElement{reg.word(std::move(letters)), compose(y.evolution, x.evolution),
                           compose(x.perm, y.perm)};
}

bool sd_equal(SemidirectElement x, SemidirectElement y) {
  if (x.perm.n() != y.perm.n()) return false;
  LiftLetters& reg = lift_letters(x.perm.n());
  reg.refresh(&x.diagram);
  reg.refresh(&y.diagram);
  return x.evolution == y.evolution && x.perm == y.perm && equal(x.diagram, y.diagram);
}

Permutation pi(const CactusWord& w) {
  Permutation out = Permutation::identity(w.n());
  for (const CactusLetter& l : w.letters()) out = compose(out, interval_reversal(w.n(), l.i, l.j));
  return out;
}

SemidirectElement phi(const CactusWord& w) {
  const int n = w.n();
  LiftLetters& reg = lift_letters(n);
  AffinePerm pull = AffinePerm::identity(n);  // inverse of the evolution so far
  Permutation perm = Permutation::identity(n);
  std::vector<int> diagram;
  diagram.reserve(w.size());
  for (const CactusLetter& l : w.letters()) {
    const int len = support_size(n, l);
    LiftSet s;
    s.reserve(static_cast<std::size_t>(len));
    for (int t = 0; t < len; ++t) s.push_back(pull(l.i + t));
    diagram.push_back(reg.id_of(std::move(s)));
    pull = compose(pull, AffinePerm::window_reflection(n, l.i, len));
    perm = compose(perm, interval_reversal(n, l.i, l.j));
  }
  return SemidirectElement{reg.word(std::move(diagram)), pull.inverse(), std::move(perm)};
}

bool is_identity(const CactusWord& w) {
  SemidirectElement img = phi(w);
  // a trivial diagram forces a trivial twist, so a nontrivial twist decides
  if (!(img.evolution == AffinePerm::identity(w.n()))) return false;
  if (!reduce_geodesic(img.diagram).word.empty()) return false;
  if (!img.perm.is_identity())
    throw std::logic_error("is_identity: trivial diagram part with nontrivial permutation");
  return true;
}

bool equal_words(const CactusWord& w1, const CactusWord& w2) {
  if (w1.n() != w2.n()) throw std::invalid_argument("equal_words: mismatched n");
  return is_identity(w1 * w2.reversed());
}

CactusWord lift_reduce(const CactusWord& w) {
  const int n = w.n();
  LiftLetters& reg = lift_letters(n);
  SemidirectElement img = phi(w);
  const Reduction red = reduce_geodesic(img.diagram);
  std::vector<CactusLetter> cactus = w.letters();
  std::vector<int> diagram = img.diagram.letters;
  for (const Move& m : red.trace) {
    const auto p = static_cast<std::size_t>(m.pos);
    if (m.kind == Move::Kind::kSwap) {
      const LiftSet& s = reg.set_of(diagram[p]);
      const LiftSet& t = reg.set_of(diagram[p + 1]);
      const CactusLetter a = cactus[p];
      const CactusLetter b = cactus[p + 1];
      if ((residue_mask(n, s) & residue_mask(n, t)) == 0) {
        cactus[p] = b;
        cactus[p + 1] = a;
      } else if (lift_nested(n, s, t)) {
        const Permutation sb = interval_reversal(n, b.i, b.j);
        cactus[p] = b;
        cactus[p + 1] = CactusLetter{sb(a.j), sb(a.i)};
      } else if (lift_nested(n, t, s)) {
        const Permutation sa = interval_reversal(n, a.i, a.j);
        cactus[p] = CactusLetter{sa(b.j), sa(b.i)};
        cactus[p + 1] = a;
      } else {
        throw std::logic_error("lift_reduce: commuting letters are neither nested nor disjoint");
      }
      std::swap(diagram[p], diagram[p + 1]);
    } else {
      if (diagram[p] != diagram[p + 1] || !(cactus[p] == cactus[p + 1]))
        throw std::logic_error("lift_reduce: cancellation does not lift to equal cactus letters");
      diagram.erase(diagram.begin() + m.pos, diagram.begin() + m.pos + 2);
      cactus.erase(cactus.begin() + m.pos, cactus.begin() + m.pos + 2);
    }
  }
  return CactusWord(n, std::move(cactus));
}

bool is_pure(const CactusWord& w) { return pi(w).is_identity(); }

std::optional<std::uint64_t> order(const CactusWord& w) {
  // The evolution's order divides any trivializing power, and torsion orders
  // are powers of two: anything else settles the question without reductions.
  // An affine permutation has order = order of its base permutation when that
  // power is the identity (no residual translation), and infinite order
  // otherwise.
  const AffinePerm evolution = phi(w).evolution;
  const AffinePerm one = AffinePerm::identity(w.n());
  const Permutation base = evolution.base();
  std::uint64_t base_order = 1;
  {
    std::vector<char> seen(static_cast<std::size_t>(w.n()), 0);
    for (int p = 1; p <= w.n(); ++p) {
      if (seen[static_cast<std::size_t>(p) - 1]) continue;
      std::uint64_t len = 0;
      for (int q = p; !seen[static_cast<std::size_t>(q) - 1]; q = base(q)) {
        seen[static_cast<std::size_t>(q) - 1] = 1;
        ++len;
      }
      base_order = std::lcm(base_order, len);
    }
  }
  AffinePerm pw = one;
  AffinePerm sq = evolution;
  for (std::uint64_t e = base_order; e > 0; e >>= 1) {
    if (e & 1) pw = compose(pw, sq);
    sq = compose(sq, sq);
  }
  if (!(pw == one)) return std::nullopt;                 // residual translation: infinite order
  if ((base_order & (base_order - 1)) != 0) return std::nullopt;  // not a power of two
  for (int s = 0; s < w.n() && s < 63; ++s) {
    const std::uint64_t m = std::uint64_t{1} << s;
    if (m < base_order) continue;
    if (is_identity(w.power(static_cast<long long>(m)))) return m;
  }
  return std::nullopt;
}

CactusWord torsion_element(int k, int n) {
  if (k < 1) throw std::invalid_argument("torsion_element: k must be >= 1");
  if (k >= 31 || (1 << k) > n) throw std::invalid_argument("torsion_element: requires 2^k <= n");
  std::vector<CactusLetter> letters;
  for (int t = 1; t <= k; ++t) letters.push_back(CactusLetter{1, 1 << t});
  return CactusWord(n, std::move(letters));
}

bool is_decreasing(const CactusWord& w) {
  const auto& ls = w.letters();
  std::vector<CircularSet> supports;
  supports.reserve(ls.size());
  for (const CactusLetter& l : ls) supports.push_back(CircularSet::of_interval(letter_support(w.n(), l)));
  for (std::size_t p = 0; p < ls.size(); ++p)
    for (std::size_t q = p + 1; q < ls.size(); ++q)
      if (!disjoint(supports[p], supports[q]) && !csubset(supports[q], supports[p])) return false;
  return true;
}

bool is_irreducibly_decreasing(const CactusWord& w) {
  if (!is_decreasing(w)) throw std::invalid_argument("is_irreducibly_decreasing: word is not decreasing");
  if (w.size() <= 1) return true;
  const auto& ls = w.letters();
  std::vector<std::uint64_t> masks;
  for (const CactusLetter& l : ls)
    masks.push_back(CircularSet::of_interval(letter_support(w.n(), l)).mask());
  // connectivity of the support intersection graph
  std::vector<char> reached(ls.size(), 0);
  std::vector<std::size_t> stack{0};
  reached[0] = 1;
  while (!stack.empty()) {
    const std::size_t cur = stack.back();
    stack.pop_back();
    for (std::size_t t = 0; t < ls.size(); ++t) {
      if (!reached[t] && (masks[cur] & masks[t]) != 0) {
        reached[t] = 1;
        stack.push_back(t);
      }
    }
  }
  return std::all_of(reached.begin(), reached.end(), [](char c) { return c != 0; });
}

CactusWord embed_classic(const ClassicCactusWord& w) { return CactusWord(w.n(), w.letters()); }

bool equal_classic(const ClassicCactusWord& w1, const ClassicCactusWord& w2) {
  if (w1.n() != w2.n()) throw std::invalid_argument("equal_classic: mismatched n");
  const int n = w1.n();
  const DnAlphabet& dn = dn_alphabet(n);
  const ClassicCactusWord combined = w1 * w2.reversed();
  Permutation prefix = Permutation::identity(n);
  std::vector<int> diagram;
  diagram.reserve(combined.size());
  for (const CactusLetter& l : combined.letters()) {
    std::uint64_t mask = 0;
    for (int p = l.i; p <= l.j; ++p) mask |= std::uint64_t{1} << (prefix(p) - 1);
    diagram.push_back(dn.id_of_mask(mask));
    prefix = compose(prefix, interval_reversal(n, l.i, l.j));
  }
  return reduce_geodesic(dn.word(std::move(diagram))).word.empty() && prefix.is_identity();
}

CactusWord epsilon(const CactusWord& w, int p) {
  if (p < 2 || p > w.n()) throw std::invalid_argument("epsilon: p out of range");
  std::vector<CactusLetter> out;
  for (const CactusLetter& l : w.letters())
    if (support_size(w.n(), l) >= p) out.push_back(l);
  return CactusWord(w.n(), std::move(out));
}

std::pair<CactusWord, CactusWord> split(const CactusWord& w, int p) {
  if (p < 2 || p > w.n()) throw std::invalid_argument("split: p out of range");
  const auto& ls = w.letters();
  std::vector<CactusLetter> u, v, big_prefix;
  std::size_t idx = 0;
  while (idx < ls.size()) {
    const bool big = support_size(w.n(), ls[idx]) >= p;
    std::size_t end = idx;
    while (end < ls.size() && (support_size(w.n(), ls[end]) >= p) == big) ++end;
    if (big) {
      big_prefix.insert(big_prefix.end(), ls.begin() + static_cast<std::ptrdiff_t>(idx),
                        ls.begin() + static_cast<std::ptrdiff_t>(end));
      v.insert(v.end(), ls.begin() + static_cast<std::ptrdiff_t>(idx),
               ls.begin() + static_cast<std::ptrdiff_t>(end));
    } else {
      // conjugate the small block by the large-support prefix so far
      u.insert(u.end(), big_prefix.begin(), big_prefix.end());
      u.insert(u.end(), ls.begin() + static_cast<std::ptrdiff_t>(idx),
               ls.begin() + static_cast<std::ptrdiff_t>(end));
      u.insert(u.end(), big_prefix.rbegin(), big_prefix.rend());
    }
    idx = end;
  }
  return {CactusWord(w.n(), std::move(u)), CactusWord(w.n(), std::move(v))};
}

bool in_range(const CactusWord& w, int p, int q) {
  if (p < 2 || p > q || q > w.n()) throw std::invalid_argument("in_range: need 2 <= p <= q <= n");
  for (const CactusLetter& l : w.letters()) {
    const int sz = support_size(w.n(), l);
    if (sz < p || sz > q) return false;
  }
  return true;
}

CactusWord rotate(const CactusWord& w, int d) {
  std::vector<CactusLetter> out;
  out.reserve(w.size());
  for (const CactusLetter& l : w.letters())
    out.push_back(CactusLetter{mod_strand(static_cast<long long>(l.i) + d, w.n()),
                               mod_strand(static_cast<long long>(l.j) + d, w.n())});
  return CactusWord(w.n(), std::move(out));
}

std::vector<std::pair<CactusWord, CactusWord>> defining_relations(int n) {
  if (n < 2) throw std::invalid_argument("defining_relations: n must be >= 2");
  std::vector<CactusLetter> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) gens.push_back(CactusLetter{i, j});
  std::vector<CircularSet> supports;
  supports.reserve(gens.size());
  for (const CactusLetter& g : gens) supports.push_back(CircularSet::of_interval(letter_support(n, g)));

  std::vector<std::pair<CactusWord, CactusWord>> out;
  for (const CactusLetter& g : gens)
    out.emplace_back(CactusWord(n, {g, g}), CactusWord(n));
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (disjoint(supports[a], supports[b]))
        out.emplace_back(CactusWord(n, {gens[a], gens[b]}), CactusWord(n, {gens[b], gens[a]}));
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = 0; b < gens.size(); ++b) {
      if (a == b || !csubset(supports[a], supports[b])) continue;
      const Permutation sb = interval_reversal(n, gens[b].i, gens[b].j);
      const CactusLetter quasi{sb(gens[a].j), sb(gens[a].i)};
      out.emplace_back(CactusWord(n, {gens[a], gens[b]}), CactusWord(n, {gens[b], quasi}));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Integer matrix oracle

IntMatrix affine_matrix(const AffinePerm& f) {
  const int n = f.n();
  IntMatrix m = IntMatrix::Zero(n + 1, n + 1);
  for (int p = 1; p <= n; ++p) {
    const long long y = f(p);
    const int r = mod_strand(y, n);
    m(r - 1, p - 1) = 1;
    m(r - 1, n) = static_cast<long>((y - r) / n);
  }
  m(n, n) = 1;
  return m;
}

namespace {

// Remaps diagram words onto the finite sub-alphabet of the letters they use;
// parabolic subgroups of a RACG embed, so equality is unchanged.
struct SubAlphabet {
  AlphabetPtr alphabet;
  std::map<int, int> remap;

  RacgWord remapped(const RacgWord& w) const {
    std::vector<int> letters;
    letters.reserve(w.letters.size());
    for (int g : w.letters) letters.push_back(remap.at(g));
    return RacgWord{alphabet, std::move(letters)};
  }
};

SubAlphabet make_sub_alphabet(int n, const std::vector<const RacgWord*>& words) {
  LiftLetters& reg = lift_letters(n);
  std::vector<int> ids;
  for (const RacgWord* w : words) ids.insert(ids.end(), w->letters.begin(), w->letters.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  SubAlphabet sub;
  std::vector<std::string> names;
  auto lifts = std::make_shared<std::vector<LiftSet>>();
  for (std::size_t t = 0; t < ids.size(); ++t) {
    sub.remap[ids[t]] = static_cast<int>(t);
    names.push_back(reg.name(ids[t]));
    lifts->push_back(reg.set_of(ids[t]));
  }
  sub.alphabet = std::make_shared<RacgAlphabet>(std::move(names), [lifts, n](int g, int h) {
    return lifts_commute(n, (*lifts)[static_cast<std::size_t>(g)], (*lifts)[static_cast<std::size_t>(h)]);
  });
  return sub;
}

IntMatrix oracle_matrix(const SemidirectElement& img, const SubAlphabet& sub, int max_dimension) {
  const GeometricRep rep(sub.alphabet);
  const int dv = rep.dimension();
  const int n = img.perm.n();
  if (dv + n + 1 > max_dimension)
    throw ResourceError("matrix oracle: dimension " + std::to_string(dv + n + 1) + " exceeds budget");
  IntMatrix m = IntMatrix::Zero(dv + n + 1, dv + n + 1);
  m.block(0, 0, dv, dv) = rep.word_matrix(sub.remapped(img.diagram));
  m.block(dv, dv, n + 1, n + 1) = affine_matrix(img.evolution);
  return m;
}

}  // namespace

std::pair<RacgWord, RacgWord> restrict_diagram_pair(int n, const RacgWord& a, const RacgWord& b) {
  const SubAlphabet sub = make_sub_alphabet(n, {&a, &b});
  return {sub.remapped(a), sub.remapped(b)};
}

AjRep::AjRep(int n, int max_dimension) : n_(n), max_dimension_(max_dimension) {
  if (n < 2) throw std::invalid_argument("matrix oracle: n must be >= 2");
}

bool AjRep::equal(const CactusWord& w1, const CactusWord& w2) const {
  if (w1.n() != n_ || w2.n() != n_) throw std::invalid_argument("matrix oracle: mismatched n");
  SemidirectElement a = phi(w1);
  SemidirectElement b = phi(w2);
  const SubAlphabet sub = make_sub_alphabet(n_, {&a.diagram, &b.diagram});
  return exact_equal(oracle_matrix(a, sub, max_dimension_), oracle_matrix(b, sub, max_dimension_));
}

IntMatrix AjRep::word_matrix(const CactusWord& w, const std::vector<CactusWord>& basis_words) const {
  SemidirectElement img = phi(w);
  std::vector<SemidirectElement> imgs;
  imgs.reserve(basis_words.size());
  std::vector<const RacgWord*> words{&img.diagram};
  for (const CactusWord& b : basis_words) {
    imgs.push_back(phi(b));
    words.push_back(&imgs.back().diagram);
  }
  return oracle_matrix(img, make_sub_alphabet(n_, words), max_dimension_);
}

int AjRep::letter_matrix_dimension() const { return n_ * (n_ - 1) + n_ + 1; }

IntMatrix AjRep::letter_matrix(CactusLetter l) const {
  // basis: all interval letters in generator order, then the affine block
  LiftLetters& reg = lift_letters(n_);
  std::vector<int> ids;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (i == j) continue;
      const int len = support_size(n_, CactusLetter{i, j});
      LiftSet s;
      for (int t = 0; t < len; ++t) s.push_back(i + t);
      ids.push_back(reg.id_of(std::move(s)));
    }
  }
  std::vector<std::string> names;
  auto lifts = std::make_shared<std::vector<LiftSet>>();
  std::map<int, int> remap;
  for (std::size_t t = 0; t < ids.size(); ++t) {
    remap[ids[t]] = static_cast<int>(t);
    names.push_back(reg.name(ids[t]));
    lifts->push_back(reg.set_of(ids[t]));
  }
  const int nn = n_;
  auto alphabet = std::make_shared<RacgAlphabet>(std::move(names), [lifts, nn](int g, int h) {
    return lifts_commute(nn, (*lifts)[static_cast<std::size_t>(g)], (*lifts)[static_cast<std::size_t>(h)]);
  });
  const GeometricRep rep(alphabet);
  const int dv = rep.dimension();
  IntMatrix m = IntMatrix::Zero(dv + n_ + 1, dv + n_ + 1);
  const SemidirectElement img = phi(CactusWord(n_, {l}));
  RacgWord diagram{alphabet, {remap.at(img.diagram.letters.front())}};
  m.block(0, 0, dv, dv) = rep.word_matrix(diagram);
  m.block(dv, dv, n_ + 1, n_ + 1) = affine_matrix(img.evolution);
  return m;
}

}  // namespace ajcactus
