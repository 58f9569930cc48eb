#ifndef AJCACTUS_AFFINE_CACTUS_HPP_
#define AJCACTUS_AFFINE_CACTUS_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ajcactus/circular.hpp"
#include "ajcactus/perm.hpp"
#include "ajcactus/racg.hpp"
#include "ajcactus/rep.hpp"

namespace ajcactus {

// Generator sigma_{i,j} of AJ_n; its support is the circular interval [i,j]_c.
struct CactusLetter {
  int i;
  int j;

  friend bool operator==(const CactusLetter&, const CactusLetter&) = default;
  friend auto operator<=>(const CactusLetter&, const CactusLetter&) = default;
};

class CactusWord {
 public:
  explicit CactusWord(int n, std::vector<CactusLetter> letters = {});

  int n() const { return n_; }
  const std::vector<CactusLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  // Inverse word: generators are involutions, so w^-1 is w reversed.
  CactusWord reversed() const;
  CactusWord operator*(const CactusWord& rhs) const;  // concatenation
  CactusWord power(long long m) const;                // negative m via reversal

  friend bool operator==(const CactusWord&, const CactusWord&) = default;

 private:
  int n_;
  std::vector<CactusLetter> letters_;
};

CircularInterval letter_support(int n, CactusLetter l);
int support_size(int n, CactusLetter l);

// Word in the classic cactus group J_n: letters require i < j (linear
// intervals, no wraparound).
class ClassicCactusWord {
 public:
  explicit ClassicCactusWord(int n, std::vector<CactusLetter> letters = {});

  int n() const { return n_; }
  const std::vector<CactusLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

  ClassicCactusWord reversed() const;
  ClassicCactusWord operator*(const ClassicCactusWord& rhs) const;

  friend bool operator==(const ClassicCactusWord&, const ClassicCactusWord&) = default;

 private:
  int n_;
  std::vector<CactusLetter> letters_;
};

// ---------------------------------------------------------------------------
// The cylinder's universal cover.
//
// Strand positions live on Z with period n; a word's crossings act by
// reflecting every period copy of the crossing's window. Wrapping reversals
// are genuinely affine (they do not lie in the finite blockwise copy of S_n),
// which is what the diagram letters below have to track.

// Periodic bijection of Z: F(x + n) = F(x) + n, stored by its images on 1..n.
class AffinePerm {
 public:
  static AffinePerm identity(int n);
  // Reflection of every period copy of the window [start, start+length-1].
  static AffinePerm window_reflection(int n, int start, int length);

  int n() const { return n_; }
  long long operator()(long long x) const;
  AffinePerm inverse() const;
  Permutation base() const;  // residue permutation

  friend AffinePerm compose(const AffinePerm& f, const AffinePerm& g);  // f(g(x))
  friend bool operator==(const AffinePerm&, const AffinePerm&) = default;

 private:
  AffinePerm(int n, std::vector<long long> images) : n_(n), images_(std::move(images)) {}
  int n_;
  std::vector<long long> images_;  // images of 1..n
};

// Diagram letter: a finite set of strand lifts (distinct residues mod n),
// normalized so the least element lies in 1..n. Crossings of a word produce
// these letters; letters whose span stays below n are exactly the circular
// sets, but longer words wind further around the cylinder and produce wider
// letters.
using LiftSet = std::vector<long long>;

// Two letters commute iff no period copy of one interleaves the other
// (every pair of copies is nested or disjoint).
bool lifts_commute(int n, const LiftSet& a, const LiftSet& b);

// Residues in lift order; equals the circular-set sequence for letters of
// span < n.
std::vector<int> lift_shadow(int n, const LiftSet& s);

// Per-n registry of diagram letters, grown on demand. Ids are stable for the
// lifetime of the process; `alphabet()` returns a snapshot RacgAlphabet over
// all letters registered so far (rebuilt when the registry has grown, with
// ids unchanged), which is what the racg engine works on.
class LiftLetters {
 public:
  explicit LiftLetters(int n);

  int n() const { return n_; }
  int id_of(LiftSet s);  // registers if new
  const LiftSet& set_of(int id) const;
  bool commutes(int id1, int id2) const;
  std::string name(int id) const;

  AlphabetPtr alphabet();
  RacgWord word(std::vector<int> letters);
  // Points a word at the current snapshot (ids are stable across growth).
  void refresh(RacgWord* w);

 private:
  struct Data;
  std::shared_ptr<Data> data_;
  int n_;
};

LiftLetters& lift_letters(int n);

// Finite generator alphabet of the affine Gauss diagram group AD_n as
// presented: one generator per circular set of size >= 2, commutation by
// commute_ad. This is the exported presentation-level alphabet; the engine's
// diagram letters (above) extend it beyond span n-1.
class AdAlphabet {
 public:
  explicit AdAlphabet(int n);

  int n() const { return n_; }
  int size() const { return static_cast<int>(sets_.size()); }
  const AlphabetPtr& alphabet() const { return alphabet_; }
  const CircularSet& set_of(int id) const { return sets_[static_cast<std::size_t>(id)]; }
  int id_of(const CircularSet& s) const;
  int interval_id(CactusLetter l) const;

  int act(const Permutation& s, int id) const;

  RacgWord word(std::vector<int> letters = {}) const { return RacgWord{alphabet_, std::move(letters)}; }

 private:
  int n_;
  std::vector<CircularSet> sets_;
  std::vector<int> index_;  // keyed by (mask, first element)
  AlphabetPtr alphabet_;
};

const AdAlphabet& ad_alphabet(int n);

// Generator alphabet of the Gauss diagram group D_n: one generator per plain
// subset of {1..n} of size >= 2; commutation is containment or disjointness;
// S_n acts by direct elementwise image.
class DnAlphabet {
 public:
  explicit DnAlphabet(int n);

  int n() const { return n_; }
  int size() const { return static_cast<int>(masks_.size()); }
  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::uint64_t mask_of(int id) const { return masks_[static_cast<std::size_t>(id)]; }
  int id_of_mask(std::uint64_t mask) const;
  int interval_id(CactusLetter l) const;  // the set {i, i+1, ..., j}, i < j

  int act(const Permutation& s, int id) const;

  RacgWord word(std::vector<int> letters = {}) const { return RacgWord{alphabet_, std::move(letters)}; }

 private:
  int n_;
  std::vector<std::uint64_t> masks_;
  std::vector<int> ids_by_mask_;
  AlphabetPtr alphabet_;
};

const DnAlphabet& dn_alphabet(int n);

// Image of a word in the extension of the diagram group: the diagram word
// of crossing letters, the affine evolution of the strand lifts, and the
// permutation image pi(w). Multiplication:
// (d1, P1) (d2, P2) = (d1 . P1^{-1}(d2), P2 o P1).
struct SemidirectElement {
  RacgWord diagram;
  AffinePerm evolution;
  Permutation perm;
};

SemidirectElement sd_identity(int n);
SemidirectElement sd_multiply(const SemidirectElement& x, const SemidirectElement& y);
// Group-element equality: diagram parts as RACG elements plus the evolution.
bool sd_equal(SemidirectElement x, SemidirectElement y);

// Projection pi: AJ_n -> S_n, sigma_{i,j} -> s_{i,j}; first letter outermost.
Permutation pi(const CactusWord& w);

// Embedding phi: the r-th diagram letter is the set of strand lifts entering
// the r-th crossing, pulled back through the evolution so far.
SemidirectElement phi(const CactusWord& w);

// Word problem: w = 1 iff the diagram part of phi(w) reduces to the empty
// word. The permutation part must then be the identity too; if not, the
// implementation is broken and a logic_error is thrown.
bool is_identity(const CactusWord& w);

bool equal_words(const CactusWord& w1, const CactusWord& w2);

// Rewrites w, via cancellations, commutations and quasi-commutations of its
// letters, into a word of the same element whose phi diagram part is
// geodesic. Each RACG trace move lifts to the corresponding cactus move.
CactusWord lift_reduce(const CactusWord& w);

bool is_pure(const CactusWord& w);

// Exact order of the element: the least 2^s <= 2^(n-1) with w^(2^s) = 1,
// or nullopt for infinite order (torsion orders are powers of two bounded
// by 2^(n-1), so the scan is exhaustive).
std::optional<std::uint64_t> order(const CactusWord& w);

// t_k = sigma_{1,2} sigma_{1,4} ... sigma_{1,2^k}, an element of order 2^k.
// Requires 2^k <= n.
CactusWord torsion_element(int k, int n);

// Supports, read left to right, are pairwise nested (later inside earlier)
// or disjoint.
bool is_decreasing(const CactusWord& w);

// For a decreasing word: the intersection graph of the letter supports is
// connected. Rejects non-decreasing input.
bool is_irreducibly_decreasing(const CactusWord& w);

// Canonical injection J_n -> AJ_n (letterwise).
CactusWord embed_classic(const ClassicCactusWord& w);

// Word problem for J_n through the D_n x| S_n embedding.
bool equal_classic(const ClassicCactusWord& w1, const ClassicCactusWord& w2);

// Surjection onto AJ_n^{p,n}: deletes every letter with support size < p.
CactusWord epsilon(const CactusWord& w, int p);

// Splits w along the semidirect decomposition
// AJ_n ~ <<AJ_n^{2,p-1}>> x| AJ_n^{p,n}: returns (u, v) with v = epsilon(w,p),
// u a product of conjugates of the small-support blocks, and w = u v.
std::pair<CactusWord, CactusWord> split(const CactusWord& w, int p);

// Every letter's support size lies in [p, q].
bool in_range(const CactusWord& w, int p, int q);

// Index-shift automorphism sigma_{i,j} -> sigma_{i+d,j+d} (mod n).
CactusWord rotate(const CactusWord& w, int d);

// All instances of the three defining relation families of AJ_n:
// involutions, disjoint commutations, nested quasi-commutations.
std::vector<std::pair<CactusWord, CactusWord>> defining_relations(int n);

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact integer matrix oracle for word equality: the geometric representation
// of the diagram subgroup generated by the letters the two words touch
// (parabolic subgroups of a RACG embed, so this decides diagram equality),
// extended with the affine strand matrix. Matrices are equal iff the words
// represent the same element.
class AjRep {
 public:
  explicit AjRep(int n, int max_dimension = 4096);

  int n() const { return n_; }

  bool equal(const CactusWord& w1, const CactusWord& w2) const;

  // Matrix of a word over the union sub-alphabet of a word set (the words'
  // own letters determine the basis; pass the same basis words to compare).
  IntMatrix word_matrix(const CactusWord& w, const std::vector<CactusWord>& basis_words) const;

  // Reflection matrix of a single generator over the interval-letter basis
  // (dimension n(n-1)), plus the (n+1)-dimensional affine strand block.
  IntMatrix letter_matrix(CactusLetter l) const;
  int letter_matrix_dimension() const;

 private:
  int n_;
  int max_dimension_;
};

// Affine permutation as an exact (n+1)x(n+1) integer matrix (permutation part
// plus translation column).
IntMatrix affine_matrix(const AffinePerm& f);

// Remaps two diagram words onto the finite sub-alphabet of the letters they
// use (parabolic subgroups of a RACG embed, so equality is unchanged); used
// to run bounded searches on a small alphabet.
std::pair<RacgWord, RacgWord> restrict_diagram_pair(int n, const RacgWord& a, const RacgWord& b);

}  // namespace ajcactus

#endif  // AJCACTUS_AFFINE_CACTUS_HPP_
