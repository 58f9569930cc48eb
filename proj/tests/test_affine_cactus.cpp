#include <doctest.h>

#include <random>

#include "ajcactus/affine_cactus.hpp"

using namespace ajcactus;

namespace {

CactusWord cw(int n, std::vector<CactusLetter> ls) { return CactusWord(n, std::move(ls)); }

CactusWord random_word(std::mt19937& rng, int n, int max_len) {
  const int len = static_cast<int>(rng() % (max_len + 1));
  std::vector<CactusLetter> letters;
  while (static_cast<int>(letters.size()) < len) {
    const int i = 1 + static_cast<int>(rng() % n);
    const int j = 1 + static_cast<int>(rng() % n);
    if (i != j) letters.push_back({i, j});
  }
  return CactusWord(n, std::move(letters));
}

std::vector<int> shadow_of(const SemidirectElement& img, std::size_t idx) {
  return lift_shadow(img.perm.n(), lift_letters(img.perm.n()).set_of(img.diagram.letters[idx]));
}

}  // namespace

TEST_CASE("affine permutations") {
  const AffinePerm id = AffinePerm::identity(4);
  CHECK(id(7) == 7);
  CHECK(id(-2) == -2);
  const AffinePerm r = AffinePerm::window_reflection(4, 3, 3);  // reverses [3,5] + 4Z
  CHECK(r(3) == 5);
  CHECK(r(4) == 4);
  CHECK(r(5) == 3);
  CHECK(r(7) == 9);
  CHECK(r(2) == 2);
  CHECK(r.base() == interval_reversal(4, 3, 1));
  CHECK(compose(r, r) == id);
  CHECK(r.inverse() == r);
  const AffinePerm s = AffinePerm::window_reflection(4, 1, 2);
  CHECK(compose(s, r.inverse()).inverse() == compose(r, s.inverse()));
}

TEST_CASE("permutation image of words") {
  CHECK(pi(cw(4, {})).is_identity());
  CHECK(pi(cw(2, {{1, 2}, {2, 1}})).is_identity());
  CHECK(pi(cw(4, {{1, 3}})).images() == std::vector<int>{3, 2, 1, 4});
}

TEST_CASE("diagram image of words") {
  const SemidirectElement img = phi(cw(4, {{1, 2}, {3, 1}, {2, 3}}));
  REQUIRE(img.diagram.size() == 3);
  CHECK(shadow_of(img, 0) == std::vector<int>{1, 2});
  CHECK(shadow_of(img, 1) == std::vector<int>{3, 4, 2});
  CHECK(shadow_of(img, 2) == std::vector<int>{1, 2});
  CHECK(img.perm.images() == std::vector<int>{3, 2, 1, 4});

  const SemidirectElement single = phi(cw(4, {{3, 1}}));
  REQUIRE(single.diagram.size() == 1);
  CHECK(shadow_of(single, 0) == std::vector<int>{3, 4, 1});
  CHECK(single.perm == interval_reversal(4, 3, 1));

  const SemidirectElement empty = phi(cw(4, {}));
  CHECK(empty.diagram.empty());
  CHECK(empty.perm.is_identity());
}

TEST_CASE("phi is a homomorphism into the semidirect extension") {
  std::mt19937 rng(605);
  for (int t = 0; t < 150; ++t) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const CactusWord w1 = random_word(rng, n, 5);
    const CactusWord w2 = random_word(rng, n, 5);
    CHECK(sd_equal(phi(w1 * w2), sd_multiply(phi(w1), phi(w2))));
  }
}

TEST_CASE("word problem") {
  CHECK(is_identity(cw(4, {{1, 2}, {3, 4}, {1, 2}, {3, 4}})));
  CHECK_FALSE(is_identity(cw(2, {{1, 2}, {2, 1}})));
  CHECK(is_identity(cw(3, {{1, 2}, {1, 3}, {2, 3}, {1, 3}})));
  CHECK(equal_words(cw(3, {{1, 2}, {1, 3}}), cw(3, {{1, 3}, {2, 3}})));
  CHECK_FALSE(equal_words(cw(3, {{1, 2}}), cw(3, {{2, 1}})));
  const CactusWord w = cw(5, {{2, 4}, {4, 1}, {3, 4}});
  CHECK(equal_words(w, w));
  CHECK_THROWS_AS(equal_words(cw(3, {}), cw(4, {})), std::invalid_argument);
}

TEST_CASE("the identity test is confirmed by the bounded search") {
  // relation instance sigma_{1,2} sigma_{1,3} = sigma_{1,3} sigma_{2,3}
  SemidirectElement a = phi(cw(3, {{1, 2}, {1, 3}, {2, 3}, {1, 3}}));
  const auto [r1, r2] = restrict_diagram_pair(3, a.diagram, lift_letters(3).word({}));
  CHECK(brute_force_equal(r1, r2, static_cast<int>(r1.size()), 50000) == SearchResult::kYes);
}

TEST_CASE("lift_reduce rewrites to a geodesic representative") {
  CHECK(lift_reduce(cw(4, {{1, 2}, {1, 2}, {3, 4}})) == cw(4, {{3, 4}}));
  CHECK(lift_reduce(cw(4, {{2, 3}, {1, 4}, {2, 3}})) == cw(4, {{1, 4}}));
  const CactusWord geodesic = cw(4, {{1, 2}, {3, 1}, {2, 3}});
  CHECK(lift_reduce(geodesic) == geodesic);

  std::mt19937 rng(8088);
  for (int t = 0; t < 150; ++t) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const CactusWord w = random_word(rng, n, 8);
    const CactusWord r = lift_reduce(w);
    CHECK(equal_words(w, r));
    CHECK(is_geodesic(phi(r).diagram));
    CHECK(r.size() <= w.size());
  }
}

TEST_CASE("purity") {
  CHECK(is_pure(cw(2, {{1, 2}, {2, 1}})));
  CHECK_FALSE(is_pure(cw(3, {{1, 2}})));
  for (const auto& [lhs, rhs] : defining_relations(4)) {
    CHECK(is_pure(lhs * rhs.reversed()));
  }
}

TEST_CASE("orders") {
  CHECK(order(cw(3, {})) == 1);
  CHECK(order(cw(3, {{1, 2}})) == 2);
  CHECK(order(cw(4, {{1, 2}, {1, 4}})) == 4);
  CHECK_FALSE(order(cw(2, {{1, 2}, {2, 1}})).has_value());

  std::mt19937 rng(2204);
  for (int t = 0; t < 60; ++t) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const CactusWord w = random_word(rng, n, 4);
    const auto k = order(w);
    if (k && *k > 1) {
      CHECK(is_identity(w.power(static_cast<long long>(*k))));
      CHECK_FALSE(is_identity(w.power(static_cast<long long>(*k / 2))));
    }
  }
}

TEST_CASE("torsion witnesses") {
  CHECK(torsion_element(1, 2) == cw(2, {{1, 2}}));
  CHECK(torsion_element(2, 4) == cw(4, {{1, 2}, {1, 4}}));
  CHECK(torsion_element(3, 8) == cw(8, {{1, 2}, {1, 4}, {1, 8}}));
  CHECK(order(torsion_element(1, 2)) == 2);
  CHECK(order(torsion_element(2, 5)) == 4);
  CHECK_THROWS_AS(torsion_element(3, 7), std::invalid_argument);
  CHECK_THROWS_AS(torsion_element(0, 4), std::invalid_argument);
}

TEST_CASE("decreasing words") {
  CHECK(is_decreasing(cw(4, {{1, 4}, {2, 3}})));
  CHECK_FALSE(is_decreasing(cw(4, {{2, 3}, {1, 4}})));
  CHECK(is_decreasing(cw(4, {})));
  CHECK_FALSE(is_irreducibly_decreasing(cw(4, {{1, 2}, {3, 4}})));
  CHECK(is_irreducibly_decreasing(cw(4, {{1, 4}, {2, 3}})));
  CHECK(is_irreducibly_decreasing(cw(4, {{2, 3}})));
  CHECK_THROWS_AS(is_irreducibly_decreasing(cw(4, {{2, 3}, {1, 4}})), std::invalid_argument);
}

TEST_CASE("classic cactus words embed") {
  const ClassicCactusWord e(3);
  CHECK(embed_classic(e) == cw(3, {}));
  CHECK(embed_classic(ClassicCactusWord(3, {{1, 2}, {1, 3}})) == cw(3, {{1, 2}, {1, 3}}));
  CHECK_THROWS_AS(ClassicCactusWord(3, {{2, 1}}), std::invalid_argument);

  // J_3 relation pair maps to equal AJ_3 words
  const ClassicCactusWord lhs(3, {{1, 2}, {1, 3}});
  const ClassicCactusWord rhs(3, {{1, 3}, {2, 3}});
  CHECK(equal_classic(lhs, rhs));
  CHECK(equal_words(embed_classic(lhs), embed_classic(rhs)));
}

TEST_CASE("classic word problem") {
  CHECK(equal_classic(ClassicCactusWord(4, {{1, 2}, {3, 4}}), ClassicCactusWord(4, {{3, 4}, {1, 2}})));
  CHECK_FALSE(equal_classic(ClassicCactusWord(3, {{1, 2}}), ClassicCactusWord(3, {{2, 3}})));
  // matrix oracle over D_3 confirms the negative
  const DnAlphabet& dn = dn_alphabet(3);
  const GeometricRep rep(dn.alphabet());
  const RacgWord a = dn.word({dn.interval_id({1, 2})});
  const RacgWord b = dn.word({dn.interval_id({2, 3})});
  CHECK_FALSE(exact_equal(rep.word_matrix(a), rep.word_matrix(b)));
}

TEST_CASE("epsilon deletes small supports") {
  CHECK(epsilon(cw(4, {{1, 2}, {1, 3}}), 3) == cw(4, {{1, 3}}));
  const CactusWord w = cw(4, {{1, 2}, {3, 1}, {2, 3}});
  CHECK(epsilon(w, 2) == w);
  CHECK(epsilon(cw(4, {{1, 2}, {3, 4}}), 3) == cw(4, {}));
  CHECK(epsilon(epsilon(w, 3), 3) == epsilon(w, 3));
  CHECK_THROWS_AS(epsilon(w, 1), std::invalid_argument);
}

TEST_CASE("splitting along the support threshold") {
  const auto [u, v] = split(cw(3, {{1, 3}, {1, 2}}), 3);
  CHECK(u == cw(3, {{1, 3}, {1, 2}, {1, 3}}));
  CHECK(v == cw(3, {{1, 3}}));
  CHECK(equal_words(u, cw(3, {{2, 3}})));  // the kernel factor is sigma_{2,3}

  const auto [u2, v2] = split(cw(3, {{1, 2}}), 3);
  CHECK(u2 == cw(3, {{1, 2}}));
  CHECK(v2.empty());
  const auto [u3, v3] = split(cw(3, {{1, 3}}), 3);
  CHECK(u3.empty());
  CHECK(v3 == cw(3, {{1, 3}}));

  std::mt19937 rng(7);
  for (int t = 0; t < 80; ++t) {
    const int n = 3 + static_cast<int>(rng() % 3);
    const CactusWord w = random_word(rng, n, 6);
    for (int p : {3, n}) {
      const auto [a, b] = split(w, p);
      CHECK(b == epsilon(w, p));
      CHECK(equal_words(w, a * b));
      CHECK(is_identity(epsilon(a, p)));
    }
  }
}

TEST_CASE("support ranges") {
  CHECK(in_range(cw(4, {{1, 2}, {2, 3}}), 2, 2));
  CHECK_FALSE(in_range(cw(4, {{1, 3}}), 2, 2));
  CHECK(in_range(cw(4, {}), 2, 4));
}

TEST_CASE("rotation automorphism") {
  CHECK(rotate(cw(4, {{1, 2}}), 1) == cw(4, {{2, 3}}));
  CHECK(rotate(cw(4, {{4, 1}}), 1) == cw(4, {{1, 2}}));
  const CactusWord w = cw(4, {{1, 2}, {3, 1}, {2, 3}});
  CHECK(rotate(w, 4) == w);
  CHECK(rotate(rotate(w, 3), -3) == w);

  std::mt19937 rng(31007);
  for (int t = 0; t < 80; ++t) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const CactusWord w1 = random_word(rng, n, 5);
    const CactusWord w2 = random_word(rng, n, 5);
    const int d = static_cast<int>(rng() % (2 * n)) - n;
    CHECK(equal_words(w1, w2) == equal_words(rotate(w1, d), rotate(w2, d)));
  }
}

TEST_CASE("defining relations") {
  const auto rels2 = defining_relations(2);
  REQUIRE(rels2.size() == 2);  // only the two involutions
  CHECK(rels2[0].first == cw(2, {{1, 2}, {1, 2}}));
  CHECK(rels2[1].first == cw(2, {{2, 1}, {2, 1}}));
  for (const auto& [lhs, rhs] : defining_relations(3)) CHECK(equal_words(lhs, rhs));
}

TEST_CASE("generators map to distinct diagram letters for n > 2") {
  for (int n = 3; n <= 7; ++n) {
    const AdAlphabet& ad = ad_alphabet(n);
    std::vector<int> seen;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j) seen.push_back(ad.interval_id({i, j}));
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
  }
}

TEST_CASE("matrix oracle agrees with the word problem") {
  std::mt19937 rng(1213);
  const AjRep rep3(3);
  const AjRep rep4(4);
  for (int t = 0; t < 80; ++t) {
    const int n = 3 + static_cast<int>(rng() % 2);
    const AjRep& rep = n == 3 ? rep3 : rep4;
    const CactusWord w1 = random_word(rng, n, 5);
    const CactusWord w2 = random_word(rng, n, 5);
    CHECK(rep.equal(w1, w2) == equal_words(w1, w2));
  }
  CHECK_FALSE(AjRep(3).equal(cw(3, {{1, 2}}), cw(3, {{2, 1}})));
}

TEST_CASE("letter matrices are involutions") {
  const AjRep rep(3);
  CHECK(rep.letter_matrix_dimension() == 3 * 2 + 3 + 1);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      const IntMatrix m = rep.letter_matrix({i, j});
      CHECK(is_identity_matrix((m * m).eval()));
    }
}

TEST_CASE("word equality is a group congruence") {
  std::mt19937 rng(60111);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const CactusWord u = random_word(rng, n, 5);
    const CactusWord v = random_word(rng, n, 5);
    const CactusWord g = random_word(rng, n, 2);
    const bool eq = equal_words(u, v);
    CHECK(equal_words(u * g, v * g) == eq);
    CHECK(equal_words(g * u, g * v) == eq);
    CHECK(equal_words(u.reversed(), v.reversed()) == eq);
  }
}

TEST_CASE("oracles agree beyond the acceptance bound") {
  std::mt19937 rng(60112);
  const AjRep rep5(5);
  const AjRep rep6(6);
  for (int t = 0; t < 60; ++t) {
    const int n = 5 + static_cast<int>(rng() % 2);
    const CactusWord w1 = random_word(rng, n, 6);
    const CactusWord w2 = random_word(rng, n, 6);
    const bool eq = equal_words(w1, w2);
    CHECK((n == 5 ? rep5 : rep6).equal(w1, w2) == eq);
    SemidirectElement p1 = phi(w1), p2 = phi(w2);
    const auto [r1, r2] = restrict_diagram_pair(n, p1.diagram, p2.diagram);
    const SearchResult bf =
        brute_force_equal(r1, r2, static_cast<int>(std::max(r1.size(), r2.size())), 20000);
    if (bf != SearchResult::kInconclusive) CHECK((bf == SearchResult::kYes) == equal(r1, r2));
    CHECK(eq == (equal(r1, r2) && p1.evolution == p2.evolution));
  }
}

TEST_CASE("small decreasing words are never pure") {
  // Desk-scale version; the acceptance suite runs the full bound.
  std::vector<CactusLetter> gens;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      if (i != j) gens.push_back({i, j});
  for (const CactusLetter& a : gens)
    for (const CactusLetter& b : gens) {
      const CactusWord w = cw(4, {a, b});
      if (!is_decreasing(w) || a == b) continue;
      if (!is_geodesic(phi(w).diagram)) continue;
      CHECK_FALSE(is_pure(w));
    }
}
