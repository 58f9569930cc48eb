#include <doctest.h>

#include <random>

#include "ajcactus/presentations.hpp"
#include "ajcactus/svg.hpp"
#include "ajcactus/wordio.hpp"

using namespace ajcactus;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0, pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

}  // namespace

TEST_CASE("word grammar") {
  CHECK(parse_cactus_word("s(1,2) s(3,4)", 4) == CactusWord(4, {{1, 2}, {3, 4}}));
  CHECK(parse_cactus_word("s(1,2)*s(3,4)", 4) == CactusWord(4, {{1, 2}, {3, 4}}));
  CHECK(parse_cactus_word("  s(4,1)\t", 4) == CactusWord(4, {{4, 1}}));
  CHECK(parse_cactus_word("", 4) == CactusWord(4, {}));
  CHECK(parse_cactus_word("s(1,2)^3", 4) == CactusWord(4, {{1, 2}, {1, 2}, {1, 2}}));
  CHECK(parse_cactus_word("s(1,2)^0", 4) == CactusWord(4, {}));
  // negative exponents expand through the reversed word
  CHECK(parse_cactus_word("s(1,2)^-2", 4) == CactusWord(4, {{1, 2}, {1, 2}}));
  CHECK_THROWS_AS(parse_cactus_word("s(1,2", 4), ParseError);
  CHECK_THROWS_AS(parse_cactus_word("t(1,2)", 4), ParseError);
  CHECK_THROWS_AS(parse_cactus_word("s(1,1)", 4), ParseError);
  CHECK_THROWS_AS(parse_cactus_word("s(1,5)", 4), ParseError);
  CHECK_THROWS_AS(parse_classic_word("s(2,1)", 4), ParseError);
  CHECK(parse_classic_word("s(1,2) s(2,4)", 4) == ClassicCactusWord(4, {{1, 2}, {2, 4}}));
}

TEST_CASE("printed words re-parse to equal words") {
  CHECK(to_string(CactusWord(4, {{1, 2}, {3, 4}})) == "s(1,2) s(3,4)");
  CHECK(to_string(CactusWord(4, {})).empty());
  std::mt19937 rng(40);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng() % 7);
    std::vector<CactusLetter> letters;
    const int len = static_cast<int>(rng() % 8);
    while (static_cast<int>(letters.size()) < len) {
      const int i = 1 + static_cast<int>(rng() % n), j = 1 + static_cast<int>(rng() % n);
      if (i != j) letters.push_back({i, j});
    }
    const CactusWord w(n, letters);
    CHECK(parse_cactus_word(to_string(w), n) == w);
    CHECK(word_from_json(word_to_json(w)) == w);
  }
}

TEST_CASE("json schema") {
  const CactusWord w(4, {{1, 2}, {4, 1}});
  const nlohmann::json j = word_to_json(w);
  CHECK(j.at("n") == 4);
  CHECK(j.at("letters").size() == 2);
  CHECK(j.at("letters")[1] == nlohmann::json({4, 1}));
  CHECK_THROWS_AS(word_from_json(nlohmann::json{{"n", 3}}), ParseError);
  CHECK_THROWS_AS(word_from_json(nlohmann::json{{"n", 3}, {"letters", {{1, 1}}}}), ParseError);
}

TEST_CASE("presentation exports") {
  const TextPresentation ajn2 = presentation_ajn(2);
  CHECK(ajn2.names.size() == 2);
  CHECK(ajn2.relations.size() == 2);
  CHECK(presentation_adn(3).names.size() == 9);
  CHECK(presentation_dn(3).names.size() == 4);
  CHECK(presentation_jn(3).names.size() == 3);
  CHECK(presentation_coxeter_cactus(3).names.size() == 6);

  const std::string plain = format_plain(ajn2);
  CHECK(count_occurrences(plain, "gen: ") == 2);
  CHECK(count_occurrences(plain, "rel: ") == 2);
  CHECK(plain.find("rel: s(1,2) s(1,2) = 1") != std::string::npos);

  const std::string algebra = format_algebra(ajn2);
  CHECK(algebra.find("generators := [s_1_2, s_2_1];") != std::string::npos);
  CHECK(algebra.find("s_1_2*s_1_2") != std::string::npos);

  const nlohmann::json j = presentation_to_json(presentation_adn(3));
  CHECK(j.at("generators").size() == 9);
}

TEST_CASE("svg rendering") {
  const std::string empty = render_cactus_svg(CactusWord(3, {}));
  CHECK(count_occurrences(empty, "class=\"node\"") == 0);
  CHECK(count_occurrences(empty, "class=\"seam\"") == 2);
  CHECK(empty.find("<svg") == 0);

  const std::string single = render_cactus_svg(CactusWord(2, {{1, 2}}));
  CHECK(count_occurrences(single, "class=\"node\"") == 1);

  // the three-crossing cylinder word; the middle letter wraps the seam
  const std::string fig = render_cactus_svg(parse_cactus_word("s(1,2) s(3,1) s(2,3)", 4));
  CHECK(count_occurrences(fig, "class=\"node\"") == 3);
  CHECK(fig.find("stroke-dasharray") != std::string::npos);
  CHECK(count_occurrences(fig, "<!-- letter") == 3);

  // deterministic output
  CHECK(fig == render_cactus_svg(parse_cactus_word("s(1,2) s(3,1) s(2,3)", 4)));
}
