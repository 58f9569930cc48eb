#include "ajcactus/wordio.hpp"

#include <cctype>

namespace ajcactus {

namespace {

struct Token {
  CactusLetter letter;
  long long exponent;
};

long long parse_int(std::string_view text, std::size_t* pos) {
  std::size_t p = *pos;
  bool neg = false;
  if (p < text.size() && (text[p] == '-' || text[p] == '+')) {
    neg = text[p] == '-';
    ++p;
  }
  if (p >= text.size() || !std::isdigit(static_cast<unsigned char>(text[p])))
    throw ParseError("expected integer at position " + std::to_string(*pos));
  long long value = 0;
  while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
    value = value * 10 + (text[p] - '0');
    if (value > 1000000) throw ParseError("integer literal too large");
    ++p;
  }
  *pos = p;
  return neg ? -value : value;
}

void expect(std::string_view text, std::size_t* pos, char c) {
  if (*pos >= text.size() || text[*pos] != c)
    throw ParseError(std::string("expected '") + c + "' at position " + std::to_string(*pos));
  ++*pos;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++pos;
      continue;
    }
    expect(text, &pos, 's');
    expect(text, &pos, '(');
    const long long i = parse_int(text, &pos);
    expect(text, &pos, ',');
    const long long j = parse_int(text, &pos);
    expect(text, &pos, ')');
    long long exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exponent = parse_int(text, &pos);
    }
    tokens.push_back(Token{CactusLetter{static_cast<int>(i), static_cast<int>(j)}, exponent});
  }
  return tokens;
}

std::vector<CactusLetter> expand(const std::vector<Token>& tokens) {
  std::vector<CactusLetter> letters;
  for (const Token& t : tokens) {
    const long long count = t.exponent < 0 ? -t.exponent : t.exponent;
    if (count > 100000) throw ParseError("exponent too large");
    for (long long r = 0; r < count; ++r) letters.push_back(t.letter);
  }
  return letters;
}

}  // namespace

CactusWord parse_cactus_word(std::string_view text, int n) {
  try {
    return CactusWord(n, expand(tokenize(text)));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

ClassicCactusWord parse_classic_word(std::string_view text, int n) {
  try {
    return ClassicCactusWord(n, expand(tokenize(text)));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string to_string(CactusLetter l) {
  return "s(" + std::to_string(l.i) + "," + std::to_string(l.j) + ")";
}

std::string to_string(const CactusWord& w) {
  std::string out;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (t) out += ' ';
    out += to_string(w.letters()[t]);
  }
  return out;
}

nlohmann::json word_to_json(const CactusWord& w) {
  nlohmann::json letters = nlohmann::json::array();
  for (const CactusLetter& l : w.letters()) letters.push_back({l.i, l.j});
  return {{"n", w.n()}, {"letters", letters}};
}

CactusWord word_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("letters"))
    throw ParseError("word json: expected object with \"n\" and \"letters\"");
  std::vector<CactusLetter> letters;
  for (const auto& entry : j.at("letters")) {
    if (!entry.is_array() || entry.size() != 2) throw ParseError("word json: letter must be [i,j]");
    letters.push_back(CactusLetter{entry[0].get<int>(), entry[1].get<int>()});
  }
  try {
    return CactusWord(j.at("n").get<int>(), std::move(letters));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

nlohmann::json perm_to_json(const Permutation& s) { return nlohmann::json(s.images()); }

nlohmann::json sd_to_json(const SemidirectElement& e) {
  const int n = e.perm.n();
  LiftLetters& reg = lift_letters(n);
  nlohmann::json diagram = nlohmann::json::array();
  nlohmann::json lifts = nlohmann::json::array();
  for (int g : e.diagram.letters) {
    diagram.push_back(lift_shadow(n, reg.set_of(g)));
    lifts.push_back(reg.set_of(g));
  }
  return {{"diagram", diagram}, {"lifts", lifts}, {"perm", e.perm.images()}};
}

}  // namespace ajcactus
