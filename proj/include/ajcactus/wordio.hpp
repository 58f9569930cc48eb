#ifndef AJCACTUS_WORDIO_HPP_
#define AJCACTUS_WORDIO_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ajcactus/affine_cactus.hpp"

namespace ajcactus {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Word grammar: tokens "s(i,j)" separated by whitespace or '*', each with an
// optional integer exponent "^m" (negative m expands through the reversed
// word; for a single involutive letter that is just |m| copies).
CactusWord parse_cactus_word(std::string_view text, int n);
ClassicCactusWord parse_classic_word(std::string_view text, int n);

std::string to_string(CactusLetter l);
std::string to_string(const CactusWord& w);  // "s(1,2) s(3,4)"; empty word -> ""

// JSON schema {"n": int, "letters": [[i,j], ...]}.
nlohmann::json word_to_json(const CactusWord& w);
CactusWord word_from_json(const nlohmann::json& j);

nlohmann::json perm_to_json(const Permutation& s);
nlohmann::json sd_to_json(const SemidirectElement& e);

}  // namespace ajcactus

#endif  // AJCACTUS_WORDIO_HPP_
