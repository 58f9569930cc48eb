#ifndef AJCACTUS_PRESENTATIONS_HPP_
#define AJCACTUS_PRESENTATIONS_HPP_

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace ajcactus {

// Printable presentation: generator names plus relation words over generator
// indices. `algebra_names` are identifier-safe aliases for the algebra
// export format.
struct TextPresentation {
  std::string kind;
  std::vector<std::string> names;
  std::vector<std::string> algebra_names;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> relations;
};

TextPresentation presentation_ajn(int n);
TextPresentation presentation_adn(int n, int min_size = 2);
TextPresentation presentation_jn(int n);
TextPresentation presentation_dn(int n);
TextPresentation presentation_coxeter_cactus(int n);

// "gen:" / "rel: lhs = rhs" lines; the empty side prints as "1".
std::string format_plain(const TextPresentation& p);

// Generator list plus relator words (lhs followed by the reversed rhs).
std::string format_algebra(const TextPresentation& p);

nlohmann::json presentation_to_json(const TextPresentation& p);

}  // namespace ajcactus

#endif  // AJCACTUS_PRESENTATIONS_HPP_
