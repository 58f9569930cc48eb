#include "ajcactus/presentations.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ajcactus/affine_cactus.hpp"
#include "ajcactus/coxeter_cactus.hpp"

namespace ajcactus {

namespace {

std::string join_ints(const std::vector<int>& vs, char sep) {
  std::string out;
  for (std::size_t t = 0; t < vs.size(); ++t) {
    if (t) out += sep;
    out += std::to_string(vs[t]);
  }
  return out;
}

}  // namespace

TextPresentation presentation_ajn(int n) {
  if (n < 2) throw std::invalid_argument("presentation: n must be >= 2");
  TextPresentation p;
  p.kind = "ajn";
  std::map<std::pair<int, int>, int> index;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      index[{i, j}] = static_cast<int>(p.names.size());
      p.names.push_back("s(" + std::to_string(i) + "," + std::to_string(j) + ")");
      p.algebra_names.push_back("s_" + std::to_string(i) + "_" + std::to_string(j));
    }
  }
  for (const auto& [lhs, rhs] : defining_relations(n)) {
    std::vector<int> l, r;
    for (const CactusLetter& x : lhs.letters()) l.push_back(index.at({x.i, x.j}));
    for (const CactusLetter& x : rhs.letters()) r.push_back(index.at({x.i, x.j}));
    p.relations.push_back({std::move(l), std::move(r)});
  }
  return p;
}

TextPresentation presentation_adn(int n, int min_size) {
  TextPresentation p;
  p.kind = "adn";
  const auto sets = enumerate_circular_sets(n, min_size);
  for (const CircularSet& s : sets) {
    p.names.push_back("t(" + join_ints(s.seq(), ',') + ")");
    p.algebra_names.push_back("t_" + join_ints(s.seq(), '_'));
  }
  const int count = static_cast<int>(sets.size());
  for (int g = 0; g < count; ++g) p.relations.push_back({{g, g}, {}});
  for (int a = 0; a < count; ++a)
    for (int b = a + 1; b < count; ++b)
      if (commute_ad(sets[static_cast<std::size_t>(a)], sets[static_cast<std::size_t>(b)]))
        p.relations.push_back({{a, b}, {b, a}});
  return p;
}

TextPresentation presentation_jn(int n) {
  if (n < 2) throw std::invalid_argument("presentation: n must be >= 2");
  TextPresentation p;
  p.kind = "jn";
  std::vector<CactusLetter> gens;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      gens.push_back(CactusLetter{i, j});
      p.names.push_back("s(" + std::to_string(i) + "," + std::to_string(j) + ")");
      p.algebra_names.push_back("s_" + std::to_string(i) + "_" + std::to_string(j));
    }
  }
  const int count = static_cast<int>(gens.size());
  for (int g = 0; g < count; ++g) p.relations.push_back({{g, g}, {}});
  for (int a = 0; a < count; ++a)
    for (int b = a + 1; b < count; ++b) {
      const CactusLetter x = gens[static_cast<std::size_t>(a)], y = gens[static_cast<std::size_t>(b)];
      if (x.j < y.i || y.j < x.i) p.relations.push_back({{a, b}, {b, a}});
    }
  std::map<std::pair<int, int>, int> index;
  for (int g = 0; g < count; ++g) index[{gens[static_cast<std::size_t>(g)].i, gens[static_cast<std::size_t>(g)].j}] = g;
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      if (a == b) continue;
      const CactusLetter x = gens[static_cast<std::size_t>(a)], y = gens[static_cast<std::size_t>(b)];
      if (y.i <= x.i && x.j <= y.j) {
        const int qi = y.i + y.j - x.j, qj = y.i + y.j - x.i;
        p.relations.push_back({{a, b}, {b, index.at({qi, qj})}});
      }
    }
  }
  return p;
}

TextPresentation presentation_dn(int n) {
  TextPresentation p;
  p.kind = "dn";
  const DnAlphabet& dn = dn_alphabet(n);
  for (int g = 0; g < dn.size(); ++g) {
    std::vector<int> elems;
    for (int q = 1; q <= n; ++q)
      if (dn.mask_of(g) & (std::uint64_t{1} << (q - 1))) elems.push_back(q);
    p.names.push_back("t{" + join_ints(elems, ',') + "}");
    p.algebra_names.push_back("t_" + join_ints(elems, '_'));
  }
  for (int g = 0; g < dn.size(); ++g) p.relations.push_back({{g, g}, {}});
  for (int a = 0; a < dn.size(); ++a)
    for (int b = a + 1; b < dn.size(); ++b)
      if (dn.alphabet()->commutes(a, b)) p.relations.push_back({{a, b}, {b, a}});
  return p;
}

TextPresentation presentation_coxeter_cactus(int n) {
  TextPresentation p;
  p.kind = "coxeter-cactus";
  const CWPresentation pres = presentation(CoxeterDiagram(DiagramShape::kCycle, n));
  for (const Arc& a : pres.generators) {
    const std::vector<int> vs = arc_vertices(pres.diagram, a);
    p.names.push_back("S(" + join_ints(vs, ',') + ")");
    p.algebra_names.push_back("S_" + join_ints(vs, '_'));
  }
  p.relations = pres.relations;
  return p;
}

namespace {

std::string spell(const TextPresentation& p, const std::vector<int>& word, bool algebra) {
  if (word.empty()) return algebra ? "" : "1";
  std::string out;
  for (std::size_t t = 0; t < word.size(); ++t) {
    if (t) out += algebra ? "*" : " ";
    out += (algebra ? p.algebra_names : p.names)[static_cast<std::size_t>(word[t])];
  }
  return out;
}

}  // namespace

std::string format_plain(const TextPresentation& p) {
  std::string out;
  for (const std::string& g : p.names) out += "gen: " + g + "\n";
  for (const auto& [lhs, rhs] : p.relations)
    out += "rel: " + spell(p, lhs, false) + " = " + spell(p, rhs, false) + "\n";
  return out;
}

std::string format_algebra(const TextPresentation& p) {
  std::string out = "generators := [";
  for (std::size_t t = 0; t < p.algebra_names.size(); ++t) {
    if (t) out += ", ";
    out += p.algebra_names[t];
  }
  out += "];\nrelators := [";
  for (std::size_t t = 0; t < p.relations.size(); ++t) {
    if (t) out += ", ";
    std::vector<int> relator = p.relations[t].first;
    relator.insert(relator.end(), p.relations[t].second.rbegin(), p.relations[t].second.rend());
    out += spell(p, relator, true);
  }
  out += "];\n";
  return out;
}

nlohmann::json presentation_to_json(const TextPresentation& p) {
  nlohmann::json rels = nlohmann::json::array();
  for (const auto& [lhs, rhs] : p.relations) rels.push_back({{"lhs", lhs}, {"rhs", rhs}});
  return {{"kind", p.kind}, {"generators", p.names}, {"relations", rels}};
}

}  // namespace ajcactus
