#include "ajcactus/coxeter_cactus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ajcactus {

CoxeterDiagram::CoxeterDiagram(DiagramShape shape, int n) : shape_(shape), n_(n) {
  if (shape == DiagramShape::kPath && n < 1) throw std::invalid_argument("diagram: path needs n >= 1");
  if (shape == DiagramShape::kCycle && n < 3)
    throw std::invalid_argument("diagram: cycle needs n >= 3 (a 2-cycle is degenerate)");
}

bool CoxeterDiagram::adjacent(int u, int v) const {
  if (u < 1 || v < 1 || u > n_ || v > n_) throw std::invalid_argument("diagram: vertex out of range");
  if (u == v) return false;
  const int lo = std::min(u, v), hi = std::max(u, v);
  if (hi - lo == 1) return true;
  return shape_ == DiagramShape::kCycle && lo == 1 && hi == n_;
}

std::vector<int> arc_vertices(const CoxeterDiagram& d, Arc a) {
  if (a.length < 1) throw std::invalid_argument("arc: empty");
  if (a.start < 1 || a.start > d.n()) throw std::invalid_argument("arc: start out of range");
  if (d.shape() == DiagramShape::kPath && a.start + a.length - 1 > d.n())
    throw std::invalid_argument("arc: runs past the end of the path");
  if (d.shape() == DiagramShape::kCycle && a.length >= d.n())
    throw std::invalid_argument("arc: must be a proper subset of the cycle");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(a.length));
  for (int t = 0; t < a.length; ++t) out.push_back((a.start - 1 + t) % d.n() + 1);
  return out;
}

std::string to_string(Arc a) {
  return "arc(" + std::to_string(a.start) + ",len=" + std::to_string(a.length) + ")";
}

std::vector<Arc> enumerate_irr_finite(const CoxeterDiagram& d) {
  std::vector<Arc> out;
  if (d.shape() == DiagramShape::kPath) {
    for (int len = 1; len <= d.n(); ++len)
      for (int start = 1; start + len - 1 <= d.n(); ++start) out.push_back(Arc{start, len});
  } else {
    for (int len = 1; len < d.n(); ++len)
      for (int start = 1; start <= d.n(); ++start) out.push_back(Arc{start, len});
  }
  return out;
}

// Maximal runs of consecutive vertices (wrapping for cycles); each run is a
// path, the finite-type condition for simply-laced diagrams.
static std::vector<Arc> connected_components(const CoxeterDiagram& d, const std::vector<int>& vertices) {
  std::set<int> vs(vertices.begin(), vertices.end());
  if (vs.empty()) throw std::invalid_argument("omega_action: empty vertex set");
  if (vs.size() != vertices.size()) throw std::invalid_argument("omega_action: repeated vertex");
  for (int v : vs)
    if (v < 1 || v > d.n()) throw std::invalid_argument("omega_action: vertex out of range");
  if (d.shape() == DiagramShape::kCycle && static_cast<int>(vs.size()) == d.n())
    throw std::invalid_argument("omega_action: whole cycle is not of finite type");

  std::vector<Arc> comps;
  int run_start = 0, prev = 0;
  for (int v : vs) {
    if (run_start == 0)
      run_start = v;
    else if (v != prev + 1) {
      comps.push_back(Arc{run_start, prev - run_start + 1});
      run_start = v;
    }
    prev = v;
  }
  comps.push_back(Arc{run_start, prev - run_start + 1});
  if (d.shape() == DiagramShape::kCycle && comps.size() >= 2) {
    const Arc first = comps.front();
    const Arc last = comps.back();
    if (first.start == 1 && last.start + last.length - 1 == d.n()) {
      comps.front() = Arc{last.start, last.length + first.length};
      comps.pop_back();
    }
  }
  return comps;
}

std::vector<int> omega_action(const CoxeterDiagram& d, const std::vector<int>& j_vertices,
                              const std::vector<int>& i_vertices) {
  const std::vector<Arc> comps = connected_components(d, j_vertices);
  std::set<int> in_j(j_vertices.begin(), j_vertices.end());
  bool any_in = false, any_out = false;
  for (int v : i_vertices) (in_j.count(v) ? any_in : any_out) = true;
  if (any_in && any_out)
    throw std::invalid_argument("omega_action: I must be inside J or disjoint from it");
  if (!any_in) return i_vertices;

  std::vector<int> out;
  out.reserve(i_vertices.size());
  for (int v : i_vertices) {
    int image = v;
    for (const Arc& c : comps) {
      const int offset = ((v - c.start) % d.n() + d.n()) % d.n();
      if (offset < c.length) {
        image = (c.start - 1 + (c.length - 1 - offset)) % d.n() + 1;
        break;
      }
    }
    out.push_back(image);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool product_condition(const CoxeterDiagram& d, Arc I, Arc J) {
  const std::vector<int> vi = arc_vertices(d, I);
  const std::vector<int> vj = arc_vertices(d, J);
  for (int u : vi)
    for (int v : vj)
      if (u == v || d.adjacent(u, v)) return false;
  return true;
}

CWPresentation presentation(const CoxeterDiagram& d) {
  CWPresentation pres{d, enumerate_irr_finite(d), {}};
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> vertex_lists;
  for (std::size_t g = 0; g < pres.generators.size(); ++g) {
    std::vector<int> vs = arc_vertices(d, pres.generators[g]);
    std::sort(vs.begin(), vs.end());
    index[vs] = static_cast<int>(g);
    vertex_lists.push_back(std::move(vs));
  }
  const int count = static_cast<int>(pres.generators.size());
  for (int g = 0; g < count; ++g) pres.relations.push_back({{g, g}, {}});
  for (int a = 0; a < count; ++a)
    for (int b = a + 1; b < count; ++b)
      if (product_condition(d, pres.generators[a], pres.generators[b]))
        pres.relations.push_back({{a, b}, {b, a}});
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      if (a == b) continue;
      const std::vector<int>& va = vertex_lists[static_cast<std::size_t>(a)];
      const std::vector<int>& vb = vertex_lists[static_cast<std::size_t>(b)];
      if (!std::includes(vb.begin(), vb.end(), va.begin(), va.end())) continue;
      const std::vector<int> image = omega_action(d, vb, va);
      const auto it = index.find(image);
      if (it == index.end()) throw std::logic_error("presentation: omega image is not a generator");
      pres.relations.push_back({{a, b}, {b, it->second}});
    }
  }
  return pres;
}

namespace {

std::string word_key(const CactusWord& w) {
  std::string out;
  for (const CactusLetter& l : w.letters()) {
    out += 's';
    out += std::to_string(l.i);
    out += ',';
    out += std::to_string(l.j);
    out += ';';
  }
  return out;
}

std::string relation_key(const CactusWord& lhs, const CactusWord& rhs) {
  const std::string a = word_key(lhs), b = word_key(rhs);
  return a <= b ? a + "=" + b : b + "=" + a;
}

}  // namespace

IsoCertificate iso_check(int n) {
  if (n < 3) throw std::invalid_argument("iso_check: needs n >= 3");
  const CoxeterDiagram cycle(DiagramShape::kCycle, n);
  const CWPresentation pres = presentation(cycle);

  IsoCertificate cert;
  std::vector<CactusLetter> image;
  image.reserve(pres.generators.size());
  for (const Arc& a : pres.generators) {
    const CactusLetter l{a.start, mod_strand(a.start + a.length, n)};
    image.push_back(l);
    cert.table.push_back({a, l});
  }

  auto translate = [&](const std::vector<int>& word) {
    std::vector<CactusLetter> out;
    out.reserve(word.size());
    for (int g : word) out.push_back(image[static_cast<std::size_t>(g)]);
    return CactusWord(n, std::move(out));
  };

  std::set<std::string> cw_keys;
  std::vector<std::pair<CactusWord, CactusWord>> cw_relations;
  for (const auto& [lhs, rhs] : pres.relations) {
    cw_relations.emplace_back(translate(lhs), translate(rhs));
    cw_keys.insert(relation_key(cw_relations.back().first, cw_relations.back().second));
  }

  std::set<std::string> aj_keys;
  const auto aj_relations = defining_relations(n);
  for (const auto& [lhs, rhs] : aj_relations) aj_keys.insert(relation_key(lhs, rhs));

  for (const auto& [lhs, rhs] : cw_relations) {
    if (!aj_keys.count(relation_key(lhs, rhs))) {
      cert.mismatch = "generalized cactus relation not satisfied by AJ_n generators: " +
                      relation_key(lhs, rhs);
      return cert;
    }
  }
  for (const auto& [lhs, rhs] : aj_relations) {
    if (!cw_keys.count(relation_key(lhs, rhs))) {
      cert.mismatch = "AJ_n relation missing from the generalized cactus presentation: " +
                      relation_key(lhs, rhs);
      return cert;
    }
  }
  if (pres.generators.size() != static_cast<std::size_t>(n) * (n - 1)) {
    cert.mismatch = "generator count mismatch";
    return cert;
  }
  cert.ok = true;
  return cert;
}

}  // namespace ajcactus
