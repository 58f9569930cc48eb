#ifndef AJCACTUS_COXETER_CACTUS_HPP_
#define AJCACTUS_COXETER_CACTUS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "ajcactus/affine_cactus.hpp"

namespace ajcactus {

enum class DiagramShape { kPath, kCycle };

// Simply-laced Coxeter diagram on vertices 1..n: a path (type A_n) or a
// cycle (type affine A, n >= 3; a 2-cycle is not a simple graph and is
// rejected). Edges carry braid label 3, non-edges label 2.
class CoxeterDiagram {
 public:
  CoxeterDiagram(DiagramShape shape, int n);

  DiagramShape shape() const { return shape_; }
  int n() const { return n_; }
  bool adjacent(int u, int v) const;

  friend bool operator==(const CoxeterDiagram&, const CoxeterDiagram&) = default;

 private:
  DiagramShape shape_;
  int n_;
};

// Connected vertex run (start, start+1, ...), wrapping for cycles; proper
// (never the whole cycle). Generates a finite parabolic of type A_length.
struct Arc {
  int start;
  int length;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

std::vector<int> arc_vertices(const CoxeterDiagram& d, Arc a);
std::string to_string(Arc a);

// All vertex subsets generating finite irreducible parabolics: the arcs,
// ordered by length then start.
std::vector<Arc> enumerate_irr_finite(const CoxeterDiagram& d);

// Conjugation action of the longest element of W_J at diagram level: each
// connected component of J is mirrored. Defined for I disjoint from J
// (fixed) or I inside J (mirrored); mixed inputs are rejected, the cactus
// presentation never queries them. J must not cover a whole cycle.
std::vector<int> omega_action(const CoxeterDiagram& d, const std::vector<int>& j_vertices,
                              const std::vector<int>& i_vertices);

// W_{I u J} = W_I x W_J: the arcs are disjoint and no edge joins them.
bool product_condition(const CoxeterDiagram& d, Arc I, Arc J);

// Generalized cactus presentation over the diagram: involutions,
// commutations for product-condition pairs, and quasi-commutations
// sigma_I sigma_J = sigma_J sigma_{omega_J(I)} for I strictly inside J.
// Relation words hold indices into `generators`.
struct CWPresentation {
  CoxeterDiagram diagram;
  std::vector<Arc> generators;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> relations;
};

CWPresentation presentation(const CoxeterDiagram& d);

// Mechanical check of AJ_n ~ C_W(affine A): the arc <-> circular interval
// bijection (k vertices from rho_i <-> the (k+1)-strand interval [i,i+k]_c)
// must carry the generalized cactus relations onto defining_relations(n)
// bijectively. The certificate lists the generator bijection.
struct IsoCertificate {
  bool ok = false;
  std::vector<std::pair<Arc, CactusLetter>> table;
  std::string mismatch;  // first offending relation when !ok
};

IsoCertificate iso_check(int n);

}  // namespace ajcactus

#endif  // AJCACTUS_COXETER_CACTUS_HPP_
