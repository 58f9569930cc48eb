#ifndef AJCACTUS_REP_HPP_
#define AJCACTUS_REP_HPP_

#include <Eigen/Dense>
#include <gmpxx.h>

#include "ajcactus/racg.hpp"

namespace Eigen {

// Standard adaptor for GMP integers as an Eigen scalar.
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50,
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace ajcactus {

// Exact integer matrices; entries are unbounded.
using IntMatrix = Eigen::Matrix<mpz_class, Eigen::Dynamic, Eigen::Dynamic>;

bool exact_equal(const IntMatrix& a, const IntMatrix& b);
bool is_identity_matrix(const IntMatrix& a);

// Standard geometric representation of a right-angled Coxeter group: each
// generator g acts on Z^d by R_g(e_h) = e_h - 2 B(g,h) e_g with B(g,g) = 1,
// B(g,h) = 0 for commuting pairs and -1 otherwise. Faithful on the RACG, so
// word matrices decide equality; used as the matrix oracle.
class GeometricRep {
 public:
  explicit GeometricRep(AlphabetPtr alphabet);

  int dimension() const { return alphabet_->size(); }
  const AlphabetPtr& alphabet() const { return alphabet_; }

  IntMatrix generator_matrix(int g) const;

  // m := m * R_g, as a column update in O(d * #non-commuting) instead of a
  // full product.
  void right_multiply_generator(IntMatrix& m, int g) const;

  // Ordered product of the generator matrices of w.
  IntMatrix word_matrix(const RacgWord& w) const;

 private:
  AlphabetPtr alphabet_;
};

}  // namespace ajcactus

#endif  // AJCACTUS_REP_HPP_
