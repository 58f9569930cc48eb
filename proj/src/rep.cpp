#include "ajcactus/rep.hpp"

#include <stdexcept>

namespace ajcactus {

bool exact_equal(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index c = 0; c < a.cols(); ++c)
    for (Eigen::Index r = 0; r < a.rows(); ++r)
      if (a(r, c) != b(r, c)) return false;
  return true;
}

bool is_identity_matrix(const IntMatrix& a) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index c = 0; c < a.cols(); ++c)
    for (Eigen::Index r = 0; r < a.rows(); ++r)
      if (a(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

GeometricRep::GeometricRep(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw std::invalid_argument("geometric rep: missing alphabet");
}

IntMatrix GeometricRep::generator_matrix(int g) const {
  const int d = dimension();
  if (g < 0 || g >= d) throw std::invalid_argument("geometric rep: generator out of range");
  IntMatrix m = IntMatrix::Identity(d, d);
  m(g, g) = -1;
  for (int h = 0; h < d; ++h)
    if (h != g && !alphabet_->commutes(g, h)) m(g, h) = 2;
  return m;
}

void GeometricRep::right_multiply_generator(IntMatrix& m, int g) const {
  const int d = dimension();
  if (m.cols() != d) throw std::invalid_argument("geometric rep: dimension mismatch");
  if (g < 0 || g >= d) throw std::invalid_argument("geometric rep: generator out of range");
  // (m * R_g).col(h) = m.col(h) - 2 B(g,h) m.col(g); only column g of R_g
  // differs from the identity in rows other than its own.
  const IntMatrix cg = m.col(g);
  for (int h = 0; h < d; ++h)
    if (h != g && !alphabet_->commutes(g, h)) m.col(h) += cg * mpz_class(2);
  m.col(g) = -cg;
}

IntMatrix GeometricRep::word_matrix(const RacgWord& w) const {
  if (w.alphabet != alphabet_) throw std::invalid_argument("geometric rep: word over a different alphabet");
  IntMatrix m = IntMatrix::Identity(dimension(), dimension());
  for (int g : w.letters) right_multiply_generator(m, g);
  return m;
}

}  // namespace ajcactus
