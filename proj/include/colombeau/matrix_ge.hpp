#pragma once

#include "colombeau/gen_number.hpp"

#include <vector>

namespace colombeau {

/// Square matrix over the generalized numbers. Entrywise rule composition
/// keeps the Cramer identities exact at the representative level.
class MatrixGe {
 public:
  MatrixGe(int m, GenNumberGe fill);
  explicit MatrixGe(std::vector<std::vector<GenNumberGe>> rows);

  int size() const { return m_; }
  const GenNumberGe& at(int i, int j) const;
  GenNumberGe& at(int i, int j);

  static MatrixGe diagonal(int m, const GenNumberGe& d);
  static MatrixGe identity(int m);

  friend MatrixGe operator*(const MatrixGe& a, const MatrixGe& b);
  friend MatrixGe operator-(const MatrixGe& a, const MatrixGe& b);

 private:
  int m_;
  std::vector<GenNumberGe> entries_;
};

/// Cofactor-expansion determinant; refuses m > 6 (cost grows like m!).
GenNumberGe det(const MatrixGe& a);

MatrixGe adjugate(const MatrixGe& a);

/// adj(A) * invert(det A): an exact inverse wherever det is nonzero.
MatrixGe adjugate_inverse(const MatrixGe& a);

/// Non-degeneracy is invertibility of the determinant.
Verdict nondegenerate_verdict(const MatrixGe& a, const TestBattery& battery);

}  // namespace colombeau
