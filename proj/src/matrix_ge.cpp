#include "colombeau/matrix_ge.hpp"

#include "colombeau/errors.hpp"

namespace colombeau {

MatrixGe::MatrixGe(int m, GenNumberGe fill) : m_(m), entries_(static_cast<size_t>(m * m), fill) {
  if (m < 1) throw PreconditionError("MatrixGe: size must be positive");
}

MatrixGe::MatrixGe(std::vector<std::vector<GenNumberGe>> rows)
    : m_(static_cast<int>(rows.size())), entries_() {
  if (rows.empty()) throw PreconditionError("MatrixGe: empty");
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != m_) throw PreconditionError("MatrixGe: not square");
  entries_.reserve(static_cast<size_t>(m_ * m_));
  for (auto& row : rows)
    for (auto& e : row) entries_.push_back(std::move(e));
}

const GenNumberGe& MatrixGe::at(int i, int j) const {
  return entries_[static_cast<size_t>(i * m_ + j)];
}

GenNumberGe& MatrixGe::at(int i, int j) { return entries_[static_cast<size_t>(i * m_ + j)]; }

MatrixGe MatrixGe::diagonal(int m, const GenNumberGe& d) {
  MatrixGe a(m, GenNumberGe::constant(Cplx(0.0, 0.0)));
  for (int i = 0; i < m; ++i) a.at(i, i) = d;
  return a;
}

MatrixGe MatrixGe::identity(int m) { return diagonal(m, GenNumberGe::constant(Cplx(1.0, 0.0))); }

MatrixGe operator*(const MatrixGe& a, const MatrixGe& b) {
  if (a.size() != b.size()) throw PreconditionError("MatrixGe: size mismatch");
  const int m = a.size();
  MatrixGe out(m, GenNumberGe::constant(Cplx(0.0, 0.0)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      GenNumberGe acc = a.at(i, 0) * b.at(0, j);
      for (int k = 1; k < m; ++k) acc = acc + a.at(i, k) * b.at(k, j);
      out.at(i, j) = acc;
    }
  return out;
}

MatrixGe operator-(const MatrixGe& a, const MatrixGe& b) {
  if (a.size() != b.size()) throw PreconditionError("MatrixGe: size mismatch");
  const int m = a.size();
  MatrixGe out(m, GenNumberGe::constant(Cplx(0.0, 0.0)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
  return out;
}

namespace {

MatrixGe minor_of(const MatrixGe& a, int row, int col) {
  const int m = a.size();
  MatrixGe out(m - 1, GenNumberGe::constant(Cplx(0.0, 0.0)));
  int r = 0;
  for (int i = 0; i < m; ++i) {
    if (i == row) continue;
    int c = 0;
    for (int j = 0; j < m; ++j) {
      if (j == col) continue;
      out.at(r, c) = a.at(i, j);
      ++c;
    }
    ++r;
  }
  return out;
}

}  // namespace

GenNumberGe det(const MatrixGe& a) {
  if (a.size() > 6)
    throw PreconditionError("det: cofactor expansion refused for m > 6; decompose the scenario");
  if (a.size() == 1) return a.at(0, 0);
  GenNumberGe acc = GenNumberGe::constant(Cplx(0.0, 0.0));
  for (int j = 0; j < a.size(); ++j) {
    GenNumberGe term = a.at(0, j) * det(minor_of(a, 0, j));
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

MatrixGe adjugate(const MatrixGe& a) {
  const int m = a.size();
  if (m > 6) throw PreconditionError("adjugate: cofactor expansion refused for m > 6");
  if (m == 1) return MatrixGe::identity(1);
  MatrixGe out(m, GenNumberGe::constant(Cplx(0.0, 0.0)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      GenNumberGe c = det(minor_of(a, i, j));
      if ((i + j) % 2 == 1) c = GenNumberGe::constant(Cplx(-1.0, 0.0)) * c;
      out.at(j, i) = c;  // transpose of the cofactor matrix
    }
  return out;
}

MatrixGe adjugate_inverse(const MatrixGe& a) {
  GenNumberGe dinv = invert_number(det(a));
  MatrixGe adj = adjugate(a);
  const int m = a.size();
  MatrixGe out(m, GenNumberGe::constant(Cplx(0.0, 0.0)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out.at(i, j) = adj.at(i, j) * dinv;
  return out;
}

Verdict nondegenerate_verdict(const MatrixGe& a, const TestBattery& battery) {
  return strictly_nonzero_verdict(det(a), battery);
}

}  // namespace colombeau
