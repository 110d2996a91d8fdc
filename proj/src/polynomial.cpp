#include "colombeau/polynomial.hpp"

#include <cmath>

namespace colombeau {

std::vector<MultiIndex> multi_indices_up_to(int n, int max_order) {
  std::vector<MultiIndex> out;
  MultiIndex cur(static_cast<size_t>(n), 0);
  for (int total = 0; total <= max_order; ++total) {
    // enumerate all alpha with |alpha| == total, lexicographically
    std::vector<MultiIndex> level;
    MultiIndex a(static_cast<size_t>(n), 0);
    // simple odometer over compositions of `total` into n parts
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
      if (pos == n - 1) {
        a[static_cast<size_t>(pos)] = remaining;
        level.push_back(a);
        return;
      }
      for (int k = remaining; k >= 0; --k) {
        a[static_cast<size_t>(pos)] = k;
        self(self, pos + 1, remaining - k);
      }
    };
    rec(rec, 0, total);
    for (auto& m : level) out.push_back(std::move(m));
  }
  (void)cur;
  return out;
}

std::vector<MultiIndex> sub_indices(const MultiIndex& alpha) {
  std::vector<MultiIndex> out;
  MultiIndex b(alpha.size(), 0);
  while (true) {
    out.push_back(b);
    size_t i = 0;
    while (i < alpha.size()) {
      if (b[i] < alpha[i]) {
        ++b[i];
        break;
      }
      b[i] = 0;
      ++i;
    }
    if (i == alpha.size()) break;
  }
  return out;
}

Polynomial Polynomial::constant(int dim, double c) {
  Polynomial p(dim);
  if (c != 0.0) p.terms_[MultiIndex(static_cast<size_t>(dim), 0)] = c;
  return p;
}

Polynomial Polynomial::monomial(int dim, const MultiIndex& a, double c) {
  Polynomial p(dim);
  if (c != 0.0) p.terms_[a] = c;
  return p;
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [a, c] : terms_) d = std::max(d, order_of(a));
  return d;
}

double Polynomial::coeff(const MultiIndex& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? 0.0 : it->second;
}

void Polynomial::add_term(const MultiIndex& a, double c) {
  if (c == 0.0) return;
  double& v = terms_[a];
  v += c;
  if (v == 0.0) terms_.erase(a);
}

double Polynomial::operator()(const Vec& y) const {
  double s = 0.0;
  for (const auto& [a, c] : terms_) s += c * pow_vec(y, a);
  return s;
}

Polynomial Polynomial::derivative(int axis) const {
  Polynomial r(dim_);
  for (const auto& [a, c] : terms_) {
    int k = a[static_cast<size_t>(axis)];
    if (k == 0) continue;
    MultiIndex b = a;
    b[static_cast<size_t>(axis)] = k - 1;
    r.add_term(b, c * k);
  }
  return r;
}

Polynomial Polynomial::derivative(const MultiIndex& alpha) const {
  Polynomial r = *this;
  for (size_t i = 0; i < alpha.size(); ++i)
    for (int k = 0; k < alpha[i]; ++k) r = r.derivative(static_cast<int>(i));
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r(a.dim());
  for (const auto& [m1, c1] : a.terms())
    for (const auto& [m2, c2] : b.terms()) {
      MultiIndex m(m1.size());
      for (size_t i = 0; i < m.size(); ++i) m[i] = m1[i] + m2[i];
      r.add_term(m, c1 * c2);
    }
  return r;
}

Polynomial operator*(double c, const Polynomial& p) {
  Polynomial r(p.dim());
  for (const auto& [a, pc] : p.terms()) r.add_term(a, c * pc);
  return r;
}

}  // namespace colombeau
