#include "colombeau/gen_point.hpp"

#include "colombeau/errors.hpp"

namespace colombeau {

GenPointGe::GenPointGe(std::vector<NumExprPtr> coords, Box support_box)
    : coords_(std::move(coords)), support_box_(std::move(support_box)) {
  if (coords_.size() != static_cast<size_t>(support_box_.lo.size()))
    throw PreconditionError("GenPointGe: coordinate count does not match the box dimension");
}

GenPointGe::GenPointGe(std::map<std::pair<std::int64_t, double>, Vec> table, Vec x0, Box support_box)
    : table_(std::move(table)), x0_(std::move(x0)), support_box_(std::move(support_box)) {
  if (!support_box_.contains_closed(x0_))
    throw PreconditionError("GenPointGe: fallback point outside the support box");
  for (const auto& [key, x] : table_)
    if (!support_box_.contains_closed(x))
      throw PreconditionError("GenPointGe: table value outside the support box");
}

Vec GenPointGe::operator()(const TestFunction& phi) const {
  Vec x;
  if (is_table()) {
    x = x0_;
    if (phi.center().isZero(0.0)) {
      auto it = table_.find({phi.generator_id(), phi.scale()});
      if (it != table_.end()) x = it->second;
    }
  } else {
    x = Vec(dim());
    for (int i = 0; i < dim(); ++i) {
      Cplx v = eval(*coords_[static_cast<size_t>(i)], phi);
      x[i] = v.real();
    }
  }
  if (!support_box_.contains_closed(x))
    throw DomainError("GenPointGe: rule value escaped the compact support certificate");
  return x;
}

}  // namespace colombeau
