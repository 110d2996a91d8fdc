#pragma once

#include "colombeau/box.hpp"
#include "colombeau/gen_number.hpp"
#include "colombeau/test_function.hpp"

#include <map>
#include <vector>

namespace colombeau {

/// Generalized point in the G^e setting: a rule from test functions into
/// Omega with a compact support certificate (range contained in K by
/// construction). Two shapes cover everything the constructions need: a
/// per-coordinate combinator rule, and the exact tag-matched table of the
/// point-construction lemma.
class GenPointGe {
 public:
  /// Combinator-built point: one real-valued coordinate expression each.
  GenPointGe(std::vector<NumExprPtr> coords, Box support_box);

  /// Evidence-table point: scaled battery generators map to recorded
  /// locations, everything else to x0.
  GenPointGe(std::map<std::pair<std::int64_t, double>, Vec> table, Vec x0, Box support_box);

  int dim() const { return static_cast<int>(support_box_.lo.size()); }
  const Box& support_box() const { return support_box_; }
  bool is_table() const { return !table_.empty() || coords_.empty(); }
  const std::map<std::pair<std::int64_t, double>, Vec>& table() const { return table_; }
  const Vec& fallback() const { return x0_; }
  const std::vector<NumExprPtr>& coords() const { return coords_; }

  /// Evaluate the rule; throws if the value escapes the certificate box
  /// (the certificate is checked on every evaluation).
  Vec operator()(const TestFunction& phi) const;

 private:
  std::vector<NumExprPtr> coords_;
  std::map<std::pair<std::int64_t, double>, Vec> table_;
  Vec x0_;
  Box support_box_;
};

}  // namespace colombeau
