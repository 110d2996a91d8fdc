#pragma once

#include "colombeau/eps_grid.hpp"
#include "colombeau/types.hpp"

#include <optional>
#include <vector>

namespace colombeau {

/// Axis-aligned box; open or closed depending on use site.
struct Box {
  Vec lo, hi;

  int dim() const { return static_cast<int>(lo.size()); }
  Vec center() const { return 0.5 * (lo + hi); }
  double diameter() const { return (hi - lo).norm(); }

  bool contains_open(const Vec& p) const;
  bool contains_closed(const Vec& p) const;
  /// Strict containment of a closed box in this open box.
  bool strictly_contains(const Box& b) const;
  bool overlaps_open(const Box& b) const;
  std::optional<Box> intersection_open(const Box& b) const;
  /// Distance of an interior point to the box boundary.
  double boundary_distance(const Vec& p) const;

  static Box ball_bounds(const Vec& center, double radius);
  static Box of(std::initializer_list<double> lo, std::initializer_list<double> hi);
};

/// Closed box K together with the finite sample grid standing in for it
/// in sup-sweeps. Grids are uniform tensor products, optionally refined
/// by dyadic points accumulating at an anchor so that concentrating nets
/// stay visible on every scale of the eps grid.
class CompactBox {
 public:
  CompactBox(Box box, int points_per_axis);

  const Box& box() const { return box_; }
  const std::vector<Vec>& grid() const { return grid_; }
  int dim() const { return box_.dim(); }

  void add_point(const Vec& p);
  /// Adds anchor + m * eps * direction for every grid eps and mantissa m,
  /// skipping points outside the box.
  void add_dyadic(const EpsGrid& grid, const Vec& anchor, const Vec& direction,
                  const std::vector<double>& mantissas = {1.0});

 private:
  Box box_;
  std::vector<Vec> grid_;
};

/// Polyline joining two points through the box overlap graph; every leg
/// stays inside a single box.
struct Polyline {
  std::vector<Vec> vertices;
  std::vector<int> leg_box;  // box index carrying each leg
  double length = 0.0;
};

/// Omega as a finite union of open axis-aligned boxes.
class Domain {
 public:
  Domain(int dim, std::vector<Box> boxes);

  static Domain interval(double lo, double hi);
  static Domain box2d(const Box& b);

  int dim() const { return dim_; }
  const std::vector<Box>& boxes() const { return boxes_; }
  bool connected() const { return connected_; }

  bool contains_point(const Vec& p) const;
  /// Closed box covered by the open union (bisection cover check; exact
  /// up to a relative tolerance, and strict containment is what compact
  /// containment needs anyway).
  bool contains_closed_box(const Box& b) const;
  bool contains_closed_ball(const Vec& center, double radius) const;

  int box_index_of(const Vec& p) const;  // -1 if outside

  /// Shortest-hop polyline between two interior points through overlap
  /// centers. Throws DomainError when endpoints sit in components that
  /// the overlap graph does not join.
  Polyline polyline_between(const Vec& a, const Vec& b) const;

  /// Compact tube around a polyline: one shrunk closed box per leg, each
  /// strictly inside the leg's open box.
  std::vector<Box> tube_around(const Polyline& line) const;

 private:
  int dim_;
  std::vector<Box> boxes_;
  std::vector<std::vector<int>> adj_;
  bool connected_ = false;
};

}  // namespace colombeau
