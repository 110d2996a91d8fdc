#include "colombeau/box.hpp"

#include "colombeau/errors.hpp"

#include <algorithm>
#include <deque>
#include <queue>

namespace colombeau {

bool Box::contains_open(const Vec& p) const {
  for (Eigen::Index i = 0; i < lo.size(); ++i)
    if (!(lo[i] < p[i] && p[i] < hi[i])) return false;
  return true;
}

bool Box::contains_closed(const Vec& p) const {
  for (Eigen::Index i = 0; i < lo.size(); ++i)
    if (!(lo[i] <= p[i] && p[i] <= hi[i])) return false;
  return true;
}

bool Box::strictly_contains(const Box& b) const {
  for (Eigen::Index i = 0; i < lo.size(); ++i)
    if (!(lo[i] < b.lo[i] && b.hi[i] < hi[i])) return false;
  return true;
}

bool Box::overlaps_open(const Box& b) const {
  for (Eigen::Index i = 0; i < lo.size(); ++i)
    if (!(std::max(lo[i], b.lo[i]) < std::min(hi[i], b.hi[i]))) return false;
  return true;
}

std::optional<Box> Box::intersection_open(const Box& b) const {
  Box r{lo.cwiseMax(b.lo), hi.cwiseMin(b.hi)};
  for (Eigen::Index i = 0; i < lo.size(); ++i)
    if (!(r.lo[i] < r.hi[i])) return std::nullopt;
  return r;
}

double Box::boundary_distance(const Vec& p) const {
  double d = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < lo.size(); ++i) d = std::min({d, p[i] - lo[i], hi[i] - p[i]});
  return d;
}

Box Box::ball_bounds(const Vec& center, double radius) {
  return Box{center.array() - radius, center.array() + radius};
}

Box Box::of(std::initializer_list<double> lo, std::initializer_list<double> hi) {
  Box b;
  b.lo = Vec(static_cast<Eigen::Index>(lo.size()));
  b.hi = Vec(static_cast<Eigen::Index>(hi.size()));
  Eigen::Index i = 0;
  for (double v : lo) b.lo[i++] = v;
  i = 0;
  for (double v : hi) b.hi[i++] = v;
  return b;
}

CompactBox::CompactBox(Box box, int points_per_axis) : box_(std::move(box)) {
  if (points_per_axis < 2) throw PreconditionError("CompactBox: need at least 2 points per axis");
  const int n = box_.dim();
  std::vector<int> idx(static_cast<size_t>(n), 0);
  while (true) {
    Vec p(n);
    for (int i = 0; i < n; ++i) {
      double t = static_cast<double>(idx[static_cast<size_t>(i)]) / (points_per_axis - 1);
      p[i] = box_.lo[i] + t * (box_.hi[i] - box_.lo[i]);
    }
    grid_.push_back(p);
    int i = 0;
    while (i < n) {
      if (++idx[static_cast<size_t>(i)] < points_per_axis) break;
      idx[static_cast<size_t>(i)] = 0;
      ++i;
    }
    if (i == n) break;
  }
}

void CompactBox::add_point(const Vec& p) {
  if (!box_.contains_closed(p)) throw PreconditionError("CompactBox: extra grid point outside box");
  grid_.push_back(p);
}

void CompactBox::add_dyadic(const EpsGrid& grid, const Vec& anchor, const Vec& direction,
                            const std::vector<double>& mantissas) {
  for (double eps : grid.values())
    for (double m : mantissas) {
      Vec p = anchor + m * eps * direction;
      if (box_.contains_closed(p)) grid_.push_back(p);
    }
}

Domain::Domain(int dim, std::vector<Box> boxes) : dim_(dim), boxes_(std::move(boxes)) {
  if (boxes_.empty()) throw PreconditionError("Domain: at least one box required");
  for (const auto& b : boxes_) {
    if (b.dim() != dim_) throw PreconditionError("Domain: box dimension mismatch");
    for (Eigen::Index i = 0; i < dim_; ++i)
      if (!(b.lo[i] < b.hi[i])) throw PreconditionError("Domain: degenerate box");
  }
  adj_.assign(boxes_.size(), {});
  for (size_t i = 0; i < boxes_.size(); ++i)
    for (size_t j = i + 1; j < boxes_.size(); ++j)
      if (boxes_[i].overlaps_open(boxes_[j])) {
        adj_[i].push_back(static_cast<int>(j));
        adj_[j].push_back(static_cast<int>(i));
      }
  std::vector<bool> seen(boxes_.size(), false);
  std::deque<int> work{0};
  seen[0] = true;
  size_t count = 1;
  while (!work.empty()) {
    int b = work.front();
    work.pop_front();
    for (int nb : adj_[static_cast<size_t>(b)])
      if (!seen[static_cast<size_t>(nb)]) {
        seen[static_cast<size_t>(nb)] = true;
        ++count;
        work.push_back(nb);
      }
  }
  connected_ = (count == boxes_.size());
}

Domain Domain::interval(double lo, double hi) { return Domain(1, {Box{vec1(lo), vec1(hi)}}); }

Domain Domain::box2d(const Box& b) { return Domain(2, {b}); }

bool Domain::contains_point(const Vec& p) const {
  for (const auto& b : boxes_)
    if (b.contains_open(p)) return true;
  return false;
}

namespace {

bool covered(const Box& b, const std::vector<Box>& boxes, double tol, int depth) {
  for (const auto& c : boxes)
    if (c.strictly_contains(b)) return true;
  if ((b.hi - b.lo).maxCoeff() < tol || depth > 60) return false;
  // bisect the longest axis
  Eigen::Index axis = 0;
  (b.hi - b.lo).maxCoeff(&axis);
  double mid = 0.5 * (b.lo[axis] + b.hi[axis]);
  Box left = b, right = b;
  left.hi[axis] = mid;
  right.lo[axis] = mid;
  return covered(left, boxes, tol, depth + 1) && covered(right, boxes, tol, depth + 1);
}

}  // namespace

bool Domain::contains_closed_box(const Box& b) const {
  double scale = 0.0;
  for (const auto& c : boxes_) scale = std::max(scale, (c.hi - c.lo).maxCoeff());
  return covered(b, boxes_, 1e-12 * std::max(scale, 1.0), 0);
}

bool Domain::contains_closed_ball(const Vec& center, double radius) const {
  return contains_closed_box(Box::ball_bounds(center, radius));
}

int Domain::box_index_of(const Vec& p) const {
  for (size_t i = 0; i < boxes_.size(); ++i)
    if (boxes_[i].contains_open(p)) return static_cast<int>(i);
  return -1;
}

Polyline Domain::polyline_between(const Vec& a, const Vec& b) const {
  int ba = box_index_of(a), bb = box_index_of(b);
  if (ba < 0 || bb < 0) throw DomainError("polyline_between: endpoint outside domain");

  // BFS over the overlap graph
  std::vector<int> prev(boxes_.size(), -2);
  std::queue<int> work;
  work.push(ba);
  prev[static_cast<size_t>(ba)] = -1;
  while (!work.empty()) {
    int cur = work.front();
    work.pop();
    if (cur == bb) break;
    for (int nb : adj_[static_cast<size_t>(cur)])
      if (prev[static_cast<size_t>(nb)] == -2) {
        prev[static_cast<size_t>(nb)] = cur;
        work.push(nb);
      }
  }
  if (prev[static_cast<size_t>(bb)] == -2)
    throw DomainError("polyline_between: endpoints in different components");

  std::vector<int> hops;
  for (int cur = bb; cur != -1; cur = prev[static_cast<size_t>(cur)]) hops.push_back(cur);
  std::reverse(hops.begin(), hops.end());

  Polyline line;
  line.vertices.push_back(a);
  auto add_leg = [&](const Vec& v, int box) {
    line.length += (v - line.vertices.back()).norm();
    line.vertices.push_back(v);
    line.leg_box.push_back(box);
  };
  add_leg(boxes_[static_cast<size_t>(hops[0])].center(), hops[0]);
  for (size_t k = 0; k + 1 < hops.size(); ++k) {
    auto ov = boxes_[static_cast<size_t>(hops[k])].intersection_open(boxes_[static_cast<size_t>(hops[k + 1])]);
    add_leg(ov->center(), hops[k]);            // leave through the overlap, still in hops[k]
    add_leg(boxes_[static_cast<size_t>(hops[k + 1])].center(), hops[k + 1]);
  }
  add_leg(b, hops.back());
  return line;
}

std::vector<Box> Domain::tube_around(const Polyline& line) const {
  std::vector<Box> tube;
  for (size_t leg = 0; leg + 1 < line.vertices.size(); ++leg) {
    const Box& carrier = boxes_[static_cast<size_t>(line.leg_box[leg])];
    const Vec& u = line.vertices[leg];
    const Vec& v = line.vertices[leg + 1];
    double margin = 0.5 * std::min(carrier.boundary_distance(u), carrier.boundary_distance(v));
    Box t{u.cwiseMin(v).array() - margin, u.cwiseMax(v).array() + margin};
    tube.push_back(t);
  }
  return tube;
}

}  // namespace colombeau
