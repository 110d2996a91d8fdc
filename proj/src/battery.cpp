#include "colombeau/battery.hpp"

#include "colombeau/errors.hpp"

#include <sstream>

namespace colombeau {

TestBattery::TestBattery(int dim, int q_max, double rho, EpsGrid grid, const MomentConfig& cfg)
    : dim_(dim), q_max_(q_max), rho_(rho), grid_(std::move(grid)), cfg_(cfg) {
  if (q_max < 1) throw PreconditionError("TestBattery: q_max must be >= 1");
  phis_.reserve(static_cast<size_t>(q_max + 1));
  for (int q = 0; q <= q_max; ++q) {
    phis_.push_back(make_moment_testfn(dim, q, 1, rho, cfg));
    if (phis_.back().generator().certified_order() != q)
      throw ConstructionError("TestBattery: certificate mismatch at q=" + std::to_string(q));
    registry_.add(phis_.back());
  }
  std::ostringstream os;
  os << "battery[n=" << dim << ",q_max=" << q_max << ",rho=" << rho << ",grid=" << grid_.base()
     << "^" << grid_.start_exp() << ".." << grid_.end_exp() << "]";
  id_ = os.str();
}

const TestFunction& TestBattery::phi(int q) const {
  if (q < 0 || q > q_max_) throw PreconditionError("TestBattery: q out of range");
  return phis_[static_cast<size_t>(q)];
}

}  // namespace colombeau
