#pragma once

#include "colombeau/box.hpp"
#include "colombeau/gauss_legendre.hpp"
#include "colombeau/types.hpp"

#include <functional>

namespace colombeau {

/// Tensorized Gauss-Legendre integral of f over a closed box.
double integrate(const std::function<double(const Vec&)>& f, const Box& box, int nodes_per_axis = 64);

Cplx integrate_cplx(const std::function<Cplx(const Vec&)>& f, const Box& box, int nodes_per_axis = 64);

}  // namespace colombeau
