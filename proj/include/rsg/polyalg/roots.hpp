#pragma once

#include "rsg/polyalg/poly.hpp"

#include <vector>

namespace rsg {

// All complex roots of p with multiplicity. Exact zero roots are split off
// first; the rest come from the companion-matrix eigenvalues in double
// precision, then Newton-polished in Real.
template <typename Real>
std::vector<Complex<Real>> polynomial_roots(const GaussPoly& p, int newton_steps = 60);

} // namespace rsg
