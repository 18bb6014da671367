#ifndef MATHPHYS_ROOTS_HPP
#define MATHPHYS_ROOTS_HPP

#include <functional>
#include <utility>

namespace mathphys::numerics {

// Bracketed root finding (Brent).  Requires f(lo)*f(hi) < 0, throws
// NoSignChange otherwise.  Returns x with the final bracket width <= tol.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tol = 1e-12);

// Golden-section minimum of a unimodal f on [lo, hi]; returns (x, f(x)).
std::pair<double, double> golden_min(const std::function<double(double)>& f,
                                     double lo, double hi, double tol = 1e-10);

} // namespace mathphys::numerics

#endif
