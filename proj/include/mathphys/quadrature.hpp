#ifndef MATHPHYS_QUADRATURE_HPP
#define MATHPHYS_QUADRATURE_HPP

#include <functional>

namespace mathphys::numerics {

struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_subdivisions = 2000;
};

// Globally adaptive Gauss-Kronrod 7/15 with interval bisection.  The
// worst interval (largest embedded error estimate) is split until the
// summed estimate meets max(abs_tol, rel_tol*|result|).
//
// Throws InvalidInterval for a > b, NonConvergence when the subdivision
// budget runs out.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec = {});

} // namespace mathphys::numerics

#endif
