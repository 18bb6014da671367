#ifndef MATHPHYS_SPECIAL_HPP
#define MATHPHYS_SPECIAL_HPP

#include <vector>

namespace mathphys::numerics {

// Gamma function for z > 0 (Lanczos, ~13 significant digits).
// Throws DomainError for z <= 0.
double gamma_fn(double z);

// Modified Bessel function I_m(z) for integer order m >= 0, z >= 0.
// Ascending series for z < 2(m+1), integral representation otherwise;
// orders beyond the reliable range of the integral representation fall
// back to the scaled backward recurrence.  Throws OverflowError once
// e^z leaves the double range.
double bessel_i(int m, double z);

// e^{-z} I_m(z); stable for arbitrarily large z.
double bessel_i_scaled(int m, double z);

// e^{-z} I_m(z) for all m = 0..m_max in one backward-recurrence pass
// (normalized with I_0 + 2 sum I_m = e^z).
std::vector<double> bessel_i_scaled_array(int m_max, double z);

// Regularized upper incomplete gamma Q(a, x); chi-squared tail
// probabilities are Q(k/2, x/2).
double gamma_q(double a, double x);

} // namespace mathphys::numerics

#endif
