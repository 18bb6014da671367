#include "mathphys/roots.hpp"
#include "mathphys/errors.hpp"

#include <cmath>
#include <limits>

namespace mathphys::numerics {

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tol) {
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw NoSignChange("find_root: f(lo) and f(hi) have the same sign");

    // Brent: keep the bracket [a,b] with b the best iterate.
    if (std::abs(fa) < std::abs(fb)) {
        std::swap(a, b);
        std::swap(fa, fb);
    }
    double c = a, fc = fa;
    bool bisected = true;
    double d = 0.0;

    for (int iter = 0; iter < 200; ++iter) {
        if (std::abs(b - a) <= tol || fb == 0.0) return b;
        double s;
        if (fa != fc && fb != fc) {
            // inverse quadratic interpolation
            s = a * fb * fc / ((fa - fb) * (fa - fc)) +
                b * fa * fc / ((fb - fa) * (fb - fc)) +
                c * fa * fb / ((fc - fa) * (fc - fb));
        } else {
            s = b - fb * (b - a) / (fb - fa); // secant
        }
        const double lo_lim = (3.0 * a + b) / 4.0;
        const bool out = (s < std::min(lo_lim, b) || s > std::max(lo_lim, b));
        const double step_prev = bisected ? std::abs(b - c) : std::abs(c - d);
        if (out || std::abs(s - b) >= 0.5 * step_prev || step_prev < tol) {
            s = 0.5 * (a + b);
            bisected = true;
        } else {
            bisected = false;
        }
        const double fs = f(s);
        d = c;
        c = b;
        fc = fb;
        if ((fa > 0.0) != (fs > 0.0)) {
            b = s;
            fb = fs;
        } else {
            a = s;
            fa = fs;
        }
        if (std::abs(fa) < std::abs(fb)) {
            std::swap(a, b);
            std::swap(fa, fb);
        }
    }
    return b;
}

std::pair<double, double> golden_min(const std::function<double(double)>& f,
                                     double lo, double hi, double tol) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol * (1.0 + std::abs(a) + std::abs(b))) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        }
    }
    const double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

} // namespace mathphys::numerics
