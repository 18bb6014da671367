#ifndef MATHPHYS_ODE_HPP
#define MATHPHYS_ODE_HPP

#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace mathphys::numerics {

struct OdeSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    double max_step = std::numeric_limits<double>::infinity();
    double min_step = 1e-14;
};

using OdeRhs =
    std::function<void(double t, std::span<const double> y, std::span<double> dy)>;

// Dormand-Prince 5(4) stepper with PI step-size control and the classic
// quartic dense-output interpolant.  Exposed as a class so callers can do
// event location (sign changes, turnarounds) on the dense output.
class Dopri5 {
public:
    Dopri5(OdeRhs rhs, std::vector<double> y0, double t0, OdeSpec spec = {});

    // Take one accepted step, never stepping past t_limit.
    // Throws StepUnderflow if the controller needs h < min_step.
    void step(double t_limit);

    [[nodiscard]] double t() const { return t_; }
    [[nodiscard]] double t_prev() const { return t_prev_; }
    [[nodiscard]] const std::vector<double>& y() const { return y_; }

    // Interpolated solution on [t_prev, t] after an accepted step.
    void dense(double t_eval, std::span<double> out) const;
    [[nodiscard]] double dense1(double t_eval, int comp) const;
    // Time derivative of the interpolant (same validity window).
    [[nodiscard]] double dense1_deriv(double t_eval, int comp) const;

    [[nodiscard]] int dim() const { return int(y_.size()); }

private:
    double attempt(double h); // returns scaled error norm
    void prepare_dense(double h);

    OdeRhs rhs_;
    OdeSpec spec_;
    std::vector<double> y_, y_prev_, k_[7], y_stage_, cont_[5];
    double t_ = 0.0, t_prev_ = 0.0, h_next_ = 0.0, facold_ = 1e-4;
    bool first_ = true;
};

struct Trajectory {
    std::vector<double> t;
    std::vector<std::vector<double>> y;
};

// Integrate over t_span and report the integrator's own accepted steps.
Trajectory integrate_ode(const OdeRhs& rhs, std::vector<double> y0,
                         std::pair<double, double> t_span,
                         const OdeSpec& spec = {});

// Dense output at caller-requested times (must be increasing and inside
// t_span).
Trajectory integrate_ode_at(const OdeRhs& rhs, std::vector<double> y0,
                            std::pair<double, double> t_span,
                            const std::vector<double>& sample_times,
                            const OdeSpec& spec = {});

} // namespace mathphys::numerics

#endif
