#include "mathphys/ode.hpp"
#include "mathphys/errors.hpp"

#include <algorithm>
#include <cmath>

namespace mathphys::numerics {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA2[] = {1.0 / 5};
constexpr double kA3[] = {3.0 / 40, 9.0 / 40};
constexpr double kA4[] = {44.0 / 45, -56.0 / 15, 32.0 / 9};
constexpr double kA5[] = {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561,
                          -212.0 / 729};
constexpr double kA6[] = {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247,
                          49.0 / 176, -5103.0 / 18656};
constexpr double kB[] = {35.0 / 384,      0.0,         500.0 / 1113,
                         125.0 / 192,     -2187.0 / 6784, 11.0 / 84};
// b - b_hat (5th-order minus embedded 4th-order weights)
constexpr double kE[] = {71.0 / 57600,     0.0,           -71.0 / 16695,
                         71.0 / 1920,      -17253.0 / 339200, 22.0 / 525,
                         -1.0 / 40};
// Dense-output coefficients (Hairer's dopri5).
constexpr double kD[] = {-12715105075.0 / 11282082432.0,
                         0.0,
                         87487479700.0 / 32700410799.0,
                         -10690763975.0 / 1880347072.0,
                         701980252875.0 / 199316789632.0,
                         -1453857185.0 / 822651844.0,
                         69997945.0 / 29380423.0};

} // namespace

Dopri5::Dopri5(OdeRhs rhs, std::vector<double> y0, double t0, OdeSpec spec)
    : rhs_(std::move(rhs)), spec_(spec), y_(std::move(y0)) {
    if (!(spec_.min_step > 0.0) || !(spec_.min_step <= spec_.max_step))
        throw DomainError("OdeSpec: need 0 < min_step <= max_step");
    if (!(spec_.abs_tol > 0.0) || !(spec_.rel_tol > 0.0))
        throw DomainError("OdeSpec: tolerances must be positive");
    t_ = t_prev_ = t0;
    const int n = int(y_.size());
    y_prev_ = y_;
    y_stage_.resize(n);
    for (auto& k : k_) k.resize(n);
    for (auto& c : cont_) c.resize(n);
    rhs_(t_, y_, k_[0]);
}

double Dopri5::attempt(double h) {
    const int n = dim();
    auto stage = [&](int s, const double* a, double c) {
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int j = 0; j < s - 1; ++j) acc += a[j] * k_[j][i];
            y_stage_[i] = y_[i] + h * acc;
        }
        rhs_(t_ + c * h, y_stage_, k_[s - 1]);
    };
    stage(2, kA2, kC[1]);
    stage(3, kA3, kC[2]);
    stage(4, kA4, kC[3]);
    stage(5, kA5, kC[4]);
    stage(6, kA6, kC[5]);
    // 5th-order solution into y_stage_
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < 6; ++j) acc += kB[j] * k_[j][i];
        y_stage_[i] = y_[i] + h * acc;
    }
    rhs_(t_ + h, y_stage_, k_[6]); // FSAL stage
    double err = 0.0;
    for (int i = 0; i < n; ++i) {
        double e = 0.0;
        for (int j = 0; j < 7; ++j) e += kE[j] * k_[j][i];
        e *= h;
        const double sc = spec_.abs_tol +
                          spec_.rel_tol * std::max(std::abs(y_[i]),
                                                   std::abs(y_stage_[i]));
        err += (e / sc) * (e / sc);
    }
    err = std::sqrt(err / n);
    return std::isfinite(err) ? err : 1e10;
}

void Dopri5::prepare_dense(double h) {
    const int n = dim();
    for (int i = 0; i < n; ++i) {
        const double ydiff = y_stage_[i] - y_[i];
        const double bspl = h * k_[0][i] - ydiff;
        cont_[0][i] = y_[i];
        cont_[1][i] = ydiff;
        cont_[2][i] = bspl;
        cont_[3][i] = ydiff - h * k_[6][i] - bspl;
        double d = 0.0;
        for (int j = 0; j < 7; ++j) d += kD[j] * k_[j][i];
        cont_[4][i] = h * d;
    }
}

void Dopri5::step(double t_limit) {
    if (t_ >= t_limit) throw DomainError("Dopri5::step: already at t_limit");
    if (first_) {
        // Conservative first guess; the controller fixes it quickly.
        double ynorm = 0.0, fnorm = 0.0;
        for (int i = 0; i < dim(); ++i) {
            ynorm = std::max(ynorm, std::abs(y_[i]));
            fnorm = std::max(fnorm, std::abs(k_[0][i]));
        }
        double h0 = (fnorm > 0.0)
                        ? 0.01 * (ynorm + spec_.abs_tol) / fnorm
                        : 1e-6;
        h_next_ = std::clamp(h0, spec_.min_step, spec_.max_step);
        first_ = false;
    }
    double h = std::min(h_next_, spec_.max_step);
    for (int tries = 0; tries < 200; ++tries) {
        bool clipped = false;
        if (t_ + h >= t_limit) {
            h = t_limit - t_;
            clipped = true;
        }
        if (h < spec_.min_step && !clipped)
            throw StepUnderflow("Dopri5: step size underflow", t_);
        const double err = attempt(h);
        constexpr double safe = 0.9, beta = 0.04;
        const double fac11 = std::pow(err, 0.2 - beta * 0.75);
        if (err <= 1.0) {
            prepare_dense(h);
            t_prev_ = t_;
            y_prev_ = y_;
            t_ += h;
            y_ = y_stage_;
            k_[0] = k_[6]; // FSAL
            double fac = fac11 / std::pow(facold_, beta);
            fac = std::clamp(fac / safe, 0.1, 5.0);
            h_next_ = std::min(h / fac, spec_.max_step);
            facold_ = std::max(err, 1e-4);
            return;
        }
        h = h / std::min(5.0, fac11 / safe);
    }
    throw NonConvergence("Dopri5: too many rejected steps");
}

void Dopri5::dense(double t_eval, std::span<double> out) const {
    for (int i = 0; i < dim(); ++i) out[i] = dense1(t_eval, i);
}

double Dopri5::dense1(double t_eval, int i) const {
    const double h = t_ - t_prev_;
    const double th = (t_eval - t_prev_) / h;
    const double th1 = 1.0 - th;
    return cont_[0][i] +
           th * (cont_[1][i] +
                 th1 * (cont_[2][i] + th * (cont_[3][i] + th1 * cont_[4][i])));
}

double Dopri5::dense1_deriv(double t_eval, int i) const {
    const double h = t_ - t_prev_;
    const double th = (t_eval - t_prev_) / h;
    // P(th) = c0 + c1 th + c2 th(1-th) + c3 th^2(1-th) + c4 th^2(1-th)^2
    const double dP =
        cont_[1][i] + cont_[2][i] * (1.0 - 2.0 * th) +
        cont_[3][i] * th * (2.0 - 3.0 * th) +
        cont_[4][i] * 2.0 * th * (1.0 - th) * (1.0 - 2.0 * th);
    return dP / h;
}

Trajectory integrate_ode(const OdeRhs& rhs, std::vector<double> y0,
                         std::pair<double, double> t_span,
                         const OdeSpec& spec) {
    if (!(t_span.second > t_span.first))
        throw DomainError("integrate_ode: t_span must be nondegenerate");
    Dopri5 stepper(rhs, std::move(y0), t_span.first, spec);
    Trajectory out;
    out.t.push_back(stepper.t());
    out.y.push_back(stepper.y());
    while (stepper.t() < t_span.second) {
        stepper.step(t_span.second);
        out.t.push_back(stepper.t());
        out.y.push_back(stepper.y());
    }
    return out;
}

Trajectory integrate_ode_at(const OdeRhs& rhs, std::vector<double> y0,
                            std::pair<double, double> t_span,
                            const std::vector<double>& sample_times,
                            const OdeSpec& spec) {
    if (!(t_span.second > t_span.first))
        throw DomainError("integrate_ode: t_span must be nondegenerate");
    Dopri5 stepper(rhs, std::move(y0), t_span.first, spec);
    Trajectory out;
    std::size_t next = 0;
    if (next < sample_times.size() && sample_times[next] == t_span.first) {
        out.t.push_back(stepper.t());
        out.y.push_back(stepper.y());
        ++next;
    }
    std::vector<double> buf(stepper.dim());
    while (stepper.t() < t_span.second && next < sample_times.size()) {
        stepper.step(t_span.second);
        while (next < sample_times.size() && sample_times[next] <= stepper.t()) {
            stepper.dense(sample_times[next], buf);
            out.t.push_back(sample_times[next]);
            out.y.push_back(buf);
            ++next;
        }
    }
    return out;
}

} // namespace mathphys::numerics
