#ifndef MATHPHYS_ERRORS_HPP
#define MATHPHYS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mathphys {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the documented domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Quadrature interval with a > b.
class InvalidInterval : public Error {
public:
    using Error::Error;
};

// Subdivision or iteration budget exhausted before the tolerance was met.
class NonConvergence : public Error {
public:
    using Error::Error;
};

// The step controller asked for a step below min_step (stiffness or a
// singularity on the solution path).
class StepUnderflow : public Error {
public:
    StepUnderflow(const std::string& what, double t) : Error(what), t_at(t) {}
    double t_at;
};

// Root bracket does not change sign.
class NoSignChange : public Error {
public:
    using Error::Error;
};

// Evaluation requested at a genuine singularity of the field.
class SingularPoint : public Error {
public:
    using Error::Error;
};

// Denominator below the safe threshold (Cole-Hopf with f near zero).
class ZeroDenominator : public Error {
public:
    using Error::Error;
};

// Result exceeds the double range.
class OverflowError : public Error {
public:
    using Error::Error;
};

// A quadratic that is guaranteed real-rooted came out complex.
class ComplexRoots : public Error {
public:
    using Error::Error;
};

// Both vevs zero: the charged-Higgs rotation is undefined.
class DegenerateVev : public Error {
public:
    using Error::Error;
};

} // namespace mathphys

#endif
