#pragma once

#include "facenp/expr.hpp"
#include "facenp/limits.hpp"

namespace facenp {

// Boundary data of a one-variable Pick function at a real point:
// value a0 = f(x), angular derivative a1 = f'(x) > 0.
struct AngularData {
    double x = 0.0;
    double a0 = 0.0;
    double a1 = 1.0;
};

struct AngularResult {
    AngularData data;
    LimitEstimate value_limit;  // f(x + i y)
    LimitEstimate slope_limit;  // Im f(x + i y) / y
};

// Perpendicular-limit estimate of (f(x), f'(x)).  Throws NotBPoint when the
// difference quotient diverges, NonRealBoundaryValue when Im f(x) fails to
// vanish at tolerance.
AngularResult angular_derivative(const ExprPtr& f, double x, const LadderConfig& cfg = {});

// g(z) = -1/(f(z) - a0) + 1/(a1 (z - x)); Pick class again.
ExprPtr reduce(const ExprPtr& f, const AngularData& d);

// f with 1/(f - a0) = 1/(a1 (z - x)) - g; inverse of reduce.
ExprPtr augment(const ExprPtr& g, double x, double a0, double a1);

}  // namespace facenp
