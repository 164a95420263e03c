#include "facenp/julia.hpp"

#include <cmath>

namespace facenp {

AngularResult angular_derivative(const ExprPtr& f, double x, const LadderConfig& cfg) {
    if (f->cls.domain != Space::HalfPlane || (f->cls.nvars != 1 && !is_constant(*f)))
        throw ParamOutOfRange("angular_derivative: need a one-variable Pick function");

    std::vector<cplx> vals, quot;
    double t = cfg.t0;
    int grow_streak = 0;
    for (int k = 0; k < cfg.steps && t >= kScaleFloor; ++k, t *= cfg.ratio) {
        cplx v = eval(f, cplx{x, t});
        vals.push_back(v);
        double q = v.imag() / t;
        if (!quot.empty() && q > kDivergenceThreshold && q > quot.back().real())
            ++grow_streak;
        else
            grow_streak = 0;
        quot.push_back(q);
        if (grow_streak >= 3)
            throw NotBPoint("angular_derivative: difference quotient diverges at x = " +
                            std::to_string(x));
    }

    AngularResult res;
    res.value_limit = estimate_limit(vals, cfg.ratio, cfg.tol);
    res.slope_limit = estimate_limit(quot, cfg.ratio, cfg.tol);
    if (res.slope_limit.divergent)
        throw NotBPoint("angular_derivative: difference quotient diverges at x = " +
                        std::to_string(x));
    cplx a0 = res.value_limit.extrapolated;
    if (std::abs(a0.imag()) > cfg.tol)
        throw NonRealBoundaryValue("angular_derivative: Im f(x) = " +
                                   std::to_string(a0.imag()) + " does not vanish");
    res.data = {x, a0.real(), res.slope_limit.extrapolated.real()};
    return res;
}

ExprPtr reduce(const ExprPtr& f, const AngularData& d) {
    return reduction_expr(f, d.x, d.a0, d.a1);
}

ExprPtr augment(const ExprPtr& g, double x, double a0, double a1) {
    return augmentation_expr(g, x, a0, a1);
}

}  // namespace facenp
