#pragma once

#include <complex>
#include <vector>

#include "facenp/geometry.hpp"

namespace facenp {

// Shared parameters for one-sided limit ladders t_k = t0 * ratio^k.
struct LadderConfig {
    double t0 = 0.1;
    double ratio = 0.5;
    int steps = 25;
    double tol = 1e-6;  // convergence tolerance on consecutive raw values
};

// Extrapolated value of a boundary limit along a sample ladder.
struct LimitEstimate {
    std::vector<cplx> raw;   // q_k along the path
    cplx extrapolated{};
    bool converged = false;  // last 3 consecutive deltas all <= tol
    double last_delta = 0.0;
    bool divergent = false;  // sequence grew beyond the divergence threshold
};

inline constexpr double kDivergenceThreshold = 1e6;

// Richardson step for geometric scales with first-order error model:
// L = (q_k - ratio * q_{k-1}) / (1 - ratio).
LimitEstimate estimate_limit(const std::vector<cplx>& raw, double ratio, double tol);

}  // namespace facenp
