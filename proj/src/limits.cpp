#include "facenp/limits.hpp"

#include <cmath>

namespace facenp {

LimitEstimate estimate_limit(const std::vector<cplx>& raw, double ratio, double tol) {
    LimitEstimate est;
    est.raw = raw;
    const size_t n = raw.size();
    if (n == 0) return est;
    if (n == 1) {
        est.extrapolated = raw[0];
        return est;
    }
    est.extrapolated = (raw[n - 1] - ratio * raw[n - 2]) / (1.0 - ratio);
    est.last_delta = std::abs(raw[n - 1] - raw[n - 2]);

    // divergence: magnitude beyond threshold and still growing at the tail
    if (std::abs(raw[n - 1]) > kDivergenceThreshold &&
        std::abs(raw[n - 1]) > std::abs(raw[n - 2]))
        est.divergent = true;

    if (n >= 4) {
        bool ok = true;
        for (size_t k = n - 3; k < n; ++k)
            if (std::abs(raw[k] - raw[k - 1]) > tol) ok = false;
        est.converged = ok && !est.divergent;
    }
    return est;
}

}  // namespace facenp
