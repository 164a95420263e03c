#pragma once

#include <cstdint>
#include <vector>

#include "facenp/expr.hpp"
#include "facenp/limits.hpp"

namespace facenp {

// Seeded low-discrepancy interior samples.  Pick-class samples come from the
// window Re in [-10,10], Im in (0,10]; Schur-class samples from the disk of
// radius 0.99 (boundary-hugging points would wreck binary64 roundtrips).
std::vector<Point2> quasirandom_samples(Space domain, int n, std::uint64_t seed);

struct MembershipReport {
    int samples = 0;
    double min_margin = 0.0;  // min Im f (Pick) or min 1-|f| (Schur)
    Point2 worst_point{};
    bool passed = false;
};

MembershipReport membership_scan(const ExprPtr& f, int n_samples, double tol,
                                 std::uint64_t seed);

// lim t f(node + i t e_face) along the given path; the path must carry its
// scales.  The caller compares |extrapolated| against a tolerance.
LimitEstimate vanishing_limit(const ExprPtr& f, const FacePoint& node,
                              const PathSamples& path, double tol = 1e-6);

// convenience: perpendicular ladder from config
LimitEstimate vanishing_limit(const ExprPtr& f, const FacePoint& node,
                              const LadderConfig& cfg);

}  // namespace facenp
