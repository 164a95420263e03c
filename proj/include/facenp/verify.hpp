#pragma once

#include <cstdint>
#include <vector>

#include "facenp/expr.hpp"
#include "facenp/limits.hpp"
#include "facenp/solver.hpp"

namespace facenp {

struct VerifyConfig {
    LadderConfig ladder{};
    double tol_value = 1e-6;
    double tol_slope = 1e-4;
    double fit_tol = 1e-4;            // residual-ratio / unimodularity threshold
    double fit_scale_floor = 1e-6;    // differential-fit ladders stop here;
                                      // below it rounding noise dominates e/t
    int samples_per_scale = 8;
    std::vector<double> apertures{1.0, 2.0, 4.0};
    std::uint64_t seed = 42;
};

std::vector<double> fit_scale_ladder(const VerifyConfig& cfg);

// Boundary quotient along a path: (1-|phi|)/(1-||lambda||) on the bidisk,
// Im h / Im z^face on the bi-half-plane.  The extrapolated value estimates
// alpha resp. beta; `divergent` is evidence against a B-point on this path.
LimitEstimate caratheodory_quotient(const ExprPtr& f, const FacePoint& target,
                                    const PathSamples& path);

// Least-squares fit of phi ~ omega + eta1 (l1 - t1) + eta2 (l2 - t2) on an
// aperture cone, with per-scale residual ratios max|e| / ||lambda - tau||.
struct DifferentialFit {
    cplx omega{}, eta1{}, eta2{};
    std::vector<double> scales;
    std::vector<double> residual_ratios;
    bool c_point_passed = false;
};

DifferentialFit fit_differential(const ExprPtr& f, const FacePoint& target, double aperture,
                                 const std::vector<double>& scales, int samples_per_scale,
                                 std::uint64_t seed, double tol);

// Ladder fit of the coefficient c in f ~ omega + c (lambda^1 - tau^1) along
// the single ray tau + t dir (used to exhibit path-dependent differentials).
cplx directional_fit(const ExprPtr& f, const FacePoint& target, const Point2& dir,
                     const LadderConfig& cfg);

struct FaceSample {
    cplx interior{};
    cplx value{};
    cplx grad1{}, grad2{};
};

struct FaceReport {
    Space space = Space::Disk;
    int face = 1;
    cplx edge{};
    std::vector<FaceSample> samples;
    double value_spread = 0.0;
    double grad_spread = 0.0;
    double alpha_estimate = 0.0;
    bool gradient_matches = false;  // fitted gradients vs closed-form value
};

FaceReport face_report(const ExprPtr& f, Space space, int face, cplx edge,
                       const std::vector<cplx>& interior_samples, const VerifyConfig& cfg);

struct NodeCheck {
    int face = 1;
    int index = 0;
    bool b_point = false;
    cplx value_est{};
    double slope_est = 0.0;
    double slope_target = 0.0;
    bool value_ok = false;
    bool slope_ok = false;       // slope equals target at tol_slope
    bool slope_bounded = false;  // slope <= target + tol_slope (relaxed bound)
};

struct SolutionReport {
    std::vector<NodeCheck> nodes;
    bool all_pass = false;
};

SolutionReport verify_solution(const InterpProblem& p, const ExprPtr& h,
                               const VerifyConfig& cfg = {});

}  // namespace facenp
