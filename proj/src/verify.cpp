#include "facenp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace facenp {

std::vector<double> fit_scale_ladder(const VerifyConfig& cfg) {
    std::vector<double> scales;
    double t = cfg.ladder.t0;
    for (int k = 0; k < cfg.ladder.steps && t >= cfg.fit_scale_floor; ++k, t *= cfg.ladder.ratio)
        scales.push_back(t);
    return scales;
}

LimitEstimate caratheodory_quotient(const ExprPtr& f, const FacePoint& target,
                                    const PathSamples& path) {
    std::vector<cplx> q;
    q.reserve(path.points.size());
    int j = target.edge_index();
    for (const auto& p : path.points) {
        cplx v = eval(f, p);
        if (target.space == Space::Disk)
            q.push_back((1.0 - std::abs(v)) / (1.0 - max_norm(p)));
        else
            q.push_back(v.imag() / p.coord(j).imag());
    }
    double ratio = path.scales.size() >= 2 ? path.scales[1] / path.scales[0] : 0.5;
    return estimate_limit(q, ratio, 1e-6);
}

namespace {

// Offsets are generated in closed form (never by subtracting nearby points)
// and filtered against the exact aperture predicate.
struct ConeSample {
    Point2 point;
    Point2 offset;
};

std::vector<ConeSample> cone_samples(const FacePoint& target, double t, double aperture,
                                     int count, std::mt19937& rng) {
    Point2 base = target.as_point();
    bool disk = target.space == Space::Disk;
    bool corner = disk ? std::abs(target.interior_coord) >= 1.0 - 1e-12
                       : target.interior_coord.imag() <= 1e-12;
    int je = target.edge_index();
    double tang = aperture > 1.0 + 1e-9 ? 0.8 * std::sqrt(aperture * aperture - 1.0) : 0.0;

    std::uniform_real_distribution<double> U(0.0, 1.0);
    std::vector<ConeSample> out;
    for (int tries = 0; tries < 50 * count && int(out.size()) < count; ++tries) {
        double a = 0.75 + 0.25 * U(rng);  // shared inward depth, in units of t
        auto inward = [&](cplx tau) {
            double c = tang * a * (2.0 * U(rng) - 1.0);
            if (disk) return tau * ((1.0 - a * t) * std::exp(I * (c * t)) - 1.0);
            return t * cplx{c, a};
        };
        Point2 off;
        cplx edge_off = inward(target.edge_coord);
        cplx int_off;
        if (corner) {
            int_off = inward(target.interior_coord);
        } else {
            double rho = 0.95 * aperture * a * U(rng);
            int_off = t * rho * std::exp(I * (2.0 * M_PI * U(rng)));
        }
        if (je == 1) off = {edge_off, int_off}; else off = {int_off, edge_off};
        Point2 p = base + off;
        if (!interior(p, target.space)) continue;
        if (aperture_of(p, target) > aperture + 1e-12) continue;
        out.push_back({p, off});
    }
    return out;
}

// solve the 3x3 Hermitian system H x = b in place; tiny pivots zero the
// corresponding coefficient (degenerate cones)
void solve3(cplx H[3][3], cplx b[3], cplx x[3]) {
    cplx A[3][4];
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) A[i][j] = H[i][j];
        A[i][3] = b[i];
    }
    for (int c = 0; c < 3; ++c) {
        int piv = c;
        for (int r = c + 1; r < 3; ++r)
            if (std::abs(A[r][c]) > std::abs(A[piv][c])) piv = r;
        std::swap(A[c], A[piv]);
        if (std::abs(A[c][c]) < 1e-12) {
            for (int j = c; j < 4; ++j) A[c][j] = 0.0;
            A[c][c] = 1.0;  // forces coefficient 0
        }
        for (int r = 0; r < 3; ++r) {
            if (r == c) continue;
            cplx m = A[r][c] / A[c][c];
            for (int j = c; j < 4; ++j) A[r][j] -= m * A[c][j];
        }
    }
    // only rows were swapped, so the unknown order is unchanged
    for (int i = 0; i < 3; ++i) x[i] = A[i][3] / A[i][i];
}

}  // namespace

DifferentialFit fit_differential(const ExprPtr& f, const FacePoint& target, double aperture,
                                 const std::vector<double>& scales, int samples_per_scale,
                                 std::uint64_t seed, double tol) {
    if (scales.size() < 3) throw ParamOutOfRange("fit_differential: need >= 3 scales");
    std::mt19937 rng(static_cast<unsigned>(seed));
    std::vector<std::vector<ConeSample>> per_scale;
    for (double t : scales) {
        auto s = cone_samples(target, t, aperture, samples_per_scale, rng);
        if (int(s.size()) < 4)
            throw InsufficientSamples("fit_differential: cone at scale " + std::to_string(t) +
                                      " yielded fewer than 4 interior points");
        per_scale.push_back(std::move(s));
    }

    // least-squares (omega, eta1, eta2) over the two smallest scales,
    // columns scaled by the smallest scale for conditioning
    double tref = scales.back();
    cplx H[3][3] = {}, rhs[3] = {};
    for (size_t si = scales.size() - 2; si < scales.size(); ++si) {
        for (const auto& s : per_scale[si]) {
            cplx row[3] = {1.0, s.offset.c1 / tref, s.offset.c2 / tref};
            cplx val = eval(f, s.point);
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) H[i][j] += std::conj(row[i]) * row[j];
                rhs[i] += std::conj(row[i]) * val;
            }
        }
    }
    cplx x[3];
    solve3(H, rhs, x);

    DifferentialFit fit;
    fit.omega = x[0];
    fit.eta1 = x[1] / tref;
    fit.eta2 = x[2] / tref;
    fit.scales = scales;
    for (size_t si = 0; si < scales.size(); ++si) {
        double worst = 0.0;
        for (const auto& s : per_scale[si]) {
            cplx model = fit.omega + fit.eta1 * s.offset.c1 + fit.eta2 * s.offset.c2;
            worst = std::max(worst, std::abs(eval(f, s.point) - model) / max_norm(s.offset));
        }
        fit.residual_ratios.push_back(worst);
    }

    const double noise_floor = 1e-8;
    size_t n = fit.residual_ratios.size();
    bool decay = true;
    for (size_t k = n - 3; k < n; ++k) {
        double r = fit.residual_ratios[k];
        if (!(r < tol)) decay = false;
        // tolerate jitter once the ratio plateaus at evaluation noise
        if (k > n - 3 && r > std::max(1.5 * fit.residual_ratios[k - 1], noise_floor)) decay = false;
    }
    bool boundary_value_ok = target.space == Space::Disk
                                 ? std::abs(std::abs(fit.omega) - 1.0) <= tol
                                 : std::abs(fit.omega.imag()) <= tol;
    fit.c_point_passed = decay && boundary_value_ok;
    return fit;
}

cplx directional_fit(const ExprPtr& f, const FacePoint& target, const Point2& dir,
                     const LadderConfig& cfg) {
    // The quotient divides evaluation noise by t twice (once in the value
    // limit, once in the slope), so the usable floor is much higher than the
    // path floor: below ~1e-4 the eps/t^2 term swamps the signal.
    const double floor = 1e-4;
    int count = 0;
    for (double t = cfg.t0; count < cfg.steps && t >= floor; t *= cfg.ratio) ++count;
    count = std::max(count, 4);
    auto path = nontangential_path(target, dir, cfg.t0, cfg.ratio, count);
    std::vector<cplx> vals;
    for (const auto& p : path.points) vals.push_back(eval(f, p));
    cplx omega = estimate_limit(vals, cfg.ratio, cfg.tol).extrapolated;
    std::vector<cplx> slopes;
    for (size_t k = 0; k < path.points.size(); ++k)
        slopes.push_back((vals[k] - omega) / (path.points[k].coord(1) - target.as_point().c1));
    return estimate_limit(slopes, cfg.ratio, cfg.tol).extrapolated;
}

FaceReport face_report(const ExprPtr& f, Space space, int face, cplx edge,
                       const std::vector<cplx>& interior_samples, const VerifyConfig& cfg) {
    FaceReport rep;
    rep.space = space;
    rep.face = face;
    rep.edge = edge;
    auto scales = fit_scale_ladder(cfg);
    bool grad_ok = true;
    for (const cplx& sigma : interior_samples) {
        FacePoint fp{space, face == 1 ? FaceIndex::First : FaceIndex::Second, edge, sigma};
        auto path = perpendicular_path(fp, cfg.ladder.t0, cfg.ladder.ratio, cfg.ladder.steps);
        std::vector<cplx> vals;
        for (const auto& p : path.points) vals.push_back(eval(f, p));
        FaceSample fs;
        fs.interior = sigma;
        fs.value = estimate_limit(vals, cfg.ladder.ratio, cfg.ladder.tol).extrapolated;
        auto fit = fit_differential(f, fp, 2.0, scales, cfg.samples_per_scale, cfg.seed,
                                    cfg.fit_tol);
        fs.grad1 = fit.eta1;
        fs.grad2 = fit.eta2;
        if (rep.samples.empty()) {
            rep.alpha_estimate =
                caratheodory_quotient(f, fp, path).extrapolated.real();
        }
        rep.samples.push_back(fs);
    }
    for (size_t i = 0; i < rep.samples.size(); ++i) {
        for (size_t j = i + 1; j < rep.samples.size(); ++j) {
            rep.value_spread = std::max(rep.value_spread,
                                        std::abs(rep.samples[i].value - rep.samples[j].value));
            rep.grad_spread = std::max(
                rep.grad_spread,
                std::max(std::abs(rep.samples[i].grad1 - rep.samples[j].grad1),
                         std::abs(rep.samples[i].grad2 - rep.samples[j].grad2)));
        }
    }
    // closed-form angular gradient: value * conj(edge) * alpha in the edge
    // slot (disk); (beta, 0) pattern in the half-plane
    for (const auto& s : rep.samples) {
        cplx expected = space == Space::Disk
                            ? s.value * std::conj(edge) * rep.alpha_estimate
                            : cplx{rep.alpha_estimate, 0.0};
        cplx ge = face == 1 ? s.grad1 : s.grad2;
        cplx gi = face == 1 ? s.grad2 : s.grad1;
        if (std::abs(ge - expected) > cfg.tol_slope || std::abs(gi) > cfg.tol_slope)
            grad_ok = false;
    }
    rep.gradient_matches = grad_ok;
    return rep;
}

SolutionReport verify_solution(const InterpProblem& p, const ExprPtr& h,
                               const VerifyConfig& cfg) {
    SolutionReport rep;
    bool all = true;
    auto run_face = [&](const std::vector<ProblemNode>& nodes, int face) {
        for (size_t i = 0; i < nodes.size(); ++i) {
            FacePoint fp = p.node_point(face, int(i));
            auto path = perpendicular_path(fp, cfg.ladder.t0, cfg.ladder.ratio, cfg.ladder.steps);
            NodeCheck nc;
            nc.face = face;
            nc.index = int(i);
            nc.slope_target = nodes[i].slope;
            auto quot = caratheodory_quotient(h, fp, path);
            nc.b_point = !quot.divergent;
            nc.slope_est = quot.extrapolated.real();
            std::vector<cplx> vals;
            for (const auto& q : path.points) vals.push_back(eval(h, q));
            nc.value_est = estimate_limit(vals, cfg.ladder.ratio, cfg.ladder.tol).extrapolated;
            nc.value_ok = std::abs(nc.value_est - p.xi) <= cfg.tol_value;
            nc.slope_ok = std::abs(nc.slope_est - nc.slope_target) <= cfg.tol_slope;
            nc.slope_bounded = nc.slope_est <= nc.slope_target + cfg.tol_slope;
            all = all && nc.b_point && nc.value_ok && nc.slope_ok;
            rep.nodes.push_back(nc);
        }
    };
    run_face(p.face1, 1);
    run_face(p.face2, 2);
    rep.all_pass = all;
    return rep;
}

}  // namespace facenp
