#include "facenp/membership.hpp"

#include <cmath>

namespace facenp {

namespace {

double halton(std::uint64_t i, unsigned base) {
    double f = 1.0, r = 0.0;
    while (i > 0) {
        f /= base;
        r += f * (i % base);
        i /= base;
    }
    return r;
}

// splitmix64, used to derive Cranley-Patterson rotation offsets from the seed
std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double frac(double x) { return x - std::floor(x); }

}  // namespace

std::vector<Point2> quasirandom_samples(Space domain, int n, std::uint64_t seed) {
    static const unsigned bases[4] = {2, 3, 5, 7};
    double off[4];
    std::uint64_t s = seed;
    for (int d = 0; d < 4; ++d) {
        s = mix(s);
        off[d] = double(s >> 11) * 0x1.0p-53;
    }
    std::vector<Point2> out;
    out.reserve(n);
    for (int i = 1; i <= n; ++i) {
        double u[4];
        for (int d = 0; d < 4; ++d) u[d] = frac(halton(std::uint64_t(i), bases[d]) + off[d]);
        if (domain == Space::Disk) {
            double r1 = 0.99 * std::sqrt(u[0]), r2 = 0.99 * std::sqrt(u[2]);
            out.push_back({r1 * std::exp(I * (2.0 * M_PI * u[1])),
                           r2 * std::exp(I * (2.0 * M_PI * u[3]))});
        } else {
            double im1 = 10.0 * (u[1] > 0 ? u[1] : 0.5), im2 = 10.0 * (u[3] > 0 ? u[3] : 0.5);
            out.push_back({cplx{-10.0 + 20.0 * u[0], im1}, cplx{-10.0 + 20.0 * u[2], im2}});
        }
    }
    return out;
}

MembershipReport membership_scan(const ExprPtr& f, int n_samples, double tol,
                                 std::uint64_t seed) {
    if (n_samples < 1) throw ParamOutOfRange("membership_scan: n_samples must be >= 1");
    auto pts = quasirandom_samples(f->cls.domain, n_samples, seed);
    MembershipReport rep;
    rep.samples = n_samples;
    bool first = true;
    for (const auto& z : pts) {
        cplx v = eval(f, z);
        double margin = f->cls.domain == Space::HalfPlane ? v.imag() : 1.0 - std::abs(v);
        if (first || margin < rep.min_margin) {
            rep.min_margin = margin;
            rep.worst_point = z;
            first = false;
        }
    }
    rep.passed = rep.min_margin >= -tol;
    return rep;
}

LimitEstimate vanishing_limit(const ExprPtr& f, const FacePoint& node,
                              const PathSamples& path, double tol) {
    if (node.space != Space::HalfPlane)
        throw DomainError("vanishing_limit: node must be in half-plane coordinates");
    std::vector<cplx> q;
    q.reserve(path.points.size());
    for (size_t k = 0; k < path.points.size(); ++k)
        q.push_back(path.scales[k] * eval(f, path.points[k]));
    double ratio = path.scales.size() >= 2 ? path.scales[1] / path.scales[0] : 0.5;
    return estimate_limit(q, ratio, tol);
}

LimitEstimate vanishing_limit(const ExprPtr& f, const FacePoint& node,
                              const LadderConfig& cfg) {
    auto path = perpendicular_path(node, cfg.t0, cfg.ratio, cfg.steps);
    return vanishing_limit(f, node, path, cfg.tol);
}

}  // namespace facenp
