#include "facenp/geometry.hpp"

#include <cmath>

namespace facenp {

bool valid_face_point(const FacePoint& fp, double tol) {
    if (fp.space == Space::Disk) {
        return std::abs(std::abs(fp.edge_coord) - 1.0) <= tol &&
               std::abs(fp.interior_coord) <= 1.0 + tol;
    }
    return std::abs(fp.edge_coord.imag()) <= tol && fp.interior_coord.imag() >= -tol;
}

double aperture_of(const Point2& p, const FacePoint& target) {
    if (!interior(p, target.space)) throw DomainError("aperture_of: point not interior");
    double d = dist_to_boundary(p, target.space);
    return max_norm(p - target.as_point()) / d;
}

PathSamples nontangential_path(const FacePoint& target, const Point2& dir, double t0,
                               double ratio, int count) {
    if (!(ratio > 0.0 && ratio < 1.0)) throw BadRatio("nontangential_path: ratio must be in (0,1)");
    if (count < 4) throw ParamOutOfRange("nontangential_path: count must be >= 4");
    if (!valid_face_point(target)) throw DomainError("nontangential_path: target not on a face");

    PathSamples out;
    out.target = target;
    Point2 base = target.as_point();
    double t = t0;
    for (int k = 0; k < count; ++k, t *= ratio) {
        if (t < kScaleFloor) {
            out.truncated = true;
            break;
        }
        Point2 p = base + t * dir;
        if (!interior(p, target.space))
            throw StepLeavesDomain("nontangential_path: sample leaves the open domain");
        out.points.push_back(p);
        out.scales.push_back(t);
        out.aperture = std::max(out.aperture, aperture_of(p, target));
    }
    if (out.points.size() < 2)
        throw ParamOutOfRange("nontangential_path: fewer than 2 usable scales above floor");
    return out;
}

PathSamples perpendicular_path(const FacePoint& target, double t0, double ratio, int count) {
    cplx step = target.space == Space::Disk ? -target.edge_coord : I;
    Point2 dir = target.face == FaceIndex::First ? Point2{step, 0.0} : Point2{0.0, step};
    // A closed-face interior coordinate sits on the boundary of its factor;
    // nudge it inward along the same ray so samples stay interior.
    if (target.space == Space::Disk && std::abs(target.interior_coord) >= 1.0 - 1e-12) {
        cplx istep = -target.interior_coord;
        if (target.face == FaceIndex::First) dir.c2 = istep; else dir.c1 = istep;
    } else if (target.space == Space::HalfPlane && target.interior_coord.imag() <= 1e-12) {
        if (target.face == FaceIndex::First) dir.c2 = I; else dir.c1 = I;
    }
    return nontangential_path(target, dir, t0, ratio, count);
}

}  // namespace facenp
