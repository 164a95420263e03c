#pragma once

#include <complex>
#include <vector>

#include "facenp/errors.hpp"

namespace facenp {

using cplx = std::complex<double>;

inline constexpr cplx I{0.0, 1.0};

enum class Space { Disk, HalfPlane };
enum class FaceIndex { First = 1, Second = 2 };

// Point of C^2; interior predicates select the bidisk D^2 or the
// bi-upper-half-plane Pi^2.
struct Point2 {
    cplx c1{};
    cplx c2{};

    cplx coord(int j) const { return j == 1 ? c1 : c2; }
};

inline Point2 operator+(const Point2& a, const Point2& b) { return {a.c1 + b.c1, a.c2 + b.c2}; }
inline Point2 operator-(const Point2& a, const Point2& b) { return {a.c1 - b.c1, a.c2 - b.c2}; }
inline Point2 operator*(double t, const Point2& a) { return {t * a.c1, t * a.c2}; }

// max-norm on C^2
inline double max_norm(const Point2& p) { return std::max(std::abs(p.c1), std::abs(p.c2)); }

inline bool in_disk2(const Point2& p) { return std::abs(p.c1) < 1.0 && std::abs(p.c2) < 1.0; }
inline bool in_halfplane2(const Point2& p) { return p.c1.imag() > 0.0 && p.c2.imag() > 0.0; }
inline bool interior(const Point2& p, Space s) {
    return s == Space::Disk ? in_disk2(p) : in_halfplane2(p);
}

// max-norm distance to the complement of the open domain:
// 1 - max|c_j| for the bidisk, min Im c_j for the bi-half-plane.
inline double dist_to_boundary(const Point2& p, Space s) {
    if (s == Space::Disk) return 1.0 - std::max(std::abs(p.c1), std::abs(p.c2));
    return std::min(p.c1.imag(), p.c2.imag());
}

// A boundary point lying on a face: (edge, interior) when face == First,
// (interior, edge) when face == Second.  The edge coordinate is unimodular
// (Disk) or real (HalfPlane); the interior coordinate is allowed to be on
// the closed factor, so corners such as (1,1) are expressible.
struct FacePoint {
    Space space = Space::HalfPlane;
    FaceIndex face = FaceIndex::First;
    cplx edge_coord{};
    cplx interior_coord{};

    Point2 as_point() const {
        return face == FaceIndex::First ? Point2{edge_coord, interior_coord}
                                        : Point2{interior_coord, edge_coord};
    }
    int edge_index() const { return face == FaceIndex::First ? 1 : 2; }
    int interior_index() const { return face == FaceIndex::First ? 2 : 1; }
};

bool valid_face_point(const FacePoint& fp, double tol = 1e-9);

// ratio ||p - target|| / dist(p, complement); >= 1 for interior p
double aperture_of(const Point2& p, const FacePoint& target);

// Finite nontangential approach sequence along a ray, geometric scales.
struct PathSamples {
    FacePoint target;
    std::vector<Point2> points;
    std::vector<double> scales;
    double aperture = 1.0;
    bool truncated = false;  // scales below the 1e-9 floor were dropped
};

inline constexpr double kScaleFloor = 1e-9;

PathSamples nontangential_path(const FacePoint& target, const Point2& dir, double t0,
                               double ratio, int count);

// Ray perpendicular to the face, stepping into the edge coordinate.
// For the disk the ray is radial, for the half-plane it is +i.
PathSamples perpendicular_path(const FacePoint& target, double t0, double ratio, int count);

}  // namespace facenp
