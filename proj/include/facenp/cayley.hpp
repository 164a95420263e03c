#pragma once

#include "facenp/expr.hpp"

namespace facenp {

// z = i (1 + lambda) / (1 - lambda), coordinatewise on Point2.
cplx disk_to_halfplane(cplx lambda);
cplx halfplane_to_disk(cplx z);
Point2 disk_to_halfplane(const Point2& lambda);
Point2 halfplane_to_disk(const Point2& z);

// Facial interpolation datum: node, target value, Caratheodory slope.
// When the disk -> half-plane map had to rotate away an edge coordinate or
// value equal to 1, the applied unimodular factors are recorded so the
// inverse map (and downstream solves) can undo them.
struct BoundaryDatum {
    Space space = Space::Disk;
    FacePoint node;
    cplx value{};   // omega (unimodular) or xi (real)
    double slope = 1.0;
    cplx edge_rotation{1.0};
    cplx value_rotation{1.0};
};

bool valid_datum(const BoundaryDatum& d, double tol = 1e-9);

// Maps a datum to the opposite space.  Disk -> HalfPlane uses
//   x^1 = C(u tau^1), xi = C(v omega), beta = (1 - Re u tau^1)/(1 - Re v omega) * alpha
// with u, v = -1 exactly when tau^1 = 1 resp. omega = 1, else 1.
// HalfPlane -> Disk undoes the recorded rotations.
BoundaryDatum map_boundary_datum(const BoundaryDatum& d);

}  // namespace facenp
