#include "facenp/cayley.hpp"

#include <cmath>

namespace facenp {

cplx disk_to_halfplane(cplx lambda) {
    if (std::abs(lambda - 1.0) < 1e-300) throw PoleAtOne("disk_to_halfplane: lambda = 1");
    return I * (1.0 + lambda) / (1.0 - lambda);
}

cplx halfplane_to_disk(cplx z) {
    if (std::abs(z + I) < 1e-300) throw PoleAtMinusI("halfplane_to_disk: z = -i");
    return (z - I) / (z + I);
}

Point2 disk_to_halfplane(const Point2& lambda) {
    return {disk_to_halfplane(lambda.c1), disk_to_halfplane(lambda.c2)};
}

Point2 halfplane_to_disk(const Point2& z) {
    return {halfplane_to_disk(z.c1), halfplane_to_disk(z.c2)};
}

bool valid_datum(const BoundaryDatum& d, double tol) {
    if (d.slope <= 0.0) return false;
    if (!valid_face_point(d.node, tol)) return false;
    if (d.space == Space::Disk) return std::abs(std::abs(d.value) - 1.0) <= tol;
    return std::abs(d.value.imag()) <= tol;
}

namespace {
bool near_one(cplx w) { return std::abs(w - 1.0) < 1e-9; }
}

BoundaryDatum map_boundary_datum(const BoundaryDatum& d) {
    if (!valid_datum(d)) throw ValidationError("map_boundary_datum: invalid datum");
    BoundaryDatum out;
    if (d.space == Space::Disk) {
        cplx u = near_one(d.node.edge_coord) ? cplx{-1.0} : cplx{1.0};
        cplx v = near_one(d.value) ? cplx{-1.0} : cplx{1.0};
        cplx tau_r = u * d.node.edge_coord;
        cplx omega_r = v * d.value;
        out.space = Space::HalfPlane;
        out.node.space = Space::HalfPlane;
        out.node.face = d.node.face;
        double x = disk_to_halfplane(tau_r).real();
        double xi = disk_to_halfplane(omega_r).real();
        out.node.edge_coord = x;
        out.node.interior_coord = disk_to_halfplane(d.node.interior_coord);
        out.value = xi;
        // (1 - Re tau)/(1 - Re omega) = (xi^2 + 1)/(x^2 + 1): evaluating the
        // factor in half-plane coordinates keeps the roundtrip exact
        out.slope = (xi * xi + 1.0) / (x * x + 1.0) * d.slope;
        out.edge_rotation = u;
        out.value_rotation = v;
    } else {
        double x = d.node.edge_coord.real(), xi = d.value.real();
        out.space = Space::Disk;
        out.node.space = Space::Disk;
        out.node.face = d.node.face;
        out.node.edge_coord = std::conj(d.edge_rotation) * halfplane_to_disk(cplx{x});
        out.node.interior_coord = halfplane_to_disk(d.node.interior_coord);
        out.value = std::conj(d.value_rotation) * halfplane_to_disk(cplx{xi});
        out.slope = (x * x + 1.0) / (xi * xi + 1.0) * d.slope;
    }
    return out;
}

}  // namespace facenp
