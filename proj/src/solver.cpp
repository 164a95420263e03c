#include "facenp/solver.hpp"

#include <cmath>

namespace facenp {

FacePoint InterpProblem::node_point(int face, size_t index) const {
    const auto& n = face == 1 ? face1.at(index) : face2.at(index);
    return {space, face == 1 ? FaceIndex::First : FaceIndex::Second, n.edge, n.interior};
}

void validate(const InterpProblem& p) {
    auto check_face = [&](const std::vector<ProblemNode>& nodes, int face) {
        for (size_t i = 0; i < nodes.size(); ++i) {
            const auto& n = nodes[i];
            if (n.slope <= 0.0) throw ValidationError("problem: slopes must be > 0");
            if (p.space == Space::HalfPlane) {
                if (std::abs(n.edge.imag()) > 1e-9)
                    throw ValidationError("problem: half-plane edge coordinates must be real");
                if (n.interior.imag() <= 0.0)
                    throw ValidationError("problem: interior coordinate must lie in the open half-plane");
            } else {
                if (std::abs(std::abs(n.edge) - 1.0) > 1e-9)
                    throw ValidationError("problem: disk edge coordinates must be unimodular");
                if (std::abs(n.interior) >= 1.0)
                    throw ValidationError("problem: interior coordinate must lie in the open disk");
            }
            for (size_t j = i + 1; j < nodes.size(); ++j)
                if (std::abs(n.edge - nodes[j].edge) < 1e-12)
                    throw ValidationError("problem: duplicate edge coordinate on face " +
                                          std::to_string(face));
        }
    };
    check_face(p.face1, 1);
    check_face(p.face2, 2);
    if (p.space == Space::HalfPlane) {
        if (std::abs(p.xi.imag()) > 1e-9)
            throw ValidationError("problem: xi must be real for half-plane problems");
    } else if (std::abs(std::abs(p.xi) - 1.0) > 1e-9) {
        throw ValidationError("problem: xi must be unimodular for disk problems");
    }
}

RationalR build_r(const InterpProblem& p) {
    if (p.space != Space::HalfPlane) throw DomainError("build_r: need a half-plane problem");
    if (p.face1.empty() && p.face2.empty()) throw EmptyProblem("build_r: no interpolation nodes");
    validate(p);
    RationalR r;
    for (const auto& n : p.face1) r.terms.push_back({1, n.edge.real(), n.slope});
    for (const auto& n : p.face2) r.terms.push_back({2, n.edge.real(), n.slope});
    return r;
}

SolutionSpec solve(const InterpProblem& p, const ExprPtr& f, SolveMode mode,
                   const LadderConfig& cfg) {
    if (f->cls.domain != Space::HalfPlane)
        throw ParamOutOfRange("solve: free parameter must be Pick class");
    RationalR r = build_r(p);

    SolutionSpec spec;
    spec.rterms = r.terms;
    spec.xi = p.xi.real();
    spec.f = f;
    spec.mode = mode;

    if (mode == SolveMode::Strict) {
        auto check = [&](const std::vector<ProblemNode>& nodes, int face) {
            for (size_t i = 0; i < nodes.size(); ++i) {
                FacePoint fp = p.node_point(face, i);
                LimitEstimate est = vanishing_limit(f, fp, cfg);
                if (std::abs(est.extrapolated) > cfg.tol)
                    throw VanishingConditionFailed(face, int(i), est.extrapolated);
                spec.node_limits.push_back(std::move(est));
            }
        };
        check(p.face1, 1);
        check(p.face2, 2);
    }

    spec.h = facial_solution(r.terms, spec.xi, f);
    return spec;
}

ExprPtr solve_single_node_pick(const FacePoint& x, double xi, double beta, const ExprPtr& g,
                               SolveMode mode, const LadderConfig& cfg) {
    InterpProblem p;
    p.space = Space::HalfPlane;
    p.xi = xi;
    ProblemNode n{x.edge_coord.real(), x.interior_coord, beta};
    if (x.face == FaceIndex::First) p.face1.push_back(n); else p.face2.push_back(n);
    return solve(p, g, mode, cfg).h;
}

namespace {

// unimodular multiplier keeping every rotated coordinate away from 1
cplx pick_rotation(const std::vector<cplx>& coords) {
    static const cplx candidates[] = {cplx{1.0}, cplx{-1.0}, I, cplx{0.0, -1.0}};
    cplx best = candidates[0];
    double best_gap = -1.0;
    for (cplx u : candidates) {
        double gap = 2.0;
        for (cplx c : coords) gap = std::min(gap, std::abs(u * c - 1.0));
        if (gap > best_gap + 1e-15) {
            best_gap = gap;
            best = u;
        }
        if (u == candidates[0] && gap > 0.1) return u;  // prefer no rotation
    }
    return best;
}

}  // namespace

ExprPtr solve_schur(const InterpProblem& dp, const ExprPtr& g, SolveMode mode,
                    const LadderConfig& cfg) {
    if (dp.space != Space::Disk) throw DomainError("solve_schur: need a disk problem");
    validate(dp);
    if (dp.face1.empty() && dp.face2.empty()) throw EmptyProblem("solve_schur: no nodes");

    std::vector<cplx> edges1, edges2;
    for (const auto& n : dp.face1) edges1.push_back(n.edge);
    for (const auto& n : dp.face2) edges2.push_back(n.edge);
    cplx u1 = edges1.empty() ? cplx{1.0} : pick_rotation(edges1);
    cplx u2 = edges2.empty() ? cplx{1.0} : pick_rotation(edges2);
    cplx v = pick_rotation({dp.xi});

    cplx omega_r = v * dp.xi;
    InterpProblem hp;
    hp.space = Space::HalfPlane;
    hp.xi = disk_to_halfplane(omega_r).real();
    auto map_node = [&](const ProblemNode& n, cplx u_edge, cplx u_other) {
        cplx tau_r = u_edge * n.edge;
        ProblemNode m;
        m.edge = disk_to_halfplane(tau_r).real();
        m.interior = disk_to_halfplane(u_other * n.interior);
        m.slope = (1.0 - tau_r.real()) / (1.0 - omega_r.real()) * n.slope;
        return m;
    };
    for (const auto& n : dp.face1) hp.face1.push_back(map_node(n, u1, u2));
    for (const auto& n : dp.face2) hp.face2.push_back(map_node(n, u2, u1));

    SolutionSpec sol = solve(hp, g, mode, cfg);
    ExprPtr phi = schur_from_pick(sol.h);
    if (u1 != cplx{1.0} || u2 != cplx{1.0} || v != cplx{1.0})
        phi = rotated_schur(phi, u1, u2, v);
    return phi;
}

}  // namespace facenp
