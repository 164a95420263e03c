#pragma once

#include <vector>

#include "facenp/cayley.hpp"
#include "facenp/expr.hpp"
#include "facenp/membership.hpp"

namespace facenp {

enum class SolveMode { Strict, Relaxed };

// One interpolation node; edge is real for half-plane problems, unimodular
// for disk problems.
struct ProblemNode {
    cplx edge{};
    cplx interior{};
    double slope = 1.0;
};

// Facial boundary interpolation data: nodes on the two face types with a
// single common target value xi.  The schema deliberately cannot express
// per-face target values.
struct InterpProblem {
    Space space = Space::HalfPlane;
    cplx xi{};  // real (HalfPlane) or unimodular (Disk)
    std::vector<ProblemNode> face1;  // nodes (edge, interior)
    std::vector<ProblemNode> face2;  // nodes (interior, edge)

    FacePoint node_point(int face, size_t index) const;
};

// Throws ValidationError on duplicate within-face edges, nonpositive slopes,
// non-real / non-unimodular data.  Emptiness is checked at solve time.
void validate(const InterpProblem& p);

// r(z) = sum_j 1/(beta_j (z^1 - x_j)) + sum_k 1/(gamma_k (z^2 - y_k));
// Im r < 0 strictly on the open bi-half-plane.
struct RationalR {
    std::vector<RTerm> terms;
    cplx eval(const Point2& z) const { return eval_rterms(terms, z); }
};

RationalR build_r(const InterpProblem& p);

struct SolutionSpec {
    std::vector<RTerm> rterms;
    double xi = 0.0;
    ExprPtr f;
    SolveMode mode = SolveMode::Strict;
    ExprPtr h;  // xi + 1/(r - f)
    std::vector<LimitEstimate> node_limits;  // strict-mode vanishing estimates
};

// Half-plane solve: h = xi + 1/(r - f).  Strict mode verifies the vanishing
// condition lim t f(node + i t e_face) = 0 at every node first and throws
// VanishingConditionFailed otherwise.
SolutionSpec solve(const InterpProblem& p, const ExprPtr& f, SolveMode mode = SolveMode::Strict,
                   const LadderConfig& cfg = {});

// Single-node parametrization h = xi + 1/(1/(beta (z^1 - x^1)) - g).
ExprPtr solve_single_node_pick(const FacePoint& x, double xi, double beta, const ExprPtr& g,
                               SolveMode mode = SolveMode::Strict, const LadderConfig& cfg = {});

// Disk-side solve: maps every datum to the half-plane (rotating edge
// coordinates or values equal to 1 away), solves there with free parameter
// g, and conjugates back through the Cayley transform.
ExprPtr solve_schur(const InterpProblem& disk_problem, const ExprPtr& g,
                    SolveMode mode = SolveMode::Strict, const LadderConfig& cfg = {});

}  // namespace facenp
