#pragma once

#include <array>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "facenp/geometry.hpp"

namespace facenp {

// Which class the expression denotes a member of.  Pick functions live on
// the (bi-)upper-half-plane, Schur functions on the (bi-)disk.
struct FuncClass {
    Space domain = Space::HalfPlane;  // HalfPlane = Pick, Disk = Schur
    int nvars = 2;                    // 1 or 2
};

enum class ExprKind {
    RealConst,        // c
    CoordSelect,      // z^j (Pick) or lambda^j (Schur)
    HerglotzAtom,     // w / (t - z^j), w > 0, t real
    LinearTerm,       // b * z^j, b >= 0
    NonnegSum,        // sum_i w_i * child_i, w_i >= 0
    NegReciprocal,    // -1 / child
    Shifted,          // child + c, c real
    PowerAlpha,       // (z^j - x)^alpha, principal branch, alpha in (0,1]
    LogBranch,        // log(z^j - x), principal branch
    NegCot,           // -cot(z^j - x)
    PickFromSchur,    // h(z) = i (1 + phi(lambda(z))) / (1 - phi(lambda(z)))
    SchurFromPick,    // phi(lambda) = (h(z(lambda)) - i) / (h(z(lambda)) + i)
    Rotation,         // conj(v) * child(u1 lambda^1, u2 lambda^2), |u| = |v| = 1
    Reduction,        // -1/(f - a0) + 1/(a1 (z^j - x))
    Augmentation,     // a0 + 1/( 1/(a1 (z^j - x)) - g )
    FacialSolution,   // xi + 1/( r(z) - f(z) ), r from boundary-node terms
    RationalBilinear  // degree-(1,1) rational in (lambda^1, lambda^2)
};

// One term of r(z): 1 / (slope * (z^coord - edge)).
struct RTerm {
    int coord = 1;
    double edge = 0.0;
    double slope = 1.0;
};

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable expression node.  Built only through the factory functions
// below, which enforce the class-preservation rules, so eval never divides
// by zero at interior points.
class Expr {
  public:
    ExprKind kind;
    FuncClass cls;
    double p0 = 0, p1 = 0, p2 = 0;  // scalar params, meaning per kind
    int coord = 1;
    std::vector<ExprPtr> children;
    std::vector<double> weights;          // NonnegSum
    std::vector<RTerm> rterms;            // FacialSolution
    cplx u1{1.0}, u2{1.0}, v{1.0};        // Rotation
    std::array<cplx, 4> num{}, den{};     // RationalBilinear: c00,c10,c01,c11

    explicit Expr(ExprKind k, FuncClass c) : kind(k), cls(c) {}
};

// ---- factories (class-checked) ----
ExprPtr constant(double c, int nvars = 2);                  // Pick class
ExprPtr constant_schur(double c, int nvars = 2);            // |c| <= 1
ExprPtr coordinate(int j, Space domain = Space::HalfPlane);
ExprPtr herglotz_atom(double weight, double pole, int j = 1);
ExprPtr linear_term(double slope, int j = 1);
ExprPtr nonneg_sum(std::vector<ExprPtr> children, std::vector<double> weights);
ExprPtr neg_reciprocal(ExprPtr child);
ExprPtr shifted(ExprPtr child, double offset);
ExprPtr power_alpha(double x, double alpha, int j = 1);
ExprPtr log_branch(double x, int j = 1);
ExprPtr neg_cot(double x, int j = 1);
ExprPtr pick_from_schur(ExprPtr phi);
ExprPtr schur_from_pick(ExprPtr h);
ExprPtr rotated_schur(ExprPtr phi, cplx u1, cplx u2, cplx v);
ExprPtr reduction_expr(ExprPtr f, double x, double a0, double a1);
ExprPtr augmentation_expr(ExprPtr g, double x, double a0, double a1);
ExprPtr facial_solution(std::vector<RTerm> rterms, double xi, ExprPtr f);
ExprPtr rational_bilinear(const std::array<cplx, 4>& num, const std::array<cplx, 4>& den);

bool is_constant(const Expr& e);

// ---- evaluation ----
// Interior-point check happens here; recursion below is unchecked.
cplx eval(const Expr& f, const Point2& z);
cplx eval(const ExprPtr& f, const Point2& z);
// One-variable convenience: binds w to the expression's coordinate.
cplx eval(const Expr& f, cplx w);
cplx eval(const ExprPtr& f, cplx w);

// sum of r-terms at z
cplx eval_rterms(const std::vector<RTerm>& terms, const Point2& z);

// ---- catalog ----
struct CatalogParams {
    double x = 0.0;
    double alpha = 0.5;
    double c = 0.0;  // constant value
    double a = 0.0;  // herglotz offset
    double b = 0.0;  // herglotz linear slope
    std::vector<std::pair<double, double>> atoms;  // (weight, pole)
    int coord = 1;
};

struct CatalogEntry {
    ExprPtr expr;
    // whether lim t g(x + i t) = 0 holds at the entry's anchor point
    bool vanishing_ok = true;
};

// names: const, power, neg_power, log, neg_recip, neg_cot, herglotz, ratex, psi
CatalogEntry catalog(const std::string& name, const CatalogParams& p = {});

}  // namespace facenp
