#include "facenp/expr.hpp"

#include <cmath>

namespace facenp {

namespace {

cplx cayley(cplx lambda) {  // D -> Pi
    return I * (1.0 + lambda) / (1.0 - lambda);
}
cplx cayley_inv(cplx z) {  // Pi -> D
    return (z - I) / (z + I);
}

int merged_nvars(const std::vector<ExprPtr>& children) {
    int n = 1;
    int used_coord = 0;
    for (const auto& c : children) {
        if (c->cls.nvars == 2) n = 2;
        // two distinct single-variable coordinates also make it two-variable
        if (c->cls.nvars == 1) {
            if (used_coord != 0 && used_coord != c->coord) n = 2;
            used_coord = c->coord;
        }
    }
    return n;
}

}  // namespace

bool is_constant(const Expr& e) {
    if (e.kind == ExprKind::RealConst) return true;
    if (e.kind == ExprKind::NonnegSum) {
        for (size_t i = 0; i < e.children.size(); ++i)
            if (e.weights[i] != 0.0 && !is_constant(*e.children[i])) return false;
        return true;
    }
    if (e.kind == ExprKind::Shifted) return is_constant(*e.children[0]);
    return false;
}

ExprPtr constant(double c, int nvars) {
    auto e = std::make_shared<Expr>(ExprKind::RealConst, FuncClass{Space::HalfPlane, nvars});
    e->p0 = c;
    return e;
}

ExprPtr constant_schur(double c, int nvars) {
    if (std::abs(c) > 1.0) throw ParamOutOfRange("constant_schur: |c| must be <= 1");
    auto e = std::make_shared<Expr>(ExprKind::RealConst, FuncClass{Space::Disk, nvars});
    e->p0 = c;
    return e;
}

ExprPtr coordinate(int j, Space domain) {
    if (j != 1 && j != 2) throw ParamOutOfRange("coordinate: j must be 1 or 2");
    auto e = std::make_shared<Expr>(ExprKind::CoordSelect, FuncClass{domain, 1});
    e->coord = j;
    return e;
}

ExprPtr herglotz_atom(double weight, double pole, int j) {
    if (weight <= 0.0) throw ParamOutOfRange("herglotz_atom: weight must be > 0");
    auto e = std::make_shared<Expr>(ExprKind::HerglotzAtom, FuncClass{Space::HalfPlane, 1});
    e->p0 = weight;
    e->p1 = pole;
    e->coord = j;
    return e;
}

ExprPtr linear_term(double slope, int j) {
    if (slope < 0.0) throw ParamOutOfRange("linear_term: slope must be >= 0");
    auto e = std::make_shared<Expr>(ExprKind::LinearTerm, FuncClass{Space::HalfPlane, 1});
    e->p0 = slope;
    e->coord = j;
    return e;
}

ExprPtr nonneg_sum(std::vector<ExprPtr> children, std::vector<double> weights) {
    if (children.empty() || children.size() != weights.size())
        throw ParamOutOfRange("nonneg_sum: children/weights size mismatch");
    for (double w : weights)
        if (w < 0.0) throw ParamOutOfRange("nonneg_sum: weights must be >= 0");
    for (const auto& c : children)
        if (c->cls.domain != Space::HalfPlane)
            throw ParamOutOfRange("nonneg_sum: children must be Pick class");
    auto e = std::make_shared<Expr>(ExprKind::NonnegSum,
                                    FuncClass{Space::HalfPlane, merged_nvars(children)});
    if (e->cls.nvars == 1 && children[0]->cls.nvars == 1) e->coord = children[0]->coord;
    e->children = std::move(children);
    e->weights = std::move(weights);
    return e;
}

ExprPtr neg_reciprocal(ExprPtr child) {
    if (child->cls.domain != Space::HalfPlane)
        throw ParamOutOfRange("neg_reciprocal: child must be Pick class");
    if (is_constant(*child)) {
        // -1/c is still a real constant, but -1/0 is rejected at build time
        double c = eval(child, Point2{I, I}).real();
        if (c == 0.0) throw ParamOutOfRange("neg_reciprocal: child is the zero constant");
    }
    auto e = std::make_shared<Expr>(ExprKind::NegReciprocal, child->cls);
    e->coord = child->coord;
    e->children = {std::move(child)};
    return e;
}

ExprPtr shifted(ExprPtr child, double offset) {
    if (child->cls.domain != Space::HalfPlane)
        throw ParamOutOfRange("shifted: child must be Pick class");
    auto e = std::make_shared<Expr>(ExprKind::Shifted, child->cls);
    e->coord = child->coord;
    e->p0 = offset;
    e->children = {std::move(child)};
    return e;
}

ExprPtr power_alpha(double x, double alpha, int j) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw ParamOutOfRange("power_alpha: alpha must be in (0,1]");
    auto e = std::make_shared<Expr>(ExprKind::PowerAlpha, FuncClass{Space::HalfPlane, 1});
    e->p0 = x;
    e->p1 = alpha;
    e->coord = j;
    return e;
}

ExprPtr log_branch(double x, int j) {
    auto e = std::make_shared<Expr>(ExprKind::LogBranch, FuncClass{Space::HalfPlane, 1});
    e->p0 = x;
    e->coord = j;
    return e;
}

ExprPtr neg_cot(double x, int j) {
    auto e = std::make_shared<Expr>(ExprKind::NegCot, FuncClass{Space::HalfPlane, 1});
    e->p0 = x;
    e->coord = j;
    return e;
}

ExprPtr pick_from_schur(ExprPtr phi) {
    if (phi->cls.domain != Space::Disk)
        throw ParamOutOfRange("pick_from_schur: argument must be Schur class");
    if (phi->kind == ExprKind::RealConst && phi->p0 == 1.0)
        throw IdenticallyOne("pick_from_schur: phi identically 1 has no Pick image");
    auto e = std::make_shared<Expr>(ExprKind::PickFromSchur,
                                    FuncClass{Space::HalfPlane, phi->cls.nvars});
    e->coord = phi->coord;
    e->children = {std::move(phi)};
    return e;
}

ExprPtr schur_from_pick(ExprPtr h) {
    if (h->cls.domain != Space::HalfPlane)
        throw ParamOutOfRange("schur_from_pick: argument must be Pick class");
    auto e = std::make_shared<Expr>(ExprKind::SchurFromPick, FuncClass{Space::Disk, h->cls.nvars});
    e->coord = h->coord;
    e->children = {std::move(h)};
    return e;
}

ExprPtr rotated_schur(ExprPtr phi, cplx u1, cplx u2, cplx v) {
    if (phi->cls.domain != Space::Disk)
        throw ParamOutOfRange("rotated_schur: argument must be Schur class");
    for (cplx u : {u1, u2, v})
        if (std::abs(std::abs(u) - 1.0) > 1e-12)
            throw ParamOutOfRange("rotated_schur: rotations must be unimodular");
    auto e = std::make_shared<Expr>(ExprKind::Rotation, FuncClass{Space::Disk, 2});
    e->u1 = u1;
    e->u2 = u2;
    e->v = v;
    e->children = {std::move(phi)};
    return e;
}

ExprPtr reduction_expr(ExprPtr f, double x, double a0, double a1) {
    if (f->cls.domain != Space::HalfPlane || f->cls.nvars != 1)
        throw ParamOutOfRange("reduction_expr: need a one-variable Pick function");
    if (is_constant(*f)) throw ConstantFunction("reduction_expr: f is constant");
    if (a1 <= 0.0) throw ParamOutOfRange("reduction_expr: a1 must be > 0");
    auto e = std::make_shared<Expr>(ExprKind::Reduction, f->cls);
    e->coord = f->coord;
    e->p0 = x;
    e->p1 = a0;
    e->p2 = a1;
    e->children = {std::move(f)};
    return e;
}

ExprPtr augmentation_expr(ExprPtr g, double x, double a0, double a1) {
    if (g->cls.domain != Space::HalfPlane || g->cls.nvars != 1)
        throw ParamOutOfRange("augmentation_expr: need a one-variable Pick function");
    if (a1 <= 0.0) throw ParamOutOfRange("augmentation_expr: a1 must be > 0");
    auto e = std::make_shared<Expr>(ExprKind::Augmentation, g->cls);
    e->coord = g->coord;
    e->p0 = x;
    e->p1 = a0;
    e->p2 = a1;
    e->children = {std::move(g)};
    return e;
}

ExprPtr facial_solution(std::vector<RTerm> rterms, double xi, ExprPtr f) {
    if (rterms.empty()) throw EmptyProblem("facial_solution: no boundary terms");
    if (f->cls.domain != Space::HalfPlane)
        throw ParamOutOfRange("facial_solution: f must be Pick class");
    for (const auto& t : rterms) {
        if (t.slope <= 0.0) throw ParamOutOfRange("facial_solution: slopes must be > 0");
        if (t.coord != 1 && t.coord != 2)
            throw ParamOutOfRange("facial_solution: coord must be 1 or 2");
    }
    auto e = std::make_shared<Expr>(ExprKind::FacialSolution, FuncClass{Space::HalfPlane, 2});
    e->p0 = xi;
    e->rterms = std::move(rterms);
    e->children = {std::move(f)};
    return e;
}

ExprPtr rational_bilinear(const std::array<cplx, 4>& num, const std::array<cplx, 4>& den) {
    auto e = std::make_shared<Expr>(ExprKind::RationalBilinear, FuncClass{Space::Disk, 2});
    e->num = num;
    e->den = den;
    return e;
}

cplx eval_rterms(const std::vector<RTerm>& terms, const Point2& z) {
    cplx r = 0.0;
    for (const auto& t : terms) r += 1.0 / (t.slope * (z.coord(t.coord) - t.edge));
    return r;
}

namespace {

cplx eval_impl(const Expr& e, const Point2& z) {
    switch (e.kind) {
        case ExprKind::RealConst:
            return e.p0;
        case ExprKind::CoordSelect:
            return z.coord(e.coord);
        case ExprKind::HerglotzAtom:
            return e.p0 / (e.p1 - z.coord(e.coord));
        case ExprKind::LinearTerm:
            return e.p0 * z.coord(e.coord);
        case ExprKind::NonnegSum: {
            cplx s = 0.0;
            for (size_t i = 0; i < e.children.size(); ++i)
                s += e.weights[i] * eval_impl(*e.children[i], z);
            return s;
        }
        case ExprKind::NegReciprocal:
            return -1.0 / eval_impl(*e.children[0], z);
        case ExprKind::Shifted:
            return eval_impl(*e.children[0], z) + e.p0;
        case ExprKind::PowerAlpha:
            return std::pow(z.coord(e.coord) - e.p0, e.p1);
        case ExprKind::LogBranch:
            return std::log(z.coord(e.coord) - e.p0);
        case ExprKind::NegCot: {
            // -cot(w) = -i (q + 1)/(q - 1) with q = exp(2iw); bounded for Im w > 0
            cplx q = std::exp(2.0 * I * (z.coord(e.coord) - e.p0));
            return -I * (q + 1.0) / (q - 1.0);
        }
        case ExprKind::PickFromSchur: {
            Point2 lam{cayley_inv(z.c1), cayley_inv(z.c2)};
            cplx w = eval_impl(*e.children[0], lam);
            return I * (1.0 + w) / (1.0 - w);
        }
        case ExprKind::SchurFromPick: {
            Point2 zz{cayley(z.c1), cayley(z.c2)};
            cplx w = eval_impl(*e.children[0], zz);
            return (w - I) / (w + I);
        }
        case ExprKind::Rotation:
            return std::conj(e.v) * eval_impl(*e.children[0], Point2{e.u1 * z.c1, e.u2 * z.c2});
        case ExprKind::Reduction: {
            cplx f = eval_impl(*e.children[0], z);
            cplx w = z.coord(e.coord);
            return -1.0 / (f - e.p1) + 1.0 / (e.p2 * (w - e.p0));
        }
        case ExprKind::Augmentation: {
            cplx g = eval_impl(*e.children[0], z);
            cplx w = z.coord(e.coord);
            return e.p1 + 1.0 / (1.0 / (e.p2 * (w - e.p0)) - g);
        }
        case ExprKind::FacialSolution: {
            cplx r = eval_rterms(e.rterms, z);
            cplx f = eval_impl(*e.children[0], z);
            return e.p0 + 1.0 / (r - f);
        }
        case ExprKind::RationalBilinear: {
            cplx n = e.num[0] + e.num[1] * z.c1 + e.num[2] * z.c2 + e.num[3] * z.c1 * z.c2;
            cplx d = e.den[0] + e.den[1] * z.c1 + e.den[2] * z.c2 + e.den[3] * z.c1 * z.c2;
            return n / d;
        }
    }
    throw Error("eval: unreachable");
}

}  // namespace

cplx eval(const Expr& f, const Point2& z) {
    if (!interior(z, f.cls.domain)) throw DomainError("eval: point not interior to domain");
    return eval_impl(f, z);
}

cplx eval(const ExprPtr& f, const Point2& z) { return eval(*f, z); }

cplx eval(const Expr& f, cplx w) {
    if (f.cls.nvars != 1 && !is_constant(f))
        throw ArityError("eval: two-variable expression needs a Point2");
    return eval(f, Point2{w, w});
}

cplx eval(const ExprPtr& f, cplx w) { return eval(*f, w); }

CatalogEntry catalog(const std::string& name, const CatalogParams& p) {
    if (name == "const") return {constant(p.c), true};
    if (name == "power") return {power_alpha(p.x, p.alpha, p.coord), true};
    if (name == "neg_power") {
        if (!(p.alpha > 0.0 && p.alpha < 1.0))
            throw ParamOutOfRange("catalog neg_power: alpha must be in (0,1)");
        return {neg_reciprocal(power_alpha(p.x, p.alpha, p.coord)), true};
    }
    if (name == "log") return {log_branch(p.x, p.coord), true};
    if (name == "neg_recip")
        return {neg_reciprocal(shifted(coordinate(p.coord), -p.x)), false};
    if (name == "neg_cot") return {neg_cot(p.x, p.coord), false};
    if (name == "herglotz") {
        std::vector<ExprPtr> kids{linear_term(p.b, p.coord)};
        std::vector<double> w{1.0};
        for (auto [weight, pole] : p.atoms) {
            kids.push_back(herglotz_atom(weight, pole, p.coord));
            w.push_back(1.0);
        }
        return {shifted(nonneg_sum(std::move(kids), std::move(w)), p.a), true};
    }
    if (name == "ratex")
        return {rational_bilinear({1.0, 1.0, 1.0, -3.0}, {3.0, -1.0, -1.0, -1.0}), true};
    if (name == "psi")
        return {rational_bilinear({0.0, -1.0, -1.0, 2.0}, {2.0, -1.0, -1.0, 0.0}), true};
    throw UnknownName("catalog: unknown entry '" + name + "'");
}

}  // namespace facenp
