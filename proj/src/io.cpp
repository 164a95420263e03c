#include "facenp/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace facenp {

json to_json(cplx v) { return json{{"re", v.real()}, {"im", v.imag()}}; }

cplx complex_from_json(const json& j) {
    if (j.is_number()) return cplx{j.get<double>(), 0.0};
    if (j.is_object() && j.contains("re"))
        return cplx{j["re"].get<double>(), j.value("im", 0.0)};
    throw ValidationError("expected a number or {re, im} pair");
}

namespace {

const std::map<ExprKind, std::string> kKindNames = {
    {ExprKind::RealConst, "const"},
    {ExprKind::CoordSelect, "coord"},
    {ExprKind::HerglotzAtom, "herglotz_atom"},
    {ExprKind::LinearTerm, "linear"},
    {ExprKind::NonnegSum, "sum"},
    {ExprKind::NegReciprocal, "neg_recip"},
    {ExprKind::Shifted, "shift"},
    {ExprKind::PowerAlpha, "power"},
    {ExprKind::LogBranch, "log"},
    {ExprKind::NegCot, "neg_cot"},
    {ExprKind::PickFromSchur, "pick_from_schur"},
    {ExprKind::SchurFromPick, "schur_from_pick"},
    {ExprKind::Rotation, "rotation"},
    {ExprKind::Reduction, "reduction"},
    {ExprKind::Augmentation, "augmentation"},
    {ExprKind::FacialSolution, "facial_solution"},
    {ExprKind::RationalBilinear, "rational_bilinear"},
};

std::string kind_name(ExprKind k) { return kKindNames.at(k); }

ExprKind kind_from_name(const std::string& s) {
    for (const auto& [k, n] : kKindNames)
        if (n == s) return k;
    throw UnknownName("expression kind '" + s + "'");
}

}  // namespace

json expr_to_json(const ExprPtr& e) {
    json j;
    j["kind"] = kind_name(e->kind);
    switch (e->kind) {
        case ExprKind::RealConst:
            j["value"] = e->p0;
            j["schur"] = e->cls.domain == Space::Disk;
            break;
        case ExprKind::CoordSelect:
            j["coord"] = e->coord;
            j["schur"] = e->cls.domain == Space::Disk;
            break;
        case ExprKind::HerglotzAtom:
            j["weight"] = e->p0;
            j["pole"] = e->p1;
            j["coord"] = e->coord;
            break;
        case ExprKind::LinearTerm:
            j["slope"] = e->p0;
            j["coord"] = e->coord;
            break;
        case ExprKind::NonnegSum:
            j["weights"] = e->weights;
            break;
        case ExprKind::Shifted:
            j["offset"] = e->p0;
            break;
        case ExprKind::PowerAlpha:
            j["x"] = e->p0;
            j["alpha"] = e->p1;
            j["coord"] = e->coord;
            break;
        case ExprKind::LogBranch:
        case ExprKind::NegCot:
            j["x"] = e->p0;
            j["coord"] = e->coord;
            break;
        case ExprKind::Rotation:
            j["u1"] = to_json(e->u1);
            j["u2"] = to_json(e->u2);
            j["v"] = to_json(e->v);
            break;
        case ExprKind::Reduction:
        case ExprKind::Augmentation:
            j["x"] = e->p0;
            j["a0"] = e->p1;
            j["a1"] = e->p2;
            break;
        case ExprKind::FacialSolution: {
            j["xi"] = e->p0;
            json terms = json::array();
            for (const auto& t : e->rterms)
                terms.push_back({{"coord", t.coord}, {"edge", t.edge}, {"slope", t.slope}});
            j["r"] = terms;
            break;
        }
        case ExprKind::RationalBilinear: {
            json n = json::array(), d = json::array();
            for (int i = 0; i < 4; ++i) {
                n.push_back(to_json(e->num[i]));
                d.push_back(to_json(e->den[i]));
            }
            j["num"] = n;
            j["den"] = d;
            break;
        }
        default:
            break;
    }
    if (!e->children.empty()) {
        json kids = json::array();
        for (const auto& c : e->children) kids.push_back(expr_to_json(c));
        j["children"] = kids;
    }
    return j;
}

ExprPtr expr_from_json(const json& j) {
    ExprKind k = kind_from_name(j.at("kind").get<std::string>());
    std::vector<ExprPtr> kids;
    if (j.contains("children"))
        for (const auto& c : j["children"]) kids.push_back(expr_from_json(c));
    switch (k) {
        case ExprKind::RealConst:
            return j.value("schur", false) ? constant_schur(j.at("value").get<double>())
                                           : constant(j.at("value").get<double>());
        case ExprKind::CoordSelect:
            return coordinate(j.at("coord").get<int>(),
                              j.value("schur", false) ? Space::Disk : Space::HalfPlane);
        case ExprKind::HerglotzAtom:
            return herglotz_atom(j.at("weight").get<double>(), j.at("pole").get<double>(),
                                 j.value("coord", 1));
        case ExprKind::LinearTerm:
            return linear_term(j.at("slope").get<double>(), j.value("coord", 1));
        case ExprKind::NonnegSum:
            return nonneg_sum(std::move(kids), j.at("weights").get<std::vector<double>>());
        case ExprKind::NegReciprocal:
            return neg_reciprocal(kids.at(0));
        case ExprKind::Shifted:
            return shifted(kids.at(0), j.at("offset").get<double>());
        case ExprKind::PowerAlpha:
            return power_alpha(j.at("x").get<double>(), j.at("alpha").get<double>(),
                               j.value("coord", 1));
        case ExprKind::LogBranch:
            return log_branch(j.at("x").get<double>(), j.value("coord", 1));
        case ExprKind::NegCot:
            return neg_cot(j.at("x").get<double>(), j.value("coord", 1));
        case ExprKind::PickFromSchur:
            return pick_from_schur(kids.at(0));
        case ExprKind::SchurFromPick:
            return schur_from_pick(kids.at(0));
        case ExprKind::Rotation:
            return rotated_schur(kids.at(0), complex_from_json(j.at("u1")),
                                 complex_from_json(j.at("u2")), complex_from_json(j.at("v")));
        case ExprKind::Reduction:
            return reduction_expr(kids.at(0), j.at("x").get<double>(), j.at("a0").get<double>(),
                                  j.at("a1").get<double>());
        case ExprKind::Augmentation:
            return augmentation_expr(kids.at(0), j.at("x").get<double>(), j.at("a0").get<double>(),
                                     j.at("a1").get<double>());
        case ExprKind::FacialSolution: {
            std::vector<RTerm> terms;
            for (const auto& t : j.at("r"))
                terms.push_back({t.at("coord").get<int>(), t.at("edge").get<double>(),
                                 t.at("slope").get<double>()});
            return facial_solution(std::move(terms), j.at("xi").get<double>(), kids.at(0));
        }
        case ExprKind::RationalBilinear: {
            std::array<cplx, 4> n{}, d{};
            for (int i = 0; i < 4; ++i) {
                n[i] = complex_from_json(j.at("num").at(i));
                d[i] = complex_from_json(j.at("den").at(i));
            }
            return rational_bilinear(n, d);
        }
    }
    throw Error("expr_from_json: unreachable");
}

namespace {

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed)
            if (it.key() == a) ok = true;
        if (!ok)
            throw ValidationError(where + ": unknown field '" + it.key() +
                                  "' (a problem carries exactly one target value \"xi\")");
    }
}

}  // namespace

json problem_to_json(const InterpProblem& p, SolveMode mode) {
    json j;
    j["space"] = p.space == Space::Disk ? "disk" : "halfplane";
    j["xi"] = to_json(p.xi);
    json nodes = json::array();
    auto emit = [&](const std::vector<ProblemNode>& ns, int face) {
        for (const auto& n : ns)
            nodes.push_back({{"face", face},
                             {"edge", to_json(n.edge)},
                             {"interior", to_json(n.interior)},
                             {"slope", n.slope}});
    };
    emit(p.face1, 1);
    emit(p.face2, 2);
    j["nodes"] = nodes;
    j["mode"] = mode == SolveMode::Strict ? "strict" : "relaxed";
    return j;
}

InterpProblem problem_from_json(const json& j, SolveMode* mode) {
    reject_unknown_keys(j, {"space", "xi", "nodes", "mode"}, "problem");
    InterpProblem p;
    std::string sp = j.at("space").get<std::string>();
    if (sp == "disk") p.space = Space::Disk;
    else if (sp == "halfplane") p.space = Space::HalfPlane;
    else throw ValidationError("problem: space must be 'disk' or 'halfplane'");
    p.xi = complex_from_json(j.at("xi"));
    for (const auto& n : j.at("nodes")) {
        reject_unknown_keys(n, {"face", "edge", "interior", "slope"}, "node");
        ProblemNode pn{complex_from_json(n.at("edge")), complex_from_json(n.at("interior")),
                       n.at("slope").get<double>()};
        int face = n.at("face").get<int>();
        if (face == 1) p.face1.push_back(pn);
        else if (face == 2) p.face2.push_back(pn);
        else throw ValidationError("node: face must be 1 or 2");
    }
    if (mode) {
        std::string m = j.value("mode", "strict");
        if (m == "strict") *mode = SolveMode::Strict;
        else if (m == "relaxed") *mode = SolveMode::Relaxed;
        else throw ValidationError("problem: mode must be 'strict' or 'relaxed'");
    }
    validate(p);
    return p;
}

ExprPtr parse_fspec(const std::string& spec) {
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (name == "file") {
        std::ifstream in(rest);
        if (!in) throw ValidationError("parse_fspec: cannot open '" + rest + "'");
        json j;
        in >> j;
        return expr_from_json(j);
    }
    CatalogParams p;
    if (name == "const" && !rest.empty() && rest.find('=') == std::string::npos) {
        p.c = std::stod(rest);
        return catalog("const", p).expr;
    }
    std::stringstream ss(rest);
    std::string kv;
    while (std::getline(ss, kv, ',')) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw ValidationError("parse_fspec: expected key=value");
        std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
        if (key == "x") p.x = std::stod(val);
        else if (key == "alpha") p.alpha = std::stod(val);
        else if (key == "c") p.c = std::stod(val);
        else if (key == "a") p.a = std::stod(val);
        else if (key == "b") p.b = std::stod(val);
        else if (key == "coord") p.coord = std::stoi(val);
        else if (key == "atoms") {
            std::stringstream as(val);
            std::string atom;
            while (std::getline(as, atom, ';')) {
                auto at = atom.find('@');
                if (at == std::string::npos)
                    throw ValidationError("parse_fspec: atoms must be weight@pole;...");
                p.atoms.emplace_back(std::stod(atom.substr(0, at)),
                                     std::stod(atom.substr(at + 1)));
            }
        } else {
            throw ValidationError("parse_fspec: unknown key '" + key + "'");
        }
    }
    return catalog(name, p).expr;
}

json solution_report_to_json(const SolutionReport& rep, double tol_value, double tol_slope) {
    json nodes = json::array();
    for (const auto& n : rep.nodes)
        nodes.push_back({{"face", n.face},
                         {"index", n.index},
                         {"b_point", n.b_point},
                         {"value", to_json(n.value_est)},
                         {"slope", n.slope_est},
                         {"slope_target", n.slope_target},
                         {"value_ok", n.value_ok},
                         {"slope_ok", n.slope_ok},
                         {"slope_bounded", n.slope_bounded}});
    return json{{"nodes", nodes},
                {"all_pass", rep.all_pass},
                {"tol_value", tol_value},
                {"tol_slope", tol_slope}};
}

json face_report_to_json(const FaceReport& rep) {
    json samples = json::array();
    for (const auto& s : rep.samples)
        samples.push_back({{"interior", to_json(s.interior)},
                           {"value", to_json(s.value)},
                           {"grad1", to_json(s.grad1)},
                           {"grad2", to_json(s.grad2)}});
    return json{{"space", rep.space == Space::Disk ? "disk" : "halfplane"},
                {"face", rep.face},
                {"edge", to_json(rep.edge)},
                {"samples", samples},
                {"value_spread", rep.value_spread},
                {"grad_spread", rep.grad_spread},
                {"alpha", rep.alpha_estimate},
                {"gradient_matches", rep.gradient_matches}};
}

json fit_to_json(const DifferentialFit& fit) {
    return json{{"omega", to_json(fit.omega)},
                {"eta1", to_json(fit.eta1)},
                {"eta2", to_json(fit.eta2)},
                {"scales", fit.scales},
                {"residual_ratios", fit.residual_ratios},
                {"c_point_passed", fit.c_point_passed}};
}

std::string path_csv(const PathSamples& path, const std::vector<cplx>& quotients,
                     const std::vector<cplx>& values) {
    std::ostringstream out;
    out.precision(17);
    out << "t,quotient_re,quotient_im,value_re,value_im\n";
    for (size_t k = 0; k < path.scales.size(); ++k) {
        cplx q = k < quotients.size() ? quotients[k] : cplx{};
        cplx v = k < values.size() ? values[k] : cplx{};
        out << path.scales[k] << ',' << q.real() << ',' << q.imag() << ',' << v.real() << ','
            << v.imag() << '\n';
    }
    return out.str();
}

}  // namespace facenp
