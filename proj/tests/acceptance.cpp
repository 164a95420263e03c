// End-to-end acceptance checks.  Runs without a test framework and prints one
// PASS/FAIL line per criterion; exit status is the number of failures.
// argv[1] is the path to the CLI binary (used by the determinism check).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "facenp/cayley.hpp"
#include "facenp/io.hpp"
#include "facenp/julia.hpp"
#include "facenp/membership.hpp"
#include "facenp/solver.hpp"
#include "facenp/verify.hpp"

using namespace facenp;

namespace {

int checks_failed = 0;

bool expect(bool ok, const char* what) {
    if (!ok) {
        std::printf("    check failed: %s\n", what);
        ++checks_failed;
    }
    return ok;
}

// 1. Cayley layer: variable, function, and datum maps invert each other.
bool criterion_transforms() {
    bool ok = true;
    for (const auto& lam : quasirandom_samples(Space::Disk, 10000, 101))
        ok &= max_norm(halfplane_to_disk(disk_to_halfplane(lam)) - lam) < 1e-12;
    for (const auto& z : quasirandom_samples(Space::HalfPlane, 10000, 102))
        ok &= max_norm(disk_to_halfplane(halfplane_to_disk(z)) - z) < 1e-12;
    expect(ok, "variable roundtrip at 1e-12");

    auto phi = catalog("ratex").expr;
    auto phi2 = schur_from_pick(pick_from_schur(phi));
    auto h = pick_from_schur(catalog("psi").expr);
    auto h2 = pick_from_schur(schur_from_pick(h));
    bool fok = true;
    for (const auto& lam : quasirandom_samples(Space::Disk, 10000, 103))
        fok &= std::abs(eval(phi2, lam) - eval(phi, lam)) < 1e-12;
    for (const auto& z : quasirandom_samples(Space::HalfPlane, 10000, 104))
        fok &= std::abs(eval(h2, z) - eval(h, z)) < 1e-12;
    expect(fok, "function-map roundtrip at 1e-12");

    std::mt19937 rng(105);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    bool dok = true;
    for (int i = 0; i < 1000; ++i) {
        BoundaryDatum d;
        d.space = Space::Disk;
        d.node.space = Space::Disk;
        d.node.face = i % 2 ? FaceIndex::First : FaceIndex::Second;
        d.node.edge_coord = i % 9 == 0 ? cplx{1.0} : std::exp(cplx{0.0, 6.283 * U(rng)});
        d.value = i % 13 == 0 ? cplx{1.0} : std::exp(cplx{0.0, 6.283 * U(rng)});
        d.node.interior_coord = 0.9 * U(rng) * std::exp(cplx{0.0, 6.283 * U(rng)});
        d.slope = 0.1 + 5.0 * U(rng);
        auto back = map_boundary_datum(map_boundary_datum(d));
        dok &= std::abs(back.node.edge_coord - d.node.edge_coord) < 1e-12 &&
               std::abs(back.node.interior_coord - d.node.interior_coord) < 1e-12 &&
               std::abs(back.value - d.value) < 1e-12 &&
               std::abs(back.slope - d.slope) < 1e-12 * std::abs(d.slope) + 1e-12;
    }
    expect(dok, "datum roundtrip at 1e-12");
    return ok && fok && dok;
}

// 2. One-variable boundary calculus: reduce/augment invert, slopes obey the
// drop law, and the derivative identity holds.
bool criterion_julia() {
    CatalogParams herg;
    herg.a = 1.0;
    herg.b = 0.25;
    herg.atoms = {{1.0, 3.0}, {0.5, -2.0}};
    struct Case { std::string name; CatalogParams p; double x; };
    std::vector<Case> cases = {
        {"neg_recip", CatalogParams{.x = 1.0}, 0.0},
        {"power", CatalogParams{.x = 0.0, .alpha = 0.5}, 1.0},
        {"log", CatalogParams{.x = -1.0}, 1.0},
        {"neg_cot", CatalogParams{.x = 0.0}, 1.0},
        {"herglotz", herg, 0.0},
    };
    bool rok = true;
    auto pts = quasirandom_samples(Space::HalfPlane, 100, 201);
    for (const auto& c : cases) {
        auto f = catalog(c.name, c.p).expr;
        auto d = angular_derivative(f, c.x).data;
        auto back = augment(reduce(f, d), d.x, d.a0, d.a1);
        for (const auto& z : pts) {
            cplx w = c.x + 0.1 * (z.c1 - cplx{0.0, -1.0});  // window near the anchor
            rok &= std::abs(eval(back, w) - eval(f, w)) < 1e-10;
        }
    }
    expect(rok, "reduce/augment roundtrip at 1e-10 on 100 points x 5 functions");

    std::mt19937 rng(202);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    std::vector<std::string> gnames = {"log", "power", "const", "neg_recip", "neg_cot"};
    bool bok = true, iok = true;
    for (int i = 0; i < 40; ++i) {
        double x = 2.0 * U(rng) - 1.0;
        double a0 = 2.0 * U(rng) - 1.0;
        double a1 = 0.3 + 2.7 * U(rng);
        CatalogParams gp;
        gp.x = x;
        gp.c = U(rng);
        gp.alpha = 0.3 + 0.5 * U(rng);
        const auto& gname = gnames[i % gnames.size()];
        auto g = gname == "const" ? constant(gp.c, 1) : catalog(gname, gp).expr;
        auto f = augment(g, x, a0, a1);
        auto res = angular_derivative(f, x);
        bok &= res.data.a1 <= a1 + 1e-6;
        // 1/f'(x) = 1/a1 + lim y Im g(x + i y)
        std::vector<cplx> q;
        double t = 0.1;
        for (int k = 0; k < 25 && t >= kScaleFloor; ++k, t *= 0.5)
            q.emplace_back(t * eval(g, cplx{x, t}).imag(), 0.0);
        double L = estimate_limit(q, 0.5, 1e-8).extrapolated.real();
        iok &= std::abs(1.0 / res.data.a1 - (1.0 / a1 + L)) < 1e-4;
    }
    expect(bok, "augmented slope never exceeds a1 + 1e-6");
    expect(iok, "derivative identity 1/f' = 1/a1 + lim y Im g at 1e-4");

    auto f = augment(catalog("neg_recip").expr, 0.0, 0.0, 1.0);
    bool hok = std::abs(angular_derivative(f, 0.0).data.a1 - 0.5) < 1e-6;
    expect(hok, "augment(-1/z, a1=1) has derivative 1/2");
    return rok && bok && iok && hok;
}

// 3. Randomized strict solves with a bounded free parameter certify values,
// slopes, and class membership.
bool criterion_random_solves() {
    std::mt19937 rng(301);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    bool ok = true;
    for (int trial = 0; trial < 50; ++trial) {
        int total = 1 + int(U(rng) * 4.0);
        if (total > 4) total = 4;
        int m = int(U(rng) * (total + 1));
        InterpProblem p;
        p.space = Space::HalfPlane;
        p.xi = 4.0 * U(rng) - 2.0;
        auto fresh_edge = [&](const std::vector<ProblemNode>& face) {
            for (;;) {
                double e = 6.0 * U(rng) - 3.0;
                bool clash = false;
                for (const auto& n : face) clash |= std::abs(n.edge - e) < 0.25;
                if (!clash) return e;
            }
        };
        for (int j = 0; j < total; ++j) {
            auto& face = j < m ? p.face1 : p.face2;
            ProblemNode n;
            n.edge = fresh_edge(face);
            n.interior = cplx{4.0 * U(rng) - 2.0, 0.2 + 1.8 * U(rng)};
            n.slope = 0.3 + 2.7 * U(rng);
            face.push_back(n);
        }
        auto f = constant(4.0 * U(rng) - 2.0);
        auto sol = solve(p, f, SolveMode::Strict);
        auto rep = verify_solution(p, sol.h);
        ok &= rep.all_pass;
        for (const auto& n : rep.nodes) ok &= n.b_point && n.value_ok && n.slope_ok;
        auto scan = membership_scan(sol.h, 10000, 1e-12, 300 + trial);
        ok &= scan.passed;
        auto r = build_r(p);
        for (const auto& z : quasirandom_samples(Space::HalfPlane, 200, 350 + trial))
            ok &= (r.eval(z) - eval(f, z)).imag() < 0.0;
    }
    expect(ok, "50 strict solves: values at 1e-6, slopes at 1e-4, membership, Im(r-f)<0");
    return ok;
}

// 4. Strict mode rejects a pole-like parameter; relaxed mode takes it and
// lands on the reduced slope beta/(1+beta).
bool criterion_gatekeeping() {
    InterpProblem p;
    p.space = Space::HalfPlane;
    p.xi = 0.0;
    p.face1.push_back({0.0, I, 1.0});
    auto f = neg_reciprocal(coordinate(1));

    bool threw = false, est_ok = false;
    try {
        solve(p, f, SolveMode::Strict);
    } catch (const VanishingConditionFailed& e) {
        threw = true;
        est_ok = std::abs(std::abs(e.estimate) - 1.0) < 1e-3;
    }
    expect(threw, "strict solve throws on f = -1/(z1 - x1)");
    expect(est_ok, "rejection reports |lim t f| = 1 within 1e-3");

    bool slope_ok = true;
    for (double beta : {0.5, 1.0, 2.5}) {
        InterpProblem q = p;
        q.face1[0].slope = beta;
        auto sol = solve(q, f, SolveMode::Relaxed);
        auto path = perpendicular_path(q.node_point(1, 0), 0.05, 0.5, 22);
        std::vector<cplx> quot;
        for (size_t k = 0; k < path.points.size(); ++k)
            quot.emplace_back(eval(sol.h, path.points[k]).imag() / path.scales[k], 0.0);
        double slope = estimate_limit(quot, 0.5, 1e-8).extrapolated.real();
        slope_ok &= std::abs(slope - beta / (1.0 + beta)) < 1e-4;
        auto rep = verify_solution(q, sol.h);
        slope_ok &= rep.nodes[0].value_ok && !rep.nodes[0].slope_ok && rep.nodes[0].slope_bounded;
    }
    expect(slope_ok, "relaxed slope equals beta/(1+beta) against the quotient oracle");
    return threw && est_ok && slope_ok;
}

// 5. The degree-(1,1) inner function with a whole face of boundary value 1.
bool criterion_ratex() {
    auto phi = catalog("ratex").expr;
    VerifyConfig cfg;
    std::vector<cplx> sigmas{0.0, 0.5, -0.5, cplx{0.0, -0.3}, cplx{0.2, 0.4}};
    auto rep = face_report(phi, Space::Disk, 1, 1.0, sigmas, cfg);
    bool ok = rep.samples.size() == 5;
    for (const auto& s : rep.samples)
        ok &= std::abs(s.value - 1.0) < 1e-10 && std::abs(s.grad1 - 1.0) < 1e-4 &&
              std::abs(s.grad2) < 1e-4;
    ok &= std::abs(rep.alpha_estimate - 1.0) < 1e-6 && rep.gradient_matches;
    expect(ok, "constant value 1, gradient (1,0), alpha 1 across the face");
    return ok;
}

// 6. The corner where the differential fails while every face point is smooth.
bool criterion_psi() {
    auto psi = catalog("psi").expr;
    VerifyConfig cfg;
    auto face = face_report(psi, Space::Disk, 1, 1.0, {0.0, 0.5, cplx{0.0, -0.3}}, cfg);
    bool fok = std::abs(face.alpha_estimate - 2.0) < 1e-4 && face.gradient_matches;
    for (const auto& s : face.samples)
        fok &= std::abs(s.value + 1.0) < 1e-8 && std::abs(s.grad1 + 2.0) < 1e-4 &&
               std::abs(s.grad2) < 1e-4;
    expect(fok, "open face: value -1, gradient (-2,0), alpha 2");

    FacePoint corner{Space::Disk, FaceIndex::First, 1.0, 1.0};
    auto fit = fit_differential(psi, corner, 2.0, fit_scale_ladder(cfg), cfg.samples_per_scale,
                                cfg.seed, cfg.fit_tol);
    bool cok = !fit.c_point_passed;
    for (size_t k = 0; k < fit.residual_ratios.size(); ++k)
        if (fit.scales[k] <= 1e-2) cok &= fit.residual_ratios[k] > 0.01;
    expect(cok, "corner fit fails with macroscopic residuals down to scale 1e-6");

    double s2 = std::sqrt(2.0);
    cplx cA = directional_fit(psi, corner, {-1.0 / s2, -1.0 / s2}, cfg.ladder);
    cplx cB = directional_fit(psi, corner, {-1.0 / s2, -0.5 / s2}, cfg.ladder);
    bool dok = std::abs(cA - cB) >= 0.2;
    expect(dok, "directional coefficients disagree by at least 0.2");
    return fok && cok && dok;
}

// 7. A solved interpolant is constant on each node's whole face.
bool criterion_facial_constancy() {
    InterpProblem p;
    p.space = Space::HalfPlane;
    p.xi = 1.0;
    p.face1.push_back({0.0, I, 1.0});
    p.face2.push_back({-1.0, 2.0 * I, 2.0});
    auto sol = solve(p, constant(0.0));
    VerifyConfig cfg;
    bool ok = true;
    for (int face = 1; face <= 2; ++face) {
        const auto& nodes = face == 1 ? p.face1 : p.face2;
        for (const auto& n : nodes) {
            auto rep = face_report(sol.h, Space::HalfPlane, face, n.edge,
                                   {I, 2.0 * I, cplx{0.5, 1.0}}, cfg);
            ok &= rep.value_spread < 1e-8 && rep.grad_spread < 1e-4;
            for (const auto& s : rep.samples) ok &= std::abs(s.value - cplx{1.0}) < 1e-6;
        }
    }
    expect(ok, "face reports: value spread < 1e-8, gradient spread < 1e-4");
    return ok;
}

// 8. The problem schema has exactly one target-value slot.
bool criterion_schema() {
    json node = {{"face", 1}, {"edge", 0.0}, {"slope", 1.0}};
    node["interior"] = {{"re", 0.0}, {"im", 1.0}};
    json base = {{"space", "halfplane"}, {"xi", 0.0}, {"nodes", json::array({node})}};
    bool ok = true;
    try {
        problem_from_json(base);
    } catch (...) {
        ok = false;
    }
    expect(ok, "well-formed problem parses");

    auto two_xi = base;
    two_xi["xi2"] = 1.0;
    auto per_node = base;
    per_node["nodes"][0]["value"] = -1.0;
    for (const auto& bad : {two_xi, per_node}) {
        bool threw = false;
        std::string msg;
        try {
            problem_from_json(bad);
        } catch (const ValidationError& e) {
            threw = true;
            msg = e.what();
        }
        bool distinct = threw && msg.find("unknown field") != std::string::npos;
        expect(distinct, "second target value rejected with a distinct message");
        ok &= distinct;
    }
    return ok;
}

// 9. The demo pipeline is bit-for-bit deterministic.
bool criterion_determinism(const char* cli) {
    auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    };
    std::string out1 = "acceptance_demo_run1.txt", out2 = "acceptance_demo_run2.txt";
    std::string cmd1 = std::string(cli) + " demo all > " + out1 + " 2>&1";
    std::string cmd2 = std::string(cli) + " demo all > " + out2 + " 2>&1";
    int rc1 = std::system(cmd1.c_str());
    int rc2 = std::system(cmd2.c_str());
    std::string a = slurp(out1), b = slurp(out2);
    bool ok = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
    expect(rc1 == 0 && rc2 == 0, "demo all exits 0");
    expect(!a.empty() && a == b, "two demo runs are byte-identical");
    std::remove(out1.c_str());
    std::remove(out2.c_str());
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    const char* cli = argc > 1 ? argv[1] : "./facenp";
    struct Criterion { const char* name; bool pass; };
    std::vector<Criterion> results;
    auto run = [&](const char* name, bool pass) {
        results.push_back({name, pass});
        std::printf("criterion %zu [%s]: %s\n", results.size(), name, pass ? "PASS" : "FAIL");
        std::fflush(stdout);
    };

    run("transform roundtrips", criterion_transforms());
    run("boundary derivative calculus", criterion_julia());
    run("randomized strict solves", criterion_random_solves());
    run("strict gatekeeping / relaxed slopes", criterion_gatekeeping());
    run("whole-face boundary value", criterion_ratex());
    run("corner without differential", criterion_psi());
    run("facial constancy of solutions", criterion_facial_constancy());
    run("single-target schema", criterion_schema());
    run("deterministic demos", criterion_determinism(cli));

    int failures = 0;
    for (const auto& r : results) failures += r.pass ? 0 : 1;
    std::printf("%d/%zu criteria passed\n", int(results.size()) - failures, results.size());
    return failures;
}
