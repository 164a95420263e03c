#include <doctest.h>

#include <algorithm>

#include "facenp/io.hpp"
#include "facenp/membership.hpp"

using namespace facenp;

TEST_CASE("complex json encoding") {
    CHECK(complex_from_json(to_json(cplx{1.5, -2.0})) == cplx{1.5, -2.0});
    CHECK(complex_from_json(json(3.0)) == cplx{3.0});
    CHECK_THROWS_AS(complex_from_json(json("nope")), ValidationError);
}

TEST_CASE("expression round-trip through json") {
    CatalogParams herg;
    herg.a = 0.5;
    herg.b = 1.0;
    herg.atoms = {{1.0, 3.0}, {0.25, -2.0}};
    std::vector<ExprPtr> exprs = {
        catalog("ratex").expr,
        catalog("psi").expr,
        catalog("herglotz", herg).expr,
        pick_from_schur(catalog("ratex").expr),
        augmentation_expr(catalog("neg_recip").expr, 0.0, 0.5, 2.0),
        facial_solution({{1, 0.0, 1.0}, {2, 0.0, 1.0}}, 0.0, constant(0.0)),
        rotated_schur(catalog("psi").expr, -1.0, I, -I),
    };
    for (const auto& e : exprs) {
        auto back = expr_from_json(expr_to_json(e));
        REQUIRE(back);
        CHECK(back->kind == e->kind);
        CHECK(back->cls.domain == e->cls.domain);
        for (const auto& z : quasirandom_samples(e->cls.domain, 200, 37)) {
            CHECK(std::abs(eval(back, z) - eval(e, z)) < 1e-14);
        }
    }
    CHECK_THROWS_AS(expr_from_json(json{{"kind", "mystery"}}), UnknownName);
}

TEST_CASE("problem schema round-trip") {
    InterpProblem p;
    p.space = Space::HalfPlane;
    p.xi = 2.0;
    p.face1.push_back({0.0, I, 1.0});
    p.face2.push_back({1.0, 2.0 * I, 3.0});

    auto j = problem_to_json(p, SolveMode::Relaxed);
    SolveMode mode = SolveMode::Strict;
    auto q = problem_from_json(j, &mode);
    CHECK(mode == SolveMode::Relaxed);
    CHECK(q.space == p.space);
    CHECK(q.xi == p.xi);
    REQUIRE(q.face1.size() == 1);
    REQUIRE(q.face2.size() == 1);
    CHECK(q.face1[0].edge == p.face1[0].edge);
    CHECK(q.face2[0].interior == p.face2[0].interior);
    CHECK(q.face2[0].slope == p.face2[0].slope);
}

TEST_CASE("unknown fields are rejected") {
    json node = {{"face", 1}, {"edge", 0.0}, {"slope", 1.0}};
    node["interior"] = {{"re", 0.0}, {"im", 1.0}};
    json j = {{"space", "halfplane"}, {"xi", 0.0}, {"nodes", json::array({node})}};
    CHECK_NOTHROW(problem_from_json(j));

    auto top = j;
    top["xi2"] = 1.0;  // no second target value slot
    CHECK_THROWS_AS(problem_from_json(top), ValidationError);

    auto per_node = j;
    per_node["nodes"][0]["value"] = 5.0;  // no per-node target either
    CHECK_THROWS_AS(problem_from_json(per_node), ValidationError);
}

TEST_CASE("fspec mini-language") {
    CHECK(std::abs(eval(parse_fspec("const:0"), I)) < 1e-15);
    CHECK(std::abs(eval(parse_fspec("const:2.5"), I) - 2.5) < 1e-15);

    auto lg = parse_fspec("log:x=1");
    CHECK(std::abs(eval(lg, 1.0 + I) - std::log(I)) < 1e-14);

    auto pw = parse_fspec("neg_power:x=0,alpha=0.5");
    CHECK(std::abs(eval(pw, I) + 1.0 / std::sqrt(I)) < 1e-14);

    auto hg = parse_fspec("herglotz:a=1,b=2,atoms=1@3;0.5@-2");
    cplx z{0.0, 1.0};
    cplx want = 1.0 + 2.0 * z + 1.0 / (3.0 - z) + 0.5 / (-2.0 - z);
    CHECK(std::abs(eval(hg, z) - want) < 1e-13);

    CHECK_THROWS_AS(parse_fspec("wobble:x=1"), UnknownName);
    CHECK_THROWS_AS(parse_fspec("log:x=1,weird=2"), ValidationError);
}

TEST_CASE("path csv") {
    FacePoint target{Space::HalfPlane, FaceIndex::First, 0.0, I};
    auto path = perpendicular_path(target, 0.1, 0.5, 4);
    std::vector<cplx> q(path.points.size(), cplx{1.0});
    std::vector<cplx> v(path.points.size(), cplx{0.0, 2.0});
    auto csv = path_csv(path, q, v);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);  // header + 4 rows
    CHECK(csv.find("t,") == 0);
}
