// Command-line front end: solve facial boundary interpolation problems,
// verify boundary behaviour, apply the Cayley correspondence, reduce and
// augment one-variable Pick functions, and run the built-in demos.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "facenp/demos.hpp"
#include "facenp/io.hpp"
#include "facenp/julia.hpp"
#include "facenp/membership.hpp"

namespace fs = std::filesystem;
using namespace facenp;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write '" + path + "'");
    out << text;
}

FacePoint face_point_from_json(const json& j) {
    FacePoint fp;
    std::string sp = j.at("space").get<std::string>();
    fp.space = sp == "disk" ? Space::Disk : Space::HalfPlane;
    fp.face = j.at("face").get<int>() == 2 ? FaceIndex::Second : FaceIndex::First;
    fp.edge_coord = complex_from_json(j.at("edge"));
    fp.interior_coord = complex_from_json(j.at("interior"));
    if (!valid_face_point(fp)) throw ValidationError("point does not lie on a face");
    return fp;
}

void dump_csv(const std::string& dir, const std::string& name, const ExprPtr& f,
              const FacePoint& fp, const VerifyConfig& cfg) {
    auto path = perpendicular_path(fp, cfg.ladder.t0, cfg.ladder.ratio, cfg.ladder.steps);
    auto quot = caratheodory_quotient(f, fp, path);
    std::vector<cplx> values;
    for (const auto& p : path.points) values.push_back(eval(f, p));
    fs::create_directories(dir);
    write_text(dir + "/" + name + ".csv", path_csv(path, quot.raw, values));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"facial boundary Nevanlinna-Pick interpolation toolkit"};
    app.require_subcommand(1);

    VerifyConfig cfg;
    std::string csv_dir;
    app.add_option("--tol-value", cfg.tol_value, "value tolerance");
    app.add_option("--tol-slope", cfg.tol_slope, "slope tolerance");
    app.add_option("--t0", cfg.ladder.t0, "initial path scale");
    app.add_option("--ratio", cfg.ladder.ratio, "path scale ratio in (0,1)");
    app.add_option("--steps", cfg.ladder.steps, "path steps")->check(CLI::Range(4, 64));
    app.add_option("--seed", cfg.seed, "sampling seed");
    app.add_option("--csv", csv_dir, "directory for per-path CSV dumps");

    auto* sc_solve = app.add_subcommand("solve", "solve a problem file");
    std::string problem_path, fspec = "const:0", mode_flag, out_path;
    sc_solve->add_option("problem", problem_path, "problem JSON file")->required();
    sc_solve->add_option("--f", fspec, "free Pick parameter spec");
    sc_solve->add_option("--mode", mode_flag, "strict|relaxed (overrides file)");
    sc_solve->add_option("-o,--out", out_path, "output JSON file");

    auto* sc_verify = app.add_subcommand("verify", "verify boundary behaviour of a function");
    std::string fn_path, point_spec;
    bool whole_face = false;
    sc_verify->add_option("function", fn_path, "function JSON file")->required();
    sc_verify->add_option("--point", point_spec, "face point JSON")->required();
    sc_verify->add_flag("--face", whole_face, "report the whole face through the point");

    auto* sc_transform = app.add_subcommand("transform", "apply the Cayley correspondence");
    std::string to_space;
    sc_transform->add_option("function", fn_path, "function JSON file")->required();
    sc_transform->add_option("--to", to_space, "disk|halfplane")->required();
    sc_transform->add_option("-o,--out", out_path, "output JSON file");

    auto* sc_reduce = app.add_subcommand("reduce", "Julia reduction at a boundary point");
    double x = 0.0, a0 = 0.0, a1 = 1.0;
    sc_reduce->add_option("function", fn_path, "one-variable function JSON")->required();
    sc_reduce->add_option("--x", x, "boundary point")->required();
    sc_reduce->add_option("-o,--out", out_path, "output JSON file");

    auto* sc_augment = app.add_subcommand("augment", "Julia augmentation at a boundary point");
    sc_augment->add_option("function", fn_path, "one-variable function JSON")->required();
    sc_augment->add_option("--x", x, "boundary point")->required();
    sc_augment->add_option("--a0", a0, "boundary value")->required();
    sc_augment->add_option("--a1", a1, "angular derivative (> 0)")->required();
    sc_augment->add_option("-o,--out", out_path, "output JSON file");

    auto* sc_demo = app.add_subcommand("demo", "run a built-in demo");
    std::string demo_name;
    sc_demo->add_option("name", demo_name, "ratex-face | psi-corner | two-face-solve | all")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sc_solve) {
            json j = load_json(problem_path);
            SolveMode mode = SolveMode::Strict;
            InterpProblem p = problem_from_json(j, &mode);
            if (mode_flag == "strict") mode = SolveMode::Strict;
            else if (mode_flag == "relaxed") mode = SolveMode::Relaxed;
            else if (!mode_flag.empty())
                throw ValidationError("--mode must be strict or relaxed");
            ExprPtr f = parse_fspec(fspec);
            ExprPtr h;
            SolutionReport rep;
            if (p.space == Space::HalfPlane) {
                h = solve(p, f, mode, cfg.ladder).h;
                rep = verify_solution(p, h, cfg);
            } else {
                h = solve_schur(p, f, mode, cfg.ladder);
                rep = verify_solution(p, h, cfg);
            }
            json out{{"solution", expr_to_json(h)},
                     {"report", solution_report_to_json(rep, cfg.tol_value, cfg.tol_slope)}};
            std::string text = out.dump(2) + "\n";
            if (!out_path.empty()) write_text(out_path, text);
            std::cout << text;
            if (!csv_dir.empty())
                for (size_t i = 0; i < p.face1.size(); ++i)
                    dump_csv(csv_dir, "node_f1_" + std::to_string(i), h, p.node_point(1, i), cfg);
            return rep.all_pass ? 0 : 2;
        }
        if (*sc_verify) {
            ExprPtr f = expr_from_json(load_json(fn_path));
            FacePoint fp = face_point_from_json(json::parse(point_spec));
            if (!csv_dir.empty()) dump_csv(csv_dir, "verify_point", f, fp, cfg);
            if (whole_face) {
                std::vector<cplx> sigmas{fp.interior_coord};
                if (fp.space == Space::Disk) {
                    sigmas.push_back(0.25);
                    sigmas.push_back(cplx{0.0, -0.4});
                } else {
                    sigmas.push_back(cplx{0.0, 2.0});
                    sigmas.push_back(cplx{1.0, 1.0});
                }
                auto rep = face_report(f, fp.space, int(fp.face), fp.edge_coord, sigmas, cfg);
                std::cout << face_report_to_json(rep).dump(2) << "\n";
                return rep.gradient_matches ? 0 : 2;
            }
            auto fit = fit_differential(f, fp, 2.0, fit_scale_ladder(cfg), cfg.samples_per_scale,
                                        cfg.seed, cfg.fit_tol);
            std::cout << fit_to_json(fit).dump(2) << "\n";
            return fit.c_point_passed ? 0 : 2;
        }
        if (*sc_transform) {
            ExprPtr f = expr_from_json(load_json(fn_path));
            ExprPtr g;
            if (to_space == "disk") g = schur_from_pick(f);
            else if (to_space == "halfplane") g = pick_from_schur(f);
            else throw ValidationError("--to must be disk or halfplane");
            std::string text = expr_to_json(g).dump(2) + "\n";
            if (!out_path.empty()) write_text(out_path, text);
            std::cout << text;
            return 0;
        }
        if (*sc_reduce) {
            ExprPtr f = expr_from_json(load_json(fn_path));
            auto ad = angular_derivative(f, x, cfg.ladder);
            ExprPtr g = reduce(f, ad.data);
            json out{{"angular", {{"x", ad.data.x}, {"a0", ad.data.a0}, {"a1", ad.data.a1}}},
                     {"reduction", expr_to_json(g)}};
            std::string text = out.dump(2) + "\n";
            if (!out_path.empty()) write_text(out_path, text);
            std::cout << text;
            return 0;
        }
        if (*sc_augment) {
            ExprPtr g = expr_from_json(load_json(fn_path));
            ExprPtr f = augment(g, x, a0, a1);
            std::string text = expr_to_json(f).dump(2) + "\n";
            if (!out_path.empty()) write_text(out_path, text);
            std::cout << text;
            return 0;
        }
        if (*sc_demo) {
            bool all_pass = true;
            auto names = demo_name == "all" ? demo_names() : std::vector<std::string>{demo_name};
            for (const auto& n : names) {
                auto res = run_demo(n, cfg);
                std::cout << "=== demo " << res.name << " ===\n"
                          << res.report << (res.pass ? "PASS" : "FAIL") << "\n";
                all_pass = all_pass && res.pass;
            }
            return all_pass ? 0 : 2;
        }
    } catch (const VanishingConditionFailed& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
