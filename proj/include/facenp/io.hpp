#pragma once

#include <string>

#include <json.hpp>

#include "facenp/expr.hpp"
#include "facenp/solver.hpp"
#include "facenp/verify.hpp"

namespace facenp {

using nlohmann::json;

// complex <-> {"re": ..., "im": ...}; plain numbers parse as reals
json to_json(cplx v);
cplx complex_from_json(const json& j);

// expression trees: {"kind": ..., params..., "children": [...]}
json expr_to_json(const ExprPtr& e);
ExprPtr expr_from_json(const json& j);

// problem schema: {"space","xi","nodes":[{"face","edge","interior","slope"}],"mode"}
// Unknown fields are rejected so conflicting target values cannot sneak in.
json problem_to_json(const InterpProblem& p, SolveMode mode);
InterpProblem problem_from_json(const json& j, SolveMode* mode = nullptr);

// compact CLI function specs: "const:0", "log:x=1", "neg_power:x=0,alpha=0.5",
// "herglotz:a=1,b=2,atoms=1@3;0.5@-2", "file:<path>"
ExprPtr parse_fspec(const std::string& spec);

json solution_report_to_json(const SolutionReport& rep, double tol_value, double tol_slope);
json face_report_to_json(const FaceReport& rep);
json fit_to_json(const DifferentialFit& fit);

// CSV rows "t,quotient_re,quotient_im,value_re,value_im" per path sample
std::string path_csv(const PathSamples& path, const std::vector<cplx>& quotients,
                     const std::vector<cplx>& values);

}  // namespace facenp
