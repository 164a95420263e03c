#pragma once

#include <string>
#include <vector>

#include "facenp/verify.hpp"

namespace facenp {

// Built-in end-to-end checks with hard-coded expected outcomes.  `pass`
// means the expectation held (for psi-corner the expectation is that the
// differential fit fails).
struct DemoResult {
    std::string name;
    std::string report;
    bool pass = false;
};

std::vector<std::string> demo_names();  // ratex-face, psi-corner, two-face-solve

DemoResult run_demo(const std::string& name, const VerifyConfig& cfg = {});

}  // namespace facenp
