#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace facenp {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DomainError : Error { using Error::Error; };
struct ArityError : Error { using Error::Error; };
struct BadRatio : Error { using Error::Error; };
struct StepLeavesDomain : Error { using Error::Error; };
struct UnknownName : Error { using Error::Error; };
struct ParamOutOfRange : Error { using Error::Error; };
struct PoleAtOne : Error { using Error::Error; };
struct PoleAtMinusI : Error { using Error::Error; };
struct IdenticallyOne : Error { using Error::Error; };
struct ConstantFunction : Error { using Error::Error; };
struct NotBPoint : Error { using Error::Error; };
struct NonRealBoundaryValue : Error { using Error::Error; };
struct EmptyProblem : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };
struct InsufficientSamples : Error { using Error::Error; };

// Strict-mode rejection: the free parameter has a pole-like singularity at a node.
struct VanishingConditionFailed : Error {
    int node_face;
    int node_index;
    std::complex<double> estimate;
    VanishingConditionFailed(int face, int index, std::complex<double> est)
        : Error("vanishing limit at node (face " + std::to_string(face) + ", #" +
                std::to_string(index) + ") is nonzero, |estimate| = " +
                std::to_string(std::abs(est))),
          node_face(face), node_index(index), estimate(est) {}
};

}  // namespace facenp
