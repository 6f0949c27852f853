#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sumset {

// Base of all domain errors. `code()` is the stable machine-readable name
// that the CLI puts into structured error objects.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct SingularBasis : Error {
    explicit SingularBasis(const std::string& what) : Error("SingularBasis", what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error("DimensionMismatch", what) {}
};

struct InvalidParams : Error {
    explicit InvalidParams(const std::string& what) : Error("InvalidParams", what) {}
};

// Covering hypothesis failed; carries the uncovered (i, j) pairs.
struct NotCovered : Error {
    NotCovered(const std::string& what, std::vector<std::pair<int, int>> missing_pairs)
        : Error("NotCovered", what), missing(std::move(missing_pairs)) {}

    std::vector<std::pair<int, int>> missing;
};

struct InvalidRepresentation : Error {
    explicit InvalidRepresentation(const std::string& what)
        : Error("InvalidRepresentation", what) {}
};

struct ForestViolation : Error {
    explicit ForestViolation(const std::string& what) : Error("ForestViolation", what) {}
};

struct ColorMismatch : Error {
    explicit ColorMismatch(const std::string& what) : Error("ColorMismatch", what) {}
};

struct NotNested : Error {
    explicit NotNested(const std::string& what) : Error("NotNested", what) {}
};

struct EmptyX : Error {
    explicit EmptyX(const std::string& what) : Error("EmptyX", what) {}
};

struct HypothesisViolated : Error {
    explicit HypothesisViolated(const std::string& what) : Error("HypothesisViolated", what) {}
};

// A proved inequality failed at runtime. Signals corrupted data, never a
// reachable state on valid inputs.
struct AssertionFailed : Error {
    explicit AssertionFailed(const std::string& what) : Error("AssertionFailed", what) {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& what) : Error("TooLarge", what) {}
};

struct UniverseTooLarge : Error {
    explicit UniverseTooLarge(const std::string& what) : Error("UniverseTooLarge", what) {}
};

struct InfeasibleUniverse : Error {
    explicit InfeasibleUniverse(const std::string& what) : Error("InfeasibleUniverse", what) {}
};

// Malformed external input (JSON files, CLI values).
struct BadInput : Error {
    explicit BadInput(const std::string& what) : Error("BadInput", what) {}
};

}  // namespace sumset
