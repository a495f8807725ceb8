#pragma once

#include <stdexcept>
#include <string>

namespace percher {

// Base for every model/solver failure. The CLI maps these to exit code 3.
class ModelError : public std::runtime_error {
public:
    explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

class SizingError : public ModelError {
public:
    SizingError(std::string constraint, const std::string& detail)
        : ModelError("sizing error [" + constraint + "]: " + detail), constraint_(std::move(constraint)) {}
    const std::string& constraint() const { return constraint_; }

private:
    std::string constraint_;
};

// A triangle that cannot close: sides a, b and the opposite side c.
struct Triangle {
    std::string name;
    double a = 0, b = 0, c = 0;
};

class AssemblyError : public ModelError {
public:
    AssemblyError(Triangle tri, const std::string& detail)
        : ModelError("assembly error in triangle " + tri.name + ": " + detail), triangle_(std::move(tri)) {}
    const Triangle& triangle() const { return triangle_; }

private:
    Triangle triangle_;
};

class WrapInfeasible : public ModelError {
public:
    WrapInfeasible(std::string stage, const std::string& detail)
        : ModelError("wrap-infeasible at " + stage + ": " + detail), stage_(std::move(stage)) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

class OutOfRange : public ModelError {
public:
    explicit OutOfRange(const std::string& what) : ModelError("out of range: " + what) {}
};

class SingularityError : public ModelError {
public:
    explicit SingularityError(const std::string& what) : ModelError("singular posture: " + what) {}
};

class DegeneratePose : public ModelError {
public:
    explicit DegeneratePose(const std::string& what) : ModelError("degenerate pose: " + what) {}
};

class ReachabilityError : public ModelError {
public:
    ReachabilityError(double deficit, const std::string& what)
        : ModelError("unreachable: " + what), deficit_(deficit) {}
    // Distance (cm) by which the target misses the reachable annulus.
    double deficit() const { return deficit_; }

private:
    double deficit_;
};

class ConvergenceError : public ModelError {
public:
    ConvergenceError(double lo, double hi, const std::string& what)
        : ModelError("no convergence: " + what), lo_(lo), hi_(hi) {}
    double bracket_lo() const { return lo_; }
    double bracket_hi() const { return hi_; }

private:
    double lo_, hi_;
};

// Malformed user input (schema, units, unknown fields). Exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace percher
