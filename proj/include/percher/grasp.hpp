#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "percher/claw_design.hpp"
#include "percher/statics.hpp"

namespace percher {

struct PerchScenario {
    double perch_radius = 15;   // mm
    double payload_g = 100;     // g
    double mu_s = 0.5;
    double lever_arm = 200;     // mm, COG to perch surface
    std::optional<int> contributing_joints;  // empty = auto

    double weight_N() const { return payload_g / 1000.0 * kGravity; }
};

// n = 2, 3, 4 for 30, 40, 50 mm perches (split-perch observation). Empty otherwise.
std::optional<int> observed_joint_count(double perch_diameter_mm);

struct SqueezeResult {
    double force_N = 0;
    int joints_used = 0;             // n actually summed over
    int inward_joints = 0;           // T1..T4 with F_x <= 0
    std::array<double, 4> fx_N{};    // T1..T4 x-force onto the perch
};

SqueezeResult squeeze_detail(const ClawDesign& design, const PerchScenario& sc);
double squeeze_force(const ClawDesign& design, const PerchScenario& sc);

// Sum over both digits of inward (pressing) radial toe-joint forces at tilt theta.
double radial_pressing_force(const ClawDesign& design, const PerchScenario& sc, double theta_deg);
double weight_moment(const PerchScenario& sc, double theta_deg);    // N*mm
double friction_moment(const ClawDesign& design, const PerchScenario& sc, double theta_deg);  // N*mm

struct TiltResult {
    double theta_max_deg = 0;
    double M_w = 0, M_f = 0;
    int iterations = 0;
    bool converged = false;
    double bracket_lo_deg = 0, bracket_hi_deg = 0;
};

constexpr double kTiltToleranceDeg = 0.01;
constexpr int kTiltMaxIterations = 100;

TiltResult max_tilt(const ClawDesign& design, const PerchScenario& sc);

struct TiltSample {
    double theta_deg = 0;
    double M_w = 0, M_f = 0;
    bool solvable = false;
};

std::vector<TiltSample> tilt_moment_curve(const ClawDesign& design, const PerchScenario& sc,
                                          const std::vector<double>& theta_deg);
std::string tilt_curve_csv(const std::vector<TiltSample>& curve);

}  // namespace percher
