#pragma once

#include <array>
#include <string>

#include "percher/claw_design.hpp"
#include "percher/geometry.hpp"

namespace percher {

enum class Side { left, right };

inline const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

// Joint positions in the world frame (origin at perch center, y up). The right
// digit is solved toward +x and the left digit is its mirror image; a non-zero
// tilt rotates the whole claw about the perch center.
struct PerchedPose {
    double R = 0;
    double sole_thickness = 0;
    std::array<Vec2, 5> T{};
    std::array<Vec2, 4> L{};
    std::array<Vec2, 4> H{};  // H3 coincides with L0
    double epsilon_deg = 0;
    Side side = Side::right;
    double tilt_deg = 0;

    // Map a world point back into the canonical right-digit, untilted frame.
    Vec2 to_canonical(const Vec2& p) const;
    // Claw "up" axis (symmetry axis) in the world frame.
    Vec2 axis() const { return rotate({0, 1}, deg2rad(tilt_deg)); }
};

PerchedPose solve_perched_pose(const ClawDesign& design, double R, Side side = Side::right,
                               double tilt_deg = 0);

// Angles at the Hoberman and base rib: A=H0, B=H1, C=H2, D=H3=L0, E=T0.
struct HobermanAngles {
    double alpha = 0, beta = 0, gamma = 0, delta = 0, epsilon = 0, phi = 0;  // rad
    double l_BC = 0, l_CD = 0;                                                 // mm
};

// Angles from joint positions in the canonical frame. A, B, C, D, E as above.
HobermanAngles angles_from_joints(const Vec2& A, const Vec2& B, const Vec2& C, const Vec2& D, const Vec2& E);

HobermanAngles extract_angles(const PerchedPose& pose);

// name,x_mm,y_mm with one row per joint.
std::string pose_csv(const PerchedPose& pose);

}  // namespace percher
