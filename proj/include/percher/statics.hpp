#pragma once

#include <Eigen/Dense>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "percher/claw_design.hpp"
#include "percher/perch_kinematics.hpp"

namespace percher {

constexpr int kUnknowns = 40;
constexpr int kEquations = 41;

// Unknown naming. Each is a 2D force acting ON a link at a joint:
//   H0, H1    on h1 (H1 is the force from the bent link)
//   H2        on the bent link h2h3 at the symmetry-axis joint
//   L<j>.<k>  on link k at outer joint L<j> (k in h, r1..r4, l1..l4; L0.h is H3)
//   T<i>      force the rib (or l4) pushes into the toe pad at T<i>, i.e. onto the perch
struct EquilibriumSystem {
    Eigen::MatrixXd A;  // 41 x 40; force rows in N, moment rows in N*mm
    Eigen::VectorXd b;
    std::map<std::string, int> unknown_index;  // name -> first of two columns
    std::vector<std::string> row_labels;
    double payload_mg = 0;
    PerchedPose pose;
};

EquilibriumSystem assemble_equilibrium(const PerchedPose& pose, const ClawDesign& design, double payload_mg);

struct TwoForceCheck {
    std::string link;
    double rel_error = 0;  // max of balance and colinearity errors, relative
    bool pass = false;
};

constexpr double kTwoForceTolerance = 1e-6;

struct ForceSolution {
    Eigen::VectorXd x;
    std::map<std::string, Vec2> joint_forces;
    std::array<Vec2, 5> toe{};  // T0..T4, force onto the perch
    double residual_norm = 0;
    double b_norm = 0;
    int rank = 0;
    double payload = 0;
    std::vector<TwoForceCheck> two_force;

    Vec2 at(const std::string& name) const { return joint_forces.at(name); }
    bool two_force_ok() const;
};

ForceSolution solve_forces(const EquilibriumSystem& sys);

// Joint/link/force dump.
std::string forces_csv(const ForceSolution& sol);
// Matrix-market style coordinate dump of A followed by b.
std::string system_dump(const EquilibriumSystem& sys);

}  // namespace percher
