#pragma once

#include <optional>
#include <string>
#include <vector>

#include "percher/claw_design.hpp"
#include "percher/geometry.hpp"
#include "percher/perch_kinematics.hpp"

namespace percher {

constexpr double kSingularTolerance = 1e-9;

// Output force pushed into the base rib along C->D, for a total weight mg (N)
// split equally between the two sides. Positive curls the digit.
double hoberman_force(const HobermanAngles& a, double payload_mg);

// The leg linkage alone, driven by the base rib angle: the rib pivots at E on the
// symmetry axis (toe joint T0 on the minimum perch) and carries D at distance r1.
struct HobermanChain {
    Vec2 A, B, C, D, E;
};

std::optional<HobermanChain> hoberman_chain(const ClawDesign& design, double gamma_rad, double epsilon_rad);

struct SweepRow {
    double gamma_deg = 0;
    double epsilon_deg = 0;
    double f_hob_N = 0;  // NaN when not evaluable
    bool evaluable = false;
};

struct GammaSummary {
    double gamma_deg = 0;
    double eps_min_deg = 0;  // evaluable extent on the grid (NaN if none)
    double eps_max_deg = 0;
    double peak_force_N = 0;
    double peak_eps_deg = 0;
    double singular_eps_deg = 0;  // where sin(phi) changes sign; NaN if none on the grid
    bool reaches(double eps_deg, double step_deg) const;
    std::vector<std::pair<double, double>> gaps;  // non-evaluable grid runs inside the extent
};

struct SweepTable {
    std::vector<SweepRow> rows;
    std::vector<GammaSummary> summary;
    double peak_gamma_deg() const;
    std::string csv() const;
};

struct SweepGrid {
    std::vector<double> gamma_deg;
    double eps_min_deg = -120;
    double eps_max_deg = 120;
    double eps_step_deg = 0.5;
};

std::vector<double> gamma_grid(double lo, double hi, double step);

SweepTable sweep_mechanical_advantage(const ClawDesign& design, const SweepGrid& grid, double payload_mg);

}  // namespace percher
