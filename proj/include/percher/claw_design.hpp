#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace percher {

// One claw digit plus its Hoberman leg. Lengths in mm, angles in degrees.
struct ClawDesign {
    double h1 = 0, h2 = 0, h3 = 0;
    double gamma_deg = 0;
    std::array<double, 4> t{};  // toe-pad segments t1..t4
    std::array<double, 4> r{};  // ribs r1..r4
    std::array<double, 4> l{};  // outer-links l1..l4
    double gear_radius = 0;
    double sole_thickness = 0;
    std::array<double, 4> hub_angles_deg{};  // cumulative from vertical
    double t0 = 0;                            // arc offset of the first hub from vertical
    double min_perch_diameter = 0;

    bool operator==(const ClawDesign&) const = default;
};

// The fabricated claw, used as the reference for sizing regeneration.
ClawDesign reference_design();

// Position of an outer-wall joint L_i at the minimum perch: height above the sole
// surface and polar angle from vertical.
struct OuterJointPlacement {
    double height_mm = 0;
    double angle_deg = 0;
};

enum class OuterJointRule {
    explicit_placement,  // use SizingSpec::outer_joints
    hub_radial           // L_i radially above hub i+1 at the clearance height plus margin
};

struct SizingSpec {
    double min_perch_diameter = 30;
    double overlap_angle_deg = 90;
    std::vector<double> hub_increments_deg{60, 55, 50, 60};
    double hub_clearance_base = 4;
    double hub_clearance_tip = 2;
    double rib_margin = 1;
    double sole_thickness = 4;
    double gear_radius = 4;
    double gamma_deg = 150;
    double h1 = 35, h2 = 35, h3 = 28.22;
    // Effective arc radius of each toe-pad segment as a fraction of the perch radius.
    std::array<double, 4> segment_radius_ratio{1, 1, 1, 1};
    OuterJointRule outer_rule = OuterJointRule::hub_radial;
    std::array<OuterJointPlacement, 4> outer_joints{};
};

// Spec that regenerates the fabricated claw.
SizingSpec default_sizing_spec();
// Same perch/hub inputs, but uniform arc radius and hub-radial outer joints.
SizingSpec formula_sizing_spec();

ClawDesign size_claw(const SizingSpec& spec);

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    bool has(const std::string& key) const;
};

ValidationReport validate_design(const ClawDesign& design);

struct TableRow {
    std::string entry;
    std::string unit;  // "mm" or "deg"
    double reference = 0;
    double computed = 0;
    double abs_diff = 0;
    bool flagged = false;
};

constexpr double kTableTolerance = 0.01;

// Compare a design entry by entry against the fabricated reference. Rows whose
// absolute difference exceeds kTableTolerance are flagged.
std::vector<TableRow> compare_to_reference(const ClawDesign& design);

}  // namespace percher
