#include "percher/claw_design.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "percher/errors.hpp"
#include "percher/geometry.hpp"

namespace percher {

ClawDesign reference_design() {
    ClawDesign d;
    d.h1 = 35.00;
    d.h2 = 35.00;
    d.h3 = 28.22;
    d.gamma_deg = 150;
    d.l = {22.91, 17.45, 14.21, 9.89};
    d.r = {25.19, 19.93, 16.34, 12.31};
    d.t = {15.71, 13.09, 10.47, 11.88};
    d.gear_radius = 4;
    d.sole_thickness = 4;
    d.hub_angles_deg = {60, 115, 165, 225};
    d.t0 = 0;
    d.min_perch_diameter = 30;
    return d;
}

SizingSpec default_sizing_spec() {
    SizingSpec s;
    // Arc radii of the fabricated toe pad relative to the minimum perch radius;
    // the distal segments were printed shorter than the hub increments imply.
    s.segment_radius_ratio = {1.00012966238947, 0.909093034940906, 0.799849082002629, 0.756304289572687};
    s.outer_rule = OuterJointRule::explicit_placement;
    s.outer_joints = {{{9.751263, 59.585841}, {7.668294, 108.243248}, {8.338693, 145.919153}, {6.816847, 176.760048}}};
    return s;
}

SizingSpec formula_sizing_spec() {
    SizingSpec s;
    s.segment_radius_ratio = {1, 1, 1, 1};
    s.outer_rule = OuterJointRule::hub_radial;
    return s;
}

ClawDesign size_claw(const SizingSpec& spec) {
    if (!(spec.min_perch_diameter > 0))
        throw SizingError("min_perch_diameter", "must be positive");
    if (!(spec.overlap_angle_deg >= 0))
        throw SizingError("overlap_angle", "must be non-negative");
    if (spec.hub_increments_deg.size() != 4)
        throw SizingError("hub_increments", "a digit has exactly four toe-pad segments, got " +
                                                std::to_string(spec.hub_increments_deg.size()));
    for (double inc : spec.hub_increments_deg)
        if (!(inc > 0)) throw SizingError("hub_increments", "increments must be positive");
    const double sum = std::accumulate(spec.hub_increments_deg.begin(), spec.hub_increments_deg.end(), 0.0);
    const double wrap = (360.0 + spec.overlap_angle_deg) / 2.0;
    if (std::abs(sum - wrap) > 1e-9)
        throw SizingError("hub_increments", "increments sum to " + std::to_string(sum) +
                                                " deg but half the wrap plus overlap is " + std::to_string(wrap));
    for (double k : spec.segment_radius_ratio)
        if (!(k > 0)) throw SizingError("segment_radius_ratio", "must be positive");

    const double R = spec.min_perch_diameter / 2.0;
    const double S = spec.sole_thickness;
    ClawDesign d;
    d.h1 = spec.h1;
    d.h2 = spec.h2;
    d.h3 = spec.h3;
    d.gamma_deg = spec.gamma_deg;
    d.gear_radius = spec.gear_radius;
    d.sole_thickness = S;
    d.min_perch_diameter = spec.min_perch_diameter;
    d.t0 = 0;

    double cum = 0;
    for (int i = 0; i < 4; ++i) {
        cum += spec.hub_increments_deg[i];
        d.hub_angles_deg[i] = cum;
        d.t[i] = spec.segment_radius_ratio[i] * R * deg2rad(spec.hub_increments_deg[i]);
    }

    std::array<Vec2, 5> T;
    double arc = d.t0;
    T[0] = (R + S) * unit(kPi / 2 - arc / R);
    for (int i = 0; i < 4; ++i) {
        arc += d.t[i];
        T[i + 1] = (R + S) * unit(kPi / 2 - arc / R);
    }

    std::array<Vec2, 4> L;
    for (int i = 0; i < 4; ++i) {
        double height, from_vertical;
        if (spec.outer_rule == OuterJointRule::explicit_placement) {
            height = spec.outer_joints[i].height_mm;
            from_vertical = deg2rad(spec.outer_joints[i].angle_deg);
        } else {
            height = (i == 0 ? spec.hub_clearance_base : spec.hub_clearance_tip) + spec.rib_margin;
            from_vertical = kPi / 2 - angle_of(T[i + 1]);
        }
        const double need = i == 0 ? spec.hub_clearance_base : spec.hub_clearance_tip;
        if (height < need)
            throw SizingError("rib clearance", "outer joint L" + std::to_string(i) + " sits " +
                                                   std::to_string(height) + " mm above the sole, needs " +
                                                   std::to_string(need));
        L[i] = (R + S + height) * unit(kPi / 2 - from_vertical);
        // The rib chord may dip into the flexible sole but must stay off the perch.
        const Vec2 e = L[i] - T[i];
        const double s = std::clamp(-T[i].dot(e) / e.squaredNorm(), 0.0, 1.0);
        if ((T[i] + s * e).norm() < R)
            throw SizingError("rib clearance", "rib r" + std::to_string(i + 1) + " cuts into the perch");
    }

    for (int i = 0; i < 4; ++i) d.r[i] = (L[i] - T[i]).norm();
    for (int i = 0; i < 3; ++i) d.l[i] = (L[i + 1] - L[i]).norm();
    d.l[3] = (T[4] - L[3]).norm();

    if (!(d.h3 > d.r[0]))
        throw SizingError("h3 > r1", "h3 = " + std::to_string(d.h3) + " mm does not exceed r1 = " +
                                         std::to_string(d.r[0]) + " mm; the Hoberman would foul the hubs");
    return d;
}

bool ValidationReport::has(const std::string& key) const {
    return std::find(violations.begin(), violations.end(), key) != violations.end();
}

ValidationReport validate_design(const ClawDesign& d) {
    ValidationReport rep;
    auto positive = [&](double v, const std::string& name) {
        if (!(v > 0)) rep.violations.push_back(name + " > 0");
    };
    positive(d.h1, "h1");
    positive(d.h2, "h2");
    positive(d.h3, "h3");
    for (int i = 0; i < 4; ++i) {
        positive(d.t[i], "t" + std::to_string(i + 1));
        positive(d.r[i], "r" + std::to_string(i + 1));
        positive(d.l[i], "l" + std::to_string(i + 1));
    }
    positive(d.gear_radius, "gear_radius");
    positive(d.sole_thickness, "sole_thickness");
    positive(d.min_perch_diameter, "min_perch_diameter");
    if (!(d.h3 > d.r[0])) rep.violations.push_back("h3 > r1");
    if (!(d.gamma_deg >= 90 && d.gamma_deg <= 180)) rep.violations.push_back("gamma range");
    for (int i = 1; i < 4; ++i)
        if (!(d.hub_angles_deg[i] > d.hub_angles_deg[i - 1])) {
            rep.violations.push_back("hub_angles increasing");
            break;
        }
    if (!(d.hub_angles_deg[3] <= 270)) rep.violations.push_back("hub_angles last <= 270");
    if (!(d.t0 >= 0)) rep.violations.push_back("t0 >= 0");
    return rep;
}

std::vector<TableRow> compare_to_reference(const ClawDesign& d) {
    const ClawDesign ref = reference_design();
    std::vector<TableRow> rows;
    auto add = [&](std::string name, std::string unit, double a, double b) {
        TableRow row{std::move(name), std::move(unit), a, b, std::abs(a - b), false};
        row.flagged = !(row.abs_diff <= kTableTolerance);
        rows.push_back(std::move(row));
    };
    add("h1", "mm", ref.h1, d.h1);
    add("h2", "mm", ref.h2, d.h2);
    add("h3", "mm", ref.h3, d.h3);
    for (int i = 0; i < 4; ++i) add("l" + std::to_string(i + 1), "mm", ref.l[i], d.l[i]);
    for (int i = 0; i < 4; ++i) add("r" + std::to_string(i + 1), "mm", ref.r[i], d.r[i]);
    for (int i = 0; i < 4; ++i) add("t" + std::to_string(i + 1), "mm", ref.t[i], d.t[i]);
    add("gamma", "deg", ref.gamma_deg, d.gamma_deg);
    return rows;
}

}  // namespace percher
