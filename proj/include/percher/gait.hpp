#pragma once

#include <string>
#include <vector>

#include "percher/geometry.hpp"

namespace percher {

// Lengths in cm.
struct LegGeometry {
    double upper_limb = 7;
    double lower_limb = 10;
    double hip_separation = 10.5;
    double foot_contact_length = 9.5;
};

struct LegAngles {
    double hip_deg = 0;   // upper limb from straight down, positive forward (+x)
    double knee_deg = 0;  // interior angle between upper and lower limb; 180 = straight
};

// foot relative to the hip, y up. Knee-backward branch (knee behind the hip-foot line).
LegAngles leg_ik(const LegGeometry& geom, const Vec2& foot);

struct GaitOptions {
    double swing_height = 2;    // cm
    double stance_depth = 15;   // cm, hip height above the ground
};

struct GaitSample {
    double t = 0;  // s
    LegAngles left, right;
    Vec2 foot_left, foot_right;
    bool left_stance = false, right_stance = false;
};

struct GaitPlan {
    double stride = 0;     // cm
    double frequency = 0;  // Hz
    double phase_offset = 0.5;
    int samples_per_cycle = 0;
    std::vector<GaitSample> samples;

    double period() const { return 1.0 / frequency; }
    double stance_duration() const;          // s, from the sampled stance flags
    double travel(double seconds) const;     // cm, open-loop stride * f * t
    std::string csv() const;
};

// Foot path of one leg at cycle phase s in [0, 1): stance on [0, 0.5), swing on [0.5, 1).
Vec2 foot_path(double stride, double phase, const GaitOptions& opt);

GaitPlan generate_gait(const LegGeometry& geom, double stride, double frequency, int samples_per_cycle,
                       const GaitOptions& opt = {});

struct SupportPolygon {
    std::vector<Vec2> vertices;  // counter-clockwise, not closed
    double area = 0;             // cm^2
    std::string csv() const;
};

// Hull of both foot-contact segments. Feet run along x (walking direction),
// separated laterally by the hip separation, shifted fore/aft by the offsets.
SupportPolygon support_polygon(const LegGeometry& geom, double left_offset, double right_offset);

struct StabilityMargin {
    bool inside = false;
    double fore_deg = 0;  // pitch forward before the gravity line exits
    double aft_deg = 0;
    double min_deg() const { return std::min(fore_deg, aft_deg); }
    bool admits(double pitch_deg) const { return inside && pitch_deg <= fore_deg && pitch_deg >= -aft_deg; }
};

StabilityMargin stability_margin(const SupportPolygon& poly, double cog_height, const Vec2& cog_xy);

// COG height (cm) that yields the given symmetric margin on a polygon with
// fore/aft half-depth `half_depth` (cm).
double cog_height_for_margin(double half_depth, double margin_deg);

}  // namespace percher
