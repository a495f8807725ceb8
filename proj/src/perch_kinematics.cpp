#include "percher/perch_kinematics.hpp"

#include <cmath>

#include "percher/errors.hpp"
#include "percher/fourbar.hpp"
#include "percher/io.hpp"

namespace percher {

Vec2 PerchedPose::to_canonical(const Vec2& p) const {
    const Vec2 q = rotate(p, -deg2rad(tilt_deg));
    return side == Side::left ? mirror_x(q) : q;
}

namespace {

// Pick the four-bar branch whose new outer-link L_i->L_{i+1} turns least
// relative to the next outer-link L_{i+1}->next.
Vec2 pick_branch(const FourBarPair& fp, const Vec2& L_next, const Vec2& next) {
    const double ref = angle_of(next - L_next);
    auto turn = [&](const Vec2& c) { return std::abs(wrap_pi(angle_of(L_next - c) - ref)); };
    return turn(fp.open.C) <= turn(fp.crossed.C) ? fp.open.C : fp.crossed.C;
}

}  // namespace

PerchedPose solve_perched_pose(const ClawDesign& d, double R, Side side, double tilt_deg) {
    if (!(R > 0)) throw WrapInfeasible("perch", "perch radius must be positive");
    const double r_min = d.min_perch_diameter / 2.0;
    if (R < r_min - 1e-9)
        throw WrapInfeasible("perch", "radius " + std::to_string(R) + " mm is below the design minimum " +
                                          std::to_string(r_min) + " mm");
    const double S = d.sole_thickness;

    PerchedPose p;
    p.R = R;
    p.sole_thickness = S;
    p.side = side;
    p.tilt_deg = tilt_deg;

    double arc = d.t0;
    p.T[0] = (R + S) * unit(kPi / 2 - arc / R);
    for (int i = 0; i < 4; ++i) {
        arc += d.t[i];
        p.T[i + 1] = (R + S) * unit(kPi / 2 - arc / R);
    }

    // Triangle T3 T4 L3. The T3-T4 side is the chord, not the arc t4.
    const Vec2 e34 = p.T[4] - p.T[3];
    const double c34 = e34.norm();
    const double cos_a = (c34 * c34 + d.r[3] * d.r[3] - d.l[3] * d.l[3]) / (2 * c34 * d.r[3]);
    if (std::abs(cos_a) > 1.0 + kCosineClamp)
        throw WrapInfeasible("triangle T3T4L3", "rib r4 and outer-link l4 cannot close over the chord");
    // The tip triangle opens away from the perch (clockwise from T3->T4 in this frame).
    const double a = std::acos(std::clamp(cos_a, -1.0, 1.0));
    const Vec2 L3a = p.T[3] + d.r[3] * unit(angle_of(e34) + a);
    const Vec2 L3b = p.T[3] + d.r[3] * unit(angle_of(e34) - a);
    p.L[3] = L3a.norm() >= L3b.norm() ? L3a : L3b;

    // Four-bars T_i T_{i+1} L_{i+1} L_i, cranked from T_{i+1} through the known L_{i+1}.
    for (int i = 2; i >= 0; --i) {
        FourBar fb;
        fb.pivot_A = p.T[i + 1];
        fb.pivot_D = p.T[i];
        fb.len_AB = (p.L[i + 1] - p.T[i + 1]).norm();
        fb.len_BC = d.l[i];
        fb.len_CD = d.r[i];
        const std::string name = "four-bar T" + std::to_string(i) + "T" + std::to_string(i + 1) + "L" +
                                 std::to_string(i + 1) + "L" + std::to_string(i);
        FourBarPair fp;
        try {
            fp = solve_fourbar(fb, angle_of(p.L[i + 1] - p.T[i + 1]));
        } catch (const AssemblyError& e) {
            throw WrapInfeasible(name, e.what());
        }
        const Vec2 next = i + 2 <= 3 ? p.L[i + 2] : p.T[4];
        p.L[i] = pick_branch(fp, p.L[i + 1], next);
    }

    // Hoberman chain. H3 rides on L0; H2 on the symmetry axis; H0 on the gear.
    const Vec2 H3 = p.L[0];
    if (std::abs(H3.x()) >= d.h3)
        throw OutOfRange("h3 cannot reach the symmetry axis from L0 on a " + std::to_string(2 * R) + " mm perch");
    const Vec2 H2{0, H3.y() + std::sqrt(d.h3 * d.h3 - H3.x() * H3.x())};
    const Vec2 H1 = H2 + d.h2 * unit(angle_of(H3 - H2) + deg2rad(d.gamma_deg));
    const double dx = d.gear_radius - H1.x();
    if (std::abs(dx) >= d.h1)
        throw OutOfRange("h1 cannot reach the gear from H1 on a " + std::to_string(2 * R) + " mm perch");
    const Vec2 H0{d.gear_radius, H1.y() + std::sqrt(d.h1 * d.h1 - dx * dx)};
    p.H = {H0, H1, H2, H3};
    p.epsilon_deg = rad2deg(wrap_pi(angle_of(p.L[0] - p.T[0]) - kPi / 2));

    if (side == Side::left || tilt_deg != 0) {
        const double th = deg2rad(tilt_deg);
        auto map = [&](Vec2& v) {
            if (side == Side::left) v = mirror_x(v);
            v = rotate(v, th);
        };
        for (auto& v : p.T) map(v);
        for (auto& v : p.L) map(v);
        for (auto& v : p.H) map(v);
    }
    return p;
}

HobermanAngles angles_from_joints(const Vec2& A, const Vec2& B, const Vec2& C, const Vec2& D, const Vec2& E) {
    HobermanAngles h;
    h.alpha = wrap_pi(kPi / 2 - angle_of(B - A));
    h.beta = wrap_pi(kPi - angle_of(B - C));
    h.gamma = wrap_pi(angle_of(B - C) - angle_of(D - C));
    if (h.gamma < 0) h.gamma += 2 * kPi;
    h.delta = angle_of(D - C);
    h.epsilon = wrap_pi(angle_of(D - E) - kPi / 2);
    h.phi = wrap_pi(angle_of(D - E) - angle_of(D - C));
    h.l_BC = (B - C).norm();
    h.l_CD = (D - C).norm();
    return h;
}

HobermanAngles extract_angles(const PerchedPose& p) {
    return angles_from_joints(p.to_canonical(p.H[0]), p.to_canonical(p.H[1]), p.to_canonical(p.H[2]),
                              p.to_canonical(p.H[3]), p.to_canonical(p.T[0]));
}

std::string pose_csv(const PerchedPose& p) {
    CsvWriter w({"joint", "x_mm", "y_mm"});
    for (int i = 0; i < 5; ++i) w.row({"T" + std::to_string(i), fmt_num(p.T[i].x()), fmt_num(p.T[i].y())});
    for (int i = 0; i < 4; ++i) w.row({"L" + std::to_string(i), fmt_num(p.L[i].x()), fmt_num(p.L[i].y())});
    for (int i = 0; i < 4; ++i) w.row({"H" + std::to_string(i), fmt_num(p.H[i].x()), fmt_num(p.H[i].y())});
    return w.str();
}

}  // namespace percher
