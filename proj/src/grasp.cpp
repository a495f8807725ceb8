#include "percher/grasp.hpp"

#include <cmath>
#include <limits>

#include "percher/errors.hpp"
#include "percher/io.hpp"
#include "percher/perch_kinematics.hpp"

namespace percher {

namespace {

ForceSolution solve_digit(const ClawDesign& d, const PerchScenario& sc, Side side, double theta_deg) {
    const PerchedPose pose = solve_perched_pose(d, sc.perch_radius, side, theta_deg);
    return solve_forces(assemble_equilibrium(pose, d, sc.weight_N()));
}

}  // namespace

std::optional<int> observed_joint_count(double D) {
    if (std::abs(D - 30) < 1e-9) return 2;
    if (std::abs(D - 40) < 1e-9) return 3;
    if (std::abs(D - 50) < 1e-9) return 4;
    return std::nullopt;
}

SqueezeResult squeeze_detail(const ClawDesign& d, const PerchScenario& sc) {
    SqueezeResult res;
    if (sc.contributing_joints && (*sc.contributing_joints < 0 || *sc.contributing_joints > 4))
        throw InputError("contributing_joints must be in 0..4");
    const ForceSolution sol = solve_digit(d, sc, Side::right, 0);
    for (int i = 0; i < 4; ++i) {
        res.fx_N[i] = sol.toe[i + 1].x();
        if (res.fx_N[i] <= 0) ++res.inward_joints;
    }
    const int n = sc.contributing_joints ? *sc.contributing_joints : 4;
    res.joints_used = sc.contributing_joints ? n : res.inward_joints;
    for (int i = 0; i < n; ++i)
        if (res.fx_N[i] <= 0) res.force_N += std::abs(res.fx_N[i]);
    return res;
}

double squeeze_force(const ClawDesign& d, const PerchScenario& sc) { return squeeze_detail(d, sc).force_N; }

double radial_pressing_force(const ClawDesign& d, const PerchScenario& sc, double theta_deg) {
    double fr = 0;
    for (Side side : {Side::left, Side::right}) {
        const ForceSolution sol = solve_digit(d, sc, side, theta_deg);
        const PerchedPose pose = solve_perched_pose(d, sc.perch_radius, side, theta_deg);
        for (int i = 0; i < 5; ++i) {
            const double pressing = -sol.toe[i].dot(pose.T[i].normalized());
            if (pressing >= 0) fr += pressing;
        }
    }
    return fr;
}

double weight_moment(const PerchScenario& sc, double theta_deg) {
    return (sc.perch_radius + sc.lever_arm) * sc.weight_N() * std::sin(deg2rad(theta_deg));
}

double friction_moment(const ClawDesign& d, const PerchScenario& sc, double theta_deg) {
    return sc.perch_radius * sc.mu_s * radial_pressing_force(d, sc, theta_deg);
}

TiltResult max_tilt(const ClawDesign& d, const PerchScenario& sc) {
    TiltResult res;
    if (sc.payload_g == 0) {
        res.converged = true;
        return res;
    }
    auto g = [&](double th) { return weight_moment(sc, th) - friction_moment(d, sc, th); };
    double lo = 0, hi = 90;
    double glo = g(lo), ghi = g(hi);
    if (glo > 0 || ghi < 0)
        throw ConvergenceError(lo, hi, "moment balance has no sign change on [0, 90] deg");
    while (hi - lo > kTiltToleranceDeg && res.iterations < kTiltMaxIterations) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        ++res.iterations;
        if (gm <= 0) lo = mid, glo = gm;
        else hi = mid, ghi = gm;
    }
    res.bracket_lo_deg = lo;
    res.bracket_hi_deg = hi;
    if (hi - lo > kTiltToleranceDeg)
        throw ConvergenceError(lo, hi, "bisection exceeded " + std::to_string(kTiltMaxIterations) + " iterations");
    res.converged = true;
    res.theta_max_deg = 0.5 * (lo + hi);
    res.M_w = weight_moment(sc, res.theta_max_deg);
    res.M_f = friction_moment(d, sc, res.theta_max_deg);
    return res;
}

std::vector<TiltSample> tilt_moment_curve(const ClawDesign& d, const PerchScenario& sc,
                                          const std::vector<double>& thetas) {
    std::vector<TiltSample> out;
    for (double th : thetas) {
        TiltSample s{th, std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN(), false};
        try {
            s.M_w = weight_moment(sc, th);
            s.M_f = friction_moment(d, sc, th);
            s.solvable = true;
        } catch (const ModelError&) {
        }
        out.push_back(s);
    }
    return out;
}

std::string tilt_curve_csv(const std::vector<TiltSample>& curve) {
    CsvWriter w({"theta_deg", "Mw_Nmm", "Mf_Nmm", "solvable"});
    for (const auto& s : curve)
        w.row({fmt_num(s.theta_deg), s.solvable ? fmt_num(s.M_w) : "", s.solvable ? fmt_num(s.M_f) : "",
               s.solvable ? "true" : "false"});
    return w.str();
}

}  // namespace percher
