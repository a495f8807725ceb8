#include <doctest.h>

#include "percher/claw_design.hpp"
#include "percher/errors.hpp"
#include "percher/grasp.hpp"
#include "percher/perch_kinematics.hpp"
#include "percher/statics.hpp"

using namespace percher;

namespace {

PerchScenario scenario(double D, double grams, double mu = 0.5) {
    PerchScenario sc;
    sc.perch_radius = D / 2;
    sc.payload_g = grams;
    sc.mu_s = mu;
    return sc;
}

// First sign change of M_w - M_f on a 0.01 deg scan.
double scan_root(const ClawDesign& d, const PerchScenario& sc) {
    double prev = weight_moment(sc, 0) - friction_moment(d, sc, 0);
    for (int k = 1; k <= 9000; ++k) {
        const double th = 0.01 * k;
        const double g = weight_moment(sc, th) - friction_moment(d, sc, th);
        if ((prev <= 0) != (g <= 0)) return th - 0.005;
        prev = g;
    }
    return -1;
}

}  // namespace

TEST_CASE("observed contributing joints") {
    CHECK(observed_joint_count(30) == 2);
    CHECK(observed_joint_count(40) == 3);
    CHECK(observed_joint_count(50) == 4);
    CHECK_FALSE(observed_joint_count(45).has_value());
}

TEST_CASE("squeeze is zero without payload and linear in payload") {
    const ClawDesign d = reference_design();
    for (double D : {30.0, 40.0, 50.0}) {
        CHECK(squeeze_force(d, scenario(D, 0)) == 0);
        const double f1 = squeeze_force(d, scenario(D, 100));
        for (double m : {200.0, 300.0, 400.0})
            CHECK(squeeze_force(d, scenario(D, m)) == doctest::Approx(f1 * m / 100).epsilon(1e-12));
    }
}

TEST_CASE("squeeze sums the inward toe-joint x forces of the chosen joints") {
    const ClawDesign d = reference_design();
    for (double D : {30.0, 40.0, 50.0}) {
        const auto sc = scenario(D, 100);
        const auto sol = solve_forces(assemble_equilibrium(solve_perched_pose(d, D / 2), d, sc.weight_N()));
        double all = 0;
        int inward = 0;
        for (int i = 1; i <= 4; ++i)
            if (sol.toe[i].x() <= 0) all -= sol.toe[i].x(), ++inward;
        const auto det = squeeze_detail(d, sc);
        CHECK(det.force_N == doctest::Approx(all).epsilon(1e-12));
        CHECK(det.inward_joints == inward);
        CHECK(det.force_N >= 0);
        for (int n = 0; n <= 4; ++n) {
            auto s = sc;
            s.contributing_joints = n;
            double part = 0;
            for (int i = 1; i <= n; ++i)
                if (sol.toe[i].x() <= 0) part -= sol.toe[i].x();
            CHECK(squeeze_force(d, s) == doctest::Approx(part).epsilon(1e-12));
        }
    }
    auto bad = scenario(30, 100);
    bad.contributing_joints = 5;
    CHECK_THROWS_AS(squeeze_force(d, bad), InputError);
}

TEST_CASE("squeeze on an undersized perch propagates wrap-infeasible") {
    CHECK_THROWS_AS(squeeze_force(reference_design(), scenario(5, 100)), WrapInfeasible);
}

TEST_CASE("weight moment") {
    const auto sc = scenario(40, 100);
    CHECK(weight_moment(sc, 0) == 0);
    CHECK(weight_moment(sc, 90) == doctest::Approx((20 + 200) * 0.981).epsilon(1e-12));
}

TEST_CASE("zero payload tilts to zero") {
    const auto r = max_tilt(reference_design(), scenario(40, 0));
    CHECK(r.converged);
    CHECK(r.theta_max_deg == 0);
    CHECK(r.M_w == 0);
    CHECK(r.M_f == 0);
}

TEST_CASE("tilt root matches a dense scan") {
    const ClawDesign d = reference_design();
    const auto sc = scenario(40, 100);
    const auto r = max_tilt(d, sc);
    CHECK(r.converged);
    CHECK(r.iterations <= kTiltMaxIterations);
    CHECK(r.bracket_hi_deg - r.bracket_lo_deg <= kTiltToleranceDeg);
    const double oracle = scan_root(d, sc);
    REQUIRE(oracle > 0);
    CHECK(std::abs(r.theta_max_deg - oracle) < 0.05);
}

TEST_CASE("tilt angle does not depend on payload mass") {
    const ClawDesign d = reference_design();
    for (double D : {30.0, 40.0, 50.0}) {
        const auto a = max_tilt(d, scenario(D, 100));
        const auto b = max_tilt(d, scenario(D, 400));
        CHECK(std::abs(a.theta_max_deg - b.theta_max_deg) < 0.05);
        CHECK(b.M_w > a.M_w);
    }
}

TEST_CASE("more friction sustains more tilt") {
    const ClawDesign d = reference_design();
    double prev = -1;
    for (double mu : {0.2, 0.5, 1.0, 1.5}) {
        const double th = max_tilt(d, scenario(40, 100, mu)).theta_max_deg;
        CHECK(th > prev);
        prev = th;
    }
}

TEST_CASE("tilt curve marks samples and writes CSV") {
    const auto curve = tilt_moment_curve(reference_design(), scenario(40, 100), {0, 5, 10});
    REQUIRE(curve.size() == 3);
    CHECK(curve[0].M_w == 0);
    for (const auto& s : curve) CHECK(s.solvable);
    const auto csv = tilt_curve_csv(curve);
    CHECK(csv.rfind("theta_deg,Mw_Nmm,Mf_Nmm,solvable\n", 0) == 0);
    const auto bad = tilt_moment_curve(reference_design(), scenario(10, 100), {0});
    CHECK_FALSE(bad[0].solvable);
}
