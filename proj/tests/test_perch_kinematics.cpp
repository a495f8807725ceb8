#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "percher/claw_design.hpp"
#include "percher/errors.hpp"
#include "percher/perch_kinematics.hpp"

using namespace percher;

namespace {

// Damped Newton on the eight closure equations for L0..L3 with the toe joints fixed.
std::optional<std::array<Vec2, 4>> newton_closure(const ClawDesign& d, const std::array<Vec2, 5>& T,
                                                  std::array<Vec2, 4> L) {
    auto residual = [&](const std::array<Vec2, 4>& q) {
        Eigen::Matrix<double, 8, 1> f;
        for (int i = 0; i < 4; ++i) f(i) = (q[i] - T[i]).squaredNorm() - d.r[i] * d.r[i];
        for (int i = 0; i < 3; ++i) f(4 + i) = (q[i + 1] - q[i]).squaredNorm() - d.l[i] * d.l[i];
        f(7) = (T[4] - q[3]).squaredNorm() - d.l[3] * d.l[3];
        return f;
    };
    for (int it = 0; it < 200; ++it) {
        const auto f = residual(L);
        if (f.cwiseAbs().maxCoeff() < 1e-10) return L;
        Eigen::Matrix<double, 8, 8> J = Eigen::Matrix<double, 8, 8>::Zero();
        for (int i = 0; i < 4; ++i) J.block<1, 2>(i, 2 * i) = 2 * (L[i] - T[i]).transpose();
        for (int i = 0; i < 3; ++i) {
            const Vec2 g = 2 * (L[i + 1] - L[i]);
            J.block<1, 2>(4 + i, 2 * i) = -g.transpose();
            J.block<1, 2>(4 + i, 2 * i + 2) = g.transpose();
        }
        J.block<1, 2>(7, 6) = -2 * (T[4] - L[3]).transpose();
        const Eigen::Matrix<double, 8, 1> step = J.colPivHouseholderQr().solve(-f);
        for (int i = 0; i < 4; ++i) L[i] += 0.7 * step.segment<2>(2 * i);
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("toe joints sit on the sole surface at the prescribed arc positions") {
    const ClawDesign d = reference_design();
    for (double R = 15; R <= 25 + 1e-9; R += 0.5) {
        const auto p = solve_perched_pose(d, R);
        double s = d.t0;
        for (int i = 0; i < 5; ++i) {
            CHECK(p.T[i].norm() == doctest::Approx(R + d.sole_thickness).epsilon(1e-12));
            CHECK(angle_of(p.T[i]) == doctest::Approx(kPi / 2 - s / R).epsilon(1e-12));
            if (i < 4) s += d.t[i];
        }
    }
}

TEST_CASE("every link length is preserved across the perch range") {
    const ClawDesign d = reference_design();
    for (double R = 15; R <= 25 + 1e-9; R += 0.5) {
        const auto p = solve_perched_pose(d, R);
        INFO("R = " << R);
        for (int i = 0; i < 4; ++i) CHECK(std::abs((p.L[i] - p.T[i]).norm() - d.r[i]) < 1e-6);
        for (int i = 0; i < 3; ++i) CHECK(std::abs((p.L[i + 1] - p.L[i]).norm() - d.l[i]) < 1e-6);
        CHECK(std::abs((p.T[4] - p.L[3]).norm() - d.l[3]) < 1e-6);
        CHECK(std::abs((p.H[1] - p.H[0]).norm() - d.h1) < 1e-6);
        CHECK(std::abs((p.H[2] - p.H[1]).norm() - d.h2) < 1e-6);
        CHECK(std::abs((p.H[3] - p.H[2]).norm() - d.h3) < 1e-6);
        CHECK(p.H[3] == p.L[0]);
        CHECK(std::abs(p.H[2].x()) < 1e-12);
        CHECK(p.H[0].x() == doctest::Approx(d.gear_radius));
        // Bend angle at H2 is the design angle.
        const double bend = std::abs(wrap_pi(angle_of(p.H[1] - p.H[2]) - angle_of(p.H[3] - p.H[2])));
        CHECK(rad2deg(bend) == doctest::Approx(d.gamma_deg).epsilon(1e-9));
        // Outer joints stay outside the sole.
        for (const auto& L : p.L) CHECK(L.norm() > R + d.sole_thickness);
    }
}

TEST_CASE("pose agrees with an independent Newton solve of the closure equations") {
    const ClawDesign d = reference_design();
    std::mt19937_64 rng(7);
    std::normal_distribution<double> jitter(0, 1.5);
    for (double R : {15.0, 18.0, 20.0, 25.0}) {
        const auto p = solve_perched_pose(d, R);
        int matched = 0;
        for (int k = 0; k < 20; ++k) {
            auto guess = p.L;
            for (auto& g : guess) g += Vec2(jitter(rng), jitter(rng));
            const auto sol = newton_closure(d, p.T, guess);
            if (!sol) continue;
            double worst = 0;
            for (int i = 0; i < 4; ++i) worst = std::max(worst, ((*sol)[i] - p.L[i]).norm());
            matched += worst < 1e-6;
        }
        INFO("R = " << R);
        CHECK(matched >= 15);
    }
}

TEST_CASE("left digit mirrors the right digit") {
    const ClawDesign d = reference_design();
    for (double R : {15.0, 20.0, 30.0}) {
        const auto r = solve_perched_pose(d, R, Side::right);
        const auto l = solve_perched_pose(d, R, Side::left);
        for (int i = 0; i < 5; ++i) CHECK((l.T[i] - mirror_x(r.T[i])).norm() < 1e-12);
        for (int i = 0; i < 4; ++i) CHECK((l.L[i] - mirror_x(r.L[i])).norm() < 1e-12);
        for (int i = 0; i < 4; ++i) CHECK((l.H[i] - mirror_x(r.H[i])).norm() < 1e-12);
        CHECK(l.epsilon_deg == r.epsilon_deg);
        CHECK((l.to_canonical(l.L[2]) - r.L[2]).norm() < 1e-12);
    }
}

TEST_CASE("tilt is a rigid rotation of the claw") {
    const ClawDesign d = reference_design();
    const auto base = solve_perched_pose(d, 20);
    const auto tilted = solve_perched_pose(d, 20, Side::right, 12.5);
    for (int i = 0; i < 4; ++i) {
        CHECK((tilted.L[i] - rotate(base.L[i], deg2rad(12.5))).norm() < 1e-12);
        CHECK((tilted.to_canonical(tilted.L[i]) - base.L[i]).norm() < 1e-12);
    }
    CHECK((tilted.axis() - Vec2(-std::sin(deg2rad(12.5)), std::cos(deg2rad(12.5)))).norm() < 1e-15);
}

TEST_CASE("perches below the design minimum are wrap-infeasible") {
    CHECK_THROWS_AS(solve_perched_pose(reference_design(), 5), WrapInfeasible);
    CHECK_THROWS_AS(solve_perched_pose(reference_design(), 14.9), WrapInfeasible);
    CHECK_THROWS_AS(solve_perched_pose(reference_design(), -1), WrapInfeasible);
}

TEST_CASE("epsilon opens up as the perch grows") {
    const ClawDesign d = reference_design();
    double prev = -1e9;
    for (double R = 15; R <= 50; R += 2.5) {
        const auto p = solve_perched_pose(d, R);
        // Datum: base rib direction measured from the perch tangent at T0.
        const double eps = rad2deg(angle_of(p.L[0] - p.T[0])) - 90;
        CHECK(p.epsilon_deg == doctest::Approx(eps).epsilon(1e-12));
        CHECK(p.epsilon_deg > prev);
        prev = p.epsilon_deg;
    }
}

TEST_CASE("extracted angles reproduce the joint geometry") {
    const auto p = solve_perched_pose(reference_design(), 17.5);
    const auto a = extract_angles(p);
    CHECK(a.l_BC == doctest::Approx(35));
    CHECK(a.l_CD == doctest::Approx(28.22));
    CHECK(rad2deg(a.epsilon) == doctest::Approx(p.epsilon_deg).epsilon(1e-12));
    CHECK(rad2deg(a.gamma) == doctest::Approx(150).epsilon(1e-9));
    // B - C along (pi - beta), D - C along delta.
    const Vec2 B = p.H[2] + a.l_BC * unit(kPi - a.beta);
    const Vec2 D = p.H[2] + a.l_CD * unit(a.delta);
    CHECK((B - p.H[1]).norm() < 1e-9);
    CHECK((D - p.H[3]).norm() < 1e-9);
}

TEST_CASE("pose CSV lists every joint once") {
    const auto csv = pose_csv(solve_perched_pose(reference_design(), 15));
    CHECK(csv.rfind("joint,x_mm,y_mm\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 5 + 4 + 4);
    CHECK(csv.find('\r') == std::string::npos);
}
