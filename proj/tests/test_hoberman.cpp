#include <doctest.h>

#include <random>

#include "percher/claw_design.hpp"
#include "percher/errors.hpp"
#include "percher/hoberman.hpp"
#include "percher/perch_kinematics.hpp"

using namespace percher;

namespace {

struct Chain {
    Vec2 A, B, C, D;
};

// Leg linkage rebuilt from scratch: base rib pivoting about E on the axis,
// h3 pinned to the axis slider, bent link, h1 to the gear rack.
std::optional<Chain> chain_oracle(const ClawDesign& d, double gamma, double eps) {
    const Vec2 E(0, d.min_perch_diameter / 2 + d.sole_thickness);
    Chain c;
    c.D = E + d.r[0] * Vec2(-std::sin(eps), std::cos(eps));
    const double q = d.h3 * d.h3 - c.D.x() * c.D.x();
    if (q <= 0) return std::nullopt;
    c.C = {0, c.D.y() + std::sqrt(q)};
    const Vec2 cd = c.D - c.C;
    c.B = c.C + d.h2 / d.h3 * Vec2(std::cos(gamma) * cd.x() - std::sin(gamma) * cd.y(),
                                   std::sin(gamma) * cd.x() + std::cos(gamma) * cd.y());
    const double dx = d.gear_radius - c.B.x();
    if (d.h1 * d.h1 - dx * dx <= 0) return std::nullopt;
    c.A = {d.gear_radius, c.B.y() + std::sqrt(d.h1 * d.h1 - dx * dx)};
    return c;
}

// Virtual work: the weight share on the rack balances a force F applied at D along C->D.
//   (mg/2) dA_y = F e_CD . dD
double virtual_work_force(const ClawDesign& d, double gamma, double eps, double mg) {
    const double h = 1e-6;
    const auto c0 = chain_oracle(d, gamma, eps);
    const auto cp = chain_oracle(d, gamma, eps + h);
    const auto cm = chain_oracle(d, gamma, eps - h);
    REQUIRE((c0 && cp && cm));
    const Vec2 e = (c0->D - c0->C).normalized();
    const double dAy = (cp->A.y() - cm->A.y()) / (2 * h);
    const double dD = e.dot(cp->D - cm->D) / (2 * h);
    return mg / 2 * dAy / dD;
}

}  // namespace

TEST_CASE("chain construction agrees with the oracle geometry") {
    const ClawDesign d = reference_design();
    for (double g : {100.0, 150.0, 180.0})
        for (double e = -90; e <= 60; e += 7.5) {
            const auto a = hoberman_chain(d, deg2rad(g), deg2rad(e));
            const auto b = chain_oracle(d, deg2rad(g), deg2rad(e));
            REQUIRE(a.has_value() == b.has_value());
            if (!a) continue;
            CHECK((a->A - b->A).norm() < 1e-9);
            CHECK((a->B - b->B).norm() < 1e-9);
            CHECK((a->D - b->D).norm() < 1e-9);
        }
}

TEST_CASE("closed-form output force matches virtual work") {
    const ClawDesign d = reference_design();
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> gam(95, 180), eps(-110, 60);
    int n = 0;
    double worst = 0;
    while (n < 100) {
        const double g = deg2rad(gam(rng)), e = deg2rad(eps(rng));
        const auto c = chain_oracle(d, g, e);
        if (!c || !chain_oracle(d, g, e + 1e-6) || !chain_oracle(d, g, e - 1e-6)) continue;
        const auto a = angles_from_joints(c->A, c->B, c->C, c->D, Vec2(0, 19));
        if (std::abs(std::sin(a.phi)) < 0.05 || std::abs(std::sin(a.delta)) < 0.05) continue;
        const double f = hoberman_force(a, 0.981);
        const double ref = virtual_work_force(d, g, e, 0.981);
        worst = std::max(worst, std::abs(f - ref) / std::max(1e-3, std::abs(ref)));
        ++n;
    }
    CHECK(worst < 1e-4);
}

TEST_CASE("output force is linear in the payload") {
    const ClawDesign d = reference_design();
    const auto a = extract_angles(solve_perched_pose(d, 20));
    CHECK(hoberman_force(a, 0) == 0);
    const double f1 = hoberman_force(a, 0.981), f3 = hoberman_force(a, 3 * 0.981);
    CHECK(f3 == doctest::Approx(3 * f1).epsilon(1e-12));
}

TEST_CASE("collinear base rib is reported as singular") {
    HobermanAngles a;
    a.alpha = 0.2, a.beta = 1.0, a.delta = 1.2, a.phi = 0, a.epsilon = 0.1, a.l_BC = 35, a.l_CD = 28.22;
    CHECK_THROWS_AS(hoberman_force(a, 1), SingularityError);
    a.phi = 0.5, a.delta = 0;
    CHECK_THROWS_AS(hoberman_force(a, 1), SingularityError);
}

TEST_CASE("sweep keeps every grid point and marks the unevaluable ones") {
    const ClawDesign d = reference_design();
    SweepGrid grid{gamma_grid(90, 180, 10), -120, 120, 0.5};
    const auto tab = sweep_mechanical_advantage(d, grid, 0.981);
    CHECK(grid.gamma_deg.size() == 10);
    CHECK(tab.rows.size() == 10 * 481);
    CHECK(tab.summary.size() == 10);
    int bad = 0;
    for (const auto& r : tab.rows) {
        if (!r.evaluable) {
            CHECK(std::isnan(r.f_hob_N));
            ++bad;
        }
    }
    CHECK(bad > 0);
    // The sin(phi) sign change sits where D crosses the symmetry axis: the rib
    // is vertical, i.e. epsilon = 0, for every bend angle.
    for (const auto& s : tab.summary) CHECK(std::abs(s.singular_eps_deg) < 1e-6);
    const auto csv = tab.csv();
    CHECK(csv.rfind("gamma_deg,epsilon_deg,f_hob_N,evaluable\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 4810);
}

TEST_CASE("sweep rows agree with direct evaluation") {
    const ClawDesign d = reference_design();
    SweepGrid grid{{150}, -60, -10, 2.5};
    const auto tab = sweep_mechanical_advantage(d, grid, 0.5);
    for (const auto& r : tab.rows) {
        const auto c = chain_oracle(d, deg2rad(150), deg2rad(r.epsilon_deg));
        REQUIRE(c);
        const double f = virtual_work_force(d, deg2rad(150), deg2rad(r.epsilon_deg), 0.5);
        CHECK(r.evaluable);
        CHECK(r.f_hob_N == doctest::Approx(f).epsilon(1e-4));
    }
}
