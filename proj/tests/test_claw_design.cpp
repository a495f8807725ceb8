#include <doctest.h>

#include <cmath>
#include <cstring>

#include "percher/claw_design.hpp"
#include "percher/errors.hpp"
#include "percher/geometry.hpp"

using namespace percher;

TEST_CASE("default sizing reproduces the fabricated dimensions") {
    const ClawDesign d = size_claw(default_sizing_spec());
    const auto rows = compare_to_reference(d);
    CHECK(rows.size() == 16);
    for (const auto& r : rows) {
        INFO(r.entry);
        CHECK(r.abs_diff <= 0.01);
        CHECK_FALSE(r.flagged);
    }
    CHECK(d.hub_angles_deg == std::array<double, 4>{60, 115, 165, 225});
    CHECK(d.gamma_deg == 150);
    CHECK(d.h3 > d.r[0]);
}

TEST_CASE("formula path discrepancies are flagged, not absorbed") {
    const ClawDesign f = size_claw(formula_sizing_spec());
    int flagged = 0;
    for (const auto& r : compare_to_reference(f)) flagged += r.flagged;
    CHECK(flagged > 0);
    // Uniform arc radius: t1 = R * 60 deg exactly.
    CHECK(f.t[0] == doctest::Approx(15 * kPi / 3).epsilon(1e-12));
    CHECK(f.t[1] == doctest::Approx(15 * deg2rad(55)).epsilon(1e-12));
}

TEST_CASE("sizing is bit-deterministic") {
    const ClawDesign a = size_claw(default_sizing_spec());
    const ClawDesign b = size_claw(default_sizing_spec());
    CHECK(std::memcmp(&a, &b, sizeof a) == 0);
}

TEST_CASE("toe-pad segments scale with perch diameter") {
    SizingSpec s = default_sizing_spec();
    const ClawDesign base = size_claw(s);
    s.min_perch_diameter = 60;
    s.h1 = s.h2 = 70;
    s.h3 = 60;
    const ClawDesign big = size_claw(s);
    const double k[4] = {1.00012966238947, 0.909093034940906, 0.799849082002629, 0.756304289572687};
    const double inc[4] = {60, 55, 50, 60};
    for (int i = 0; i < 4; ++i) {
        // Arc length at the doubled radius, recomputed from the sizing inputs.
        CHECK(big.t[i] == doctest::Approx(k[i] * 30 * inc[i] * kPi / 180).epsilon(1e-12));
        CHECK(big.t[i] / base.t[i] == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(big.t[i] / big.t[0] == doctest::Approx(base.t[i] / base.t[0]).epsilon(1e-12));
    }
}

TEST_CASE("degenerate hub specs are rejected") {
    SizingSpec s = default_sizing_spec();
    s.overlap_angle_deg = 0;
    s.hub_increments_deg = {90};
    CHECK_THROWS_AS(size_claw(s), SizingError);
    s = default_sizing_spec();
    s.hub_increments_deg = {60, 55, 50, 50};
    CHECK_THROWS_AS(size_claw(s), SizingError);
    s = default_sizing_spec();
    s.min_perch_diameter = 0;
    CHECK_THROWS_AS(size_claw(s), SizingError);
}

TEST_CASE("sizing enforces h3 > r1") {
    SizingSpec s = default_sizing_spec();
    s.h3 = 20;
    try {
        size_claw(s);
        FAIL("expected a sizing error");
    } catch (const SizingError& e) {
        CHECK(e.constraint() == "h3 > r1");
    }
}

TEST_CASE("sizing enforces rib clearance") {
    SizingSpec s = default_sizing_spec();
    s.outer_joints[1].height_mm = 1.0;
    CHECK_THROWS_AS(size_claw(s), SizingError);
}

TEST_CASE("validation of designs") {
    CHECK(validate_design(reference_design()).ok());
    ClawDesign d = reference_design();
    d.h3 = d.r[0] - 1;
    CHECK(validate_design(d).has("h3 > r1"));
    d = reference_design();
    d.gamma_deg = 80;
    CHECK(validate_design(d).has("gamma range"));
    d = reference_design();
    d.hub_angles_deg = {60, 50, 165, 225};
    CHECK(validate_design(d).has("hub_angles increasing"));
    d = reference_design();
    d.hub_angles_deg[3] = 280;
    CHECK(validate_design(d).has("hub_angles last <= 270"));
    d = reference_design();
    d.l[2] = 0;
    CHECK(validate_design(d).has("l3 > 0"));
}

TEST_CASE("gamma override marks the gamma row") {
    SizingSpec s = default_sizing_spec();
    s.gamma_deg = 120;
    for (const auto& r : compare_to_reference(size_claw(s))) CHECK(r.flagged == (r.entry == "gamma"));
}
