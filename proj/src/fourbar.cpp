#include "percher/fourbar.hpp"

#include <algorithm>
#include <cmath>

#include "percher/errors.hpp"

namespace percher {

namespace {

double checked_cos(double c, const Triangle& tri) {
    if (!std::isfinite(c) || std::abs(c) > 1.0 + kCosineClamp)
        throw AssemblyError(tri, "cosine argument " + std::to_string(c) + " outside [-1, 1]");
    return std::clamp(c, -1.0, 1.0);
}

}  // namespace

double FourBarSolution::closure_residual(const FourBar& fb) const {
    const Vec2 c1 = B + fb.len_BC * unit(theta3);
    const Vec2 c2 = fb.pivot_D + fb.len_CD * unit(theta4);
    return (c1 - c2).norm();
}

FourBarPair solve_fourbar(const FourBar& fb, double theta2) {
    const double AB = fb.len_AB, BC = fb.len_BC, CD = fb.len_CD, AD = fb.len_AD();
    if (!(AB > 0 && BC > 0 && CD > 0 && AD > 0))
        throw AssemblyError({"ABCD", AB, BC, CD}, "link lengths must be positive");
    const double th1 = fb.theta1();

    const double alpha = theta2 - th1;
    const double BD2 = AB * AB + AD * AD - 2 * AB * AD * std::cos(alpha);
    const double BD = std::sqrt(std::max(BD2, 0.0));
    if (!(BD > 0)) throw AssemblyError({"ABD", AB, AD, BD}, "crank tip coincides with pivot D");

    const double sin_beta = AB / BD * std::sin(alpha);
    const double cos_beta = (AD * AD + BD * BD - AB * AB) / (2 * AD * BD);
    const double beta = std::atan2(sin_beta, cos_beta);

    const Triangle bcd{"BCD", BC, CD, BD};
    const double phi = std::acos(checked_cos((BC * BC + BD * BD - CD * CD) / (2 * BC * BD), bcd));
    const double sin_delta = BC / CD * std::sin(phi);
    const double cos_delta = checked_cos((BD * BD + CD * CD - BC * BC) / (2 * BD * CD), bcd);
    const double delta = std::atan2(sin_delta, cos_delta);

    const Vec2 B = fb.pivot_A + AB * unit(theta2);
    auto make = [&](Branch br, double th3, double th4_rocker) {
        FourBarSolution s;
        s.branch = br;
        s.theta2 = theta2;
        s.theta3 = wrap_pi(th3);
        s.theta4 = wrap_pi(th4_rocker + kPi);
        s.B = B;
        s.C = B + BC * unit(s.theta3);
        return s;
    };
    return {make(Branch::open, th1 - beta + phi, th1 - beta - delta),
            make(Branch::crossed, th1 - beta - phi, th1 - beta + delta)};
}

}  // namespace percher
