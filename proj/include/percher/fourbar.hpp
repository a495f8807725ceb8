#pragma once

#include "percher/geometry.hpp"

namespace percher {

// Ground pivots A and D; crank AB, coupler BC, rocker CD.
struct FourBar {
    Vec2 pivot_A{0, 0};
    Vec2 pivot_D{0, 0};
    double len_AB = 0, len_BC = 0, len_CD = 0;

    double len_AD() const { return (pivot_D - pivot_A).norm(); }
    double theta1() const { return angle_of(pivot_D - pivot_A); }
};

enum class Branch { open, crossed };

// theta4 is the direction of D->C, so C = D + CD*u(theta4). The textbook rocker
// angle (C->D) differs by pi.
struct FourBarSolution {
    Branch branch = Branch::open;
    double theta2 = 0, theta3 = 0, theta4 = 0;
    Vec2 B{0, 0}, C{0, 0};

    // |(B + BC u(theta3)) - (D + CD u(theta4))| for the linkage that produced it.
    double closure_residual(const FourBar& fb) const;
};

struct FourBarPair {
    FourBarSolution open;
    FourBarSolution crossed;
};

constexpr double kCosineClamp = 1e-12;

// Throws AssemblyError when a cosine argument leaves [-1-1e-12, 1+1e-12].
FourBarPair solve_fourbar(const FourBar& fb, double theta2);

}  // namespace percher
