#pragma once

#include <Eigen/Core>
#include <cmath>
#include <numbers>

namespace percher {

using Vec2 = Eigen::Vector2d;

constexpr double kPi = std::numbers::pi;
constexpr double kGravity = 9.81;  // m/s^2

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

inline Vec2 unit(double theta) { return {std::cos(theta), std::sin(theta)}; }
inline double angle_of(const Vec2& v) { return std::atan2(v.y(), v.x()); }
inline double cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

// Wrap to (-pi, pi].
inline double wrap_pi(double a) {
    a = std::remainder(a, 2.0 * kPi);
    if (a <= -kPi) a += 2.0 * kPi;
    return a;
}

inline Vec2 rotate(const Vec2& v, double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return {c * v.x() - s * v.y(), s * v.x() + c * v.y()};
}

inline Vec2 mirror_x(const Vec2& v) { return {-v.x(), v.y()}; }

}  // namespace percher
