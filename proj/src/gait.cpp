#include "percher/gait.hpp"

#include <algorithm>
#include <boost/geometry.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>
#include <boost/geometry/geometries/multi_point.hpp>
#include <cmath>
#include <limits>

#include "percher/errors.hpp"
#include "percher/io.hpp"

namespace percher {

namespace bg = boost::geometry;
using BPoint = bg::model::d2::point_xy<double>;
using BPolygon = bg::model::polygon<BPoint, false>;  // counter-clockwise

LegAngles leg_ik(const LegGeometry& g, const Vec2& foot) {
    const double u = g.upper_limb, w = g.lower_limb;
    const double d = foot.norm();
    const double far = u + w, near = std::abs(u - w);
    if (d > far + 1e-12) throw ReachabilityError(d - far, "foot " + std::to_string(d) + " cm from hip, reach " + std::to_string(far));
    if (d < near - 1e-12) throw ReachabilityError(near - d, "foot " + std::to_string(d) + " cm from hip, inner limit " + std::to_string(near));
    const double dc = std::clamp(d, near, far);
    const double knee = std::acos(std::clamp((u * u + w * w - dc * dc) / (2 * u * w), -1.0, 1.0));
    const double offset = std::acos(std::clamp((u * u + dc * dc - w * w) / (2 * u * dc), -1.0, 1.0));
    const double psi = std::atan2(foot.x(), -foot.y());
    return {rad2deg(psi - offset), rad2deg(knee)};
}

Vec2 foot_path(double stride, double s, const GaitOptions& opt) {
    // No stride, no step: the ellipse degenerates and the foot stays planted.
    if (stride == 0) return {0, -opt.stance_depth};
    if (s < 0.5) {
        const double u = s / 0.5;
        return {stride / 2 - stride * u, -opt.stance_depth};
    }
    const double u = (s - 0.5) / 0.5;
    return {-stride / 2 * std::cos(kPi * u), -opt.stance_depth + opt.swing_height * std::sin(kPi * u)};
}

GaitPlan generate_gait(const LegGeometry& geom, double stride, double frequency, int n, const GaitOptions& opt) {
    if (!(frequency > 0)) throw InputError("frequency must be positive");
    if (n < 2 || n % 2) throw InputError("samples_per_cycle must be even and >= 2");
    if (stride < 0) throw InputError("stride must be non-negative");
    GaitPlan plan;
    plan.stride = stride;
    plan.frequency = frequency;
    plan.samples_per_cycle = n;

    std::vector<Vec2> path(n);
    std::vector<LegAngles> ang(n);
    for (int k = 0; k < n; ++k) {
        path[k] = foot_path(stride, static_cast<double>(k) / n, opt);
        ang[k] = leg_ik(geom, path[k]);
    }
    const double dt = 1.0 / (frequency * n);
    for (int k = 0; k < n; ++k) {
        const int kr = (k + n / 2) % n;  // right leg runs half a cycle behind
        GaitSample s;
        s.t = k * dt;
        s.left = ang[k];
        s.right = ang[kr];
        s.foot_left = path[k];
        s.foot_right = path[kr];
        s.left_stance = k < n / 2;
        s.right_stance = kr < n / 2;
        plan.samples.push_back(s);
    }
    return plan;
}

double GaitPlan::stance_duration() const {
    const auto stance = std::count_if(samples.begin(), samples.end(), [](const GaitSample& s) { return s.left_stance; });
    return static_cast<double>(stance) * period() / samples_per_cycle;
}

double GaitPlan::travel(double seconds) const { return stride * frequency * seconds; }

std::string GaitPlan::csv() const {
    CsvWriter w({"t_s", "hip_L_deg", "knee_L_deg", "hip_R_deg", "knee_R_deg", "footL_x_cm", "footL_y_cm",
                 "footR_x_cm", "footR_y_cm"});
    for (const auto& s : samples)
        w.row({fmt_num(s.t), fmt_num(s.left.hip_deg), fmt_num(s.left.knee_deg), fmt_num(s.right.hip_deg),
               fmt_num(s.right.knee_deg), fmt_num(s.foot_left.x()), fmt_num(s.foot_left.y()),
               fmt_num(s.foot_right.x()), fmt_num(s.foot_right.y())});
    return w.str();
}

SupportPolygon support_polygon(const LegGeometry& g, double left_offset, double right_offset) {
    const double h = g.foot_contact_length / 2, y = g.hip_separation / 2;
    bg::model::multi_point<BPoint> pts;
    pts.push_back({left_offset - h, y});
    pts.push_back({left_offset + h, y});
    pts.push_back({right_offset - h, -y});
    pts.push_back({right_offset + h, -y});
    BPolygon hull;
    bg::convex_hull(pts, hull);
    SupportPolygon poly;
    const auto& ring = hull.outer();
    for (std::size_t i = 0; i + 1 < ring.size(); ++i) poly.vertices.emplace_back(ring[i].x(), ring[i].y());
    poly.area = std::abs(bg::area(hull));
    return poly;
}

std::string SupportPolygon::csv() const {
    CsvWriter w({"vertex", "x_cm", "y_cm"});
    for (std::size_t i = 0; i < vertices.size(); ++i)
        w.row({std::to_string(i), fmt_num(vertices[i].x()), fmt_num(vertices[i].y())});
    return w.str();
}

namespace {

// Distance along direction dir from p to the polygon boundary; NaN if the ray misses.
double ray_exit(const std::vector<Vec2>& v, const Vec2& p, const Vec2& dir) {
    double best = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2 a = v[i], b = v[(i + 1) % v.size()];
        const Vec2 e = b - a;
        const double den = cross(dir, e);
        if (std::abs(den) < 1e-15) continue;
        const double t = cross(a - p, e) / den;
        const double s = cross(a - p, dir) / den;
        if (t >= -1e-12 && s >= -1e-12 && s <= 1 + 1e-12) {
            const double tt = std::max(t, 0.0);
            if (std::isnan(best) || tt > best) best = tt;
        }
    }
    return best;
}

}  // namespace

StabilityMargin stability_margin(const SupportPolygon& poly, double cog_height, const Vec2& cog) {
    StabilityMargin m;
    if (poly.vertices.size() < 3 || !(poly.area > 0)) return m;
    BPolygon bp;
    for (const auto& v : poly.vertices) bp.outer().push_back({v.x(), v.y()});
    bp.outer().push_back({poly.vertices.front().x(), poly.vertices.front().y()});
    if (!bg::covered_by(BPoint{cog.x(), cog.y()}, bp)) return m;
    m.inside = true;
    const double fore = ray_exit(poly.vertices, cog, {1, 0});
    const double aft = ray_exit(poly.vertices, cog, {-1, 0});
    m.fore_deg = rad2deg(std::atan2(std::isnan(fore) ? 0.0 : fore, cog_height));
    m.aft_deg = rad2deg(std::atan2(std::isnan(aft) ? 0.0 : aft, cog_height));
    return m;
}

double cog_height_for_margin(double half_depth, double margin_deg) {
    return half_depth / std::tan(deg2rad(margin_deg));
}

}  // namespace percher
