#include "percher/hoberman.hpp"

#include <cmath>
#include <limits>

#include "percher/errors.hpp"
#include "percher/io.hpp"

namespace percher {

double hoberman_force(const HobermanAngles& a, double payload_mg) {
    const double sd = std::sin(a.delta), sp = std::sin(a.phi);
    if (std::abs(sd) < kSingularTolerance) throw SingularityError("sin(delta) vanishes");
    if (std::abs(sp) < kSingularTolerance) throw SingularityError("sin(phi) vanishes");
    const double k = a.l_BC / a.l_CD;
    const double inner = k * (std::cos(a.beta) / sd + std::tan(a.alpha) * std::sin(a.beta) / sd) + std::cos(a.delta) / sd;
    return payload_mg / 2.0 * (std::sin(a.epsilon) + std::cos(a.epsilon) * inner) / sp;
}

std::optional<HobermanChain> hoberman_chain(const ClawDesign& d, double gamma, double eps) {
    HobermanChain c;
    c.E = {0, d.min_perch_diameter / 2.0 + d.sole_thickness};
    c.D = c.E + d.r[0] * unit(eps + kPi / 2);
    if (std::abs(c.D.x()) >= d.h3) return std::nullopt;
    c.C = {0, c.D.y() + std::sqrt(d.h3 * d.h3 - c.D.x() * c.D.x())};
    c.B = c.C + d.h2 * unit(angle_of(c.D - c.C) + gamma);
    const double dx = d.gear_radius - c.B.x();
    if (std::abs(dx) >= d.h1) return std::nullopt;
    c.A = {d.gear_radius, c.B.y() + std::sqrt(d.h1 * d.h1 - dx * dx)};
    return c;
}

bool GammaSummary::reaches(double eps, double step) const {
    if (std::isnan(eps_min_deg)) return false;
    if (eps < eps_min_deg - 1e-9 || eps > eps_max_deg + 1e-9) return false;
    for (auto [lo, hi] : gaps)
        if (eps > lo - step / 2 && eps < hi + step / 2) return false;
    return true;
}

std::vector<double> gamma_grid(double lo, double hi, double step) {
    std::vector<double> g;
    const int n = static_cast<int>(std::floor((hi - lo) / step + 1e-9));
    for (int i = 0; i <= n; ++i) g.push_back(lo + i * step);
    return g;
}

SweepTable sweep_mechanical_advantage(const ClawDesign& d, const SweepGrid& grid, double payload_mg) {
    SweepTable tab;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const int n = static_cast<int>(std::floor((grid.eps_max_deg - grid.eps_min_deg) / grid.eps_step_deg + 1e-9));
    for (double g : grid.gamma_deg) {
        GammaSummary s;
        s.gamma_deg = g;
        s.eps_min_deg = s.eps_max_deg = nan;
        s.peak_force_N = -std::numeric_limits<double>::infinity();
        s.peak_eps_deg = nan;
        s.singular_eps_deg = nan;
        double prev_sphi = nan, prev_eps = nan;
        double gap_start = nan;
        for (int k = 0; k <= n; ++k) {
            const double e = grid.eps_min_deg + k * grid.eps_step_deg;
            SweepRow row{g, e, nan, false};
            auto ch = hoberman_chain(d, deg2rad(g), deg2rad(e));
            if (ch) {
                const HobermanAngles a = angles_from_joints(ch->A, ch->B, ch->C, ch->D, ch->E);
                const double sphi = std::sin(a.phi);
                if (!std::isnan(prev_sphi) && (sphi > 0) != (prev_sphi > 0) && std::isnan(s.singular_eps_deg)) {
                    // Refine the sign change of sin(phi) between the two samples.
                    double lo = prev_eps, hi = e, flo = prev_sphi;
                    for (int it = 0; it < 60; ++it) {
                        const double mid = 0.5 * (lo + hi);
                        auto cm = hoberman_chain(d, deg2rad(g), deg2rad(mid));
                        if (!cm) break;
                        const double fm = std::sin(angles_from_joints(cm->A, cm->B, cm->C, cm->D, cm->E).phi);
                        if ((fm > 0) == (flo > 0)) lo = mid, flo = fm;
                        else hi = mid;
                    }
                    s.singular_eps_deg = 0.5 * (lo + hi);
                }
                prev_sphi = sphi;
                prev_eps = e;
                if (std::abs(sphi) >= kSingularTolerance && std::abs(std::sin(a.delta)) >= kSingularTolerance) {
                    row.f_hob_N = hoberman_force(a, payload_mg);
                    row.evaluable = std::isfinite(row.f_hob_N);
                }
            } else {
                prev_sphi = nan;
            }
            if (row.evaluable) {
                if (std::isnan(s.eps_min_deg)) s.eps_min_deg = e;
                else if (!std::isnan(gap_start)) s.gaps.emplace_back(gap_start, e - grid.eps_step_deg);
                gap_start = nan;
                s.eps_max_deg = e;
                if (row.f_hob_N > s.peak_force_N) {
                    s.peak_force_N = row.f_hob_N;
                    s.peak_eps_deg = e;
                }
            } else if (!std::isnan(s.eps_min_deg) && std::isnan(gap_start)) {
                gap_start = e;
            }
            tab.rows.push_back(row);
        }
        tab.summary.push_back(s);
    }
    return tab;
}

double SweepTable::peak_gamma_deg() const {
    double best = -std::numeric_limits<double>::infinity(), g = std::numeric_limits<double>::quiet_NaN();
    for (const auto& s : summary)
        if (s.peak_force_N > best) best = s.peak_force_N, g = s.gamma_deg;
    return g;
}

std::string SweepTable::csv() const {
    CsvWriter w({"gamma_deg", "epsilon_deg", "f_hob_N", "evaluable"});
    for (const auto& r : rows)
        w.row({fmt_num(r.gamma_deg), fmt_num(r.epsilon_deg), r.evaluable ? fmt_num(r.f_hob_N) : "", r.evaluable ? "true" : "false"});
    return w.str();
}

}  // namespace percher
