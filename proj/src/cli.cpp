#include "percher/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>

#include "percher/errors.hpp"
#include "percher/gait.hpp"
#include "percher/grasp.hpp"
#include "percher/hoberman.hpp"
#include "percher/io.hpp"
#include "percher/perch_kinematics.hpp"
#include "percher/statics.hpp"

namespace percher {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;
namespace fs = std::filesystem;

std::string tool_version() { return "percher 1.0.0"; }

namespace {

// Strict object reader: every key must be consumed, or finish() complains.
class Fields {
public:
    Fields(const json& j, std::string where) : j_(j), where_(std::move(where)) {
        if (!j_.is_object()) throw InputError(where_ + ": expected an object");
    }

    bool has(const std::string& k) const { return j_.contains(k); }

    const json& raw(const std::string& k) {
        if (!j_.contains(k)) throw InputError(where_ + "." + k + ": required field missing");
        used_.insert(k);
        return j_.at(k);
    }

    double num(const std::string& k) {
        const json& v = raw(k);
        if (!v.is_number()) throw InputError(where_ + "." + k + ": expected a number");
        return v.get<double>();
    }
    double num(const std::string& k, double def) { return has(k) ? num(k) : def; }

    int integer(const std::string& k, int def) {
        if (!has(k)) return def;
        const json& v = raw(k);
        if (!v.is_number_integer()) throw InputError(where_ + "." + k + ": expected an integer");
        return v.get<int>();
    }

    std::string str(const std::string& k) {
        const json& v = raw(k);
        if (!v.is_string()) throw InputError(where_ + "." + k + ": expected a string");
        return v.get<std::string>();
    }
    std::string str(const std::string& k, const std::string& def) { return has(k) ? str(k) : def; }

    std::vector<double> nums(const std::string& k) {
        const json& v = raw(k);
        if (!v.is_array() || v.empty()) throw InputError(where_ + "." + k + ": expected a non-empty array of numbers");
        std::vector<double> out;
        for (const auto& e : v) {
            if (!e.is_number()) throw InputError(where_ + "." + k + ": expected numbers");
            out.push_back(e.get<double>());
        }
        return out;
    }
    std::vector<double> nums(const std::string& k, std::vector<double> def) { return has(k) ? nums(k) : def; }

    void finish() const {
        for (auto it = j_.begin(); it != j_.end(); ++it)
            if (!used_.count(it.key())) throw InputError(where_ + "." + it.key() + ": unknown field");
    }

    const std::string& where() const { return where_; }

private:
    const json& j_;
    std::string where_;
    std::set<std::string> used_;
};

void require_positive(double v, const std::string& what) {
    if (!(v > 0)) throw InputError(what + ": must be positive");
}

std::array<double, 4> four(Fields& f, const std::string& k) {
    const auto v = f.nums(k);
    if (v.size() != 4) throw InputError(f.where() + "." + k + ": expected 4 values");
    return {v[0], v[1], v[2], v[3]};
}

SizingSpec sizing_from_json(const json& j, const std::string& where) {
    Fields f(j, where);
    const std::string base = f.str("base", "default");
    SizingSpec s;
    if (base == "default") s = default_sizing_spec();
    else if (base == "formula") s = formula_sizing_spec();
    else throw InputError(where + ".base: expected \"default\" or \"formula\"");
    s.min_perch_diameter = f.num("min_perch_diameter_mm", s.min_perch_diameter);
    s.overlap_angle_deg = f.num("overlap_angle_deg", s.overlap_angle_deg);
    s.hub_increments_deg = f.nums("hub_increments_deg", s.hub_increments_deg);
    s.hub_clearance_base = f.num("hub_clearance_base_mm", s.hub_clearance_base);
    s.hub_clearance_tip = f.num("hub_clearance_tip_mm", s.hub_clearance_tip);
    s.rib_margin = f.num("rib_margin_mm", s.rib_margin);
    s.sole_thickness = f.num("sole_thickness_mm", s.sole_thickness);
    s.gear_radius = f.num("gear_radius_mm", s.gear_radius);
    s.gamma_deg = f.num("gamma_deg", s.gamma_deg);
    s.h1 = f.num("h1_mm", s.h1);
    s.h2 = f.num("h2_mm", s.h2);
    s.h3 = f.num("h3_mm", s.h3);
    if (f.has("segment_radius_ratio")) s.segment_radius_ratio = four(f, "segment_radius_ratio");
    f.finish();
    return s;
}

ClawDesign resolve_design(const json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "reference") return reference_design();
        if (s == "default_sizing") return size_claw(default_sizing_spec());
        if (s == "formula_sizing") return size_claw(formula_sizing_spec());
        throw InputError("design: expected \"reference\", \"default_sizing\", \"formula_sizing\" or an object");
    }
    if (j.is_object() && j.contains("sizing")) {
        Fields f(j, "design");
        const SizingSpec s = sizing_from_json(f.raw("sizing"), "design.sizing");
        f.finish();
        return size_claw(s);
    }
    return design_from_json(j, "design");
}

ojson scalar(double v) { return std::isfinite(v) ? ojson(v) : ojson(nullptr); }

struct Output {
    std::string file;
    std::string content;
};

struct AnalysisResult {
    std::vector<Output> outputs;
    ojson scalars = ojson::object();
};

using Runner = std::function<AnalysisResult(const ClawDesign&)>;

// Each parser validates its parameters eagerly and returns a deferred runner, so
// schema errors surface before any model work.
Runner parse_analysis(const json& j, const std::string& where, const std::string& stem, std::string& type) {
    Fields f(j, where);
    type = f.str("type");
    f.str("name", "");

    if (type == "squeeze") {
        const auto diam = f.nums("perch_diameters_mm", {30, 40, 50});
        const auto mass = f.nums("payloads_g", {100, 200, 300, 400});
        std::string mode = "auto";
        int fixed = -1;
        if (f.has("contributing_joints")) {
            const json& v = f.raw("contributing_joints");
            if (v.is_string()) mode = v.get<std::string>();
            else if (v.is_number_integer()) mode = "fixed", fixed = v.get<int>();
            else throw InputError(where + ".contributing_joints: expected \"auto\", \"observed\" or an integer");
            if (mode != "auto" && mode != "observed" && mode != "fixed")
                throw InputError(where + ".contributing_joints: expected \"auto\", \"observed\" or an integer");
            if (mode == "fixed" && (fixed < 0 || fixed > 4)) throw InputError(where + ".contributing_joints: must be 0..4");
        }
        for (double D : diam) {
            require_positive(D, where + ".perch_diameters_mm");
            if (mode == "observed" && !observed_joint_count(D))
                throw InputError(where + ".contributing_joints: \"observed\" is defined only for 30, 40 and 50 mm perches");
        }
        for (double m : mass)
            if (!(m >= 0)) throw InputError(where + ".payloads_g: must be non-negative");
        f.finish();
        return [=](const ClawDesign& d) {
            AnalysisResult r;
            CsvWriter w({"perch_diameter_mm", "payload_g", "squeeze_N", "squeeze_per_weight_ratio", "joints_used_count",
                         "fx_T1_N", "fx_T2_N", "fx_T3_N", "fx_T4_N"});
            ojson rows = ojson::array();
            for (double D : diam)
                for (double m : mass) {
                    PerchScenario sc;
                    sc.perch_radius = D / 2;
                    sc.payload_g = m;
                    if (mode == "observed") sc.contributing_joints = observed_joint_count(D);
                    else if (mode == "fixed") sc.contributing_joints = fixed;
                    const SqueezeResult s = squeeze_detail(d, sc);
                    const double ratio = m > 0 ? s.force_N / sc.weight_N() : 0.0;
                    w.row({fmt_num(D), fmt_num(m), fmt_num(s.force_N), fmt_num(ratio), std::to_string(s.joints_used),
                           fmt_num(s.fx_N[0]), fmt_num(s.fx_N[1]), fmt_num(s.fx_N[2]), fmt_num(s.fx_N[3])});
                    rows.push_back({{"perch_diameter_mm", D}, {"payload_g", m}, {"squeeze_N", scalar(s.force_N)}});
                }
            r.outputs.push_back({stem + ".csv", w.str()});
            r.scalars["squeeze"] = rows;
            return r;
        };
    }

    if (type == "tilt" || type == "tilt_curve") {
        PerchScenario sc;
        sc.perch_radius = f.num("perch_diameter_mm", 40) / 2;
        sc.payload_g = f.num("payload_g", 100);
        sc.mu_s = f.num("mu_s", 0.5);
        sc.lever_arm = f.num("lever_arm_mm", 200);
        require_positive(sc.perch_radius, where + ".perch_diameter_mm");
        if (!(sc.payload_g >= 0)) throw InputError(where + ".payload_g: must be non-negative");
        if (!(sc.mu_s > 0 && sc.mu_s < 2)) throw InputError(where + ".mu_s: must lie in (0, 2)");
        if (!(sc.lever_arm >= 0)) throw InputError(where + ".lever_arm_mm: must be non-negative");
        if (type == "tilt") {
            f.finish();
            return [=](const ClawDesign& d) {
                AnalysisResult r;
                const TiltResult t = max_tilt(d, sc);
                CsvWriter w({"perch_diameter_mm", "payload_g", "mu_s_ratio", "lever_arm_mm", "theta_max_deg", "Mw_Nmm",
                             "Mf_Nmm", "iterations_count"});
                w.row({fmt_num(2 * sc.perch_radius), fmt_num(sc.payload_g), fmt_num(sc.mu_s), fmt_num(sc.lever_arm),
                       fmt_num(t.theta_max_deg), fmt_num(t.M_w), fmt_num(t.M_f), std::to_string(t.iterations)});
                r.outputs.push_back({stem + ".csv", w.str()});
                r.scalars["theta_max_deg"] = scalar(t.theta_max_deg);
                r.scalars["max_balanced_moment_Nmm"] = scalar(t.M_w);
                return r;
            };
        }
        const double lo = f.num("theta_min_deg", 0), hi = f.num("theta_max_deg", 45), step = f.num("theta_step_deg", 1);
        require_positive(step, where + ".theta_step_deg");
        if (hi < lo) throw InputError(where + ".theta_max_deg: must not be below theta_min_deg");
        f.finish();
        return [=](const ClawDesign& d) {
            AnalysisResult r;
            std::vector<double> grid;
            const int n = static_cast<int>(std::floor((hi - lo) / step + 1e-9));
            for (int k = 0; k <= n; ++k) grid.push_back(lo + k * step);
            const auto curve = tilt_moment_curve(d, sc, grid);
            r.outputs.push_back({stem + ".csv", tilt_curve_csv(curve)});
            r.scalars["samples_count"] = curve.size();
            return r;
        };
    }

    if (type == "sweep") {
        SweepArgs a;
        a.gamma_min = f.num("gamma_min_deg", a.gamma_min);
        a.gamma_max = f.num("gamma_max_deg", a.gamma_max);
        a.gamma_step = f.num("gamma_step_deg", a.gamma_step);
        a.eps_min = f.num("epsilon_min_deg", a.eps_min);
        a.eps_max = f.num("epsilon_max_deg", a.eps_max);
        a.eps_step = f.num("epsilon_step_deg", a.eps_step);
        a.payload_g = f.num("payload_g", a.payload_g);
        require_positive(a.gamma_step, where + ".gamma_step_deg");
        require_positive(a.eps_step, where + ".epsilon_step_deg");
        if (a.gamma_max < a.gamma_min || a.eps_max < a.eps_min) throw InputError(where + ": empty grid");
        f.finish();
        return [=](const ClawDesign& d) {
            AnalysisResult r;
            SweepGrid g{gamma_grid(a.gamma_min, a.gamma_max, a.gamma_step), a.eps_min, a.eps_max, a.eps_step};
            const SweepTable t = sweep_mechanical_advantage(d, g, a.payload_g / 1000 * kGravity);
            r.outputs.push_back({stem + ".csv", t.csv()});
            r.scalars["peak_gamma_deg"] = scalar(t.peak_gamma_deg());
            return r;
        };
    }

    if (type == "pose") {
        const double D = f.num("perch_diameter_mm", 30);
        const std::string side = f.str("side", "right");
        const double tilt = f.num("tilt_deg", 0);
        const bool forces = f.has("payload_g");
        const double m = f.num("payload_g", 0);
        require_positive(D, where + ".perch_diameter_mm");
        if (side != "left" && side != "right") throw InputError(where + ".side: expected \"left\" or \"right\"");
        f.finish();
        return [=](const ClawDesign& d) {
            AnalysisResult r;
            const PerchedPose p = solve_perched_pose(d, D / 2, side == "left" ? Side::left : Side::right, tilt);
            r.outputs.push_back({stem + ".csv", pose_csv(p)});
            r.scalars["epsilon_deg"] = scalar(p.epsilon_deg);
            if (forces) {
                const ForceSolution s = solve_forces(assemble_equilibrium(p, d, m / 1000 * kGravity));
                r.outputs.push_back({stem + "_forces.csv", forces_csv(s)});
                r.scalars["residual_N"] = scalar(s.residual_norm);
                r.scalars["rank_count"] = s.rank;
            }
            return r;
        };
    }

    if (type == "gait") {
        LegGeometry g;
        g.upper_limb = f.num("upper_limb_cm", g.upper_limb);
        g.lower_limb = f.num("lower_limb_cm", g.lower_limb);
        g.hip_separation = f.num("hip_separation_cm", g.hip_separation);
        g.foot_contact_length = f.num("foot_contact_length_cm", g.foot_contact_length);
        GaitOptions opt;
        opt.swing_height = f.num("swing_height_cm", opt.swing_height);
        opt.stance_depth = f.num("stance_depth_cm", opt.stance_depth);
        const double stride = f.num("stride_cm", 8), freq = f.num("frequency_hz", 1.1), secs = f.num("duration_s", 10);
        const int n = f.integer("samples_per_cycle", 100);
        require_positive(freq, where + ".frequency_hz");
        if (n < 2 || n % 2) throw InputError(where + ".samples_per_cycle: must be even and >= 2");
        f.finish();
        return [=](const ClawDesign&) {
            AnalysisResult r;
            const GaitPlan p = generate_gait(g, stride, freq, n, opt);
            r.outputs.push_back({stem + ".csv", p.csv()});
            r.scalars["stance_duration_s"] = p.stance_duration();
            r.scalars["travel_m"] = p.travel(secs) / 100;
            return r;
        };
    }

    if (type == "polygon") {
        LegGeometry g;
        g.hip_separation = f.num("hip_separation_cm", g.hip_separation);
        g.foot_contact_length = f.num("foot_contact_length_cm", g.foot_contact_length);
        const double lo = f.num("left_offset_cm", 0), ro = f.num("right_offset_cm", 0);
        const double cog_h = f.num("cog_height_cm", cog_height_for_margin(g.foot_contact_length / 2, 20.1));
        const double cx = f.num("cog_x_cm", 0), cy = f.num("cog_y_cm", 0);
        require_positive(cog_h, where + ".cog_height_cm");
        f.finish();
        return [=](const ClawDesign&) {
            AnalysisResult r;
            const SupportPolygon poly = support_polygon(g, lo, ro);
            const StabilityMargin m = stability_margin(poly, cog_h, {cx, cy});
            r.outputs.push_back({stem + ".csv", poly.csv()});
            r.scalars["area_cm2"] = poly.area;
            r.scalars["cog_inside"] = m.inside;
            r.scalars["margin_fore_deg"] = m.fore_deg;
            r.scalars["margin_aft_deg"] = m.aft_deg;
            return r;
        };
    }

    throw InputError(where + ".type: unknown analysis \"" + type + "\"");
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw InputError(p.string() + ": cannot open");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json parse_json(const std::string& text, const std::string& name) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') ++line, col = 1;
            else ++col;
        }
        throw InputError(name + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
    }
}

}  // namespace

ojson design_to_json(const ClawDesign& d) {
    ojson j;
    j["schema"] = kDesignSchema;
    j["h1_mm"] = d.h1;
    j["h2_mm"] = d.h2;
    j["h3_mm"] = d.h3;
    j["gamma_deg"] = d.gamma_deg;
    for (int i = 0; i < 4; ++i) j["t" + std::to_string(i + 1) + "_mm"] = d.t[i];
    for (int i = 0; i < 4; ++i) j["r" + std::to_string(i + 1) + "_mm"] = d.r[i];
    for (int i = 0; i < 4; ++i) j["l" + std::to_string(i + 1) + "_mm"] = d.l[i];
    j["gear_radius_mm"] = d.gear_radius;
    j["sole_thickness_mm"] = d.sole_thickness;
    j["hub_angles_deg"] = d.hub_angles_deg;
    j["t0_mm"] = d.t0;
    j["min_perch_diameter_mm"] = d.min_perch_diameter;
    return j;
}

ClawDesign design_from_json(const json& j, const std::string& where) {
    Fields f(j, where);
    if (f.str("schema") != kDesignSchema) throw InputError(where + ".schema: expected \"" + std::string(kDesignSchema) + "\"");
    ClawDesign d;
    d.h1 = f.num("h1_mm");
    d.h2 = f.num("h2_mm");
    d.h3 = f.num("h3_mm");
    d.gamma_deg = f.num("gamma_deg");
    for (int i = 0; i < 4; ++i) d.t[i] = f.num("t" + std::to_string(i + 1) + "_mm");
    for (int i = 0; i < 4; ++i) d.r[i] = f.num("r" + std::to_string(i + 1) + "_mm");
    for (int i = 0; i < 4; ++i) d.l[i] = f.num("l" + std::to_string(i + 1) + "_mm");
    d.gear_radius = f.num("gear_radius_mm");
    d.sole_thickness = f.num("sole_thickness_mm");
    d.hub_angles_deg = four(f, "hub_angles_deg");
    d.t0 = f.num("t0_mm", 0);
    d.min_perch_diameter = f.num("min_perch_diameter_mm");
    f.finish();
    const ValidationReport rep = validate_design(d);
    if (!rep.ok()) {
        std::string msg = where + ": invalid design:";
        for (const auto& v : rep.violations) msg += " [" + v + "]";
        throw InputError(msg);
    }
    return d;
}

std::string design_hash(const ClawDesign& d) { return hex64(fnv1a64(design_to_json(d).dump())); }

int run_scenario(const fs::path& path, std::ostream& log, const std::optional<fs::path>& out_override) {
    struct Planned {
        std::string type, name;
        Runner run;
    };
    ClawDesign design;
    std::vector<Planned> plan;
    fs::path out_dir;
    long long seed = 0;
    try {
        const json j = parse_json(slurp(path), path.string());
        Fields f(j, "scenario");
        if (f.str("schema") != kScenarioSchema)
            throw InputError("scenario.schema: expected \"" + std::string(kScenarioSchema) + "\"");
        const json& analyses = f.raw("analyses");
        if (!analyses.is_array() || analyses.empty()) throw InputError("scenario.analyses: at least one analysis required");
        const std::string dir = f.str("output_dir", "percher_out");
        if (f.has("seed")) {
            const json& s = f.raw("seed");
            if (!s.is_number_integer()) throw InputError("scenario.seed: expected an integer");
            seed = s.get<long long>();
        }
        const json design_j = f.has("design") ? f.raw("design") : json("default_sizing");
        f.finish();
        std::set<std::string> stems;
        for (std::size_t i = 0; i < analyses.size(); ++i) {
            const std::string where = "scenario.analyses[" + std::to_string(i) + "]";
            std::string name;
            if (analyses[i].is_object() && analyses[i].contains("name")) {
                if (!analyses[i]["name"].is_string()) throw InputError(where + ".name: expected a string");
                name = analyses[i]["name"].get<std::string>();
            }
            std::string type = analyses[i].is_object() && analyses[i].contains("type") && analyses[i]["type"].is_string()
                                   ? analyses[i]["type"].get<std::string>()
                                   : std::string("analysis");
            char idx[8];
            std::snprintf(idx, sizeof idx, "%02zu", i);
            const std::string stem = std::string(idx) + "_" + (name.empty() ? type : name);
            if (!stems.insert(stem).second) throw InputError(where + ".name: duplicate output name");
            Runner r = parse_analysis(analyses[i], where, stem, type);
            plan.push_back({type, name.empty() ? type : name, std::move(r)});
        }
        out_dir = out_override ? *out_override : (fs::path(dir).is_absolute() ? fs::path(dir) : path.parent_path() / dir);
        try {
            design = resolve_design(design_j);
        } catch (const SizingError& e) {
            log << "claw_design: " << e.what() << '\n';
            return kExitModel;
        }
    } catch (const InputError& e) {
        log << "input error: " << e.what() << '\n';
        return kExitInput;
    }

    ojson summary;
    summary["tool_version"] = tool_version();
    summary["design_hash"] = design_hash(design);
    summary["seed"] = seed;
    summary["design"] = design_to_json(design);
    ojson results = ojson::array();
    std::vector<Output> outputs;
    for (const auto& p : plan) {
        AnalysisResult r;
        try {
            r = p.run(design);
        } catch (const ModelError& e) {
            log << p.type << ": " << e.what() << '\n';
            return kExitModel;
        } catch (const InputError& e) {
            log << "input error: " << p.type << ": " << e.what() << '\n';
            return kExitInput;
        }
        ojson entry;
        entry["name"] = p.name;
        entry["type"] = p.type;
        ojson files = ojson::array();
        for (const auto& o : r.outputs) files.push_back(o.file);
        entry["files"] = files;
        entry["scalars"] = r.scalars;
        results.push_back(entry);
        for (auto& o : r.outputs) outputs.push_back(std::move(o));
    }
    summary["analyses"] = results;
    for (const auto& o : outputs) atomic_write(out_dir / o.file, o.content);
    atomic_write(out_dir / "summary.json", summary.dump(2) + "\n");
    log << "wrote " << outputs.size() + 1 << " files to " << out_dir.string() << '\n';
    return kExitOk;
}

int regenerate_tables(const fs::path& out_dir, std::ostream& log, std::optional<double> gamma_override) {
    SizingSpec spec = default_sizing_spec();
    if (gamma_override) spec.gamma_deg = *gamma_override;
    ClawDesign sized, formula;
    try {
        sized = size_claw(spec);
        SizingSpec fs_spec = formula_sizing_spec();
        if (gamma_override) fs_spec.gamma_deg = *gamma_override;
        formula = size_claw(fs_spec);
    } catch (const ModelError& e) {
        log << "claw_design: " << e.what() << '\n';
        return kExitModel;
    }
    CsvWriter lengths({"entry", "source", "reference_mm", "computed_mm", "abs_diff_mm", "flagged"});
    CsvWriter angles({"entry", "source", "reference_deg", "computed_deg", "abs_diff_deg", "flagged"});
    double max_default = 0;
    int flagged_default = 0, flagged_formula = 0;
    for (const auto& [src, d] : {std::pair{"default", sized}, std::pair{"formula", formula}}) {
        for (const auto& row : compare_to_reference(d)) {
            auto& w = row.unit == "mm" ? lengths : angles;
            w.row({row.entry, src, fmt_num(row.reference), fmt_num(row.computed), fmt_num(row.abs_diff),
                   row.flagged ? "true" : "false"});
            if (std::string(src) == "default") {
                if (row.unit == "mm") max_default = std::max(max_default, row.abs_diff);
                flagged_default += row.flagged;
            } else {
                flagged_formula += row.flagged;
            }
        }
    }
    ojson summary;
    summary["tool_version"] = tool_version();
    summary["design_hash"] = design_hash(sized);
    summary["max_abs_diff_mm"] = max_default;
    summary["flagged_default_count"] = flagged_default;
    summary["flagged_formula_count"] = flagged_formula;
    atomic_write(out_dir / "sized_design.json", design_to_json(sized).dump(2) + "\n");
    atomic_write(out_dir / "formula_design.json", design_to_json(formula).dump(2) + "\n");
    atomic_write(out_dir / "table_diff_lengths.csv", lengths.str());
    atomic_write(out_dir / "table_diff_angles.csv", angles.str());
    atomic_write(out_dir / "tables_summary.json", summary.dump(2) + "\n");
    log << "max |diff| " << fmt_num(max_default) << " mm; flagged rows: default " << flagged_default << ", formula "
        << flagged_formula << '\n';
    return kExitOk;
}

int run_sweep(const fs::path& out_dir, const SweepArgs& a, std::ostream& log) {
    if (!(a.gamma_step > 0) || !(a.eps_step > 0) || a.gamma_max < a.gamma_min || a.eps_max < a.eps_min) {
        log << "input error: sweep grid is empty or has a non-positive step\n";
        return kExitInput;
    }
    const ClawDesign d = size_claw(default_sizing_spec());
    SweepGrid g{gamma_grid(a.gamma_min, a.gamma_max, a.gamma_step), a.eps_min, a.eps_max, a.eps_step};
    const SweepTable t = sweep_mechanical_advantage(d, g, a.payload_g / 1000 * kGravity);
    CsvWriter s({"gamma_deg", "eps_min_deg", "eps_max_deg", "peak_f_hob_N", "peak_epsilon_deg", "singular_epsilon_deg"});
    for (const auto& r : t.summary)
        s.row({fmt_num(r.gamma_deg), fmt_num(r.eps_min_deg), fmt_num(r.eps_max_deg), fmt_num(r.peak_force_N),
               fmt_num(r.peak_eps_deg), fmt_num(r.singular_eps_deg)});
    atomic_write(out_dir / "sweep.csv", t.csv());
    atomic_write(out_dir / "sweep_summary.csv", s.str());
    log << "peak gamma " << fmt_num(t.peak_gamma_deg()) << " deg\n";
    return kExitOk;
}

}  // namespace percher
