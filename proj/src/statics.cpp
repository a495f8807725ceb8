#include "percher/statics.hpp"

#include <cmath>
#include <sstream>

#include "percher/errors.hpp"
#include "percher/io.hpp"

namespace percher {

namespace {

struct Term {
    std::string key;
    double sign;
    Vec2 point;
};

class Builder {
public:
    EquilibriumSystem sys;

    Builder() {
        sys.A = Eigen::MatrixXd::Zero(kEquations, kUnknowns);
        sys.b = Eigen::VectorXd::Zero(kEquations);
        int col = 0;
        auto add = [&](const std::string& k) {
            sys.unknown_index[k] = col;
            col += 2;
        };
        for (const char* k : {"H0", "H1", "H2"}) add(k);
        add("L0.h"), add("L0.r1"), add("L0.l1");
        add("L1.l1"), add("L1.r2"), add("L1.l2");
        add("L2.l2"), add("L2.r3"), add("L2.l3");
        add("L3.l3"), add("L3.r4"), add("L3.l4");
        for (int i = 0; i < 5; ++i) add("T" + std::to_string(i));
    }

    // Force and moment balance of one rigid link. Moments about the first term's point.
    void link(const std::string& label, const std::vector<Term>& terms, const Vec2& ext = {0, 0},
              const Vec2& ext_point = {0, 0}) {
        const Vec2 p0 = terms.front().point;
        for (int c = 0; c < 2; ++c) {
            for (const auto& t : terms) sys.A(row_, col(t.key) + c) += t.sign;
            sys.b(row_) = -ext[c];
            label_row(label + (c ? ".Fy" : ".Fx"));
        }
        for (const auto& t : terms) {
            const Vec2 r = t.point - p0;
            sys.A(row_, col(t.key)) += -t.sign * r.y();
            sys.A(row_, col(t.key) + 1) += t.sign * r.x();
        }
        sys.b(row_) = -cross(ext_point - p0, ext);
        label_row(label + ".M");
    }

    void pin(const std::string& joint, const std::vector<std::string>& keys) {
        for (int c = 0; c < 2; ++c) {
            for (const auto& k : keys) sys.A(row_, col(k) + c) += 1.0;
            label_row(joint + (c ? ".Fy" : ".Fx"));
        }
    }

    // Row: sum_k w_k . F_k = rhs
    void projected(const std::string& label, const std::vector<std::string>& keys, const Vec2& w, double rhs) {
        for (const auto& k : keys) {
            sys.A(row_, col(k)) += w.x();
            sys.A(row_, col(k) + 1) += w.y();
        }
        sys.b(row_) = rhs;
        label_row(label);
    }

    int rows() const { return row_; }

private:
    int row_ = 0;
    int col(const std::string& k) const { return sys.unknown_index.at(k); }
    void label_row(const std::string& s) {
        sys.row_labels.push_back(s);
        ++row_;
    }
};

}  // namespace

EquilibriumSystem assemble_equilibrium(const PerchedPose& p, const ClawDesign& design, double payload_mg) {
    (void)design;
    Builder bld;
    const Vec2 load{0, -payload_mg / 2.0};
    const auto& T = p.T;
    const auto& L = p.L;
    const auto& H = p.H;

    // Hoberman: payload enters h1 at the gear joint H0.
    bld.link("h1", {{"H0", 1, H[0]}, {"H1", 1, H[1]}}, load, H[0]);
    bld.link("h2h3", {{"H2", 1, H[2]}, {"H1", -1, H[1]}, {"L0.h", 1, H[3]}});

    for (int i = 0; i < 4; ++i) {
        const std::string j = "L" + std::to_string(i), r = "r" + std::to_string(i + 1);
        bld.link(r, {{"T" + std::to_string(i), -1, T[i]}, {j + "." + r, 1, L[i]}});
    }
    for (int i = 0; i < 3; ++i) {
        const std::string l = "l" + std::to_string(i + 1);
        bld.link(l, {{"L" + std::to_string(i) + "." + l, 1, L[i]}, {"L" + std::to_string(i + 1) + "." + l, 1, L[i + 1]}});
    }
    bld.link("l4", {{"T4", -1, T[4]}, {"L3.l4", 1, L[3]}});

    // Toe pad seated on the perch. The perch reaction is unknown, so the pad rows
    // close the system instead: the mirror digit and the gear train only pass
    // forces across the symmetry axis, and the pad carries the weight into the perch.
    const Vec2 up = p.axis();
    bld.projected("pad.H0_axis", {"H0"}, up, 0.0);
    bld.projected("pad.H2_axis", {"H2"}, up, 0.0);
    bld.projected("pad.weight", {"T0", "T1", "T2", "T3", "T4"}, up, load.dot(up));

    bld.pin("L0", {"L0.h", "L0.r1", "L0.l1"});
    bld.pin("L1", {"L1.l1", "L1.r2", "L1.l2"});
    bld.pin("L2", {"L2.l2", "L2.r3", "L2.l3"});
    bld.pin("L3", {"L3.l3", "L3.r4", "L3.l4"});

    EquilibriumSystem sys = std::move(bld.sys);
    sys.payload_mg = payload_mg;
    sys.pose = p;
    return sys;
}

bool ForceSolution::two_force_ok() const {
    for (const auto& c : two_force)
        if (!c.pass) return false;
    return true;
}

ForceSolution solve_forces(const EquilibriumSystem& sys) {
    // Row equilibration, then a rank-revealing complete orthogonal decomposition
    // for the minimum-norm least-squares solution.
    Eigen::VectorXd scale(sys.A.rows());
    for (int i = 0; i < sys.A.rows(); ++i) {
        const double n = sys.A.row(i).norm();
        scale(i) = n > 0 ? 1.0 / n : 1.0;
    }
    const Eigen::MatrixXd As = scale.asDiagonal() * sys.A;
    const Eigen::VectorXd bs = scale.asDiagonal() * sys.b;
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(As);
    cod.setThreshold(1e-10);

    ForceSolution sol;
    sol.rank = static_cast<int>(cod.rank());
    if (sol.rank < kUnknowns)
        throw DegeneratePose("equilibrium matrix rank " + std::to_string(sol.rank) + " < " + std::to_string(kUnknowns));
    sol.x = cod.solve(bs);
    sol.residual_norm = (sys.A * sol.x - sys.b).norm();
    sol.b_norm = sys.b.norm();
    sol.payload = sys.payload_mg;
    for (const auto& [k, c] : sys.unknown_index) sol.joint_forces[k] = Vec2(sol.x(c), sol.x(c + 1));
    for (int i = 0; i < 5; ++i) sol.toe[i] = sol.joint_forces.at("T" + std::to_string(i));

    // Two-force verification for ribs and outer-links.
    const auto& p = sys.pose;
    auto check = [&](const std::string& name, Vec2 Fa, Vec2 Pa, Vec2 Fb, Vec2 Pb) {
        const double mag = std::max({Fa.norm(), Fb.norm(), 1e-300});
        const Vec2 axis = (Pb - Pa).normalized();
        const double balance = (Fa + Fb).norm() / mag;
        const double colinear = std::abs(cross(axis, Fa)) / mag;
        const double err = std::max(balance, colinear);
        sol.two_force.push_back({name, err, (Fa.norm() == 0 && Fb.norm() == 0) || err < kTwoForceTolerance});
    };
    for (int i = 0; i < 4; ++i) {
        const std::string r = "r" + std::to_string(i + 1);
        check(r, -sol.toe[i], p.T[i], sol.at("L" + std::to_string(i) + "." + r), p.L[i]);
    }
    for (int i = 0; i < 3; ++i) {
        const std::string l = "l" + std::to_string(i + 1);
        check(l, sol.at("L" + std::to_string(i) + "." + l), p.L[i], sol.at("L" + std::to_string(i + 1) + "." + l), p.L[i + 1]);
    }
    check("l4", sol.at("L3.l4"), p.L[3], -sol.toe[4], p.T[4]);
    return sol;
}

std::string forces_csv(const ForceSolution& sol) {
    CsvWriter w({"joint", "link", "Fx_N", "Fy_N"});
    auto put = [&](const std::string& joint, const std::string& link, const Vec2& f) {
        w.row({joint, link, fmt_num(f.x()), fmt_num(f.y())});
    };
    put("H0", "h1", sol.at("H0"));
    put("H1", "h1", sol.at("H1"));
    put("H1", "h2h3", -sol.at("H1"));
    put("H2", "h2h3", sol.at("H2"));
    for (int j = 0; j < 4; ++j) {
        const std::string J = "L" + std::to_string(j);
        for (const auto& [k, f] : sol.joint_forces)
            if (k.rfind(J + ".", 0) == 0) {
                const std::string link = k.substr(3);
                put(j == 0 && link == "h" ? "H3" : J, link == "h" ? "h2h3" : link, f);
            }
    }
    for (int i = 0; i < 5; ++i) put("T" + std::to_string(i), "toe_pad", sol.toe[i]);
    return w.str();
}

std::string system_dump(const EquilibriumSystem& sys) {
    std::ostringstream os;
    int nnz = 0;
    for (int i = 0; i < sys.A.rows(); ++i)
        for (int j = 0; j < sys.A.cols(); ++j)
            if (sys.A(i, j) != 0) ++nnz;
    os << "%%MatrixMarket matrix coordinate real general\n";
    os << sys.A.rows() << ' ' << sys.A.cols() << ' ' << nnz << '\n';
    for (int i = 0; i < sys.A.rows(); ++i)
        for (int j = 0; j < sys.A.cols(); ++j)
            if (sys.A(i, j) != 0) os << i + 1 << ' ' << j + 1 << ' ' << fmt_num(sys.A(i, j)) << '\n';
    os << "% rhs\n";
    for (int i = 0; i < sys.b.rows(); ++i) os << fmt_num(sys.b(i)) << '\n';
    return os.str();
}

}  // namespace percher
