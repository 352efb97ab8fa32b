#include "ed/system.hpp"

#include <cmath>
#include <sstream>

#include "ed/errors.hpp"
#include "ed/harmonic.hpp"

namespace ed {

DesignSystem build_design_system(const WeightedPointSet& X, int t,
                                 bool antipodal_mode) {
    validate(X);
    if (t < 1) throw Error("strength must be at least 1");
    DesignSystem sys;
    sys.n = X.n;
    sys.t = t;
    sys.antipodal = antipodal_mode;
    if (antipodal_mode) {
        sys.base = antipodal_half(X); // throws if X is not antipodal
        sys.multiplier = 2.0;
    } else {
        sys.base = X;
    }
    sys.reps = sys.base.size();

    const int l0 = antipodal_mode ? 2 : 1;
    const int step = antipodal_mode ? 2 : 1;
    for (int l = l0; l <= t; l += step) {
        const HarmonicBasis& hb = harmonic_basis_ref(X.n, l);
        const int jmax = (t - l) / 2;
        for (int j = 0; j <= jmax; ++j) {
            for (int i = 0; i < hb.size(); ++i) {
                SystemEquation eq;
                eq.l = l;
                eq.j = j;
                eq.i = i;
                eq.phi = compile(hb.exact[i]);
                eq.dphi.reserve(X.n);
                for (int c = 0; c < X.n; ++c)
                    eq.dphi.push_back(compile(hb.exact[i].derivative(c)));
                sys.equations.push_back(std::move(eq));
            }
        }
    }
    return sys;
}

Eigen::VectorXd pack_variables(const WeightedPointSet& X) {
    const int N = X.size();
    Eigen::VectorXd xi(N * (X.n + 1));
    for (int u = 0; u < N; ++u) xi.segment(u * X.n, X.n) = X.points[u];
    for (int u = 0; u < N; ++u) xi[N * X.n + u] = X.weights[u];
    return xi;
}

WeightedPointSet unpack_variables(const DesignSystem& sys,
                                  const Eigen::VectorXd& xi) {
    if (xi.size() != sys.num_variables())
        throw Error("variable vector has wrong length");
    WeightedPointSet X;
    X.n = sys.n;
    for (int u = 0; u < sys.reps; ++u) {
        X.points.push_back(xi.segment(u * sys.n, sys.n));
        X.weights.push_back(xi[sys.weight_index(u)]);
    }
    return X;
}

WeightedPointSet expand_antipodal(const DesignSystem& sys,
                                  const WeightedPointSet& reps) {
    if (!sys.antipodal) return reps;
    WeightedPointSet X;
    X.n = reps.n;
    for (int u = 0; u < reps.size(); ++u) {
        X.points.push_back(reps.points[u]);
        X.weights.push_back(reps.weights[u]);
        if (reps.points[u].norm() > 1e-14) {
            X.points.push_back(-reps.points[u]);
            X.weights.push_back(reps.weights[u]);
        }
    }
    return X;
}

Eigen::VectorXd evaluate_system(const DesignSystem& sys,
                                const Eigen::VectorXd& xi) {
    if (xi.size() != sys.num_variables())
        throw Error("variable vector has wrong length");
    Eigen::VectorXd F(sys.num_equations());
    std::vector<double> s(sys.reps);
    for (int u = 0; u < sys.reps; ++u)
        s[u] = xi.segment(u * sys.n, sys.n).squaredNorm();
    for (int k = 0; k < sys.num_moment_equations(); ++k) {
        const SystemEquation& eq = sys.equations[k];
        double acc = 0;
        for (int u = 0; u < sys.reps; ++u) {
            const double* x = xi.data() + u * sys.n;
            acc += xi[sys.weight_index(u)] * std::pow(s[u], eq.j) *
                   eq.phi.eval(x);
        }
        F[k] = sys.multiplier * acc;
    }
    for (int r = 0; r < static_cast<int>(sys.norm_ties.size()); ++r) {
        auto [a, b] = sys.norm_ties[r];
        F[sys.num_moment_equations() + r] = s[a] - s[b];
    }
    return F;
}

Eigen::MatrixXd jacobian(const DesignSystem& sys, const Eigen::VectorXd& xi) {
    if (xi.size() != sys.num_variables())
        throw Error("variable vector has wrong length");
    Eigen::MatrixXd J =
        Eigen::MatrixXd::Zero(sys.num_equations(), sys.num_variables());
    std::vector<double> s(sys.reps);
    for (int u = 0; u < sys.reps; ++u)
        s[u] = xi.segment(u * sys.n, sys.n).squaredNorm();
    for (int k = 0; k < sys.num_moment_equations(); ++k) {
        const SystemEquation& eq = sys.equations[k];
        for (int u = 0; u < sys.reps; ++u) {
            const double* x = xi.data() + u * sys.n;
            const double w = xi[sys.weight_index(u)];
            const double sj = std::pow(s[u], eq.j);
            const double phival = eq.phi.eval(x);
            const double radial =
                eq.j > 0 ? 2.0 * eq.j * std::pow(s[u], eq.j - 1) * phival : 0.0;
            for (int c = 0; c < sys.n; ++c)
                J(k, sys.coord_index(u, c)) =
                    sys.multiplier * w * (radial * x[c] + sj * eq.dphi[c].eval(x));
            J(k, sys.weight_index(u)) = sys.multiplier * sj * phival;
        }
    }
    for (int r = 0; r < static_cast<int>(sys.norm_ties.size()); ++r) {
        auto [a, b] = sys.norm_ties[r];
        const int row = sys.num_moment_equations() + r;
        for (int c = 0; c < sys.n; ++c) {
            J(row, sys.coord_index(a, c)) += 2.0 * xi[sys.coord_index(a, c)];
            J(row, sys.coord_index(b, c)) -= 2.0 * xi[sys.coord_index(b, c)];
        }
    }
    return J;
}

int variable_index(const DesignSystem& sys, const std::string& name) {
    auto fail = [&]() -> int {
        throw ParseError("cannot parse variable name '" + name +
                         "' (expected w<point> or x<point>.<coord>, 1-based)");
    };
    if (name.size() < 2) fail();
    if (name[0] == 'w') {
        size_t pos = 0;
        int p = 0;
        try {
            p = std::stoi(name.substr(1), &pos);
        } catch (...) {
            fail();
        }
        if (pos + 1 != name.size()) fail();
        if (p < 1 || p > sys.reps)
            throw ParseError("point index out of range in '" + name + "'");
        return sys.weight_index(p - 1);
    }
    if (name[0] == 'x') {
        auto dot = name.find('.');
        if (dot == std::string::npos) fail();
        int p = 0, c = 0;
        size_t pos1 = 0, pos2 = 0;
        try {
            p = std::stoi(name.substr(1, dot - 1), &pos1);
            c = std::stoi(name.substr(dot + 1), &pos2);
        } catch (...) {
            fail();
        }
        if (pos1 != dot - 1 || dot + 1 + pos2 != name.size()) fail();
        if (p < 1 || p > sys.reps)
            throw ParseError("point index out of range in '" + name + "'");
        if (c < 1 || c > sys.n)
            throw ParseError("coordinate index out of range in '" + name + "'");
        return sys.coord_index(p - 1, c - 1);
    }
    return fail();
}

std::string variable_name(const DesignSystem& sys, int index) {
    if (index < 0 || index >= sys.num_variables())
        throw Error("variable index out of range");
    std::ostringstream os;
    if (index >= sys.reps * sys.n) {
        os << 'w' << (index - sys.reps * sys.n + 1);
    } else {
        os << 'x' << (index / sys.n + 1) << '.' << (index % sys.n + 1);
    }
    return os.str();
}

} // namespace ed
