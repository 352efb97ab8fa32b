#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ed/certificate.hpp"
#include "ed/construct.hpp"
#include "ed/dimensions.hpp"
#include "ed/errors.hpp"
#include "ed/io.hpp"
#include "ed/newton.hpp"
#include "ed/point_set.hpp"
#include "ed/rank.hpp"
#include "ed/search.hpp"
#include "ed/system.hpp"
#include "ed/tightness.hpp"
#include "ed/verify.hpp"

using nlohmann::json;

namespace {

// Tolerance precedence: --tol flag, then ED_TOL, then 1e-9.
double resolve_tol(double flag_tol) {
    if (!std::isnan(flag_tol)) return flag_tol;
    if (const char* env = std::getenv("ED_TOL")) {
        try {
            size_t pos = 0;
            const double v = std::stod(env, &pos);
            if (pos == std::strlen(env) && v > 0) return v;
        } catch (...) {
        }
        throw ed::ParseError(std::string("cannot parse ED_TOL value '") + env +
                             "'");
    }
    return 1e-9;
}

void kv(const std::string& key, const std::string& value) {
    std::cout << std::left << std::setw(24) << key << value << '\n';
}

std::string fmt(double v, int prec = 12) {
    std::ostringstream os;
    os << std::setprecision(prec) << v;
    return os.str();
}

std::string fmt_sci(double v) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(3) << v;
    return os.str();
}

std::string fmt_list(const std::vector<double>& vals, int prec = 12) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < vals.size(); ++i)
        os << (i ? ", " : "") << std::setprecision(prec) << vals[i];
    os << ']';
    return os.str();
}

// "a:b,c:d" with 1-based point indices.
std::vector<std::pair<int, int>> parse_ties(const std::string& s) {
    std::vector<std::pair<int, int>> out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw ed::ParseError("tie '" + item + "' must look like a:b");
        try {
            const int a = std::stoi(item.substr(0, colon));
            const int b = std::stoi(item.substr(colon + 1));
            if (a < 1 || b < 1)
                throw ed::ParseError("tie indices are 1-based");
            out.emplace_back(a - 1, b - 1);
        } catch (const ed::ParseError&) {
            throw;
        } catch (...) {
            throw ed::ParseError("cannot parse tie '" + item + "'");
        }
    }
    return out;
}

// "src:dst[:w],..." with 1-based point indices; ":w" copies the weight too.
std::vector<ed::StageMerge> parse_merges(const std::string& s) {
    std::vector<ed::StageMerge> out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        std::vector<std::string> parts;
        std::istringstream pin(item);
        std::string p;
        while (std::getline(pin, p, ':')) parts.push_back(p);
        if (parts.size() != 2 && parts.size() != 3)
            throw ed::ParseError("merge '" + item +
                                 "' must look like src:dst or src:dst:w");
        if (parts.size() == 3 && parts[2] != "w")
            throw ed::ParseError("merge suffix must be 'w' in '" + item + "'");
        try {
            ed::StageMerge m;
            m.src = std::stoi(parts[0]) - 1;
            m.dst = std::stoi(parts[1]) - 1;
            m.copy_weight = parts.size() == 3;
            if (m.src < 0 || m.dst < 0)
                throw ed::ParseError("merge indices are 1-based");
            out.push_back(m);
        } catch (const ed::ParseError&) {
            throw;
        } catch (...) {
            throw ed::ParseError("cannot parse merge '" + item + "'");
        }
    }
    return out;
}

json shells_json(const ed::ShellDecomposition& sh) {
    json j;
    j["count"] = sh.p();
    j["radii"] = sh.radii;
    j["contains_origin"] = sh.epsilon_S == 1;
    return j;
}

// ---------------------------------------------------------------- construct

struct ConstructOpts {
    std::string family;
    int dim = 0;
    std::vector<double> radii;
    double radius = std::nan("");
    int shells = 1;
    bool unit_weights = false;
    double scale = 1.0;
    double reweight = 1.0;
    std::string output;
};

int run_construct(const ConstructOpts& o, bool json_out) {
    ed::WeightedPointSet X;
    int strength = 0;
    json params;
    if (o.family == "simplex") {
        if (o.dim < 1) throw ed::ParseError("simplex needs --dim");
        X = ed::regular_simplex(o.dim);
        strength = 2;
        params["dim"] = o.dim;
    } else if (o.family == "two-design-radii") {
        if (o.radii.empty())
            throw ed::ParseError("two-design-radii needs --radii");
        X = ed::tight_two_design_from_radii(o.radii, o.unit_weights);
        strength = 2;
        params["radii"] = o.radii;
        params["unit_weights"] = o.unit_weights;
    } else if (o.family == "four-design-r2") {
        if (std::isnan(o.radius))
            throw ed::ParseError("four-design-r2 needs --radius");
        X = ed::tight_four_design_r2(o.radius);
        strength = 4;
        params["radius"] = o.radius;
    } else if (o.family == "five-design-r2") {
        if (std::isnan(o.radius))
            throw ed::ParseError("five-design-r2 needs --radius");
        X = ed::antipodal_five_design_r2(o.radius);
        strength = 5;
        params["radius"] = o.radius;
    } else if (o.family == "bajnok3") {
        X = ed::bajnok_three_design(o.shells, o.radii);
        strength = 3;
        params["shells"] = o.shells;
        params["radii"] = o.radii;
    } else if (o.family == "crosspoly3") {
        if (o.radii.empty()) throw ed::ParseError("crosspoly3 needs --radii");
        X = ed::cross_polytope_three_design(o.radii);
        strength = 3;
        params["radii"] = o.radii;
    } else {
        throw ed::ParseError("unknown family '" + o.family + "'");
    }
    if (o.scale != 1.0) X = ed::scale_design(X, o.scale);
    if (o.reweight != 1.0) X = ed::reweight_design(X, o.reweight);
    if (o.scale != 1.0) params["scale"] = o.scale;
    if (o.reweight != 1.0) params["reweight"] = o.reweight;

    const ed::ShellDecomposition sh = ed::decompose_shells(X);
    json meta;
    meta["family"] = o.family;
    meta["parameters"] = params;
    meta["strength"] = strength;
    ed::save_design(o.output, X, meta);

    if (json_out) {
        json j;
        j["family"] = o.family;
        j["parameters"] = params;
        j["dimension"] = X.n;
        j["points"] = X.size();
        j["strength"] = strength;
        j["shells"] = shells_json(sh);
        j["output"] = o.output;
        std::cout << j.dump(2) << '\n';
    } else {
        kv("family", o.family);
        kv("dimension", std::to_string(X.n));
        kv("points", std::to_string(X.size()));
        kv("design strength", std::to_string(strength));
        kv("shell radii", fmt_list(sh.radii, 6));
        kv("written", o.output);
    }
    return 0;
}

// ------------------------------------------------------------------- verify

struct VerifyOpts {
    std::string input;
    int strength = 0;
    bool integral = false;
};

int run_verify(const VerifyOpts& o, bool json_out, double tol) {
    const ed::DesignFile f = ed::load_design(o.input);
    const ed::StrengthReport rep =
        ed::moment_residuals(f.design, o.strength, tol);
    double integral_disc = 0;
    bool pass = rep.is_design;
    if (o.integral) {
        integral_disc = ed::verify_design_integral(f.design, o.strength);
        pass = pass && integral_disc <= tol;
    }
    if (json_out) {
        json j;
        j["strength"] = o.strength;
        j["tolerance"] = tol;
        j["equations"] = rep.residuals.size();
        j["max_residual"] = rep.max_abs_residual;
        j["is_design"] = pass;
        auto rows = json::array();
        for (const auto& r : rep.residuals)
            rows.push_back(
                {{"l", r.l}, {"j", r.j}, {"i", r.i}, {"value", r.value}});
        j["residuals"] = rows;
        if (o.integral) j["integral_discrepancy"] = integral_disc;
        std::cout << j.dump(2) << '\n';
    } else {
        kv("strength", std::to_string(o.strength));
        kv("equations", std::to_string(rep.residuals.size()));
        std::cout << '\n'
                  << std::left << std::setw(5) << "l" << std::setw(5) << "j"
                  << std::setw(5) << "i" << "residual" << '\n';
        for (const auto& r : rep.residuals)
            std::cout << std::left << std::setw(5) << r.l << std::setw(5)
                      << r.j << std::setw(5) << r.i << fmt_sci(r.value)
                      << '\n';
        std::cout << '\n';
        kv("max |residual|", fmt_sci(rep.max_abs_residual));
        if (o.integral) kv("integral discrepancy", fmt_sci(integral_disc));
        kv("tolerance", fmt_sci(tol));
        kv("verdict", pass ? "PASS" : "FAIL");
    }
    return pass ? 0 : 1;
}

// ---------------------------------------------------------------- tightness

struct TightnessOpts {
    std::string input;
    int strength = 0;
};

int run_tightness(const TightnessOpts& o, bool json_out, double tol) {
    const ed::DesignFile f = ed::load_design(o.input);
    const ed::TightnessReport rep =
        ed::classify_tightness(f.design, o.strength, tol);
    if (json_out) {
        json j;
        j["strength"] = o.strength;
        j["is_design"] = rep.strength_report.is_design;
        j["cardinality"] = rep.cardinality;
        j["bound"] = rep.bound;
        j["euclidean_bound"] = rep.euclidean_bound;
        j["weight_spread"] = rep.weight_spread;
        j["classification"] = rep.classification;
        j["reason"] = rep.reason;
        std::cout << j.dump(2) << '\n';
    } else {
        kv("strength", std::to_string(o.strength));
        kv("is design", rep.strength_report.is_design ? "yes" : "no");
        kv("cardinality", std::to_string(rep.cardinality));
        kv("bound", std::to_string(rep.bound));
        kv("euclidean bound", std::to_string(rep.euclidean_bound));
        kv("classification", rep.classification);
        if (!rep.reason.empty()) kv("reason", rep.reason);
    }
    return 0;
}

// --------------------------------------------------------------------- rank

struct RankOpts {
    std::string input;
    int strength = 0;
    bool antipodal = false;
    std::string ties;
    std::vector<std::string> free_names;
    bool search = false;
    int size = -1;
    std::string constraint = "same-shell";
    long budget = 1000000;
    int jobs = 1;
    bool serial = false;
};

int run_rank(const RankOpts& o, bool json_out) {
    const ed::DesignFile f = ed::load_design(o.input);
    ed::DesignSystem sys =
        ed::build_design_system(f.design, o.strength, o.antipodal);
    if (!o.ties.empty()) sys.norm_ties = parse_ties(o.ties);

    if (o.search) {
        ed::SearchOptions opt;
        opt.size = o.size >= 0 ? o.size
                               : sys.num_variables() - sys.num_equations();
        if (o.constraint == "same-shell")
            opt.constraint = ed::PairConstraint::SameShellNonAntipodal;
        else if (o.constraint == "antipodal")
            opt.constraint = ed::PairConstraint::AntipodalPair;
        else if (o.constraint == "none")
            opt.constraint = ed::PairConstraint::None;
        else
            throw ed::ParseError("unknown constraint '" + o.constraint + "'");
        opt.budget = o.budget;
        opt.jobs = o.jobs;
        const ed::SearchResult res = o.serial
                                         ? ed::search_free_sets_serial(sys, opt)
                                         : ed::search_free_sets(sys, opt);
        auto names = [&](const std::vector<int>& set) {
            std::vector<std::string> out;
            for (int idx : set) out.push_back(ed::variable_name(sys, idx));
            return out;
        };
        if (json_out) {
            json j;
            j["variables"] = sys.num_variables();
            j["equations"] = sys.num_equations();
            j["size"] = opt.size;
            j["constraint"] = o.constraint;
            j["candidates_enumerated"] = res.candidates_enumerated;
            j["candidates_tested"] = res.candidates_tested;
            j["budget_exhausted"] = res.budget_exhausted;
            j["hits"] = res.hits.size();
            j["seconds"] = res.seconds;
            auto sample = json::array();
            for (size_t k = 0; k < res.hits.size() && k < 10; ++k)
                sample.push_back(names(res.hits[k]));
            j["first_hits"] = sample;
            std::cout << j.dump(2) << '\n';
        } else {
            kv("variables", std::to_string(sys.num_variables()));
            kv("equations", std::to_string(sys.num_equations()));
            kv("free-set size", std::to_string(opt.size));
            kv("constraint", o.constraint);
            kv("candidates", std::to_string(res.candidates_enumerated));
            kv("rank tests", std::to_string(res.candidates_tested));
            kv("budget exhausted", res.budget_exhausted ? "yes" : "no");
            kv("hits", std::to_string(res.hits.size()));
            kv("elapsed seconds", fmt(res.seconds, 3));
            for (size_t k = 0; k < res.hits.size() && k < 10; ++k) {
                std::ostringstream os;
                for (const auto& nm : names(res.hits[k])) os << nm << ' ';
                kv(k == 0 ? "free sets" : "", os.str());
            }
        }
        return res.hits.empty() ? 1 : 0;
    }

    const Eigen::MatrixXd J = ed::jacobian(sys, ed::pack_variables(sys.base));
    const ed::RankReport full = ed::rank_analysis(J);
    json j;
    j["variables"] = sys.num_variables();
    j["equations"] = sys.num_equations();
    j["rank"] = full.rank;
    if (!json_out) {
        kv("variables", std::to_string(sys.num_variables()));
        kv("moment equations", std::to_string(sys.num_moment_equations()));
        kv("tie equations", std::to_string(sys.norm_ties.size()));
        kv("rank", std::to_string(full.rank));
    }
    if (!o.free_names.empty()) {
        std::vector<int> free_set;
        for (const auto& nm : o.free_names)
            free_set.push_back(ed::variable_index(sys, nm));
        const std::vector<int> dep =
            ed::complement_indices(sys.num_variables(), free_set);
        const ed::RankReport sub =
            ed::rank_analysis(ed::select_columns(J, dep));
        const bool full_rows = sub.rank == sys.num_equations();
        j["free_set"] = o.free_names;
        j["complement_columns"] = dep.size();
        j["complement_rank"] = sub.rank;
        j["complement_full_row_rank"] = full_rows;
        if (!json_out) {
            kv("free variables", std::to_string(free_set.size()));
            kv("complement columns", std::to_string(dep.size()));
            kv("complement rank", std::to_string(sub.rank));
            kv("complement full rows", full_rows ? "yes" : "no");
        }
    }
    if (json_out) std::cout << j.dump(2) << '\n';
    return 0;
}

// ------------------------------------------------------------------- deform

struct DeformOpts {
    std::string input;
    int strength = 0;
    bool antipodal = false;
    std::vector<std::string> free_names;
    std::vector<double> targets;
    double perturb = std::nan("");
    unsigned seed = 1;
    std::string ties;
    std::string merges;
    std::string output;
    double newton_tol = 1e-11;
    int max_iter = 50;
};

int run_deform(const DeformOpts& o, bool json_out) {
    const ed::DesignFile f = ed::load_design(o.input);
    if (!o.targets.empty() && !std::isnan(o.perturb))
        throw ed::ParseError("--targets and --perturb are mutually exclusive");
    if (!o.targets.empty() && o.targets.size() != o.free_names.size())
        throw ed::ParseError("--targets must list one value per free variable");

    ed::DeformPlan plan;
    plan.t = o.strength;
    plan.antipodal = o.antipodal;
    plan.newton.tol = o.newton_tol;
    plan.newton.max_iter = o.max_iter;
    ed::DeformStage stage;
    if (!o.ties.empty()) stage.ties = parse_ties(o.ties);
    if (!o.merges.empty()) stage.merges = parse_merges(o.merges);
    stage.free_names = o.free_names;
    stage.targets = o.targets;
    if (!std::isnan(o.perturb)) {
        stage.perturb_scale = o.perturb;
        stage.perturb_seed = o.seed;
    }
    plan.stages.push_back(stage);

    const ed::ShellDecomposition before = ed::decompose_shells(f.design);
    const ed::PlanResult res = ed::run_deform_plan(f.design, plan);
    const ed::DeformationResult& last = res.stage_results.back();

    json j;
    j["converged"] = res.converged;
    j["iterations"] = res.iterations;
    j["residual"] = last.residual_norm;
    j["shells_before"] = shells_json(before);
    if (res.converged) {
        const ed::ShellDecomposition after = ed::decompose_shells(res.full);
        j["shells_after"] = shells_json(after);
        json meta;
        meta["strength"] = o.strength;
        meta["deformed_from"] = o.input;
        if (!o.output.empty()) ed::save_design(o.output, res.full, meta);
        if (!o.output.empty()) j["output"] = o.output;
        if (!json_out) {
            kv("converged", "yes");
            kv("iterations", std::to_string(res.iterations));
            kv("residual", fmt_sci(last.residual_norm));
            kv("shells before", fmt_list(before.radii, 6));
            kv("shells after", fmt_list(after.radii, 6));
            if (!o.output.empty()) kv("written", o.output);
        }
    } else {
        j["message"] = res.message;
        if (!json_out) {
            kv("converged", "no");
            kv("message", res.message);
            kv("residual", fmt_sci(last.residual_norm));
        }
    }
    if (json_out) std::cout << j.dump(2) << '\n';
    return res.converged ? 0 : 1;
}

// --------------------------------------------------------------------- dims

struct DimsOpts {
    int dim = 0;
    int degree = 0;
    int shells = -1;
    bool origin = false;
    bool star = false;
};

int run_dims(const DimsOpts& o, bool json_out) {
    const ed::Integer full = ed::pol_dim_full_space(o.dim, o.degree);
    const ed::Integer star = ed::pol_dim_star_space(o.dim, o.degree);
    json j;
    j["dimension"] = o.dim;
    j["degree"] = o.degree;
    j["polynomial_space"] = full.get_str();
    j["even_degree_space"] = star.get_str();
    if (!json_out) {
        kv("dimension", std::to_string(o.dim));
        kv("degree", std::to_string(o.degree));
        kv("polynomial space", full.get_str());
        kv("even-degree space", star.get_str());
    }
    if (o.shells >= 1) {
        const ed::Integer bound = ed::design_dimension_bound(
            o.dim, o.degree, o.shells, o.origin ? 1 : 0,
            o.star ? ed::Parity::EvenOnly : ed::Parity::Full);
        j["shells"] = o.shells;
        j["contains_origin"] = o.origin;
        j["even_only"] = o.star;
        j["restricted_dimension"] = bound.get_str();
        if (!json_out) {
            kv("shells", std::to_string(o.shells) +
                              (o.origin ? " (origin included)" : ""));
            kv("restricted dimension", bound.get_str());
        }
    }
    if (json_out) std::cout << j.dump(2) << '\n';
    return 0;
}

// -------------------------------------------------------------------- sweep

struct SweepOpts {
    std::string family;
    int count = 0;
    double min = 0.5;
    double max = 0.9;
    int dim = 3;
    int jobs = 1;
    std::string output_dir;
};

struct SweepItem {
    std::string file;
    json params;
    int shells = 0;
    double residual = 0;
    bool ok = false;
    std::string note;
};

SweepItem sweep_one(const SweepOpts& o, int k, double tol) {
    SweepItem item;
    std::ostringstream name;
    name << o.family << '_' << std::setw(3) << std::setfill('0') << k
         << ".json";
    item.file = (std::filesystem::path(o.output_dir) / name.str()).string();
    try {
        ed::WeightedPointSet X;
        int strength = 0;
        if (o.family == "two-design-radii") {
            const int n = o.dim;
            const int target = 1 + k % (n + 1);
            std::vector<double> R(n, static_cast<double>(n));
            const double eps = 0.2 + 0.01 * k;
            if (target == 2) {
                for (double& v : R) v = n + eps;
            } else if (target >= 3) {
                for (int i = 0; i + 2 < target; ++i) R[i] = n + eps * (i + 1);
            }
            X = ed::tight_two_design_from_radii(R);
            X = ed::scale_design(X, 1.0 + 0.03 * k);
            strength = 2;
            item.params["radii"] = R;
            item.params["target_shells"] = target;
        } else if (o.family == "four-design-r2" ||
                   o.family == "five-design-r2") {
            const double r =
                o.count == 1
                    ? o.min
                    : o.min + k * (o.max - o.min) / (o.count - 1);
            X = o.family == "four-design-r2" ? ed::tight_four_design_r2(r)
                                             : ed::antipodal_five_design_r2(r);
            strength = o.family == "four-design-r2" ? 4 : 5;
            item.params["radius"] = r;
        } else {
            throw ed::ParseError("unknown sweep family '" + o.family + "'");
        }
        const ed::StrengthReport rep = ed::moment_residuals(X, strength, tol);
        const ed::ShellDecomposition sh = ed::decompose_shells(X);
        item.shells = sh.p();
        item.residual = rep.max_abs_residual;
        item.ok = rep.is_design;
        if (item.params.contains("target_shells") &&
            item.shells != item.params["target_shells"].get<int>()) {
            item.ok = false;
            item.note = "unexpected shell count";
        }
        json meta;
        meta["family"] = o.family;
        meta["parameters"] = item.params;
        meta["strength"] = strength;
        meta["shells"] = item.shells;
        meta["max_residual"] = item.residual;
        ed::save_design(item.file, X, meta);
    } catch (const ed::InfeasibleError& e) {
        item.ok = false;
        item.note = std::string("infeasible: ") + e.what();
    }
    return item;
}

int run_sweep(const SweepOpts& o, bool json_out, double tol) {
    if (o.count < 0) throw ed::ParseError("--count must be nonnegative");
    std::filesystem::create_directories(o.output_dir);
    std::vector<SweepItem> items(o.count);
#ifdef _OPENMP
#pragma omp parallel for num_threads(std::max(1, o.jobs)) schedule(dynamic) \
    if (o.jobs != 1)
#endif
    for (int k = 0; k < o.count; ++k) items[k] = sweep_one(o, k, tol);

    bool all_ok = true;
    for (const auto& it : items) all_ok = all_ok && it.ok;
    if (json_out) {
        json j;
        j["family"] = o.family;
        j["count"] = o.count;
        auto rows = json::array();
        for (const auto& it : items)
            rows.push_back({{"file", it.file},
                            {"parameters", it.params},
                            {"shells", it.shells},
                            {"max_residual", it.residual},
                            {"ok", it.ok},
                            {"note", it.note}});
        j["items"] = rows;
        j["all_ok"] = all_ok;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << std::left << std::setw(34) << "file" << std::setw(8)
                  << "shells" << std::setw(13) << "residual" << "status"
                  << '\n';
        for (const auto& it : items)
            std::cout << std::left << std::setw(34)
                      << std::filesystem::path(it.file).filename().string()
                      << std::setw(8) << it.shells << std::setw(13)
                      << fmt_sci(it.residual)
                      << (it.ok ? "ok" : "FAIL " + it.note) << '\n';
        kv("designs written", std::to_string(o.count));
        kv("all ok", all_ok ? "yes" : "no");
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted Euclidean design toolkit: construction, "
                 "verification, tightness classification, Jacobian rank "
                 "analysis, and numerical deformation"};
    app.require_subcommand(1);
    bool json_out = false;
    double tol_flag = std::nan("");
    app.add_flag("--json", json_out, "machine-readable output");
    app.add_option("--tol", tol_flag,
                   "verification tolerance (overrides ED_TOL; default 1e-9)");

    ConstructOpts co;
    auto* construct = app.add_subcommand("construct", "build a named family");
    construct->fallthrough();
    construct
        ->add_option("--family", co.family,
                     "simplex | two-design-radii | four-design-r2 | "
                     "five-design-r2 | bajnok3 | crosspoly3")
        ->required();
    construct->add_option("--dim", co.dim, "ambient dimension (simplex)");
    construct->add_option("--radii", co.radii, "comma-separated list")
        ->delimiter(',');
    construct->add_option("--radius", co.radius, "second-shell radius");
    construct->add_option("--shells", co.shells, "shell count (bajnok3)");
    construct->add_flag("--unit-weights", co.unit_weights,
                        "emit weight 1 everywhere (two-design-radii)");
    construct->add_option("--scale", co.scale, "scale all points");
    construct->add_option("--reweight", co.reweight, "scale all weights");
    construct->add_option("--output", co.output, "design file to write")
        ->required();

    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "check design strength");
    verify->fallthrough();
    verify->add_option("--input", vo.input, "design file")->required();
    verify->add_option("--strength", vo.strength, "strength t")->required();
    verify->add_flag("--integral", vo.integral,
                     "also compare weighted sums against shell-by-shell "
                     "sphere integrals");

    TightnessOpts to;
    auto* tightness =
        app.add_subcommand("tightness", "classify against the natural bounds");
    tightness->fallthrough();
    tightness->add_option("--input", to.input, "design file")->required();
    tightness->add_option("--strength", to.strength, "strength t")->required();

    RankOpts ro;
    auto* rank = app.add_subcommand(
        "rank", "Jacobian rank analysis and free-set search");
    rank->fallthrough();
    rank->add_option("--input", ro.input, "design file")->required();
    rank->add_option("--strength", ro.strength, "strength t")->required();
    rank->add_flag("--antipodal", ro.antipodal,
                   "use one representative per antipodal pair");
    rank->add_option("--ties", ro.ties, "norm ties a:b,c:d (1-based)");
    rank->add_option("--free", ro.free_names,
                     "free variables, e.g. w1,x2.1 (1-based)")
        ->delimiter(',');
    rank->add_flag("--search", ro.search, "enumerate valid free sets");
    rank->add_option("--size", ro.size,
                     "free-set size (default: variables - equations)");
    rank->add_option("--constraint", ro.constraint,
                     "same-shell | antipodal | none");
    rank->add_option("--budget", ro.budget, "maximum rank tests");
    rank->add_option("--jobs", ro.jobs, "parallel workers (0 = all cores)");
    rank->add_flag("--serial", ro.serial, "use the serial reference search");

    DeformOpts dfo;
    auto* deform =
        app.add_subcommand("deform", "pin free variables and re-solve");
    deform->fallthrough();
    deform->add_option("--input", dfo.input, "design file")->required();
    deform->add_option("--strength", dfo.strength, "strength t")->required();
    deform->add_flag("--antipodal", dfo.antipodal,
                     "use one representative per antipodal pair");
    deform->add_option("--free", dfo.free_names, "free variables")
        ->delimiter(',');
    deform->add_option("--targets", dfo.targets,
                       "absolute target per free variable")
        ->delimiter(',');
    deform->add_option("--perturb", dfo.perturb,
                       "pin frees at current value plus this step along a "
                       "seeded unit direction");
    deform->add_option("--seed", dfo.seed, "perturbation seed");
    deform->add_option("--ties", dfo.ties, "norm ties a:b,c:d (1-based)");
    deform->add_option("--merge", dfo.merges,
                       "radius merges src:dst[:w],... applied first");
    deform->add_option("--output", dfo.output, "write the deformed design");
    deform->add_option("--newton-tol", dfo.newton_tol,
                       "residual convergence threshold");
    deform->add_option("--max-iter", dfo.max_iter, "iteration limit");

    DimsOpts dio;
    auto* dims =
        app.add_subcommand("dims", "polynomial space dimensions on shells");
    dims->fallthrough();
    dims->add_option("--dim", dio.dim, "ambient dimension")->required();
    dims->add_option("--degree", dio.degree, "polynomial degree")->required();
    dims->add_option("--shells", dio.shells, "number of shells");
    dims->add_flag("--origin", dio.origin, "one shell is the origin");
    dims->add_flag("--star", dio.star, "restrict to degrees of equal parity");

    SweepOpts so;
    auto* sweep =
        app.add_subcommand("sweep", "construct and verify a parameter grid");
    sweep->fallthrough();
    sweep
        ->add_option("--family", so.family,
                     "two-design-radii | four-design-r2 | five-design-r2")
        ->required();
    sweep->add_option("--count", so.count, "grid size")->required();
    sweep->add_option("--min", so.min, "grid minimum (radius families)");
    sweep->add_option("--max", so.max, "grid maximum (radius families)");
    sweep->add_option("--dim", so.dim, "ambient dimension (two-design-radii)");
    sweep->add_option("--jobs", so.jobs, "parallel workers");
    sweep->add_option("--output-dir", so.output_dir, "directory for designs")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // prints help, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const double tol = resolve_tol(tol_flag);
        if (*construct) return run_construct(co, json_out);
        if (*verify) return run_verify(vo, json_out, tol);
        if (*tightness) return run_tightness(to, json_out, tol);
        if (*rank) return run_rank(ro, json_out);
        if (*deform) return run_deform(dfo, json_out);
        if (*dims) return run_dims(dio, json_out);
        if (*sweep) return run_sweep(so, json_out, tol);
    } catch (const ed::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ed::InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
