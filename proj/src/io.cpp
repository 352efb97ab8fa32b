#include "ed/io.hpp"

#include <fstream>

#include "ed/errors.hpp"

namespace ed {

nlohmann::json design_to_json(const WeightedPointSet& X,
                              const nlohmann::json& metadata) {
    nlohmann::json j;
    j["dimension"] = X.n;
    auto points = nlohmann::json::array();
    for (const auto& x : X.points) {
        auto row = nlohmann::json::array();
        for (int c = 0; c < X.n; ++c) row.push_back(x[c]);
        points.push_back(std::move(row));
    }
    j["points"] = std::move(points);
    j["weights"] = X.weights;
    j["metadata"] = metadata.is_null() ? nlohmann::json::object() : metadata;
    return j;
}

DesignFile design_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("design file must be a JSON object");
    for (const char* key : {"dimension", "points", "weights"})
        if (!j.contains(key))
            throw ParseError(std::string("design file is missing '") + key + "'");
    if (!j["dimension"].is_number_integer() || j["dimension"].get<int>() < 1)
        throw ParseError("'dimension' must be a positive integer");
    if (!j["points"].is_array() || !j["weights"].is_array())
        throw ParseError("'points' and 'weights' must be arrays");

    DesignFile f;
    f.design.n = j["dimension"].get<int>();
    for (const auto& row : j["points"]) {
        if (!row.is_array() || static_cast<int>(row.size()) != f.design.n)
            throw ParseError("each point must list exactly 'dimension' numbers");
        Eigen::VectorXd x(f.design.n);
        for (int c = 0; c < f.design.n; ++c) {
            if (!row[c].is_number())
                throw ParseError("point coordinates must be numbers");
            x[c] = row[c].get<double>();
        }
        f.design.points.push_back(std::move(x));
    }
    for (const auto& w : j["weights"]) {
        if (!w.is_number()) throw ParseError("weights must be numbers");
        f.design.weights.push_back(w.get<double>());
    }
    if (f.design.points.size() != f.design.weights.size())
        throw ParseError("'points' and 'weights' must have equal length");
    if (f.design.points.empty()) throw ParseError("design has no points");
    for (double w : f.design.weights)
        if (!(w > 0)) throw ParseError("weights must be positive");
    if (j.contains("metadata")) {
        if (!j["metadata"].is_object())
            throw ParseError("'metadata' must be an object");
        f.metadata = j["metadata"];
    }
    return f;
}

DesignFile load_design(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return design_from_json(j);
}

void save_design(const std::string& path, const WeightedPointSet& X,
                 const nlohmann::json& metadata) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << design_to_json(X, metadata).dump(2) << '\n';
}

} // namespace ed
