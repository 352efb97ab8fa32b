#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ed/point_set.hpp"

namespace ed {

/// On-disk content: the weighted point set plus free-form metadata carried
/// through load/save unchanged.
struct DesignFile {
    WeightedPointSet design;
    nlohmann::json metadata = nlohmann::json::object();
};

nlohmann::json design_to_json(const WeightedPointSet& X,
                              const nlohmann::json& metadata =
                                  nlohmann::json::object());
DesignFile design_from_json(const nlohmann::json& j);

/// Throws ParseError for missing files, malformed JSON, or structurally
/// invalid content (dimension/point/weight mismatches, nonpositive weights).
DesignFile load_design(const std::string& path);
void save_design(const std::string& path, const WeightedPointSet& X,
                 const nlohmann::json& metadata = nlohmann::json::object());

} // namespace ed
