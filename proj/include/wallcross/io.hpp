#pragma once

#include <wallcross/localization.hpp>
#include <wallcross/torus_model.hpp>

#include <string>
#include <string_view>

namespace wallcross {

// Model files: {"rank": d, "fixed_points": [{"id", "moment": ["p/q" | int, ...],
// "weights": [[int, ...], ...]}, ...], "roots"?, "weyl_order"?,
// "global_stabilizer_order"?}. Violations throw InvalidModel.
TorusModel parse_model_json(std::string_view text);
std::string model_to_json(const TorusModel &model);

// Plan files: [{"coefficient": int, "fixed_point": id, "flag": [[int, ...], ...]}, ...].
// Malformed input throws InvalidPlan; a non-unimodular flag throws NotUnimodular.
Plan parse_plan_json(std::string_view text);
std::string plan_to_json(const Plan &plan);

// Throws FileError when the file cannot be read.
std::string read_file(const std::string &path);

} // namespace wallcross
