#ifndef CY3_MODEL_IO_HPP
#define CY3_MODEL_IO_HPP

#include "cy3/models.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace cy3 {

/// Model-file schema. Integers are decimal strings; keys are emitted sorted.
///
///   name            string
///   basis           [label, ...]
///   triple_products [{"t": [l1, l2, l3], "v": "int"}, ...]   absent triples are zero
///   c2              {label: "int"}
///   surfaces        {label: {"k2": "int", "e": "int"}}
///   params          [name, ...]
///   templates       {template: {label: "polynomial"}}
///   extra_classes   {label: {"d3": "int", "dc2": "int"}}
nlohmann::json model_to_json(const ThreefoldModel& model);

/// Throws LoadError naming the offending field, ValidationError when the
/// data loads but violates the surface rule.
ThreefoldModel model_from_json(const nlohmann::json& doc);

/// Canonical text of model_to_json (two-space indent, trailing newline).
std::string export_model(const ThreefoldModel& model);

/// "builtin:x_phi", "builtin:x_t", or a path to a model file.
ThreefoldModel load_model(std::string_view reference);

}  // namespace cy3

#endif
