#pragma once

#include <span>
#include <string>

#include "simplex/model_config.hpp"

namespace simplex {

/// JSON config schema:
///
///   {
///     "d": 2, "variant": "A", "seed": 0,
///     "fitness": {"kind": "constant", "f0": 1}
///              | {"kind": "product", "map": "identity|shifted|exp|power", "param": 0}
///              | {"kind": "energy-exp", "beta": 1}
///              | {"kind": "table", "entries": [[[w, ...], f], ...]},
///     "weights": {"kind": "finite", "atoms": [[value, prob], ...]}
///              | {"kind": "uniform01"}
///              | {"kind": "table-cdf", "grid": [[value, cumulative], ...]},
///     "initial": {"kind": "simplex" | "faces", "faces": [[label, ...], ...],
///                 "weights": [[label, w], ...]}
///   }
///
/// Every key is optional and defaults to ModelConfig{}. Unknown keys are
/// rejected.
///
/// Overrides have the form "a.b.c=value"; value is parsed as JSON and falls
/// back to a plain string. They are applied before the schema is read.
///
/// Throws ParseError for malformed JSON and ValidationError for schema or
/// model violations. The result is validated and normalized.
ModelConfig parse_config(const std::string& json_text,
                         std::span<const std::string> overrides = {});

/// parse_config on a file; an empty path means "{}". Throws IoError.
ModelConfig load_config(const std::string& path, std::span<const std::string> overrides = {});

/// Inverse of parse_config (up to normalization).
std::string config_to_json(const ModelConfig& cfg, int indent = 2);

}  // namespace simplex
