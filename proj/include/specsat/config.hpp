// config.hpp — battery configuration (versioned JSON).
#pragma once

#include <string>

#include "json.hpp"

namespace specsat {

inline constexpr int kConfigVersion = 1;
inline constexpr const char* kConfigEnvVar = "SPECSAT_CONFIG";

/// The copy of config/batteries.json compiled into the library.
const char* default_battery_json();

/// Loads `path` if given, else the file named by SPECSAT_CONFIG, else the
/// compiled-in default. Missing keys fall back to the default document.
nlohmann::ordered_json load_config(const std::string& path = "");

}  // namespace specsat
