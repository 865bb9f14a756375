// config.cpp
#include "specsat/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "specsat/error.hpp"

namespace specsat {

namespace {

// Objects merge key by key; anything else in `over` replaces `base`.
void merge(nlohmann::ordered_json& base, const nlohmann::ordered_json& over) {
  if (!base.is_object() || !over.is_object()) {
    base = over;
    return;
  }
  for (auto it = over.begin(); it != over.end(); ++it) {
    if (base.contains(it.key())) merge(base[it.key()], it.value());
    else base[it.key()] = it.value();
  }
}

}  // namespace

nlohmann::ordered_json load_config(const std::string& path) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::parse(default_battery_json());
  std::string source = path;
  if (source.empty())
    if (const char* env = std::getenv(kConfigEnvVar); env != nullptr && *env != '\0') source = env;
  if (source.empty()) return doc;
  std::ifstream in(source);
  require(static_cast<bool>(in), ErrorKind::kInvalidArgument, "cannot open config file '" + source + "'");
  nlohmann::ordered_json user;
  try {
    user = nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::kParseError, "config file '" + source + "': " + e.what());
  }
  require(user.is_object(), ErrorKind::kInvalidArgument, "config must be a JSON object");
  if (user.contains("version"))
    require(user["version"] == kConfigVersion, ErrorKind::kInvalidArgument,
            "config version " + user["version"].dump() + " is not supported");
  merge(doc, user);
  return doc;
}

}  // namespace specsat
