#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qspace/ncalg.hpp"
#include "qspace/phasespace.hpp"

namespace qspace {

using Json = nlohmann::json;

/// Data directory: $QSPACE_CONFIG_DIR if set, otherwise the built-in data path.
std::filesystem::path config_dir();
Json load_json_file(const std::filesystem::path& path);

Json space_to_json(const SpaceSpec& s);
SpaceSpec space_from_json(const Json& j);

Json rmatrix_to_json(const RMatrix& r);
RMatrix rmatrix_from_json(const Json& j);

}  // namespace qspace
