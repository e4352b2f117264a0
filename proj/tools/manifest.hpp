// Copyright 2026 The farmlayout Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace farmlayout::cli {

/// Reproducibility record written next to every output set: command, tool
/// version, input hashes, the effective configuration, and wall time.
void write_manifest(const std::filesystem::path& out_dir,
                    const std::string& command,
                    const std::vector<std::filesystem::path>& inputs,
                    const nlohmann::json& config, double wall_time_s);

}  // namespace farmlayout::cli
