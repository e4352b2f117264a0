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

#include "manifest.hpp"

#include "farmlayout/io.hpp"
#include "farmlayout/version.hpp"

namespace farmlayout::cli {

void write_manifest(const std::filesystem::path& out_dir,
                    const std::string& command,
                    const std::vector<std::filesystem::path>& inputs,
                    const nlohmann::json& config, double wall_time_s) {
  nlohmann::json doc;
  doc["command"] = command;
  doc["version"] = kVersion;
  doc["wall_time_s"] = wall_time_s;
  doc["config"] = config;
  doc["inputs"] = nlohmann::json::array();
  for (const std::filesystem::path& input : inputs) {
    doc["inputs"].push_back({{"path", input.string()},
                             {"sha256", sha256_file_hex(input)}});
  }
  write_text_file(out_dir / "manifest.json", doc.dump(2) + "\n");
}

}  // namespace farmlayout::cli
