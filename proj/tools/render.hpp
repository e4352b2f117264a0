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

#include "farmlayout/aep.hpp"
#include "farmlayout/geometry.hpp"

namespace farmlayout::cli {

/// Boundary outline plus turbine dots as a standalone SVG.
void render_layout_svg(const std::filesystem::path& path,
                       const Boundary& boundary, const Layout& layout);

/// Speed field as colored cells with turbine dots overlaid.
void render_flow_field_svg(const std::filesystem::path& path,
                           const FlowFieldGrid& field, const Layout& layout);

}  // namespace farmlayout::cli
