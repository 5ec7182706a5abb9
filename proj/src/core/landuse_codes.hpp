// Copyright 2026 The uvl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

namespace uvl {

/// The seven lifecycle land-use categories. Unresolved is a pipeline
/// placeholder for cleared cells awaiting functional assignment; it must
/// never survive a finished run.
enum class LandUse : uint8_t {
  UrbanVillage = 1,
  IncompleteDemolition = 2,
  VacantLand = 3,
  ConstructionSite = 4,
  Buildings = 5,
  GreenSpaces = 6,
  Others = 7,
  Unresolved = 0,
};

inline constexpr std::array<LandUse, 7> kAllLandUses = {
    LandUse::UrbanVillage,   LandUse::IncompleteDemolition, LandUse::VacantLand,
    LandUse::ConstructionSite, LandUse::Buildings,          LandUse::GreenSpaces,
    LandUse::Others};

/// Stable index 0..6 for matrix axes.
inline int landuse_index(LandUse c) { return static_cast<int>(c) - 1; }

std::string landuse_slug(LandUse c);
std::optional<LandUse> landuse_from_slug(const std::string& slug);

/// Canonical raster codes: 0 = no data, then kAllLandUses in order.
std::map<int, std::string> canonical_landuse_legend();

enum class Phase : uint8_t { Remained, Demolished, Redeveloped };

std::string phase_slug(Phase p);
std::optional<Phase> phase_from_slug(const std::string& slug);

}  // namespace uvl
