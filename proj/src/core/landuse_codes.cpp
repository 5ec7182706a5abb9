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

#include "core/landuse_codes.hpp"

namespace uvl {

std::string landuse_slug(LandUse c) {
  switch (c) {
    case LandUse::UrbanVillage: return "urban_village";
    case LandUse::IncompleteDemolition: return "incomplete_demolition";
    case LandUse::VacantLand: return "vacant_land";
    case LandUse::ConstructionSite: return "construction_site";
    case LandUse::Buildings: return "buildings";
    case LandUse::GreenSpaces: return "green_spaces";
    case LandUse::Others: return "others";
    case LandUse::Unresolved: return "unresolved";
  }
  return "unresolved";
}

std::optional<LandUse> landuse_from_slug(const std::string& slug) {
  for (LandUse c : kAllLandUses)
    if (landuse_slug(c) == slug) return c;
  if (slug == "unresolved") return LandUse::Unresolved;
  return std::nullopt;
}

std::map<int, std::string> canonical_landuse_legend() {
  std::map<int, std::string> legend;
  for (LandUse c : kAllLandUses)
    legend[static_cast<int>(c)] = landuse_slug(c);
  return legend;
}

std::string phase_slug(Phase p) {
  switch (p) {
    case Phase::Remained: return "remained";
    case Phase::Demolished: return "demolished";
    case Phase::Redeveloped: return "redeveloped";
  }
  return "remained";
}

std::optional<Phase> phase_from_slug(const std::string& slug) {
  if (slug == "remained") return Phase::Remained;
  if (slug == "demolished") return Phase::Demolished;
  if (slug == "redeveloped") return Phase::Redeveloped;
  return std::nullopt;
}

}  // namespace uvl
