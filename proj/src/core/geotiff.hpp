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

#include <filesystem>
#include <optional>

#include "core/grid.hpp"

namespace uvl {

/// Single-band 8-bit GeoTIFF: uncompressed, strip-organized, north-up,
/// georeferenced via ModelPixelScale + ModelTiepoint and a GeoKey
/// directory carrying the projected EPSG code (meter units).
struct GeoTiff {
  AffineGrid grid;
  std::vector<uint8_t> values;  // row-major
  std::optional<ProjectedCrs> crs;
};

GeoTiff read_geotiff(const std::filesystem::path& path);
void write_geotiff(const std::filesystem::path& path, const AffineGrid& grid,
                   const std::vector<uint8_t>& values,
                   std::optional<ProjectedCrs> crs);

BinaryMask read_mask(const std::filesystem::path& path, ProjectedCrs expected_crs);
void write_mask(const std::filesystem::path& path, const BinaryMask& mask,
                ProjectedCrs crs);

/// Probabilities quantized as v/255.
FloatGrid read_probability_grid(const std::filesystem::path& path);
void write_probability_grid(const std::filesystem::path& path, const FloatGrid& grid,
                            std::optional<ProjectedCrs> crs);

/// Legend comes from a `<raster>.legend.json` sidecar when present, else
/// the engine's canonical land-use codes.
CategoryRaster read_category_raster(const std::filesystem::path& path,
                                    ProjectedCrs expected_crs);

}  // namespace uvl
