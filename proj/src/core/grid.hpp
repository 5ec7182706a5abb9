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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/geometry.hpp"

namespace uvl {

/// North-up grid: origin is the world coordinate of the top-left corner,
/// rows grow southward (y decreases), square pixels.
struct AffineGrid {
  double origin_x = 0.0;
  double origin_y = 0.0;
  double pixel_size = 1.0;  // meters per pixel, > 0
  int width = 0;            // pixels, >= 1
  int height = 0;

  bool operator==(const AffineGrid&) const = default;

  void validate() const;

  size_t cell_count() const {
    return static_cast<size_t>(width) * static_cast<size_t>(height);
  }

  Point cell_center(int col, int row) const {
    return {origin_x + (col + 0.5) * pixel_size, origin_y - (row + 0.5) * pixel_size};
  }

  /// World coordinate of the pixel corner lattice point (col, row).
  Point corner(int col, int row) const {
    return {origin_x + col * pixel_size, origin_y - row * pixel_size};
  }

  double cell_area() const { return pixel_size * pixel_size; }

  /// Grid whose cells cover `b`, aligned to (b.min_x, b.max_y).
  static AffineGrid covering(const Bounds& b, double pixel_size);
};

class BinaryMask {
 public:
  BinaryMask() = default;
  BinaryMask(AffineGrid grid, uint8_t fill = 0);
  BinaryMask(AffineGrid grid, std::vector<uint8_t> bits);

  const AffineGrid& grid() const { return grid_; }
  const std::vector<uint8_t>& bits() const { return bits_; }
  std::vector<uint8_t>& bits() { return bits_; }

  uint8_t at(int col, int row) const {
    return bits_[static_cast<size_t>(row) * grid_.width + col];
  }
  void set(int col, int row, uint8_t v) {
    bits_[static_cast<size_t>(row) * grid_.width + col] = v;
  }

  size_t count_ones() const;

  bool operator==(const BinaryMask&) const = default;

 private:
  AffineGrid grid_;
  std::vector<uint8_t> bits_;
};

/// Small-integer label grid; code 0 is reserved for "no data" and every
/// non-zero code present must be named in the legend.
class CategoryRaster {
 public:
  CategoryRaster() = default;
  CategoryRaster(AffineGrid grid, std::vector<uint8_t> labels,
                 std::map<int, std::string> legend);

  const AffineGrid& grid() const { return grid_; }
  const std::vector<uint8_t>& labels() const { return labels_; }
  std::vector<uint8_t>& labels() { return labels_; }
  const std::map<int, std::string>& legend() const { return legend_; }

  uint8_t at(int col, int row) const {
    return labels_[static_cast<size_t>(row) * grid_.width + col];
  }
  void set(int col, int row, uint8_t v) {
    labels_[static_cast<size_t>(row) * grid_.width + col] = v;
  }

 private:
  AffineGrid grid_;
  std::vector<uint8_t> labels_;
  std::map<int, std::string> legend_;
};

/// Row-major real-valued grid (tile probabilities, image chips).
struct FloatGrid {
  AffineGrid grid;
  std::vector<double> values;

  double at(int col, int row) const {
    return values[static_cast<size_t>(row) * grid.width + col];
  }
};

/// Center-point rule: a cell is 1 iff its center lies inside the set
/// (even-odd). Geometry outside the grid is silently clipped.
BinaryMask rasterize(const PolygonSet& set, const AffineGrid& grid);

/// Pixel-corner-following boundary extraction: 4-connected foreground,
/// 8-connected background. rasterize(vectorize(m), m.grid()) == m exactly.
PolygonSet vectorize(const BinaryMask& mask, ProjectedCrs crs);

}  // namespace uvl
