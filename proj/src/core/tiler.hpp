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

#include <string>
#include <vector>

#include "core/grid.hpp"

namespace uvl {

struct TileWindow {
  int col_off = 0;
  int row_off = 0;
  int width = 0;
  int height = 0;

  bool operator==(const TileWindow&) const = default;
};

/// Row-major sliding-window plan. Offsets step by `stride`; a final
/// offset is shifted (not shrunk) to end exactly at the grid border, so
/// edge windows keep the full tile size whenever the grid allows it.
struct TilePlan {
  AffineGrid grid;
  int tile_size = 1024;
  int stride = 512;
  std::vector<TileWindow> windows;

  AffineGrid window_grid(const TileWindow& w) const {
    AffineGrid g;
    g.pixel_size = grid.pixel_size;
    g.origin_x = grid.origin_x + w.col_off * grid.pixel_size;
    g.origin_y = grid.origin_y - w.row_off * grid.pixel_size;
    g.width = w.width;
    g.height = w.height;
    return g;
  }

  std::string to_json() const;
  static TilePlan from_json(const std::string& text);
};

TilePlan plan_tiles(const AffineGrid& grid, int tile_size, int stride);

enum class BlendRule { MeanProbability, MajorityVote };

/// Merge per-window probability tiles into a mask. Tiles are keyed by
/// window index; accumulation always runs in ascending window order, so
/// the result is bit-identical under any permutation of `tiles`.
/// Mean >= 0.5 maps to 1 (ties go to foreground).
BinaryMask stitch(const TilePlan& plan,
                  const std::vector<std::pair<int, FloatGrid>>& tiles,
                  BlendRule rule = BlendRule::MeanProbability);

}  // namespace uvl
