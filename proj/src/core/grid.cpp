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

#include "core/grid.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "core/errors.hpp"

namespace uvl {

void AffineGrid::validate() const {
  if (pixel_size <= 0) throw ValidationError("grid: pixel_size must be > 0");
  if (width < 1 || height < 1) throw ValidationError("grid: width and height must be >= 1");
}

AffineGrid AffineGrid::covering(const Bounds& b, double pixel_size) {
  AffineGrid g;
  g.pixel_size = pixel_size;
  g.origin_x = b.min_x;
  g.origin_y = b.max_y;
  g.width = std::max(1, static_cast<int>(std::ceil(b.width() / pixel_size)));
  g.height = std::max(1, static_cast<int>(std::ceil(b.height() / pixel_size)));
  return g;
}

BinaryMask::BinaryMask(AffineGrid grid, uint8_t fill) : grid_(grid) {
  grid_.validate();
  bits_.assign(grid_.cell_count(), fill);
}

BinaryMask::BinaryMask(AffineGrid grid, std::vector<uint8_t> bits)
    : grid_(grid), bits_(std::move(bits)) {
  grid_.validate();
  if (bits_.size() != grid_.cell_count())
    throw ValidationError("mask: bit count does not equal width*height");
  for (uint8_t b : bits_)
    if (b > 1) throw ValidationError("mask: values must be 0 or 1");
}

size_t BinaryMask::count_ones() const {
  size_t n = 0;
  for (uint8_t b : bits_) n += b;
  return n;
}

CategoryRaster::CategoryRaster(AffineGrid grid, std::vector<uint8_t> labels,
                               std::map<int, std::string> legend)
    : grid_(grid), labels_(std::move(labels)), legend_(std::move(legend)) {
  grid_.validate();
  if (labels_.size() != grid_.cell_count())
    throw ValidationError("raster: label count does not equal width*height");
  for (uint8_t code : labels_) {
    if (code != 0 && legend_.find(code) == legend_.end())
      throw ValidationError("raster: label code " + std::to_string(code) +
                            " missing from legend");
  }
  if (legend_.count(0))
    throw ValidationError("raster: code 0 is reserved for no-data");
}

BinaryMask rasterize(const PolygonSet& set, const AffineGrid& grid) {
  grid.validate();
  BinaryMask mask(grid, 0);
  if (set.empty()) return mask;

  struct Edge {
    double y_lo, y_hi;  // half-open span [y_lo, y_hi)
    double x_at_y_lo, slope;
  };
  std::vector<Edge> edges;
  auto add_ring = [&edges](const Ring& ring) {
    for (size_t i = 0; i < ring.size(); ++i) {
      const Point& a = ring[i];
      const Point& b = ring[(i + 1) % ring.size()];
      if (a.y == b.y) continue;  // horizontal edges never cross a scanline
      const Point& lo = a.y < b.y ? a : b;
      const Point& hi = a.y < b.y ? b : a;
      edges.push_back({lo.y, hi.y, lo.x, (hi.x - lo.x) / (hi.y - lo.y)});
    }
  };
  for (const Polygon& poly : set.polygons()) {
    add_ring(poly.exterior);
    for (const Ring& hole : poly.holes) add_ring(hole);
  }

  std::vector<double> crossings;
  for (int row = 0; row < grid.height; ++row) {
    const double yc = grid.origin_y - (row + 0.5) * grid.pixel_size;
    crossings.clear();
    for (const Edge& e : edges) {
      if (e.y_lo <= yc && yc < e.y_hi)
        crossings.push_back(e.x_at_y_lo + (yc - e.y_lo) * e.slope);
    }
    if (crossings.empty()) continue;
    std::sort(crossings.begin(), crossings.end());
    uint8_t* out = mask.bits().data() + static_cast<size_t>(row) * grid.width;
    for (size_t k = 0; k + 1 < crossings.size(); k += 2) {
      // fill cells whose center x lies in [a, b)
      const double a = crossings[k], b = crossings[k + 1];
      int c0 = static_cast<int>(std::ceil((a - grid.origin_x) / grid.pixel_size - 0.5));
      int c1 = static_cast<int>(std::ceil((b - grid.origin_x) / grid.pixel_size - 0.5));
      c0 = std::max(c0, 0);
      c1 = std::min(c1, grid.width);
      for (int c = c0; c < c1; ++c) out[c] = 1;
    }
  }
  return mask;
}

namespace {

// Directed boundary edge in pixel-corner coordinates; the owning pixel's
// interior is on the side (-dy, dx) of direction (dx, dy).
struct TraceEdge {
  int x0, y0, x1, y1;
};

uint64_t vertex_key(int x, int y) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(y)) << 32) |
         static_cast<uint32_t>(x);
}

}  // namespace

PolygonSet vectorize(const BinaryMask& mask, ProjectedCrs crs) {
  const AffineGrid& g = mask.grid();
  const int w = g.width, h = g.height;

  // 4-connected component labels, discovered in row-major order.
  std::vector<int32_t> comp(g.cell_count(), -1);
  int32_t n_comp = 0;
  {
    std::vector<std::pair<int, int>> stack;
    for (int r = 0; r < h; ++r) {
      for (int c = 0; c < w; ++c) {
        if (!mask.at(c, r) || comp[static_cast<size_t>(r) * w + c] >= 0) continue;
        int32_t id = n_comp++;
        stack.push_back({c, r});
        comp[static_cast<size_t>(r) * w + c] = id;
        while (!stack.empty()) {
          auto [cc, cr] = stack.back();
          stack.pop_back();
          const int dc[4] = {1, -1, 0, 0};
          const int dr[4] = {0, 0, 1, -1};
          for (int k = 0; k < 4; ++k) {
            int nc = cc + dc[k], nr = cr + dr[k];
            if (nc < 0 || nc >= w || nr < 0 || nr >= h) continue;
            size_t idx = static_cast<size_t>(nr) * w + nc;
            if (mask.at(nc, nr) && comp[idx] < 0) {
              comp[idx] = id;
              stack.push_back({nc, nr});
            }
          }
        }
      }
    }
  }

  auto label_at = [&](int c, int r) -> int32_t {
    if (c < 0 || c >= w || r < 0 || r >= h) return -1;
    return comp[static_cast<size_t>(r) * w + c];
  };

  // Per component: boundary edges keyed by start vertex (at most two per
  // vertex; two only at a saddle).
  struct CompEdges {
    std::unordered_map<uint64_t, std::vector<TraceEdge>> by_start;
    std::vector<TraceEdge> ordered;  // creation order, for deterministic walks
  };
  std::vector<CompEdges> comp_edges(n_comp);
  auto emit = [&comp_edges](int32_t id, TraceEdge e) {
    comp_edges[id].by_start[vertex_key(e.x0, e.y0)].push_back(e);
    comp_edges[id].ordered.push_back(e);
  };
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      int32_t id = label_at(c, r);
      if (id < 0) continue;
      if (label_at(c, r - 1) != id) emit(id, {c, r, c + 1, r});          // top
      if (label_at(c + 1, r) != id) emit(id, {c + 1, r, c + 1, r + 1});  // right
      if (label_at(c, r + 1) != id) emit(id, {c + 1, r + 1, c, r + 1});  // bottom
      if (label_at(c - 1, r) != id) emit(id, {c, r + 1, c, r});          // left
    }
  }

  std::vector<Polygon> polys(n_comp);
  for (int32_t id = 0; id < n_comp; ++id) {
    CompEdges& ce = comp_edges[id];
    std::unordered_map<uint64_t, uint8_t> used;  // per-start consumption count
    auto take = [&](int x, int y, int prefer_dx, int prefer_dy,
                    bool has_pref) -> const TraceEdge* {
      auto it = ce.by_start.find(vertex_key(x, y));
      if (it == ce.by_start.end()) return nullptr;
      uint8_t& n_used = used[vertex_key(x, y)];
      std::vector<TraceEdge>& cands = it->second;
      if (n_used >= cands.size()) return nullptr;
      size_t pick = n_used;  // first unconsumed
      if (cands.size() - n_used > 1 && has_pref) {
        // Saddle: continue around the current pixel (turn toward the
        // interior side) so diagonal foreground stays disconnected and
        // background stays 8-connected.
        for (size_t i = n_used; i < cands.size(); ++i) {
          const TraceEdge& e = cands[i];
          if (e.x1 - e.x0 == prefer_dx && e.y1 - e.y0 == prefer_dy) {
            pick = i;
            break;
          }
        }
      }
      std::swap(cands[pick], cands[n_used]);
      ++n_used;
      return &cands[n_used - 1];
    };

    auto remaining_at = [&](int x, int y) -> size_t {
      auto it = ce.by_start.find(vertex_key(x, y));
      if (it == ce.by_start.end()) return 0;
      auto u = used.find(vertex_key(x, y));
      return it->second.size() - (u == used.end() ? 0 : u->second);
    };

    std::vector<Ring> rings;
    size_t consumed = 0;
    const size_t total = ce.ordered.size();
    while (consumed < total) {
      // Deterministic loop seed, in creation order. Prefer a start vertex
      // with a single unconsumed edge so loop closure is never ambiguous;
      // saddles encountered mid-walk are resolved by the bounce rule.
      const TraceEdge* start = nullptr;
      for (const TraceEdge& cand : ce.ordered) {
        if (remaining_at(cand.x0, cand.y0) == 1) {
          start = take(cand.x0, cand.y0, 0, 0, false);
          break;
        }
      }
      if (!start) {
        for (const TraceEdge& cand : ce.ordered) {
          if (remaining_at(cand.x0, cand.y0) > 0) {
            start = take(cand.x0, cand.y0, 0, 0, false);
            break;
          }
        }
      }
      if (!start) break;

      Ring ring;
      TraceEdge cur = *start;
      ++consumed;
      const int sx = cur.x0, sy = cur.y0;
      int last_dx = cur.x1 - cur.x0, last_dy = cur.y1 - cur.y0;
      ring.push_back({static_cast<double>(cur.x0), static_cast<double>(cur.y0)});
      while (!(cur.x1 == sx && cur.y1 == sy)) {
        // interior side of (dx, dy) is (-dy, dx): that is the saddle turn
        const TraceEdge* next =
            take(cur.x1, cur.y1, -last_dy, last_dx, /*has_pref=*/true);
        if (!next) throw StageError("vectorize", "open boundary loop (internal)");
        ++consumed;
        int dx = next->x1 - next->x0, dy = next->y1 - next->y0;
        if (dx != last_dx || dy != last_dy)
          ring.push_back({static_cast<double>(next->x0), static_cast<double>(next->y0)});
        last_dx = dx;
        last_dy = dy;
        cur = *next;
      }
      // closing edge direction may continue the first edge's run; drop the
      // duplicated start vertex if collinear with the final direction
      if (ring.size() > 1) {
        int first_dx = static_cast<int>(ring[1].x - ring[0].x);
        int first_dy = static_cast<int>(ring[1].y - ring[0].y);
        // normalize to unit steps for comparison
        auto sign = [](int v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
        if (sign(first_dx) == sign(last_dx) && sign(first_dy) == sign(last_dy))
          ring.erase(ring.begin());
      }
      rings.push_back(std::move(ring));
    }

    Polygon& poly = polys[id];
    for (Ring& ring : rings) {
      for (Point& p : ring) {
        Point wpt = g.corner(static_cast<int>(p.x), static_cast<int>(p.y));
        p = wpt;
      }
      if (signed_ring_area(ring) > 0) {
        if (!poly.exterior.empty())
          throw StageError("vectorize", "component produced two exteriors (internal)");
        poly.exterior = std::move(ring);
      } else {
        poly.holes.push_back(std::move(ring));
      }
    }
  }

  std::vector<Polygon> nonempty;
  for (Polygon& p : polys)
    if (!p.exterior.empty()) nonempty.push_back(std::move(p));
  return PolygonSet::trusted(std::move(nonempty), crs);
}

}  // namespace uvl
