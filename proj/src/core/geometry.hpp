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

#include <optional>
#include <string>
#include <vector>

namespace uvl {

/// Projected, meter-unit coordinate reference system. Geographic (degree)
/// systems are rejected at ingest; every dataset in one run shares one CRS.
struct ProjectedCrs {
  int epsg = 0;

  bool operator==(const ProjectedCrs&) const = default;

  /// EPSG 4000..4999 is the geographic-2D band; nothing else can be told
  /// apart without a full CRS database, so that band is the ingest gate.
  static bool looks_geographic(int epsg_code) {
    return epsg_code >= 4000 && epsg_code < 5000;
  }

  static ProjectedCrs from_epsg(int epsg_code);
  static ProjectedCrs parse(const std::string& text);  // "EPSG:32650"
  std::string to_string() const;
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Point&) const = default;
};

/// Closed ring stored without the repeated closing vertex.
using Ring = std::vector<Point>;

/// One connected component: exterior ring (CCW) plus holes (CW).
struct Polygon {
  Ring exterior;
  std::vector<Ring> holes;
};

struct Bounds {
  double min_x = 0, min_y = 0, max_x = 0, max_y = 0;

  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }
  void expand(const Point& p);
  void expand(const Bounds& b);
  bool intersects(const Bounds& b) const {
    return !(b.min_x > max_x || b.max_x < min_x || b.min_y > max_y || b.max_y < min_y);
  }
};

/// Numeric robustness policy for the vector kernel. The boundary-tie
/// behavior of all set operations is defined by these two constants.
inline constexpr double kSnapToleranceM = 1e-6;   // coordinate snap grid
inline constexpr double kSliverAreaM2 = 1e-4;     // rings below this are dropped

/// A validated set of interior-disjoint polygons in one projected CRS.
///
/// Construction snaps coordinates to the 1e-6 m grid, normalizes ring
/// orientation (CCW exteriors, CW holes), drops sliver rings, and verifies
/// the set invariants (no self-intersections, holes inside exteriors,
/// components interior-disjoint). Invalid input throws ValidationError
/// naming the offending polygon/ring.
class PolygonSet {
 public:
  PolygonSet() = default;
  explicit PolygonSet(ProjectedCrs crs) : crs_(crs) {}
  PolygonSet(std::vector<Polygon> polygons, ProjectedCrs crs);

  /// Internal fast path for results already known valid (kernel outputs,
  /// vectorized masks). Skips snapping and validation.
  static PolygonSet trusted(std::vector<Polygon> polygons, ProjectedCrs crs);

  const std::vector<Polygon>& polygons() const { return polygons_; }
  const ProjectedCrs& crs() const { return crs_; }
  bool empty() const { return polygons_.empty(); }
  size_t component_count() const { return polygons_.size(); }

  /// Splits into one single-polygon set per connected component.
  std::vector<PolygonSet> components() const;

  std::optional<Bounds> bounds() const;

 private:
  std::vector<Polygon> polygons_;
  ProjectedCrs crs_;
};

/// Signed shoelace area; vertices are shifted to a local origin first so
/// large projected coordinates do not eat the precision of small areas.
double signed_ring_area(const Ring& ring);

double area(const Polygon& polygon);
double area(const PolygonSet& set);

PolygonSet union_of(const PolygonSet& a, const PolygonSet& b);
PolygonSet intersection_of(const PolygonSet& a, const PolygonSet& b);
PolygonSet difference_of(const PolygonSet& a, const PolygonSet& b);

/// area(a ∩ b) / area(a ∪ b); 0 when both empty.
double iou(const PolygonSet& a, const PolygonSet& b);

/// Even-odd membership. Points exactly on a boundary follow the half-open
/// crossing rule (deterministic, not specified further).
bool contains(const PolygonSet& set, const Point& p);
bool contains(const Polygon& polygon, const Point& p);

PolygonSet translate(const PolygonSet& set, double dx, double dy);

/// Axis-aligned rectangle helper: [x, x+w] × [y, y+h].
Polygon rect(double x, double y, double w, double h);
PolygonSet rect_set(double x, double y, double w, double h, ProjectedCrs crs);

void require_same_crs(const PolygonSet& a, const PolygonSet& b, const char* op);

}  // namespace uvl
