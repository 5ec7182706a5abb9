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

// Boost.Geometry is confined to this translation unit; everything above
// works with the plain Ring/Polygon structs.

#define BOOST_ALLOW_DEPRECATED_HEADERS

#include "core/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/multi_polygon.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>

#include "core/errors.hpp"

namespace bg = boost::geometry;

namespace uvl {
namespace {

using BgPoint = bg::model::d2::point_xy<double>;
using BgPolygon = bg::model::polygon<BgPoint>;  // clockwise, closed
using BgMulti = bg::model::multi_polygon<BgPolygon>;

double snap(double v) { return std::round(v / kSnapToleranceM) * kSnapToleranceM; }

BgMulti to_bg(const PolygonSet& set) {
  BgMulti out;
  out.reserve(set.polygons().size());
  for (const Polygon& poly : set.polygons()) {
    BgPolygon bp;
    for (const Point& p : poly.exterior) bp.outer().emplace_back(p.x, p.y);
    for (const Ring& hole : poly.holes) {
      bp.inners().emplace_back();
      for (const Point& p : hole) bp.inners().back().emplace_back(p.x, p.y);
    }
    bg::correct(bp);
    out.push_back(std::move(bp));
  }
  return out;
}

Ring from_bg_ring(const auto& bg_ring) {
  Ring r;
  r.reserve(bg_ring.size());
  for (const auto& p : bg_ring) r.push_back({bg::get<0>(p), bg::get<1>(p)});
  if (r.size() > 1 && r.front() == r.back()) r.pop_back();
  return r;
}

PolygonSet from_bg(const BgMulti& multi, ProjectedCrs crs) {
  std::vector<Polygon> polys;
  for (const BgPolygon& bp : multi) {
    Polygon poly;
    poly.exterior = from_bg_ring(bp.outer());
    if (std::abs(signed_ring_area(poly.exterior)) < kSliverAreaM2) continue;
    for (const auto& inner : bp.inners()) {
      Ring hole = from_bg_ring(inner);
      if (std::abs(signed_ring_area(hole)) < kSliverAreaM2) continue;
      poly.holes.push_back(std::move(hole));
    }
    polys.push_back(std::move(poly));
  }
  return PolygonSet::trusted(std::move(polys), crs);
}

void orient(Ring& ring, bool ccw) {
  double a = signed_ring_area(ring);
  if ((a > 0) != ccw) std::reverse(ring.begin(), ring.end());
}

void snap_and_clean(Ring& ring) {
  for (Point& p : ring) {
    p.x = snap(p.x);
    p.y = snap(p.y);
  }
  Ring cleaned;
  for (const Point& p : ring) {
    if (cleaned.empty() || !(cleaned.back() == p)) cleaned.push_back(p);
  }
  while (cleaned.size() > 1 && cleaned.front() == cleaned.back()) cleaned.pop_back();
  ring = std::move(cleaned);
}

Bounds ring_bounds(const Ring& ring) {
  Bounds b{ring[0].x, ring[0].y, ring[0].x, ring[0].y};
  for (const Point& p : ring) b.expand(p);
  return b;
}

}  // namespace

void Bounds::expand(const Point& p) {
  min_x = std::min(min_x, p.x);
  min_y = std::min(min_y, p.y);
  max_x = std::max(max_x, p.x);
  max_y = std::max(max_y, p.y);
}

void Bounds::expand(const Bounds& b) {
  min_x = std::min(min_x, b.min_x);
  min_y = std::min(min_y, b.min_y);
  max_x = std::max(max_x, b.max_x);
  max_y = std::max(max_y, b.max_y);
}

ProjectedCrs ProjectedCrs::from_epsg(int epsg_code) {
  if (epsg_code <= 0) throw ValidationError("CRS: EPSG code must be positive");
  if (looks_geographic(epsg_code))
    throw ValidationError("CRS: EPSG:" + std::to_string(epsg_code) +
                          " is a geographic (degree) system; only projected meter"
                          " systems are accepted");
  return ProjectedCrs{epsg_code};
}

ProjectedCrs ProjectedCrs::parse(const std::string& text) {
  std::string t = text;
  if (t == "CRS84" || t == "OGC:CRS84" || t == "urn:ogc:def:crs:OGC:1.3:CRS84")
    throw ValidationError("CRS: " + text + " is geographic; only projected meter"
                          " systems are accepted");
  size_t colon = t.rfind(':');
  std::string num = colon == std::string::npos ? t : t.substr(colon + 1);
  try {
    return from_epsg(std::stoi(num));
  } catch (const std::invalid_argument&) {
    throw ValidationError("CRS: cannot parse '" + text + "' (expected EPSG:<code>)");
  } catch (const std::out_of_range&) {
    throw ValidationError("CRS: cannot parse '" + text + "' (expected EPSG:<code>)");
  }
}

std::string ProjectedCrs::to_string() const { return "EPSG:" + std::to_string(epsg); }

double signed_ring_area(const Ring& ring) {
  if (ring.size() < 3) return 0.0;
  const double ox = ring[0].x, oy = ring[0].y;
  double sum = 0.0;
  for (size_t i = 0; i < ring.size(); ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % ring.size()];
    sum += (a.x - ox) * (b.y - oy) - (b.x - ox) * (a.y - oy);
  }
  return 0.5 * sum;
}

double area(const Polygon& polygon) {
  double a = std::abs(signed_ring_area(polygon.exterior));
  for (const Ring& hole : polygon.holes) a -= std::abs(signed_ring_area(hole));
  return a;
}

double area(const PolygonSet& set) {
  double total = 0.0;
  for (const Polygon& p : set.polygons()) total += area(p);
  return total;
}

PolygonSet::PolygonSet(std::vector<Polygon> polygons, ProjectedCrs crs)
    : crs_(crs) {
  std::vector<Polygon> kept;
  for (size_t pi = 0; pi < polygons.size(); ++pi) {
    Polygon& poly = polygons[pi];
    snap_and_clean(poly.exterior);
    if (poly.exterior.size() < 3 ||
        std::abs(signed_ring_area(poly.exterior)) < kSliverAreaM2)
      continue;  // sliver component dropped
    orient(poly.exterior, /*ccw=*/true);
    std::vector<Ring> holes;
    for (size_t hi = 0; hi < poly.holes.size(); ++hi) {
      Ring& hole = poly.holes[hi];
      snap_and_clean(hole);
      if (hole.size() < 3 || std::abs(signed_ring_area(hole)) < kSliverAreaM2)
        continue;
      orient(hole, /*ccw=*/false);
      holes.push_back(std::move(hole));
    }
    poly.holes = std::move(holes);

    BgPolygon bp;
    for (const Point& p : poly.exterior) bp.outer().emplace_back(p.x, p.y);
    for (const Ring& hole : poly.holes) {
      bp.inners().emplace_back();
      for (const Point& p : hole) bp.inners().back().emplace_back(p.x, p.y);
    }
    bg::correct(bp);
    std::string why;
    if (!bg::is_valid(bp, why)) {
      throw ValidationError("polygon " + std::to_string(pi) + ": invalid geometry (" +
                            why + ")");
    }
    kept.push_back(std::move(poly));
  }

  // Components must be pairwise interior-disjoint.
  std::vector<Bounds> boxes;
  boxes.reserve(kept.size());
  for (const Polygon& p : kept) boxes.push_back(ring_bounds(p.exterior));
  for (size_t i = 0; i < kept.size(); ++i) {
    for (size_t j = i + 1; j < kept.size(); ++j) {
      if (!boxes[i].intersects(boxes[j])) continue;
      BgPolygon a, b;
      for (const Point& p : kept[i].exterior) a.outer().emplace_back(p.x, p.y);
      for (const Point& p : kept[j].exterior) b.outer().emplace_back(p.x, p.y);
      bg::correct(a);
      bg::correct(b);
      BgMulti inter;
      bg::intersection(a, b, inter);
      if (bg::area(inter) > kSliverAreaM2)
        throw ValidationError("polygons " + std::to_string(i) + " and " +
                              std::to_string(j) + ": interiors overlap");
    }
  }
  polygons_ = std::move(kept);
}

PolygonSet PolygonSet::trusted(std::vector<Polygon> polygons, ProjectedCrs crs) {
  PolygonSet s(crs);
  s.polygons_ = std::move(polygons);
  return s;
}

std::vector<PolygonSet> PolygonSet::components() const {
  std::vector<PolygonSet> out;
  out.reserve(polygons_.size());
  for (const Polygon& p : polygons_) out.push_back(trusted({p}, crs_));
  return out;
}

std::optional<Bounds> PolygonSet::bounds() const {
  if (polygons_.empty()) return std::nullopt;
  Bounds b = ring_bounds(polygons_[0].exterior);
  for (const Polygon& p : polygons_) b.expand(ring_bounds(p.exterior));
  return b;
}

void require_same_crs(const PolygonSet& a, const PolygonSet& b, const char* op) {
  if (!(a.crs() == b.crs()))
    throw ValidationError(std::string(op) + ": CRS mismatch (" + a.crs().to_string() +
                          " vs " + b.crs().to_string() + ")");
}

PolygonSet union_of(const PolygonSet& a, const PolygonSet& b) {
  require_same_crs(a, b, "union");
  if (a.empty()) return b;
  if (b.empty()) return a;
  BgMulti out;
  bg::union_(to_bg(a), to_bg(b), out);
  return from_bg(out, a.crs());
}

PolygonSet intersection_of(const PolygonSet& a, const PolygonSet& b) {
  require_same_crs(a, b, "intersection");
  if (a.empty() || b.empty()) return PolygonSet(a.crs());
  BgMulti out;
  bg::intersection(to_bg(a), to_bg(b), out);
  return from_bg(out, a.crs());
}

PolygonSet difference_of(const PolygonSet& a, const PolygonSet& b) {
  require_same_crs(a, b, "difference");
  if (a.empty() || b.empty()) return a;
  BgMulti out;
  bg::difference(to_bg(a), to_bg(b), out);
  return from_bg(out, a.crs());
}

double iou(const PolygonSet& a, const PolygonSet& b) {
  require_same_crs(a, b, "iou");
  double inter = area(intersection_of(a, b));
  double uni = area(a) + area(b) - inter;
  if (uni <= 0.0) return 0.0;
  return inter / uni;
}

bool contains(const Polygon& polygon, const Point& p) {
  auto crossings = [&p](const Ring& ring) {
    int count = 0;
    for (size_t i = 0; i < ring.size(); ++i) {
      const Point& a = ring[i];
      const Point& b = ring[(i + 1) % ring.size()];
      // half-open in y: count edge if it spans p.y as [min, max)
      if ((a.y <= p.y && b.y > p.y) || (b.y <= p.y && a.y > p.y)) {
        double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
        if (x > p.x) ++count;
      }
    }
    return count;
  };
  int total = crossings(polygon.exterior);
  for (const Ring& hole : polygon.holes) total += crossings(hole);
  return (total % 2) == 1;
}

bool contains(const PolygonSet& set, const Point& p) {
  for (const Polygon& poly : set.polygons())
    if (contains(poly, p)) return true;
  return false;
}

PolygonSet translate(const PolygonSet& set, double dx, double dy) {
  std::vector<Polygon> polys = set.polygons();
  for (Polygon& poly : polys) {
    for (Point& p : poly.exterior) {
      p.x += dx;
      p.y += dy;
    }
    for (Ring& hole : poly.holes)
      for (Point& p : hole) {
        p.x += dx;
        p.y += dy;
      }
  }
  return PolygonSet::trusted(std::move(polys), set.crs());
}

Polygon rect(double x, double y, double w, double h) {
  Polygon p;
  p.exterior = {{x, y}, {x + w, y}, {x + w, y + h}, {x, y + h}};
  return p;
}

PolygonSet rect_set(double x, double y, double w, double h, ProjectedCrs crs) {
  return PolygonSet({rect(x, y, w, h)}, crs);
}

}  // namespace uvl
